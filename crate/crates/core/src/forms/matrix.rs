use std::fmt;

use super::form::HomForm;
use super::monomial::{basis_in_vars, mul_exponents};
use crate::exact::{Fp, Matrix, PrimeField, Rational, Scalar, Subspace};
use crate::Result;

/// A rectangular matrix of forms sharing one degree and variable count.
#[derive(Clone, PartialEq, Eq)]
pub struct FormMatrix<S: Scalar> {
    rows: usize,
    cols: usize,
    num_vars: usize,
    degree: u32,
    ctx: S::Ctx,
    entries: Vec<HomForm<S>>,
}

impl<S: Scalar> FormMatrix<S> {
    pub fn zeros(rows: usize, cols: usize, num_vars: usize, degree: u32, ctx: S::Ctx) -> Self {
        let z = HomForm::zero(num_vars, degree, ctx);
        FormMatrix { rows, cols, num_vars, degree, ctx, entries: vec![z; rows * cols] }
    }

    /// Row-major entries; all must match `num_vars` and `degree`.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        num_vars: usize,
        degree: u32,
        ctx: S::Ctx,
        entries: Vec<HomForm<S>>,
    ) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        for e in &entries {
            assert_eq!((e.num_vars(), e.degree()), (num_vars, degree), "entry shape");
        }
        FormMatrix { rows, cols, num_vars, degree, ctx, entries }
    }

    pub fn from_rows(rows: Vec<Vec<HomForm<S>>>, num_vars: usize, degree: u32, ctx: S::Ctx) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_entries(r, c, num_vars, degree, ctx, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ctx(&self) -> S::Ctx {
        self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &HomForm<S> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, f: HomForm<S>) {
        assert_eq!((f.num_vars(), f.degree()), (self.num_vars, self.degree), "entry shape");
        self.entries[i * self.cols + j] = f;
    }

    pub fn entries(&self) -> &[HomForm<S>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|f| f.is_zero())
    }

    pub fn column(&self, j: usize) -> Vec<HomForm<S>> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows, self.num_vars, self.degree, self.ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Columns `range` as a new matrix.
    pub fn columns(&self, range: std::ops::Range<usize>) -> Self {
        let mut out = Self::zeros(self.rows, range.len(), self.num_vars, self.degree, self.ctx);
        for i in 0..self.rows {
            for (k, j) in range.clone().enumerate() {
                out.set(i, k, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        assert_eq!((self.num_vars, self.degree), (other.num_vars, other.degree));
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        for i in 0..self.rows {
            entries.extend_from_slice(&self.entries[i * self.cols..(i + 1) * self.cols]);
            entries.extend_from_slice(&other.entries[i * other.cols..(i + 1) * other.cols]);
        }
        Self::from_entries(self.rows, self.cols + other.cols, self.num_vars, self.degree, self.ctx, entries)
    }

    /// Product of form matrices; degrees add.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let degree = self.degree + other.degree;
        let mut out = Self::zeros(self.rows, other.cols, self.num_vars, degree, self.ctx);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = HomForm::zero(self.num_vars, degree, self.ctx);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).multiply(other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// `A * self` for a scalar matrix `A` (row operations).
    pub fn left_scalar(&self, a: &Matrix<S>) -> Self {
        assert_eq!(a.cols(), self.rows);
        let mut out = Self::zeros(a.rows(), self.cols, self.num_vars, self.degree, self.ctx);
        for i in 0..a.rows() {
            for j in 0..self.cols {
                let mut acc = HomForm::zero(self.num_vars, self.degree, self.ctx);
                for k in 0..self.rows {
                    if !a.get(i, k).is_zero() {
                        acc = acc.add(&self.get(k, j).scale(a.get(i, k)));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// `self * B` for a scalar matrix `B` (column operations).
    pub fn right_scalar(&self, b: &Matrix<S>) -> Self {
        self.transpose().left_scalar(&b.transpose()).transpose()
    }

    /// Linear map `(S^d)^cols -> (S^{d+e})^rows`, `v -> self * v`, as a scalar
    /// matrix. Coordinates are block-major: column block, then monomial.
    pub fn expansion(&self, d: u32) -> Matrix<S> {
        let src = basis_in_vars(self.num_vars, d);
        let dst = basis_in_vars(self.num_vars, d + self.degree);
        let entry = basis_in_vars(self.num_vars, self.degree);
        let mut m: Matrix<S> = Matrix::zeros(self.rows * dst.len(), self.cols * src.len(), self.ctx);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let f = self.get(i, j);
                for (t, c) in f.coeffs().iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (h, mono) in src.monomials().iter().enumerate() {
                        let k = dst.index_of(&mul_exponents(entry.get(t), mono)).expect("product monomial");
                        let row = i * dst.len() + k;
                        let col = j * src.len() + h;
                        let v = m.get(row, col).add(c);
                        m.set(row, col, v);
                    }
                }
            }
        }
        m
    }

    /// Entrywise map between scalar types.
    pub fn map<T: Scalar>(&self, ctx: T::Ctx, f: impl Fn(&HomForm<S>) -> HomForm<T>) -> FormMatrix<T> {
        FormMatrix {
            rows: self.rows,
            cols: self.cols,
            num_vars: self.num_vars,
            degree: self.degree,
            ctx,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl FormMatrix<Rational> {
    pub fn reduce(&self, field: PrimeField) -> Result<FormMatrix<Fp>> {
        let entries = self.entries.iter().map(|f| f.reduce(field)).collect::<Result<Vec<_>>>()?;
        Ok(FormMatrix::from_entries(self.rows, self.cols, self.num_vars, self.degree, field, entries))
    }
}

impl<S: Scalar> fmt::Debug for FormMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FormMatrix {}x{} deg {} [", self.rows, self.cols, self.degree)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(" | "))?;
        }
        write!(f, "]")
    }
}

/// `{ v in (S^d)^c : psi * v = 0 }`.
pub fn form_matrix_kernel<S: Scalar>(psi: &FormMatrix<S>, d: u32) -> Subspace<S> {
    let m = psi.expansion(d);
    Subspace::span(m.kernel_basis(), m.cols(), psi.ctx())
}

/// Splits a block-major vector of `M (x) S^d` into its `m` component forms.
pub fn vector_to_forms<S: Scalar>(v: &[S], m: usize, num_vars: usize, d: u32, ctx: S::Ctx) -> Vec<HomForm<S>> {
    let b = basis_in_vars(num_vars, d).len();
    assert_eq!(v.len(), m * b, "vector length");
    (0..m).map(|c| HomForm::from_coeffs(num_vars, d, ctx, v[c * b..(c + 1) * b].to_vec())).collect()
}

pub fn forms_to_vector<S: Scalar>(forms: &[HomForm<S>]) -> Vec<S> {
    forms.iter().flat_map(|f| f.coeffs().iter().cloned()).collect()
}

/// Orthogonal of `space ⊆ M (x) S^{space_deg}` inside `M* (x) S^{other_deg}`
/// for the pairing `(Σ u_c f_c, Σ u_c* g_c) -> Σ f_c g_c`.
pub fn pairing_orthogonal<S: Scalar>(
    space: &Subspace<S>,
    m: usize,
    num_vars: usize,
    space_deg: u32,
    other_deg: u32,
) -> Subspace<S> {
    let ctx = space.ctx();
    if space.is_zero() {
        return Subspace::full(m * basis_in_vars(num_vars, other_deg).len(), ctx);
    }
    let rows: Vec<Vec<HomForm<S>>> = space
        .basis_vectors()
        .iter()
        .map(|v| vector_to_forms(v, m, num_vars, space_deg, ctx))
        .collect();
    let psi = FormMatrix::from_rows(rows, num_vars, space_deg, ctx);
    form_matrix_kernel(&psi, other_deg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{enumerate_subspaces, Budget};

    fn xyz() -> FormMatrix<Rational> {
        FormMatrix::from_rows(vec![(0..3).map(|i| HomForm::var(3, i, ())).collect()], 3, 1, ())
    }

    #[test]
    fn koszul_row() {
        let m = xyz().expansion(1);
        assert_eq!((m.rows(), m.cols()), (6, 9));
        assert_eq!(m.rank(), 6);
        assert_eq!(form_matrix_kernel(&xyz(), 1).dim(), 3);
        assert_eq!(form_matrix_kernel(&xyz(), 0).dim(), 0);
    }

    #[test]
    fn kernel_plus_rank_is_source_dim() {
        let psi = xyz();
        for d in 0..4 {
            let m = psi.expansion(d);
            assert_eq!(form_matrix_kernel(&psi, d).dim() + m.rank(), m.cols());
        }
    }

    #[test]
    fn orthogonal_extremes() {
        // zero space
        let z = Subspace::<Rational>::zero(2 * 6, ());
        assert_eq!(pairing_orthogonal(&z, 2, 3, 2, 1).dim(), 2 * 3);
        // full space with equal degrees pairs nondegenerately
        let full = Subspace::<Rational>::full(2 * 6, ());
        assert_eq!(pairing_orthogonal(&full, 2, 3, 2, 0).dim(), 0);
    }

    #[test]
    fn double_orthogonal_contains_original() {
        let f = PrimeField::new(2).unwrap();
        for u in enumerate_subspaces(6, 2, f, Budget::default()).unwrap().step_by(7) {
            // M of dim 2, S^1 in 3 variables
            let t = pairing_orthogonal(&u, 2, 3, 1, 1);
            let back = pairing_orthogonal(&t, 2, 3, 1, 1);
            assert!(back.contains(&u));
        }
    }

    #[test]
    fn form_matrix_product() {
        let a = xyz();
        let b = xyz().transpose();
        let p = a.mul(&b);
        assert_eq!(p.degree(), 2);
        let expect = HomForm::from_terms(
            3,
            2,
            (),
            &[(vec![2, 0, 0], Rational::one()), (vec![0, 2, 0], Rational::one()), (vec![0, 0, 2], Rational::one())],
        )
        .unwrap();
        assert_eq!(p.get(0, 0), &expect);
    }
}
