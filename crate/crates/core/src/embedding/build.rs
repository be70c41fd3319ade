use serde::{Deserialize, Serialize};

use crate::exact::Scalar;
use crate::forms::{basis_in_vars, divide, FormMatrix, HomForm};
use crate::morphism::{Morphism, MorphismType};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmbeddingKind {
    Embedded21,
    Embedded31,
}

/// Image `(ξ, γ)` of a morphism in the reductive representation. For two
/// blocks `xis = [ξ]`; for three blocks `xis = [ξ2, ξ3]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedPoint<S: Scalar> {
    pub kind: EmbeddingKind,
    pub ty: MorphismType,
    pub xis: Vec<FormMatrix<S>>,
    pub gamma: FormMatrix<S>,
}

impl<S: Scalar> EmbeddedPoint<S> {
    /// Dimensions `p_1, p_2, …` of the embedded source spaces.
    pub fn dims(&self) -> Vec<usize> {
        let mut d = vec![self.gamma.cols()];
        d.extend(self.xis.iter().map(|x| x.cols()));
        d
    }
}

/// Column `c` of `phi` multiplied entrywise by `f`.
fn column_times<S: Scalar>(phi: &FormMatrix<S>, c: usize, f: &HomForm<S>) -> Vec<HomForm<S>> {
    (0..phi.rows()).map(|i| phi.get(i, c).multiply(f)).collect()
}

fn gamma_from_columns<S: Scalar>(
    n: usize,
    num_vars: usize,
    degree: u32,
    ctx: S::Ctx,
    cols: Vec<Vec<HomForm<S>>>,
) -> FormMatrix<S> {
    let mut g = FormMatrix::zeros(n, cols.len(), num_vars, degree, ctx);
    for (j, col) in cols.into_iter().enumerate() {
        for (i, f) in col.into_iter().enumerate() {
            g.set(i, j, f);
        }
    }
    g
}

/// `ζ(φ) = (ξ, γ(φ))` for `m1 O(-d1) ⊕ m2 O(-d2) -> n O`.
///
/// `ξ` is `p1 × m2` over `S^{d1-d2}`: a zero `m1 × m2` block on top, then
/// the column of basis monomials `X^T` down the diagonal.
/// `γ(φ) = [φ' | φ_{m1+1} X | … | φ_{m1+m2} X]`.
pub fn build_embedding<S: Scalar>(phi: &Morphism<S>) -> Result<EmbeddedPoint<S>> {
    let ty = phi.ty();
    if !ty.is_two_block() {
        return Err(Error::UnsupportedShape("the (2,1) embedding needs two source blocks".into()));
    }
    let (m1, m2, n, nv) = (ty.mult(0), ty.mult(1), ty.n(), ty.num_vars());
    let e = ty.degree(0) - ty.degree(1);
    let ctx = phi.block(0).ctx();
    let a_basis = basis_in_vars(nv, e);
    let a = a_basis.len();
    let xs: Vec<HomForm<S>> = a_basis.monomials().iter().map(|m| HomForm::monomial(m, S::one(ctx), ctx)).collect();

    let mut xi = FormMatrix::zeros(ty.p1(), m2, nv, e, ctx);
    for j in 0..m2 {
        for (s, x) in xs.iter().enumerate() {
            xi.set(m1 + j * a + s, j, x.clone());
        }
    }
    let mut cols: Vec<Vec<HomForm<S>>> = (0..m1).map(|c| phi.block(0).column(c)).collect();
    for j in 0..m2 {
        for x in &xs {
            cols.push(column_times(phi.block(1), j, x));
        }
    }
    let gamma = gamma_from_columns(n, nv, ty.degree(0), ctx, cols);
    Ok(EmbeddedPoint { kind: EmbeddingKind::Embedded21, ty: ty.clone(), xis: vec![xi], gamma })
}

/// The `a31 × a32` matrix `W_kj = W_k / V_j` (zero when `V_j ∤ W_k`).
pub fn division_matrix<S: Scalar>(ty: &MorphismType, ctx: S::Ctx) -> Result<FormMatrix<S>> {
    ty.require_three_one()?;
    let nv = ty.num_vars();
    let (d1, d2, d3) = (ty.degree(0), ty.degree(1), ty.degree(2));
    let v = basis_in_vars(nv, d2 - d3);
    let w = basis_in_vars(nv, d1 - d3);
    let mut out = FormMatrix::zeros(w.len(), v.len(), nv, d1 - d2, ctx);
    for (k, wk) in w.monomials().iter().enumerate() {
        for (j, vj) in v.monomials().iter().enumerate() {
            if let Some(q) = divide(wk, vj) {
                out.set(k, j, HomForm::monomial(&q, S::one(ctx), ctx));
            }
        }
    }
    Ok(out)
}

/// `ζ(φ) = (ξ2, ξ3, γ(φ))` for `m O(-d1) ⊕ O(-d2) ⊕ O(-d3) -> n O`.
///
/// `ξ2 = [[0, 0], [U, 0], [0, W]]`, `ξ3 = [0, V_1, …, V_{a32}]^T`,
/// `γ(φ) = [φ^1 | φ^2 U_i | φ^3 W_k]`, all bases monomial in lex order.
pub fn build_embedding_31<S: Scalar>(phi: &Morphism<S>) -> Result<EmbeddedPoint<S>> {
    let ty = phi.ty();
    ty.require_three_one()?;
    let (m, n, nv) = (ty.mult(0), ty.n(), ty.num_vars());
    let (d1, d2, d3) = (ty.degree(0), ty.degree(1), ty.degree(2));
    let ctx = phi.block(0).ctx();
    let mono = |e: &Vec<u32>| HomForm::monomial(e, S::one(ctx), ctx);
    let u: Vec<HomForm<S>> = basis_in_vars(nv, d1 - d2).monomials().iter().map(mono).collect();
    let v: Vec<HomForm<S>> = basis_in_vars(nv, d2 - d3).monomials().iter().map(mono).collect();
    let w: Vec<HomForm<S>> = basis_in_vars(nv, d1 - d3).monomials().iter().map(mono).collect();
    let (a21, a32, a31) = (u.len(), v.len(), w.len());
    let wdiv = division_matrix::<S>(ty, ctx)?;

    let mut xi2 = FormMatrix::zeros(ty.p1(), ty.p2(), nv, d1 - d2, ctx);
    for (s, us) in u.iter().enumerate() {
        xi2.set(m + s, 0, us.clone());
    }
    for k in 0..a31 {
        for j in 0..a32 {
            xi2.set(m + a21 + k, 1 + j, wdiv.get(k, j).clone());
        }
    }
    let mut xi3 = FormMatrix::zeros(ty.p2(), 1, nv, d2 - d3, ctx);
    for (j, vj) in v.iter().enumerate() {
        xi3.set(1 + j, 0, vj.clone());
    }
    let mut cols: Vec<Vec<HomForm<S>>> = (0..m).map(|c| phi.block(0).column(c)).collect();
    for us in &u {
        cols.push(column_times(phi.block(1), 0, us));
    }
    for wk in &w {
        cols.push(column_times(phi.block(2), 0, wk));
    }
    let gamma = gamma_from_columns(n, nv, d1, ctx, cols);
    Ok(EmbeddedPoint { kind: EmbeddingKind::Embedded31, ty: ty.clone(), xis: vec![xi2, xi3], gamma })
}

/// Dispatches on the type's shape.
pub fn embed<S: Scalar>(phi: &Morphism<S>) -> Result<EmbeddedPoint<S>> {
    if phi.ty().is_two_block() {
        build_embedding(phi)
    } else {
        build_embedding_31(phi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, Matrix, Rational};
    use crate::morphism::{construct_semistable, Construction};

    #[test]
    fn simplest_embedding() {
        let t = MorphismType::two_block(2, 3, 1, 2, 1, 3).unwrap();
        let phi = construct_semistable(&t, Construction::Generic).unwrap();
        let e = build_embedding(&phi).unwrap();
        let xi = &e.xis[0];
        assert_eq!((xi.rows(), xi.cols()), (4, 1));
        assert!(xi.get(0, 0).is_zero());
        for s in 0..3 {
            assert_eq!(xi.get(1 + s, 0), &HomForm::var(3, s, ()));
        }
        assert_eq!((e.gamma.rows(), e.gamma.cols()), (3, 4));
        assert_eq!(e.gamma.get(0, 0), phi.block(0).get(0, 0));
        assert_eq!(e.gamma.get(1, 2), &phi.block(1).get(1, 0).multiply(&HomForm::var(3, 1, ())));
        let z = build_embedding(&Morphism::<Rational>::zero(t, ())).unwrap();
        assert!(z.gamma.is_zero());
        assert_eq!(&z.xis[0], xi);
    }

    #[test]
    fn gamma_is_equivariant() {
        let t = MorphismType::two_block(2, 3, 1, 2, 1, 3).unwrap();
        let phi = construct_semistable(&t, Construction::Generic).unwrap();
        let h = Matrix::from_rows(
            vec![vec![q(1, 1), q(2, 1), q(0, 1)], vec![q(0, 1), q(1, 1), q(-3, 1)], vec![q(5, 1), q(0, 1), q(1, 1)]],
            3,
            (),
        );
        let moved = Morphism::new(t, phi.blocks().iter().map(|b| b.left_scalar(&h)).collect()).unwrap();
        let lhs = build_embedding(&moved).unwrap().gamma;
        let rhs = build_embedding(&phi).unwrap().gamma.left_scalar(&h);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_matrix_entries() {
        let t = MorphismType::three_one(2, 1, 3, 2, 1, 2).unwrap();
        let w = division_matrix::<Rational>(&t, ()).unwrap();
        assert_eq!((w.rows(), w.cols()), (6, 3));
        for j in 0..3 {
            assert_eq!((0..6).filter(|&k| !w.get(k, j).is_zero()).count(), 3);
        }
        // W_1 = X0^2, V_2 = X1
        assert!(w.get(0, 1).is_zero());
        // W_2 = X0 X1, V_2 = X1
        assert_eq!(w.get(1, 1), &HomForm::var(3, 0, ()));
    }

    #[test]
    fn three_block_shapes() {
        let t = MorphismType::three_one(2, 1, 3, 2, 1, 2).unwrap();
        let e = build_embedding_31(&Morphism::<Rational>::zero(t, ())).unwrap();
        assert_eq!(e.dims(), vec![10, 4, 1]);
        assert_eq!((e.xis[1].rows(), e.xis[1].cols()), (4, 1));
        assert!(e.xis[1].get(0, 0).is_zero());
    }
}
