use serde::{Deserialize, Serialize};

use crate::exact::{binom, Matrix, Rational, Subspace};
use crate::forms::{basis_in_vars, forms_to_vector, pairing_orthogonal, FormMatrix, HomForm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness74Report {
    pub d: u32,
    /// Number of rows of `α0`, `dim S^{d-1}`.
    pub rows: usize,
    pub product_zero: bool,
    pub alpha_rows_independent: bool,
    pub alpha_columns_independent: bool,
    pub beta_columns_independent: bool,
    /// Dimension of the orthogonal of the row space of `α0` in `k^3 ⊗ S^2`.
    pub orthogonal_dim: usize,
    pub holds: bool,
    /// `k(2,5) >= lower_bound` when `holds`.
    pub lower_bound: usize,
}

fn x(i: usize) -> HomForm<Rational> {
    HomForm::var(3, i, ())
}

/// `α0 = [u_1; …; u_q] [X Y Z]` over the monomial basis of `S^{d-1}`.
pub fn alpha0(d: u32) -> FormMatrix<Rational> {
    let us = basis_in_vars(3, d - 1);
    let rows = us
        .monomials()
        .iter()
        .map(|e| {
            let u = HomForm::monomial(e, Rational::one(), ());
            (0..3).map(|i| u.multiply(&x(i))).collect()
        })
        .collect();
    FormMatrix::from_rows(rows, 3, d, ())
}

pub fn beta0() -> FormMatrix<Rational> {
    let (xx, yy, zz) = (x(0), x(1), x(2));
    let p = |a: &HomForm<Rational>, b: &HomForm<Rational>| a.multiply(b);
    let z = HomForm::zero(3, 2, ());
    let rows = vec![
        vec![p(&xx, &yy).neg(), p(&xx, &zz).neg(), z.clone(), p(&yy, &yy).neg(), p(&yy, &zz).neg()],
        vec![p(&xx, &xx), z.clone(), p(&xx, &zz).neg(), p(&xx, &yy), z.clone()],
        vec![z.clone(), p(&xx, &xx), p(&xx, &yy), z, p(&xx, &yy)],
    ];
    FormMatrix::from_rows(rows, 3, 2, ())
}

fn row_rank(m: &FormMatrix<Rational>) -> usize {
    let width = m.cols() * basis_in_vars(m.num_vars(), m.degree()).len();
    let rows: Vec<Vec<Rational>> =
        (0..m.rows()).map(|i| forms_to_vector(&(0..m.cols()).map(|j| m.get(i, j).clone()).collect::<Vec<_>>())).collect();
    Matrix::from_rows(rows, width, ()).rank()
}

/// Checks the explicit pair `(α0, β0)` bounding `k(2,5)` from below on the
/// plane: `α0 β0 = 0` and the required independence of rows and columns.
pub fn verify_74_witness(d: u32) -> Witness74Report {
    assert!(d >= 1, "degree must be positive");
    let a = alpha0(d);
    let b = beta0();
    let product_zero = a.mul(&b).is_zero();
    let q = a.rows();
    let alpha_rows_independent = row_rank(&a) == q;
    let alpha_columns_independent = row_rank(&a.transpose()) == 3;
    let beta_columns_independent = row_rank(&b.transpose()) == 5;
    let rows: Vec<Vec<Rational>> =
        (0..q).map(|i| forms_to_vector(&(0..3).map(|j| a.get(i, j).clone()).collect::<Vec<_>>())).collect();
    let width = rows[0].len();
    let u = Subspace::span(rows, width, ());
    let orthogonal_dim = pairing_orthogonal(&u, 3, 3, d, 2).dim();
    let holds = product_zero
        && alpha_rows_independent
        && alpha_columns_independent
        && beta_columns_independent
        && orthogonal_dim >= 5;
    debug_assert_eq!(q as u64, binom(d as u64 + 1, 2));
    Witness74Report {
        d,
        rows: q,
        product_zero,
        alpha_rows_independent,
        alpha_columns_independent,
        beta_columns_independent,
        orthogonal_dim,
        holds,
        lower_bound: if holds { q } else { 0 },
    }
}
