use std::fmt;

use serde::{Deserialize, Serialize};

use super::combinat::{combinations, gaussian_binomial, total_subspaces};
use super::matrix::Matrix;
use super::prime::{Fp, PrimeField};
use super::scalar::Scalar;
use crate::{Error, Result};

/// Default cap on the number of subspaces visited by a single quantifier.
pub const DEFAULT_SUBSPACE_CAP: u64 = 5_000_000;

/// Hard limit for exhaustive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub cap: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { cap: DEFAULT_SUBSPACE_CAP }
    }
}

impl Budget {
    pub fn new(cap: u64) -> Result<Self> {
        if cap == 0 {
            return Err(Error::InvalidInput("budget must be positive".into()));
        }
        Ok(Budget { cap })
    }

    /// Fails with `BudgetExceeded` when `count` (None = overflow) is above the cap.
    pub fn check(&self, count: Option<u128>) -> Result<()> {
        match count {
            Some(c) if c <= self.cap as u128 => Ok(()),
            Some(c) => Err(Error::BudgetExceeded { count: c.to_string(), cap: self.cap }),
            None => Err(Error::BudgetExceeded { count: "overflow".into(), cap: self.cap }),
        }
    }
}

/// A linear subspace of `S^n`, stored as its unique RREF basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<S: Scalar> {
    basis: Matrix<S>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize, ctx: S::Ctx) -> Self {
        Subspace { basis: Matrix::zeros(0, ambient, ctx), pivots: Vec::new() }
    }

    pub fn full(ambient: usize, ctx: S::Ctx) -> Self {
        Subspace { basis: Matrix::identity(ambient, ctx), pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(vectors: Vec<Vec<S>>, ambient: usize, ctx: S::Ctx) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient, ctx);
        }
        let m = Matrix::from_rows(vectors, ambient, ctx);
        let (r, pivots) = m.rref();
        let rank = pivots.len();
        let rows = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace { basis: Matrix::from_rows(rows, ambient, ctx), pivots }
    }

    /// Wraps a matrix already in RREF with full row rank.
    pub(crate) fn from_rref(basis: Matrix<S>, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.rows(), pivots.len());
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn ctx(&self) -> S::Ctx {
        self.basis.ctx()
    }

    pub fn basis(&self) -> &Matrix<S> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<S>> {
        self.basis.row_vecs()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    /// Residue of `v` after clearing the pivot coordinates.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        let mut w = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            if w[c].is_zero() {
                continue;
            }
            let f = w[c].clone();
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    w[j] = w[j].sub(&f.mul(b));
                }
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, other: &Subspace<S>) -> bool {
        (0..other.dim()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace<S>) -> Subspace<S> {
        let mut v = self.basis_vectors();
        v.extend(other.basis_vectors());
        Subspace::span(v, self.ambient(), self.ctx())
    }

    /// `{ w : Σ w_j v_j = 0 for all v in self }` under the standard dot product.
    pub fn annihilator(&self) -> Subspace<S> {
        if self.is_zero() {
            return Subspace::full(self.ambient(), self.ctx());
        }
        Subspace::span(self.basis.kernel_basis(), self.ambient(), self.ctx())
    }
}

impl<S: Scalar> fmt::Debug for Subspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.ambient(), self.basis_vectors())
    }
}

/// Positions `(row, col)` of the free entries of an RREF matrix with the
/// given pivot columns.
fn free_positions(ambient: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &pc) in pivots.iter().enumerate() {
        for c in pc + 1..ambient {
            if !pivots.contains(&c) {
                out.push((i, c));
            }
        }
    }
    out
}

/// All `k`-dimensional subspaces of `F_p^d` with a fixed pivot set, in
/// lexicographic order of their free entries (last entry fastest).
pub struct PivotCell {
    field: PrimeField,
    ambient: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<u16>,
    done: bool,
}

impl PivotCell {
    pub fn new(field: PrimeField, ambient: usize, pivots: Vec<usize>) -> Self {
        let free = free_positions(ambient, &pivots);
        let digits = vec![0; free.len()];
        PivotCell { field, ambient, pivots, free, digits, done: false }
    }

    pub fn len(&self) -> u128 {
        (self.field.modulus() as u128).pow(self.free.len() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn build(&self) -> Subspace<Fp> {
        let k = self.pivots.len();
        let mut m = Matrix::zeros(k, self.ambient, self.field);
        for (i, &c) in self.pivots.iter().enumerate() {
            m.set(i, c, self.field.one());
        }
        for (&(i, c), &d) in self.free.iter().zip(&self.digits) {
            m.set(i, c, self.field.elem(d as i64));
        }
        Subspace::from_rref(m, self.pivots.clone())
    }
}

impl Iterator for PivotCell {
    type Item = Subspace<Fp>;

    fn next(&mut self) -> Option<Subspace<Fp>> {
        if self.done {
            return None;
        }
        let out = self.build();
        let p = self.field.modulus() as u16;
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < p {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

/// Pivot sets of `k`-dimensional subspaces of `F_p^d`, in the order used by
/// [`enumerate_subspaces`]. Each set indexes an independent cell, so callers
/// can split an enumeration across workers.
pub fn pivot_sets(ambient: usize, dim: usize) -> Vec<Vec<usize>> {
    combinations(ambient, dim)
}

/// Stream of every `dim`-dimensional subspace of `F_p^ambient`, each exactly
/// once as its RREF basis. Order: pivot sets lexicographically, then free
/// entries lexicographically.
pub fn enumerate_subspaces(
    ambient: usize,
    dim: usize,
    field: PrimeField,
    budget: Budget,
) -> Result<impl Iterator<Item = Subspace<Fp>>> {
    budget.check(gaussian_binomial(ambient, dim, field.modulus() as u64))?;
    Ok(pivot_sets(ambient, dim).into_iter().flat_map(move |piv| PivotCell::new(field, ambient, piv)))
}

/// Every subspace of `F_p^ambient`, by increasing dimension.
pub fn enumerate_all_subspaces(
    ambient: usize,
    field: PrimeField,
    budget: Budget,
) -> Result<Vec<Subspace<Fp>>> {
    budget.check(total_subspaces(ambient, field.modulus() as u64))?;
    let mut out = Vec::new();
    for k in 0..=ambient {
        out.extend(enumerate_subspaces(ambient, k, field, Budget { cap: u64::MAX })?);
    }
    Ok(out)
}
