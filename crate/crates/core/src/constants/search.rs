use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::{enumerate_subspaces, gaussian_binomial, pivot_sets, Budget, Fp, Matrix, PivotCell, PrimeField, Subspace};
use crate::forms::{basis_in_vars, mul_exponents, sym_dim};
use crate::king::{basis_rows, span_rank, BasisRows};
use crate::{Error, Result};

/// Query for `k(i,j)` or `k(i)`: subspaces `U ⊂ M ⊗ S^{d2}` with
/// `dim M = m`, support of dimension greater than `support_gt`, and an
/// orthogonal of dimension at least `orth_ge` in `M* ⊗ S^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantQuery {
    pub label: String,
    pub r: usize,
    pub m: usize,
    pub d2: u32,
    pub e: u32,
    pub support_gt: usize,
    pub orth_ge: usize,
    pub prime: PrimeField,
    /// Largest dimension of `U` probed; defaults to the source dimension.
    pub dim_cap: Option<usize>,
}

impl ConstantQuery {
    /// `k(i,j)` for `m2` copies of `S^{d2}` paired with `S^e`.
    pub fn k_ij(r: usize, m2: usize, d2: u32, e: u32, i: usize, j: usize, prime: PrimeField) -> Result<Self> {
        let a = sym_dim(r + 1, e);
        if i == 0 || i + 1 > m2 || j == 0 || j > m2 * a {
            return Err(Error::InvalidInput(format!("k({i},{j}) needs 1 <= i <= m2-1 and 1 <= j <= m2*a")));
        }
        Ok(ConstantQuery {
            label: format!("k({i},{j})"),
            r,
            m: m2,
            d2,
            e,
            support_gt: i,
            orth_ge: j,
            prime,
            dim_cap: None,
        })
    }

    /// `k(i)`, taken over a space `M` of dimension exactly `i`.
    pub fn k_i(r: usize, d2: u32, e: u32, i: usize, prime: PrimeField) -> Result<Self> {
        if i < 2 {
            return Err(Error::InvalidInput("k(i) needs i >= 2".into()));
        }
        Ok(ConstantQuery {
            label: format!("k({i})"),
            r,
            m: i,
            d2,
            e,
            support_gt: i - 1,
            orth_ge: 1,
            prime,
            dim_cap: None,
        })
    }

    pub fn source_dim(&self) -> usize {
        self.m * sym_dim(self.r + 1, self.d2)
    }

    pub fn target_dim(&self) -> usize {
        self.m * sym_dim(self.r + 1, self.e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantStatus {
    /// Every dimension that could qualify was enumerated.
    Exhaustive,
    /// The search stopped on the budget; the value is a witnessed lower bound.
    LowerBound,
}

/// Which space was enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchSide {
    /// Subspaces `U` of `M ⊗ S^{d2}`, by ascending dimension.
    Source,
    /// `j`-dimensional `T ⊂ M* ⊗ S^e`, taking `U = T^⊥`.
    Target,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantValue {
    pub constant: String,
    pub d: u32,
    pub value: usize,
    pub status: ConstantStatus,
    pub prime: u32,
    pub side: SearchSide,
    pub witness: Option<BasisRows>,
}

/// Membership test for a candidate `U`, shared by both field paths.
pub(crate) struct Checker {
    m: usize,
    hd: usize,
    target: usize,
    /// `pairing[s][g]`: coefficients over the target of the degree-`d2+e`
    /// monomial `g` in the pairing with source coordinate `s`.
    pairing: Vec<Vec<Vec<usize>>>,
    products: usize,
    field: PrimeField,
}

impl Checker {
    pub(crate) fn new(q: &ConstantQuery) -> Self {
        let nv = q.r + 1;
        let h = basis_in_vars(nv, q.d2);
        let a = basis_in_vars(nv, q.e);
        let g = basis_in_vars(nv, q.d2 + q.e);
        let hd = h.len();
        let mut pairing = vec![vec![Vec::new(); g.len()]; q.m * hd];
        for c in 0..q.m {
            for (hi, hm) in h.monomials().iter().enumerate() {
                for (fi, fm) in a.monomials().iter().enumerate() {
                    let gi = g.index_of(&mul_exponents(hm, fm)).expect("product monomial");
                    pairing[c * hd + hi][gi].push(c * a.len() + fi);
                }
            }
        }
        Checker { m: q.m, hd, target: q.m * a.len(), pairing, products: g.len(), field: q.prime }
    }

    pub(crate) fn support_dim(&self, basis: &[Vec<Fp>]) -> usize {
        let rows: Vec<Vec<Fp>> = basis
            .iter()
            .flat_map(|b| (0..self.hd).map(move |h| (0..self.m).map(|c| b[c * self.hd + h]).collect()))
            .collect();
        span_rank(rows, self.m, self.field)
    }

    pub(crate) fn orth_dim(&self, basis: &[Vec<Fp>]) -> usize {
        let mut rows = Vec::new();
        for b in basis {
            for g in 0..self.products {
                let mut row = vec![self.field.zero(); self.target];
                for (s, x) in b.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for &t in &self.pairing[s][g] {
                        row[t] = row[t].add(*x);
                    }
                }
                rows.push(row);
            }
        }
        self.target - span_rank(rows, self.target, self.field)
    }
}

/// Bit-packed version of [`Checker`] over `F_2`.
struct Gf2Checker {
    m: usize,
    hd: usize,
    target: usize,
    pairing: Vec<Vec<u64>>,
    /// Pairing rows of every packed source vector, when the source is small.
    table: Option<Vec<Vec<u64>>>,
}

/// Row echelon basis over `F_2` indexed by leading bit.
struct Echelon {
    lead: [u64; 64],
    rank: usize,
}

impl Echelon {
    fn new() -> Self {
        Echelon { lead: [0; 64], rank: 0 }
    }

    fn insert(&mut self, mut row: u64) {
        while row != 0 {
            let b = 63 - row.leading_zeros() as usize;
            if self.lead[b] == 0 {
                self.lead[b] = row;
                self.rank += 1;
                return;
            }
            row ^= self.lead[b];
        }
    }
}

#[cfg(test)]
fn gf2_rank(mut rows: Vec<u64>) -> usize {
    gf2_rank_in(&mut rows)
}

fn gf2_rank_in(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let mask = 1u64 << bit;
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] & mask != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for r in rows.iter_mut().skip(rank + 1) {
            if *r & mask != 0 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

impl Gf2Checker {
    fn new(c: &Checker) -> Self {
        let pairing = c
            .pairing
            .iter()
            .map(|per_g| per_g.iter().map(|ts| ts.iter().fold(0u64, |m, &t| m | 1 << t)).collect())
            .collect();
        let mut g = Gf2Checker { m: c.m, hd: c.hd, target: c.target, pairing, table: None };
        let source = c.m * c.hd;
        if source <= 16 {
            g.table = Some((0..1u64 << source).map(|b| g.rows_of(b)).collect());
        }
        g
    }

    fn rows_of(&self, b: u64) -> Vec<u64> {
        let products = self.pairing.first().map_or(0, |p| p.len());
        (0..products)
            .map(|g| {
                let mut row = 0u64;
                let mut bits = b;
                while bits != 0 {
                    let s = bits.trailing_zeros() as usize;
                    row ^= self.pairing[s][g];
                    bits &= bits - 1;
                }
                row
            })
            .collect()
    }

    /// `orth_dim(basis) >= j`, stopping as soon as the rank rules it out.
    fn orth_at_least(&self, basis: &[u64], j: usize) -> bool {
        let limit = self.target - j;
        let mut ech = Echelon::new();
        for &b in basis {
            let owned;
            let rows = match &self.table {
                Some(t) => &t[b as usize],
                None => {
                    owned = self.rows_of(b);
                    &owned
                }
            };
            for &r in rows {
                ech.insert(r);
                if ech.rank > limit {
                    return false;
                }
            }
        }
        true
    }

    fn support_dim(&self, basis: &[u64], buf: &mut Vec<u64>) -> usize {
        buf.clear();
        for &b in basis {
            for h in 0..self.hd {
                buf.push((0..self.m).fold(0u64, |acc, c| acc | ((b >> (c * self.hd + h)) & 1) << c));
            }
        }
        gf2_rank_in(buf)
    }

    #[cfg(test)]
    fn orth_dim(&self, basis: &[u64], buf: &mut Vec<u64>) -> usize {
        let products = self.pairing.first().map_or(0, |p| p.len());
        buf.clear();
        for &b in basis {
            for g in 0..products {
                let mut row = 0u64;
                let mut bits = b;
                while bits != 0 {
                    let s = bits.trailing_zeros() as usize;
                    row ^= self.pairing[s][g];
                    bits &= bits - 1;
                }
                buf.push(row);
            }
        }
        self.target - gf2_rank_in(buf)
    }
}

#[cfg(test)]
fn pack(v: &[Fp]) -> u64 {
    v.iter().enumerate().fold(0u64, |m, (i, x)| if x.is_zero() { m } else { m | 1 << i })
}

/// Result of scanning one dimension: does any `U` meet the orthogonality
/// condition, and the first `U` meeting both.
#[derive(Default)]
struct DimScan {
    any_orth: bool,
    first: Option<Subspace<Fp>>,
}

/// Packed bases of one pivot cell over `F_2`, in the same order as
/// [`PivotCell`]: free entries read as a binary counter, last entry fastest.
fn gf2_cell(ambient: usize, pivots: &[usize], mut visit: impl FnMut(&[u64]) -> bool) {
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (i, &pc) in pivots.iter().enumerate() {
        for c in pc + 1..ambient {
            if !pivots.contains(&c) {
                free.push((i, c));
            }
        }
    }
    let nfree = free.len();
    let mut basis: Vec<u64> = vec![0; pivots.len()];
    for x in 0u64..1 << nfree {
        for (i, &pc) in pivots.iter().enumerate() {
            basis[i] = 1 << pc;
        }
        for (k, &(i, c)) in free.iter().enumerate() {
            if x >> (nfree - 1 - k) & 1 == 1 {
                basis[i] |= 1 << c;
            }
        }
        if visit(&basis) {
            return;
        }
    }
}

fn unpack(b: u64, ambient: usize, field: PrimeField) -> Vec<Fp> {
    (0..ambient).map(|i| field.elem((b >> i & 1) as i64)).collect()
}

fn scan_dim(q: &ConstantQuery, checker: &Checker, fast: Option<&Gf2Checker>, u: usize) -> DimScan {
    let source = q.source_dim();
    let cells: Vec<DimScan> = pivot_sets(source, u)
        .into_par_iter()
        .map(|piv| {
            let mut out = DimScan::default();
            match fast {
                Some(f) => {
                    let mut buf = Vec::new();
                    gf2_cell(source, &piv, |basis| {
                        if !f.orth_at_least(basis, q.orth_ge) {
                            return false;
                        }
                        out.any_orth = true;
                        if f.support_dim(basis, &mut buf) > q.support_gt {
                            let vecs = basis.iter().map(|&b| unpack(b, source, q.prime)).collect();
                            out.first = Some(Subspace::span(vecs, source, q.prime));
                            return true;
                        }
                        false
                    });
                }
                None => {
                    for sub in PivotCell::new(q.prime, source, piv) {
                        let basis = sub.basis_vectors();
                        if checker.orth_dim(&basis) < q.orth_ge {
                            continue;
                        }
                        out.any_orth = true;
                        if checker.support_dim(&basis) > q.support_gt {
                            out.first = Some(sub);
                            break;
                        }
                    }
                }
            }
            out
        })
        .collect();
    let any_orth = cells.iter().any(|c| c.any_orth);
    let first = cells.into_iter().find_map(|c| c.first);
    DimScan { any_orth, first }
}

/// Largest dimension of a qualifying `U`, searched by ascending dimension.
///
/// A superspace of `U` has a smaller orthogonal, so once no `u`-dimensional
/// subspace meets the orthogonality bound, none of larger dimension does and
/// the search is complete.
pub fn compute_k_source(q: &ConstantQuery, budget: Budget) -> Result<ConstantValue> {
    let source = q.source_dim();
    if source > 64 || q.target_dim() > 64 {
        return Err(Error::Inapplicable("source and target dimensions are limited to 64".into()));
    }
    let cap = q.dim_cap.unwrap_or(source).min(source);
    let checker = Checker::new(q);
    let fast = (q.prime.modulus() == 2).then(|| Gf2Checker::new(&checker));
    let mut best: Option<Subspace<Fp>> = None;
    let mut status = ConstantStatus::Exhaustive;
    for u in 1..=cap {
        if budget.check(gaussian_binomial(source, u, q.prime.modulus() as u64)).is_err() {
            status = ConstantStatus::LowerBound;
            break;
        }
        let scan = scan_dim(q, &checker, fast.as_ref(), u);
        if !scan.any_orth {
            break;
        }
        if scan.first.is_some() {
            best = scan.first;
        }
        if u == cap && cap < source {
            status = ConstantStatus::LowerBound;
        }
    }
    Ok(ConstantValue {
        constant: q.label.clone(),
        d: q.d2,
        value: best.as_ref().map_or(0, |s| s.dim()),
        status,
        prime: q.prime.modulus(),
        side: SearchSide::Source,
        witness: best.as_ref().map(basis_rows),
    })
}

/// Same constant from the other side. A qualifying `U` lies in `T^⊥` for
/// some `j`-dimensional `T`, and `T^⊥` qualifies whenever its support is
/// large enough, so the answer is the largest such `dim T^⊥`.
pub fn compute_k_target(q: &ConstantQuery, budget: Budget) -> Result<ConstantValue> {
    let source = q.source_dim();
    let target = q.target_dim();
    let p = q.prime.modulus() as u64;
    budget.check(gaussian_binomial(target, q.orth_ge, p))?;
    let checker = Checker::new(q);
    // functionals[t][g]: the linear form on the source given by pairing
    // with target coordinate t and reading monomial g
    let mut functionals = vec![vec![vec![q.prime.zero(); source]; checker.products]; target];
    for (s_idx, per_g) in checker.pairing.iter().enumerate() {
        for (g, ts) in per_g.iter().enumerate() {
            for &t in ts {
                functionals[t][g][s_idx] = q.prime.one();
            }
        }
    }
    let mut best: Option<Subspace<Fp>> = None;
    for t_space in enumerate_subspaces(target, q.orth_ge, q.prime, budget)? {
        let mut rows = Vec::new();
        for tv in t_space.basis_vectors() {
            for g in 0..checker.products {
                let mut row = vec![q.prime.zero(); source];
                for (t, c) in tv.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, f) in row.iter_mut().zip(&functionals[t][g]) {
                        *x = x.add(c.mul(*f));
                    }
                }
                rows.push(row);
            }
        }
        let dim = source - span_rank(rows.clone(), source, q.prime);
        if dim == 0 || best.as_ref().is_some_and(|b| b.dim() >= dim) {
            continue;
        }
        let u = Subspace::span(Matrix::from_rows(rows, source, q.prime).kernel_basis(), source, q.prime);
        if checker.support_dim(&u.basis_vectors()) > q.support_gt {
            best = Some(u);
        }
    }
    Ok(ConstantValue {
        constant: q.label.clone(),
        d: q.d2,
        value: best.as_ref().map_or(0, |s| s.dim()),
        status: ConstantStatus::Exhaustive,
        prime: q.prime.modulus(),
        side: SearchSide::Target,
        witness: best.as_ref().map(basis_rows),
    })
}

/// Runs whichever side has fewer subspaces to visit.
pub fn compute_k(q: &ConstantQuery, budget: Budget) -> Result<ConstantValue> {
    let p = q.prime.modulus() as u64;
    let source_count = crate::exact::total_subspaces(q.source_dim(), p);
    let target_count = gaussian_binomial(q.target_dim(), q.orth_ge, p);
    match (source_count, target_count) {
        (Some(s), Some(t)) if t < s && t <= budget.cap as u128 => compute_k_target(q, budget),
        _ => compute_k_source(q, budget),
    }
}

/// Whether the span of `vectors` satisfies the query's two conditions.
pub fn qualifies(q: &ConstantQuery, vectors: &[Vec<Fp>]) -> bool {
    let checker = Checker::new(q);
    checker.orth_dim(vectors) >= q.orth_ge && checker.support_dim(vectors) > q.support_gt
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn gf2_rank_basics() {
        assert_eq!(gf2_rank(vec![0b11, 0b01, 0b10]), 2);
        assert_eq!(gf2_rank(vec![]), 0);
        assert_eq!(gf2_rank(vec![1 << 40, 1 << 3]), 2);
    }

    #[test]
    fn fast_and_generic_checkers_agree() {
        let q = ConstantQuery::k_ij(2, 3, 1, 2, 2, 5, f(2)).unwrap();
        let c = Checker::new(&q);
        let g = Gf2Checker::new(&c);
        let field = f(2);
        for sub in crate::exact::enumerate_subspaces(9, 2, field, Budget::default()).unwrap().step_by(97) {
            let b = sub.basis_vectors();
            let packed: Vec<u64> = b.iter().map(|v| pack(v)).collect();
            let mut buf = Vec::new();
            assert_eq!(c.orth_dim(&b), g.orth_dim(&packed, &mut buf));
            for j in 1..=18 {
                assert_eq!(c.orth_dim(&b) >= j, g.orth_at_least(&packed, j));
            }
            assert_eq!(c.support_dim(&b), g.support_dim(&packed, &mut buf));
        }
    }

    #[test]
    fn packed_cells_follow_pivot_cell_order() {
        let field = f(2);
        for piv in pivot_sets(5, 2) {
            let mut packed = Vec::new();
            gf2_cell(5, &piv, |b| {
                packed.push(b.to_vec());
                false
            });
            let generic: Vec<Vec<u64>> =
                PivotCell::new(field, 5, piv).map(|s| s.basis_vectors().iter().map(|v| pack(v)).collect()).collect();
            assert_eq!(packed, generic);
        }
    }

    #[test]
    fn orth_matches_pairing_orthogonal() {
        let q = ConstantQuery::k_ij(2, 3, 1, 2, 1, 1, f(3)).unwrap();
        let c = Checker::new(&q);
        for sub in crate::exact::enumerate_subspaces(9, 1, f(3), Budget::default()).unwrap().step_by(211) {
            let o = crate::forms::pairing_orthogonal(&sub, 3, 3, 1, 2);
            assert_eq!(c.orth_dim(&sub.basis_vectors()), o.dim());
        }
    }

    #[test]
    fn both_sides_agree() {
        for (i, j, p) in [(1, 1, 2), (2, 1, 2), (1, 2, 2), (1, 1, 3)] {
            let mut q = ConstantQuery::k_ij(1, 3, 1, 1, i, j, f(p)).unwrap();
            let a = compute_k_source(&q, Budget::default()).unwrap();
            let b = compute_k_target(&q, Budget::default()).unwrap();
            assert_eq!(a.value, b.value, "k({i},{j}) over F_{p}");
            q.m = 2;
            q.support_gt = 1;
            let a = compute_k_source(&q, Budget::default()).unwrap();
            let b = compute_k_target(&q, Budget::default()).unwrap();
            assert_eq!(a.value, b.value);
        }
    }

    #[test]
    fn pairing_with_constants_is_nondegenerate() {
        // e = 0: the pairing is the evaluation M ⊗ H × M* -> H, so only U = 0
        // has a nonzero orthogonal.
        let q = ConstantQuery::k_ij(1, 2, 1, 0, 1, 1, f(3)).unwrap();
        let v = compute_k(&q, Budget::default()).unwrap();
        assert_eq!(v.value, 0);
        assert_eq!(v.status, ConstantStatus::Exhaustive);
    }

    #[test]
    fn query_ranges() {
        assert!(ConstantQuery::k_ij(2, 3, 1, 2, 3, 1, f(2)).is_err());
        assert!(ConstantQuery::k_ij(2, 3, 1, 2, 1, 19, f(2)).is_err());
        assert!(ConstantQuery::k_i(2, 1, 2, 1, f(2)).is_err());
    }
}
