//! Semistability on the embedded side.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::build::EmbeddedPoint;
use super::remarks::omega;
use crate::exact::{enumerate_all_subspaces, enumerate_subspaces, total_subspaces, Budget, Fp, Matrix, PrimeField, Rational, Subspace};
use crate::king::{basis_rows, coefficient_slices, span_rank, Margin, Status, SubspaceFamily};
use crate::morphism::{MorphismType, TildePolarization};
use crate::{Error, Result};

/// Largest `p_1` handled by the exhaustive embedded-side search.
pub const MAX_TILDE_P1: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TildeVerdict {
    pub status: Status,
    pub prime: u32,
    /// Source chain `(P_1', P_2', …)` of the first violating (or equality) family.
    pub witness: Option<SubspaceFamily>,
    pub tag: Option<String>,
    pub margins: Vec<Margin>,
}

fn check_gates(ty: &MorphismType, tp: &TildePolarization) -> Result<()> {
    tp.gates()?;
    if ty.is_three_one() && &tp.alphas[0] * &Rational::from(ty.p1()) >= Rational::one() {
        return Err(Error::Inapplicable("need λ1 p1 < 1".into()));
    }
    Ok(())
}

/// Span of `ξ(v ⊗ h)` over `v ∈ sub` and all monomials `h`.
fn image_of(slices: &[Matrix<Fp>], sub: &Subspace<Fp>, rows: usize, field: PrimeField) -> Subspace<Fp> {
    let mut vecs = Vec::new();
    for v in sub.basis_vectors() {
        for c in slices {
            let w = c.mul_vec(&v);
            if w.iter().any(|x| !x.is_zero()) {
                vecs.push(w);
            }
        }
    }
    Subspace::span(vecs, rows, field)
}

fn field_of(e: &EmbeddedPoint<Fp>) -> PrimeField {
    e.gamma.ctx()
}

/// Exhaustive test: every chain `P_k' ⊆ P_k` with `ξ(P_{k+1}' ⊗ A) ⊆ P_k'`
/// and `N' = γ(P_1' ⊗ H*)` is checked against
/// `β_1 dim N' ≥ Σ α_i dim P_i'`.
pub fn tilde_decide(e: &EmbeddedPoint<Fp>, tp: &TildePolarization, budget: Budget) -> Result<TildeVerdict> {
    let ty = &e.ty;
    check_gates(ty, tp)?;
    let dims = e.dims();
    if dims[0] > MAX_TILDE_P1 {
        return Err(Error::BudgetExceeded { count: format!("p1 = {}", dims[0]), cap: MAX_TILDE_P1 as u64 });
    }
    if tp.alphas.len() != dims.len() {
        return Err(Error::InvalidInput("one embedded weight per source space".into()));
    }
    let field = field_of(e);
    let p = field.modulus() as u64;
    let count = dims.iter().try_fold(1u128, |acc, &d| total_subspaces(d, p).and_then(|c| acc.checked_mul(c)));
    budget.check(count)?;

    let lists: Vec<Vec<Subspace<Fp>>> =
        dims.iter().map(|&d| enumerate_all_subspaces(d, field, budget)).collect::<Result<_>>()?;
    let gamma_slices = &coefficient_slices(std::slice::from_ref(&e.gamma))[0];
    let xi_slices: Vec<Vec<Matrix<Fp>>> = e.xis.iter().map(|x| coefficient_slices(std::slice::from_ref(x)).remove(0)).collect();
    let n = ty.n();
    let images: Vec<usize> = lists[0]
        .iter()
        .map(|s| {
            let vecs = s.basis_vectors().iter().flat_map(|v| gamma_slices.iter().map(move |c| c.mul_vec(v))).collect();
            span_rank(vecs, n, field)
        })
        .collect();

    let mut state = Search {
        tp,
        n,
        dims: &dims,
        lists: &lists,
        xi_slices: &xi_slices,
        images: &images,
        field,
        chain: vec![0; dims.len()],
        first_violation: None,
        first_equality: None,
        margins: BTreeMap::new(),
    };
    state.descend(dims.len() - 1, None);

    let (status, witness) = match (state.first_violation, state.first_equality) {
        (Some(w), _) => (Status::Unstable, Some(w)),
        (None, Some(w)) => (Status::ProperlySemistable, Some(w)),
        (None, None) => (Status::Stable, None),
    };
    let tag = witness.as_ref().map(|w| {
        format!("source dims {:?}, image dim {}", w.source_dims, w.image_dim)
    });
    Ok(TildeVerdict {
        status,
        prime: field.modulus(),
        witness,
        tag,
        margins: state.margins.into_iter().map(|(dims, slack)| Margin { dims, slack }).collect(),
    })
}

struct Search<'a> {
    tp: &'a TildePolarization,
    n: usize,
    dims: &'a [usize],
    lists: &'a [Vec<Subspace<Fp>>],
    xi_slices: &'a [Vec<Matrix<Fp>>],
    images: &'a [usize],
    field: PrimeField,
    chain: Vec<usize>,
    first_violation: Option<SubspaceFamily>,
    first_equality: Option<SubspaceFamily>,
    margins: BTreeMap<Vec<usize>, Rational>,
}

impl Search<'_> {
    /// Chooses `P_level'` containing `required`, then recurses toward `P_1'`.
    fn descend(&mut self, level: usize, required: Option<Subspace<Fp>>) {
        for idx in 0..self.lists[level].len() {
            let sub = &self.lists[level][idx];
            if let Some(req) = &required {
                if !sub.contains(req) {
                    continue;
                }
            }
            self.chain[level] = idx;
            if level == 0 {
                self.record();
            } else {
                let img = image_of(&self.xi_slices[level - 1], sub, self.dims[level - 1], self.field);
                self.descend(level - 1, Some(img));
            }
        }
    }

    fn record(&mut self) {
        let subs: Vec<&Subspace<Fp>> = self.chain.iter().enumerate().map(|(i, &k)| &self.lists[i][k]).collect();
        let ds: Vec<usize> = subs.iter().map(|s| s.dim()).collect();
        if ds.iter().all(|&d| d == 0) {
            return;
        }
        let t = self.images[self.chain[0]];
        if ds == self.dims && t == self.n {
            return;
        }
        let rhs: Rational = self.tp.alphas.iter().zip(&ds).map(|(a, &d)| a * &Rational::from(d)).sum();
        let slack = &self.tp.beta1 * &Rational::from(t) - rhs;
        let make = || SubspaceFamily {
            sources: subs.iter().map(|s| basis_rows(s)).collect(),
            source_dims: ds.clone(),
            image_dim: t,
            slack: slack.clone(),
        };
        if slack.is_negative() && self.first_violation.is_none() {
            self.first_violation = Some(make());
        } else if slack.is_zero() && self.first_equality.is_none() {
            self.first_equality = Some(make());
        }
        match self.margins.get_mut(&ds) {
            Some(m) if slack < *m => *m = slack,
            Some(_) => {}
            None => {
                self.margins.insert(ds, slack);
            }
        }
    }
}

/// One line of the reduced condition list: for `P_1'` of codimension `k`,
/// the family is destabilizing when `(n - dim N')/n > bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedCondition {
    pub k: usize,
    /// Least codimension of `P_2'` compatible with `k`.
    pub i: usize,
    /// Whether `P_3'` is taken to be zero (three source spaces only).
    pub p3_zero: bool,
    pub bound: Rational,
    pub tag: String,
}

/// Reduced list of conditions indexed by the codimension `k` of `P_1'`,
/// `0 ≤ k < p_1`.
pub fn reduced_conditions(ty: &MorphismType, tp: &TildePolarization) -> Result<Vec<ReducedCondition>> {
    let l1 = &tp.alphas[0];
    let kq = |k: usize| Rational::from(k) * l1;
    let mut out = Vec::new();
    match ty.num_blocks() {
        2 => {
            let (m1, a) = (ty.mult(0), ty.a21());
            let a2 = &tp.alphas[1];
            for k in 0..ty.p1() {
                let i = if k <= m1 { 0 } else { (k - m1).div_ceil(a) };
                out.push(ReducedCondition {
                    k,
                    i,
                    p3_zero: false,
                    bound: kq(k) + Rational::from(i) * a2,
                    tag: format!("k={k}: k*l1 + {i}*a2"),
                });
            }
        }
        _ => {
            ty.require_three_one()?;
            let (m, a21, a31, a32) = (ty.mult(0), ty.a21(), ty.a31(), ty.a32());
            let w = omega(ty)?.closed_form;
            let (a2, a3) = (&tp.alphas[1], &tp.alphas[2]);
            for k in 0..ty.p1() {
                let (i, p3_zero) = if k <= m {
                    (0, false)
                } else if k <= m + a21 {
                    (1, false)
                } else if k + w <= m + a21 + a31 {
                    (2, true)
                } else if k <= m + a31 {
                    (a32, true)
                } else {
                    (a32 + 1, true)
                };
                let mut bound = kq(k) + Rational::from(i) * a2;
                if p3_zero {
                    bound = bound + a3.clone();
                }
                let tag = format!("k={k}: k*l1 + {i}*a2{}", if p3_zero { " + a3" } else { "" });
                out.push(ReducedCondition { k, i, p3_zero, bound, tag });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedMargin {
    pub k: usize,
    /// Least `dim γ(P_1' ⊗ H*)` over `P_1'` of codimension `k`.
    pub min_image_dim: usize,
    pub slack: Rational,
}

/// Outcome of the reduced list. Only `Stable` is conclusive: the list
/// bounds each codimension of `P_1'` by its most favourable `P_2'`, so a
/// failed line need not come from an actual chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedCheck {
    pub status: Status,
    pub prime: u32,
    pub conclusive: bool,
    pub tag: Option<String>,
    pub margins: Vec<ReducedMargin>,
}

/// `max dim K(N')` over `N'` of each dimension `s = 0..=n`, where
/// `K(N') = { v : γ(v ⊗ H*) ⊆ N' }`.
pub fn max_kernel_by_target_dim(e: &EmbeddedPoint<Fp>, budget: Budget) -> Result<Vec<usize>> {
    let n = e.ty.n();
    let field = field_of(e);
    let p1 = e.gamma.cols();
    budget.check(total_subspaces(n, field.modulus() as u64))?;
    let slices = &coefficient_slices(std::slice::from_ref(&e.gamma))[0];
    let transposed: Vec<Matrix<Fp>> = slices.iter().map(|c| c.transpose()).collect();
    let mut out = vec![0; n + 1];
    out[n] = p1;
    for s in 0..n {
        let mut best = 0;
        for target in enumerate_subspaces(n, s, field, budget)? {
            let rows: Vec<Vec<Fp>> = target
                .annihilator()
                .basis_vectors()
                .iter()
                .flat_map(|a| transposed.iter().map(move |c| c.mul_vec(a)))
                .collect();
            let k = p1 - span_rank(rows, p1, field);
            best = best.max(k);
            if best == p1 {
                break;
            }
        }
        out[s] = best;
    }
    Ok(out)
}

/// Evaluates the reduced condition list from the target side.
pub fn check_reduced(e: &EmbeddedPoint<Fp>, tp: &TildePolarization, budget: Budget) -> Result<ReducedCheck> {
    let ty = &e.ty;
    check_gates(ty, tp)?;
    let conditions = reduced_conditions(ty, tp)?;
    let max_k = max_kernel_by_target_dim(e, budget)?;
    let n = ty.n();
    let p1 = ty.p1();
    let mut margins = Vec::new();
    let mut violation = None;
    let mut equality = None;
    for c in &conditions {
        let t = (0..=n).find(|&s| max_k[s] + c.k >= p1).expect("s = n always qualifies");
        if c.k == 0 && t == n {
            continue;
        }
        let slack = c.bound.clone() - Rational::new((n - t) as i64, n as i64);
        if slack.is_negative() && violation.is_none() {
            violation = Some(c.tag.clone());
        } else if slack.is_zero() && equality.is_none() {
            equality = Some(c.tag.clone());
        }
        margins.push(ReducedMargin { k: c.k, min_image_dim: t, slack });
    }
    let (status, tag) = match (violation, equality) {
        (Some(t), _) => (Status::Unstable, Some(t)),
        (None, Some(t)) => (Status::ProperlySemistable, Some(t)),
        (None, None) => (Status::Stable, None),
    };
    Ok(ReducedCheck { status, prime: field_of(e).modulus(), conclusive: status == Status::Stable, tag, margins })
}
