//! Semistability of morphisms over `F_p` by exhaustive subspace search.
//!
//! For source subspaces `M_i' ⊆ F_p^{m_i}` the smallest admissible target
//! subspace is the span of the images `φ_i(v h)`; since the weight inequality
//! is monotone in `dim N'`, it suffices to test that one.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exact::{
    enumerate_all_subspaces, enumerate_subspaces, gaussian_binomial, total_subspaces, Budget, Fp, Matrix,
    PrimeField, Rational, Subspace,
};
use crate::forms::basis_in_vars;
use crate::morphism::{threshold_l, Morphism, Polarization};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Stable,
    ProperlySemistable,
    Unstable,
}

impl Status {
    pub fn is_semistable(self) -> bool {
        self != Status::Unstable
    }
}

/// Basis rows of a subspace over `F_p`, as residues.
pub type BasisRows = Vec<Vec<u32>>;

pub fn basis_rows(s: &Subspace<Fp>) -> BasisRows {
    s.basis_vectors().iter().map(|v| v.iter().map(|x| x.residue()).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceFamily {
    pub sources: Vec<BasisRows>,
    pub source_dims: Vec<usize>,
    pub image_dim: usize,
    pub slack: Rational,
}

/// Least slack `μ dim N' - Σ λ_i dim M_i'` over admissible families with the
/// given source dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Margin {
    pub dims: Vec<usize>,
    pub slack: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    pub status: Status,
    pub prime: u32,
    pub witness: Option<SubspaceFamily>,
    pub margins: Vec<Margin>,
}

/// Per-block coefficient matrices: `coeffs[i][h]` is the `n × m_i` scalar
/// matrix of coefficients of monomial `h` in block `i`.
pub(crate) fn coefficient_slices(blocks: &[crate::forms::FormMatrix<Fp>]) -> Vec<Vec<Matrix<Fp>>> {
    blocks
        .iter()
        .map(|b| {
            let len = basis_in_vars(b.num_vars(), b.degree()).len();
            (0..len)
                .map(|h| Matrix::from_fn(b.rows(), b.cols(), b.ctx(), |i, j| b.get(i, j).coeffs()[h]))
                .collect()
        })
        .collect()
}

/// Span of `{ φ_i(v h) }` over all `v ∈ M_i'` and monomials `h`.
pub(crate) fn image_vectors(slices: &[Vec<Matrix<Fp>>], family: &[&Subspace<Fp>]) -> Vec<Vec<Fp>> {
    let mut out = Vec::new();
    for (i, sub) in family.iter().enumerate() {
        for v in sub.basis_vectors() {
            for c in &slices[i] {
                let w = c.mul_vec(&v);
                if w.iter().any(|x| !x.is_zero()) {
                    out.push(w);
                }
            }
        }
    }
    out
}

pub(crate) fn span_rank(vectors: Vec<Vec<Fp>>, ambient: usize, field: PrimeField) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors, ambient, field).rank()
}

/// `dim span φ(M' ⊗ H*)` inside `F_p^n`.
pub fn min_image_dim(phi: &Morphism<Fp>, family: &[Subspace<Fp>]) -> usize {
    assert_eq!(family.len(), phi.ty().num_blocks());
    let slices = coefficient_slices(phi.blocks());
    let refs: Vec<&Subspace<Fp>> = family.iter().collect();
    span_rank(image_vectors(&slices, &refs), phi.ty().n(), phi.block(0).ctx())
}

fn field_of(phi: &Morphism<Fp>) -> PrimeField {
    phi.block(0).ctx()
}

/// Exhaustive decision with the given (not necessarily normalized) weights.
pub fn decide_with_weights(
    phi: &Morphism<Fp>,
    lambdas: &[Rational],
    mu: &Rational,
    budget: Budget,
) -> Result<StabilityVerdict> {
    let ty = phi.ty();
    let field = field_of(phi);
    let p = field.modulus() as u64;
    if lambdas.len() != ty.num_blocks() {
        return Err(Error::InvalidInput("one weight per block".into()));
    }
    let count = ty
        .mults()
        .iter()
        .try_fold(1u128, |acc, &m| total_subspaces(m, p).and_then(|c| acc.checked_mul(c)));
    budget.check(count)?;
    let per_block: Vec<Vec<Subspace<Fp>>> = ty
        .mults()
        .iter()
        .map(|&m| enumerate_all_subspaces(m, field, budget))
        .collect::<Result<_>>()?;
    let slices = coefficient_slices(phi.blocks());
    let mults = ty.mults();
    let n = ty.n();

    let mut first_violation: Option<SubspaceFamily> = None;
    let mut first_equality: Option<SubspaceFamily> = None;
    let mut margins: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    let lens: Vec<usize> = per_block.iter().map(|b| b.len()).collect();
    let mut idx = vec![0usize; mults.len()];
    loop {
        let family: Vec<&Subspace<Fp>> = idx.iter().enumerate().map(|(i, &k)| &per_block[i][k]).collect();
        let dims: Vec<usize> = family.iter().map(|s| s.dim()).collect();
        let all_zero = dims.iter().all(|&d| d == 0);
        let all_full = dims == mults;
        if !all_zero {
            let t = span_rank(image_vectors(&slices, &family), n, field);
            if !(all_full && t == n) {
                let rhs: Rational = lambdas.iter().zip(&dims).map(|(l, &d)| l * Rational::from(d)).sum();
                let slack = mu * Rational::from(t) - rhs;
                let make = || SubspaceFamily {
                    sources: family.iter().map(|s| basis_rows(s)).collect(),
                    source_dims: dims.clone(),
                    image_dim: t,
                    slack: slack.clone(),
                };
                if slack.is_negative() && first_violation.is_none() {
                    first_violation = Some(make());
                } else if slack.is_zero() && first_equality.is_none() {
                    first_equality = Some(make());
                }
                margins
                    .entry(dims.clone())
                    .and_modify(|m| {
                        if slack < *m {
                            *m = slack.clone()
                        }
                    })
                    .or_insert(slack.clone());
            }
        }
        if !advance(&mut idx, &lens) {
            break;
        }
    }
    let (status, witness) = match (first_violation, first_equality) {
        (Some(w), _) => (Status::Unstable, Some(w)),
        (None, Some(w)) => (Status::ProperlySemistable, Some(w)),
        (None, None) => (Status::Stable, None),
    };
    Ok(StabilityVerdict {
        status,
        prime: field.modulus(),
        witness,
        margins: margins.into_iter().map(|(dims, slack)| Margin { dims, slack }).collect(),
    })
}

/// Steps a mixed-radix counter, last position fastest; false after the last tuple.
pub(crate) fn advance(idx: &mut [usize], lens: &[usize]) -> bool {
    for i in (0..idx.len()).rev() {
        idx[i] += 1;
        if idx[i] < lens[i] {
            return true;
        }
        idx[i] = 0;
    }
    false
}

/// King's criterion over `F_p` at a normalized polarization.
pub fn decide_semistable(phi: &Morphism<Fp>, p: &Polarization, budget: Budget) -> Result<StabilityVerdict> {
    p.validate(phi.ty())?;
    decide_with_weights(phi, &p.lambdas, &p.mu, budget)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockFormWitness {
    /// Subspace `N'` of dimension `n - l` receiving the chosen sources.
    pub target: BasisRows,
    /// Largest `M_i'` with `φ(M_i' ⊗ H*) ⊆ N'`.
    pub sources: Vec<BasisRows>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockFormResult {
    pub kappas: Vec<usize>,
    pub threshold: usize,
    pub reachable: bool,
    pub witness: Option<BlockFormWitness>,
}

/// Is `φ` equivalent to a matrix with an `l × (m_i - κ_i)` zero block in
/// every block column, `l = threshold_l(P, κ)`?
///
/// Searched from the target side: for each `N'` of dimension `n - l` the
/// largest source subspaces mapping into it are kernels of the composition
/// with the annihilator of `N'`.
pub fn block_form_reachable(
    phi: &Morphism<Fp>,
    p: &Polarization,
    kappas: &[usize],
    budget: Budget,
) -> Result<BlockFormResult> {
    let ty = phi.ty();
    p.validate(ty)?;
    if kappas.len() != ty.num_blocks() || kappas.iter().zip(ty.mults()).any(|(&k, m)| k > m) {
        return Err(Error::InvalidInput("need 0 <= κ_i <= m_i for every block".into()));
    }
    let n = ty.n();
    let l = threshold_l(p, kappas);
    let mut result = BlockFormResult { kappas: kappas.to_vec(), threshold: l, reachable: false, witness: None };
    if l > n {
        return Ok(result);
    }
    let field = field_of(phi);
    budget.check(gaussian_binomial(n, n - l, field.modulus() as u64))?;
    let slices = coefficient_slices(phi.blocks());
    for target in enumerate_subspaces(n, n - l, field, budget)? {
        let ann = target.annihilator().basis_vectors();
        let mut sources = Vec::with_capacity(ty.num_blocks());
        let mut ok = true;
        for (i, sl) in slices.iter().enumerate() {
            let m = ty.mult(i);
            let rows: Vec<Vec<Fp>> = ann
                .iter()
                .flat_map(|a| sl.iter().map(move |c| c.transpose().mul_vec(a)))
                .collect();
            let kernel = if rows.is_empty() {
                Subspace::full(m, field)
            } else {
                Subspace::span(Matrix::from_rows(rows, m, field).kernel_basis(), m, field)
            };
            if kernel.dim() + kappas[i] < m {
                ok = false;
                break;
            }
            sources.push(basis_rows(&kernel));
        }
        if ok {
            result.reachable = true;
            result.witness = Some(BlockFormWitness { target: basis_rows(&target), sources });
            return Ok(result);
        }
    }
    Ok(result)
}

/// All `κ` tuples in lexicographic order.
pub fn kappa_tuples(mults: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &m in mults {
        out = out.into_iter().flat_map(|t| (0..=m).map(move |k| [t.clone(), vec![k]].concat())).collect();
    }
    out
}

/// Semistability through block forms: true iff no `κ` is reachable.
/// Returns the first reachable `κ` otherwise.
pub fn semistable_by_block_forms(
    phi: &Morphism<Fp>,
    p: &Polarization,
    budget: Budget,
) -> Result<(bool, Option<BlockFormResult>)> {
    for k in kappa_tuples(&phi.ty().mults()) {
        let r = block_form_reachable(phi, p, &k, budget)?;
        if r.reachable {
            return Ok((false, Some(r)));
        }
    }
    Ok((true, None))
}
