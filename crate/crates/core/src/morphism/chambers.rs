use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::types::{MorphismType, Polarization};
use crate::exact::{q, Rational};
use crate::{Error, Result};

/// Least integer `l` with `l/n > Σ κ_i λ_i`, capped at `n + 1`.
pub fn threshold_l(p: &Polarization, kappas: &[usize]) -> usize {
    assert_eq!(kappas.len(), p.lambdas.len(), "one κ per block");
    let n = p.mu.recip();
    let s: Rational = p.lambdas.iter().zip(kappas).map(|(l, &k)| l * Rational::from(k)).sum();
    let l = (&s * &n).next_integer_above();
    let cap = n.to_i64().expect("integral n") + 1;
    l.to_i64().expect("small threshold").min(cap) as usize
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degeneracy {
    pub degenerate: bool,
    pub reason: Option<String>,
}

/// A type is degenerate when every polarization admits an equality in the
/// weight inequality. This happens exactly when `g = gcd(m_1, …, m_k, n) > 1`:
/// the dimension vector `(m_i/g, n/g)` then balances for every weight.
pub fn is_degenerate(ty: &MorphismType) -> Degeneracy {
    let g = ty.blocks().iter().fold(ty.n(), |acc, b| acc.gcd(&b.mult));
    if g > 1 {
        let mults: Vec<String> = ty.mults().iter().map(|m| m.to_string()).collect();
        Degeneracy {
            degenerate: true,
            reason: Some(format!(
                "multiplicities ({}) and n = {} share the factor {g}; every polarization is irregular",
                mults.join(", "),
                ty.n()
            )),
        }
    } else {
        Degeneracy { degenerate: false, reason: None }
    }
}

fn check_not_degenerate(ty: &MorphismType) -> Result<()> {
    match is_degenerate(ty).reason {
        Some(r) => Err(Error::AllIrregular(r)),
        None => Ok(()),
    }
}

/// Lines in the `(λ1, λ2)` plane carrying the irregular polarizations of a
/// three-block type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IrregularLine {
    /// `λ1 = value`.
    Vertical { lambda1: Rational },
    /// `λ2 = κ/n - p λ1`.
    Sloped { kappa: usize, p: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "items", rename_all = "snake_case")]
pub enum IrregularSet {
    Values(Vec<Rational>),
    Lines(Vec<IrregularLine>),
}

/// Every `λ1 ∈ [0, 1/m1]` for which some nontrivial `(a1, a2, b)` satisfies
/// `b/n = a1 λ1 + a2 λ2`, together with both endpoints.
pub fn irregular_values_exact(ty: &MorphismType) -> Result<Vec<Rational>> {
    ty.require_two_block()?;
    check_not_degenerate(ty)?;
    let (m1, m2, n) = (ty.mult(0), ty.mult(1), ty.n());
    let hi = q(1, m1 as i64);
    let mut out = vec![Rational::zero(), hi.clone()];
    for a1 in 0..=m1 {
        for a2 in 0..=m2 {
            for b in 0..=n {
                if (a1, a2, b) == (0, 0, 0) || (a1, a2, b) == (m1, m2, n) {
                    continue;
                }
                let coef = Rational::from(a1) - q((a2 * m1) as i64, m2 as i64);
                let rhs = q(b as i64, n as i64) - q(a2 as i64, m2 as i64);
                if coef.is_zero() {
                    continue;
                }
                let l = rhs / coef;
                if !l.is_negative() && l <= hi {
                    out.push(l);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Numerator bound and denominators of the closed-form candidate sets.
fn closed_form_grid(ty: &MorphismType) -> Option<(usize, Vec<usize>)> {
    let (m1, m2, n) = (ty.mult(0), ty.mult(1), ty.n());
    Some(match (m1, m2) {
        (1, 1) => (n, vec![n]),
        (_, 2) => (n, (1..=m1).map(|p| p * n).collect()),
        (1, 3) => (2 * n, vec![2 * n]),
        (_, 3) => (2 * n, (1..=2 * m1).map(|p| p * n).collect()),
        _ => return None,
    })
}

/// Membership in the closed-form candidate set without listing it.
fn in_closed_form(ty: &MorphismType, l1: &Rational) -> Option<bool> {
    let (kmax, dens) = closed_form_grid(ty)?;
    if l1.is_negative() || *l1 > q(1, ty.mult(0) as i64) {
        return Some(false);
    }
    if *l1 == q(1, ty.mult(0) as i64) {
        return Some(true);
    }
    Some(dens.iter().any(|&den| {
        let k = l1 * Rational::from(den);
        k.is_integer() && k <= Rational::from(kmax)
    }))
}

/// Candidate sets written in closed form for the shapes `(1,1)`, `(m,2)`,
/// `(1,3)` and `(m,3)`; each contains the exact irregular set.
fn closed_form_candidates(ty: &MorphismType) -> Option<Vec<Rational>> {
    let m1 = ty.mult(0);
    let (kmax, dens) = closed_form_grid(ty)?;
    let hi = q(1, m1 as i64);
    let mut out = vec![hi.clone()];
    for den in dens {
        for k in 0..=kmax {
            let v = q(k as i64, den as i64);
            if v <= hi {
                out.push(v);
            }
        }
    }
    out.sort();
    out.dedup();
    Some(out)
}

/// Sorted irregular candidates for `λ1` (two blocks) or the irregular line
/// arrangement (three blocks `m, 1, 1`).
pub fn irregular_values(ty: &MorphismType) -> Result<IrregularSet> {
    check_not_degenerate(ty)?;
    if ty.is_two_block() {
        return Ok(IrregularSet::Values(match closed_form_candidates(ty) {
            Some(c) => c,
            None => irregular_values_exact(ty)?,
        }));
    }
    if ty.is_three_one() {
        return Ok(IrregularSet::Lines(irregular_lines(ty)));
    }
    Err(Error::UnsupportedShape("irregular values need two blocks or an (m,1,1) type".into()))
}

/// The lines `λ1 = κ/pn` and `λ2 = κ/n - p λ1`.
pub fn irregular_lines(ty: &MorphismType) -> Vec<IrregularLine> {
    let (m, n) = (ty.mult(0), ty.n());
    let mut out = Vec::new();
    let mut verts = Vec::new();
    for p in 1..=m {
        for k in 0..=n {
            verts.push(q(k as i64, (p * n) as i64));
        }
    }
    verts.sort();
    verts.dedup();
    out.extend(verts.into_iter().map(|lambda1| IrregularLine::Vertical { lambda1 }));
    for p in 0..=m {
        for kappa in 0..=n {
            out.push(IrregularLine::Sloped { kappa, p });
        }
    }
    out
}

impl IrregularLine {
    pub fn contains(&self, n: usize, l1: &Rational, l2: &Rational) -> bool {
        match self {
            IrregularLine::Vertical { lambda1 } => lambda1 == l1,
            IrregularLine::Sloped { kappa, p } => *l2 == q(*kappa as i64, n as i64) - l1 * Rational::from(*p),
        }
    }
}

/// True when some nontrivial dimension vector balances the weights exactly.
pub fn is_irregular(ty: &MorphismType, p: &Polarization) -> bool {
    let mults = ty.mults();
    let n = ty.n();
    let mut a = vec![0usize; mults.len()];
    loop {
        let s: Rational = p.lambdas.iter().zip(&a).map(|(l, &k)| l * Rational::from(k)).sum();
        let b = &s * Rational::from(n);
        let zero = a.iter().all(|&x| x == 0);
        let full = a == mults;
        if b.is_integer() && !(zero || full) {
            return true;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == a.len() {
                return false;
            }
            a[i] += 1;
            if a[i] <= mults[i] {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

/// Fails unless the polarization avoids every irregular candidate.
pub fn validate_nonsingular(ty: &MorphismType, p: &Polarization) -> Result<()> {
    p.validate(ty)?;
    check_not_degenerate(ty)?;
    if ty.is_two_block() {
        if let Some(hit) = in_closed_form(ty, &p.lambdas[0]) {
            if hit {
                return Err(Error::InvalidInput(format!("λ1 = {} is an irregular candidate", p.lambdas[0])));
            }
            return Ok(());
        }
    }
    match irregular_values(ty)? {
        IrregularSet::Values(v) => {
            if v.contains(&p.lambdas[0]) {
                return Err(Error::InvalidInput(format!("λ1 = {} is an irregular candidate", p.lambdas[0])));
            }
        }
        IrregularSet::Lines(lines) => {
            if let Some(l) = lines.iter().find(|l| l.contains(ty.n(), &p.lambdas[0], &p.lambdas[1])) {
                return Err(Error::InvalidInput(format!("(λ1, λ2) lies on the irregular line {l:?}")));
            }
        }
    }
    Ok(())
}

/// Open interval between consecutive irregular candidates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    pub lo: Rational,
    pub hi: Rational,
    pub midpoint: Rational,
}

impl Chamber {
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

pub fn chambers(ty: &MorphismType) -> Result<Vec<Chamber>> {
    match irregular_values(ty)? {
        IrregularSet::Values(v) => Ok(v
            .windows(2)
            .map(|w| Chamber { lo: w[0].clone(), hi: w[1].clone(), midpoint: Rational::midpoint(&w[0], &w[1]) })
            .collect()),
        IrregularSet::Lines(_) => Err(Error::UnsupportedShape("chambers of three-block types are polygons".into())),
    }
}

/// The set `{(a, b) : b/n > Σ λ_i a_i}` that determines the stable locus.
pub fn inequality_pattern(ty: &MorphismType, p: &Polarization) -> Vec<(Vec<usize>, usize)> {
    let mults = ty.mults();
    let mut out = Vec::new();
    let mut a = vec![0usize; mults.len()];
    'outer: loop {
        let s: Rational = p.lambdas.iter().zip(&a).map(|(l, &k)| l * Rational::from(k)).sum();
        for b in 0..=ty.n() {
            if q(b as i64, ty.n() as i64) > s {
                out.push((a.clone(), b));
            }
        }
        let mut i = 0;
        loop {
            if i == a.len() {
                break 'outer;
            }
            a[i] += 1;
            if a[i] <= mults[i] {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
    out
}
