//! Exact evaluation of the quotient-existence criteria.
//!
//! Each `certify_*` function checks the hypotheses of one criterion at a
//! given type and polarization and returns a [`CertificateReport`]. A
//! positive report means the criterion's hypotheses hold; the existence of
//! the quotient is then the criterion's conclusion, not something computed
//! here.

mod claims;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exact::Rational;
use crate::inequality::{Checklist, Inequality};
use crate::morphism::{is_degenerate, validate_nonsingular, MorphismType, Polarization};
use crate::{Error, Result};

pub use claims::{
    certify, certify_33, certify_42_43, certify_51, certify_61, certify_75, certify_87, lowest_chamber_61,
    nonempty_window_61, window_75,
};
pub use table::{computed_table, plane_table, required_constants, ConstantTable, Provenance, TableEntry};

/// Criterion identifiers, written as on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Claim {
    /// General two-block criterion driven by the constants `k(i,j)`, `k(i)`.
    #[serde(rename = "3.3")]
    TwoBlock,
    /// `m O(-d1) ⊕ 2 O(-d2)`.
    #[serde(rename = "4.2")]
    TwoCopies,
    /// `O(-d1) ⊕ 2 O(-d2)` with `r >= 2`.
    #[serde(rename = "4.3")]
    TwoCopiesSingle,
    /// `O(-d-1) ⊕ 3 O(-d)` on the plane.
    #[serde(rename = "5.1")]
    PlaneAdjacent,
    /// `m O(-d-1) ⊕ 3 O(-1)` on the plane.
    #[serde(rename = "6.1")]
    PlaneLinear,
    /// `O(-d-2) ⊕ 3 O(-d)` on the plane.
    #[serde(rename = "7.5")]
    PlaneGap,
    /// `m O(-d1) ⊕ O(-d2) ⊕ O(-d3)`.
    #[serde(rename = "8.7")]
    ThreeBlock,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::TwoBlock,
        Claim::TwoCopies,
        Claim::TwoCopiesSingle,
        Claim::PlaneAdjacent,
        Claim::PlaneLinear,
        Claim::PlaneGap,
        Claim::ThreeBlock,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::TwoBlock => "3.3",
            Claim::TwoCopies => "4.2",
            Claim::TwoCopiesSingle => "4.3",
            Claim::PlaneAdjacent => "5.1",
            Claim::PlaneLinear => "6.1",
            Claim::PlaneGap => "7.5",
            Claim::ThreeBlock => "8.7",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown claim {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Overall {
    Certified,
    /// Every hypothesis holds, but some constant is only a witnessed lower
    /// bound or was supplied without an exhaustive check.
    ConditionallyCertified,
    NotCertified,
    Inapplicable,
}

impl Overall {
    pub fn is_positive(self) -> bool {
        matches!(self, Overall::Certified | Overall::ConditionallyCertified)
    }
}

/// A set of hypotheses of which at least one must hold in full.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alternative {
    pub name: String,
    pub conditions: Vec<Inequality>,
    pub holds: bool,
}

impl Alternative {
    pub fn new(name: impl Into<String>, conditions: Vec<Inequality>) -> Self {
        let holds = conditions.iter().all(|c| c.holds);
        Alternative { name: name.into(), conditions, holds }
    }
}

/// A constant consumed by the evaluation, with where its value came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UsedConstant {
    pub label: String,
    pub value: usize,
    pub provenance: Provenance,
}

/// Admissible target ranks `lo < n < hi` derived from the hypotheses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NWindow {
    pub lo: Rational,
    pub hi: Rational,
    pub admissible: Vec<usize>,
    pub contains_n: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub claim: Claim,
    #[serde(rename = "type")]
    pub ty: MorphismType,
    pub polarization: Polarization,
    /// Hypotheses that must all hold.
    pub conditions: Vec<Inequality>,
    /// When nonempty, at least one alternative must hold.
    pub alternatives: Vec<Alternative>,
    /// Positivity requirements on the embedded weights.
    pub gates: Vec<Inequality>,
    pub nonsingular: bool,
    pub singular_reason: Option<String>,
    pub constants: Vec<UsedConstant>,
    /// Sufficient bound from the general theory, evaluated for comparison only.
    pub comparison: Option<Inequality>,
    /// Nonemptiness conditions, reported but not part of the verdict unless
    /// the criterion lists them among its hypotheses.
    pub nonemptiness: Option<Checklist>,
    pub n_window: Option<NWindow>,
    pub overall: Overall,
    pub verdict: String,
}

impl CertificateReport {
    fn new(claim: Claim, ty: &MorphismType, p: &Polarization) -> Self {
        let (nonsingular, singular_reason) = match validate_nonsingular(ty, p) {
            Ok(()) => (true, None),
            Err(e) => (false, Some(e.to_string())),
        };
        CertificateReport {
            claim,
            ty: ty.clone(),
            polarization: p.clone(),
            conditions: Vec::new(),
            alternatives: Vec::new(),
            gates: Vec::new(),
            nonsingular,
            singular_reason,
            constants: Vec::new(),
            comparison: None,
            nonemptiness: None,
            n_window: None,
            overall: Overall::NotCertified,
            verdict: String::new(),
        }
    }

    fn inapplicable(mut self, reason: impl Into<String>) -> Self {
        self.overall = Overall::Inapplicable;
        self.verdict = format!("claim {} does not apply: {}", self.claim, reason.into());
        self
    }

    /// Labels of every failed hypothesis, gate or alternative.
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self.conditions.iter().filter(|c| !c.holds).map(|c| c.label.clone()).collect();
        if !self.alternatives.is_empty() && !self.alternatives.iter().any(|a| a.holds) {
            out.push(format!(
                "none of {}",
                self.alternatives.iter().map(|a| a.name.as_str()).collect::<Vec<_>>().join(", ")
            ));
        }
        out.extend(self.gates.iter().filter(|g| !g.holds).map(|g| g.label.clone()));
        if !self.nonsingular {
            out.push("nonsingular polarization".into());
        }
        out
    }

    fn finish(mut self) -> Self {
        let failures = self.failures();
        if failures.is_empty() {
            let weak: Vec<&str> = self
                .constants
                .iter()
                .filter(|c| c.provenance != Provenance::Exhaustive)
                .map(|c| c.label.as_str())
                .collect();
            if weak.is_empty() {
                self.overall = Overall::Certified;
                self.verdict = format!("certified by the hypotheses of claim {}", self.claim);
            } else {
                self.overall = Overall::ConditionallyCertified;
                self.verdict = format!(
                    "certified by the hypotheses of claim {}, conditional on {}",
                    self.claim,
                    weak.join(", ")
                );
            }
        } else {
            self.overall = Overall::NotCertified;
            self.verdict = format!("not certified by claim {}: fails {}", self.claim, failures.join("; "));
        }
        self
    }
}

fn reject_degenerate(ty: &MorphismType) -> Result<()> {
    match is_degenerate(ty).reason {
        Some(r) => Err(Error::Degenerate(r)),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(json, format!("\"{}\"", c.id()));
        }
        assert!("9.9".parse::<Claim>().is_err());
    }
}
