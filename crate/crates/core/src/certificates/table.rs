use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constants::{compute_k, verify_74_witness, ConstantQuery, ConstantStatus};
use crate::exact::{binom, Budget, PrimeField};
use crate::morphism::MorphismType;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Exhaustive search over a prime field.
    Exhaustive,
    /// Only a lower bound, certified by an explicit witness.
    Witness,
    /// Given by the caller, unchecked.
    Supplied,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub value: usize,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Values of `k(i,j)` and `k(i)` keyed by label, e.g. `"k(2,5)"`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConstantTable {
    pub entries: BTreeMap<String, TableEntry>,
}

impl ConstantTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, label: impl Into<String>, value: usize, provenance: Provenance, note: Option<String>) {
        self.entries.insert(label.into(), TableEntry { value, provenance, note });
    }

    pub fn get(&self, label: &str) -> Result<&TableEntry> {
        self.entries.get(label).ok_or_else(|| Error::MissingConstant(label.to_string()))
    }
}

/// Search queries for every constant the two-block criterion needs at `ty`.
fn queries(ty: &MorphismType, prime: PrimeField) -> Result<Vec<ConstantQuery>> {
    ty.require_two_block()?;
    let (m1, m2) = (ty.mult(0), ty.mult(1));
    let a = ty.a21();
    if m1 >= a {
        return Err(Error::Inapplicable(format!("m1 = {m1} is not below a = {a}")));
    }
    let (r, d2) = (ty.r(), ty.degree(1));
    let e = ty.degree(0) - d2;
    let mut out = Vec::new();
    for i in 1..m2 {
        out.push(ConstantQuery::k_ij(r, m2, d2, e, i, m2 * a - i * a - m1, prime)?);
    }
    for i in 2..=m2 {
        out.push(ConstantQuery::k_i(r, d2, e, i, prime)?);
    }
    for i in 1..m2 {
        out.push(ConstantQuery::k_ij(r, m2, d2, e, i, m2 * a - i * a - a + 1, prime)?);
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|q| seen.insert(q.label.clone()));
    Ok(out)
}

/// Labels of the constants used by the two-block criterion at `ty`.
pub fn required_constants(ty: &MorphismType) -> Result<Vec<String>> {
    Ok(queries(ty, PrimeField::new(2)?)?.into_iter().map(|q| q.label).collect())
}

/// Computes every required constant by subspace search over `F_p`.
/// Searches cut short by the budget enter as witnessed lower bounds.
pub fn computed_table(ty: &MorphismType, prime: PrimeField, budget: Budget) -> Result<ConstantTable> {
    let mut t = ConstantTable::new();
    for q in queries(ty, prime)? {
        let v = compute_k(&q, budget)?;
        let prov = match v.status {
            ConstantStatus::Exhaustive => Provenance::Exhaustive,
            ConstantStatus::LowerBound => Provenance::Witness,
        };
        t.insert(q.label, v.value, prov, Some(format!("search over F_{}", prime.modulus())));
    }
    Ok(t)
}

/// Table for `O(-d-2) ⊕ 3 O(-d)` on the plane. At `d = 1` every value is
/// searched exhaustively; above that `k(2,5)` comes from the explicit
/// witness and the rest are the closed forms, marked as supplied.
pub fn plane_table(d: u32, prime: PrimeField, budget: Budget) -> Result<ConstantTable> {
    let ty = MorphismType::two_block(2, d + 2, 1, d, 3, 1)?;
    if d == 1 {
        return computed_table(&ty, prime, budget);
    }
    let dd = d as u64;
    let b1 = binom(dd + 1, 2) as usize;
    let b2 = binom(dd + 2, 2) as usize;
    let mut t = ConstantTable::new();
    let w = verify_74_witness(d);
    if w.holds {
        t.insert("k(2,5)", w.lower_bound, Provenance::Witness, Some("explicit witness pair".into()));
    }
    let closed = Some("closed form, no exhaustive check at this degree".to_string());
    t.insert("k(1,11)", 0, Provenance::Supplied, closed.clone());
    t.insert("k(2)", b1, Provenance::Supplied, closed.clone());
    t.insert("k(1,7)", b1, Provenance::Supplied, closed.clone());
    t.insert("k(3)", b2 + b1, Provenance::Supplied, closed.clone());
    t.insert("k(2,1)", b2 + b1, Provenance::Supplied, closed);
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_labels() {
        let ty = MorphismType::two_block(2, 4, 1, 2, 3, 20).unwrap();
        let labels = required_constants(&ty).unwrap();
        assert_eq!(labels, ["k(1,11)", "k(2,5)", "k(2)", "k(3)", "k(1,7)", "k(2,1)"]);
    }

    #[test]
    fn large_m1_is_rejected() {
        let ty = MorphismType::two_block(1, 2, 3, 1, 2, 5).unwrap();
        assert!(matches!(required_constants(&ty), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn witness_table_at_d2() {
        let t = plane_table(2, PrimeField::new(2).unwrap(), Budget::default()).unwrap();
        assert_eq!(t.get("k(2,5)").unwrap().value, 3);
        assert_eq!(t.get("k(2,5)").unwrap().provenance, Provenance::Witness);
        assert_eq!(t.get("k(2,1)").unwrap().value, 9);
        assert!(matches!(t.get("k(4)"), Err(Error::MissingConstant(_))));
    }
}
