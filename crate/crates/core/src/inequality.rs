//! Exact inequality evaluations with signed slack.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    pub fn is_strict(self) -> bool {
        matches!(self, Relation::Lt | Relation::Gt)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        };
        f.write_str(s)
    }
}

/// `lhs REL rhs`, evaluated exactly. The margin is the slack in the
/// direction of the relation: positive (or zero for non-strict) iff it holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub label: String,
    pub statement: String,
    pub lhs: Rational,
    pub relation: Relation,
    pub rhs: Rational,
    pub strict: bool,
    pub holds: bool,
    pub margin: Rational,
}

impl Inequality {
    pub fn new(
        label: impl Into<String>,
        statement: impl Into<String>,
        lhs: Rational,
        relation: Relation,
        rhs: Rational,
    ) -> Self {
        let margin = match relation {
            Relation::Lt | Relation::Le => &rhs - &lhs,
            Relation::Gt | Relation::Ge => &lhs - &rhs,
        };
        let holds = if relation.is_strict() { margin.is_positive() } else { !margin.is_negative() };
        Inequality {
            label: label.into(),
            statement: statement.into(),
            lhs,
            relation,
            rhs,
            strict: relation.is_strict(),
            holds,
            margin,
        }
    }
}

/// A conjunction of inequalities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checklist {
    pub items: Vec<Inequality>,
    pub holds: bool,
}

impl Checklist {
    pub fn new(items: Vec<Inequality>) -> Self {
        let holds = items.iter().all(|i| i.holds);
        Checklist { items, holds }
    }

    pub fn get(&self, label: &str) -> Option<&Inequality> {
        self.items.iter().find(|i| i.label == label)
    }
}
