//! Exact tools for semistability of morphisms
//! `⊕ M_i ⊗ O(-d_i) → N ⊗ O` on projective space.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: rationals, prime fields, dense exact matrices and
//!   Grassmannian enumeration over `F_p`;
//! * [`forms`]: monomial bases, homogeneous forms, matrices of forms,
//!   their kernels and the multiplication pairing;
//! * [`morphism`]: morphism types, polarizations, thresholds, irregular
//!   values, chambers and the explicit semistable constructions;
//! * [`king`]: King's criterion over `F_p` and the block-form test;
//! * [`embedding`]: the embedding into a representation of a reductive
//!   group and the semistability test on that side;
//! * [`constants`]: the constants `k(i,j)`, `k(i)` and kernel-dimension
//!   measurements for the canonical 3×3 and 2×3 linear matrices;
//! * [`certificates`]: exact evaluation of the quotient-existence criteria;
//! * [`io`]: the JSON wire formats shared with the command line tool.

pub mod certificates;
pub mod constants;
pub mod embedding;
mod error;
pub mod exact;
pub mod forms;
pub mod inequality;
pub mod io;
pub mod king;
pub mod morphism;

pub use error::{Error, Result};

/// Version string embedded in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
