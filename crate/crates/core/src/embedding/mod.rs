//! The embedding `φ ↦ (ξ, γ(φ))` into a representation of a reductive
//! group, and semistability on that side.

mod build;
mod remarks;
mod tilde;

pub use build::{build_embedding, build_embedding_31, division_matrix, embed, EmbeddedPoint, EmbeddingKind};
pub use remarks::{omega, verify_zero_block_remarks, Omega, ZeroBlockCheck, ZeroBlockReport};
pub use tilde::{
    check_reduced, max_kernel_by_target_dim, reduced_conditions, tilde_decide, ReducedCheck, ReducedCondition,
    ReducedMargin, TildeVerdict, MAX_TILDE_P1,
};
