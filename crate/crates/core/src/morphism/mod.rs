//! Morphism types, polarizations, chambers and explicit constructions.

mod chambers;
mod construct;
#[allow(clippy::module_inception)]
mod morphism;
mod nonempty;
mod types;

pub use chambers::{
    chambers, inequality_pattern, irregular_lines, irregular_values, irregular_values_exact, is_degenerate,
    is_irregular, threshold_l, validate_nonsingular, Chamber, Degeneracy, IrregularLine, IrregularSet,
};
pub use construct::{construct_semistable, Construction};
pub use morphism::Morphism;
pub use nonempty::nonempty_conditions;
pub(crate) use nonempty::plane_d2_shape;
pub use types::{Block, MorphismType, Polarization, TildePolarization};
