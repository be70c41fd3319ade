//! Exact arithmetic: rationals, prime fields, dense matrices and subspace
//! enumeration over `F_p`.

mod combinat;
mod matrix;
mod prime;
mod rational;
mod scalar;
mod subspace;

pub use combinat::{binom, combinations, gaussian_binomial, total_subspaces};
pub use matrix::Matrix;
pub use prime::{Fp, PrimeField};
pub use rational::{q, Rational};
pub use scalar::Scalar;
pub use subspace::{
    enumerate_all_subspaces, enumerate_subspaces, pivot_sets, Budget, PivotCell, Subspace,
    DEFAULT_SUBSPACE_CAP,
};
