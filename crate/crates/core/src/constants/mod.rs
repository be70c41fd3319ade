//! Linear-algebra constants `k(i,j)`, `k(i)` by subspace search, the
//! explicit lower-bound witness on the plane, and kernel measurements.

mod kernels;
mod search;
mod witness;

pub use kernels::{
    column_span_dim, eta1, eta2, eta3, eta4, eta_kernel_dim, kernel_bound_suite, psi_kernel_dim, KernelMeasurement,
    KernelReport,
};
pub use search::{compute_k, compute_k_source, compute_k_target, qualifies, ConstantQuery, ConstantStatus, ConstantValue, SearchSide};
pub use witness::{alpha0, beta0, verify_74_witness, Witness74Report};
