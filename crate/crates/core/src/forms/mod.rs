//! Homogeneous forms over an exact field and matrices of forms.

mod form;
mod matrix;
mod monomial;

pub use form::{multiply, HomForm};
pub use matrix::{form_matrix_kernel, forms_to_vector, pairing_orthogonal, vector_to_forms, FormMatrix};
pub use monomial::{basis_in_vars, divide, format_monomial, monomial_basis, mul_exponents, sym_dim, Exponents, MonomialBasis};
