//! Exact scalars plus the small dense linear/tensor kernel.
//!
//! Tensor products of spaces are flattened with the left factor varying
//! slowest: `index(v_i ⊗ w_j) = i·dim(W) + j`. Every module relies on this.

pub mod matrix;
pub mod scalar;
pub mod tensor;

pub use matrix::{coordinates, kron, nilpotency_index, solve_linear, span_basis, Matrix};
pub use scalar::{format_scalar, frac, int, one, parse_scalar, zero, Scalar};
pub use tensor::{Tensor, Tensor3, Tensor4};
