//! Fixed-size 3x3 tensor algebra for generalized continuum kinematics.
//!
//! Provides second-order tensors, their orthogonal decomposition into
//! deviatoric-symmetric, skew-symmetric and spherical parts, the axial-vector
//! maps `axl`/`anti`, the tensor-vector cross product, the Curl of a matrix
//! field expressed through its gradient, and a residual check for the Nye
//! curvature relation on skew-symmetric fields.
//!
//! All operations are pure functions on plain `f64` data; no numerical
//! differentiation happens here. Callers supply analytic gradients where a
//! derivative is required.

mod ops;
mod tensor;

pub use ops::{cross_tensor_vector, curl_from_gradient, nye_residual};
pub use tensor::{Tensor3, Vector3};

/// Errors produced by tensor operations.
#[derive(Debug, thiserror::Error)]
pub enum TensorError {
    /// The argument must be skew-symmetric but has a symmetric part that is
    /// too large relative to the tensor norm.
    #[error("tensor is not skew-symmetric: |sym| = {sym_norm:.3e} exceeds 1e-12 * |A| = {bound:.3e}")]
    NotSkew {
        /// Frobenius norm of the symmetric part.
        sym_norm: f64,
        /// Largest admissible symmetric-part norm for this input.
        bound: f64,
    },
}
