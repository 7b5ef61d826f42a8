//! Tensor operations used by generalized continuum kinematics.

use crate::{Tensor3, Vector3};

/// Levi-Civita symbol `epsilon_{ijk}`.
fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Cross product of a second-order tensor with a vector,
/// `(m x b)_{ij} = m_{ik} epsilon_{kjh} b_h`.
///
/// Row `i` of the result equals `b x r_i` where `r_i` is row `i` of `m`; for
/// the identity tensor and `b = e_2` the result has `(1,3)` component `-1`
/// and `(3,1)` component `+1` (one-based indices).
pub fn cross_tensor_vector(m: &Tensor3, b: &Vector3) -> Tensor3 {
    let mut out = Tensor3::ZERO;
    for i in 0..3 {
        for j in 0..3 {
            let mut s = 0.0;
            for k in 0..3 {
                for h in 0..3 {
                    s += m[(i, k)] * levi_civita(k, j, h) * b[h];
                }
            }
            out[(i, j)] = s;
        }
    }
    out
}

/// Curl of a matrix field from its gradient,
/// `(Curl P)_{ij} = epsilon_{jab} (grad P)[a][i][b]`
/// where `(grad P)[a][i][b]` holds the analytic derivative `dP_ib / dx_a`.
pub fn curl_from_gradient(grad_p: &[[[f64; 3]; 3]; 3]) -> Tensor3 {
    let mut out = Tensor3::ZERO;
    for i in 0..3 {
        for j in 0..3 {
            let mut s = 0.0;
            for a in 0..3 {
                for b in 0..3 {
                    s += levi_civita(j, a, b) * grad_p[a][i][b];
                }
            }
            out[(i, j)] = s;
        }
    }
    out
}

/// Residual of the Nye curvature relation
/// `-Curl A = (D axl A)^T - tr((D axl A)^T) I`
/// for a skew-symmetric field `A`.
///
/// `curl_a` is the analytic Curl of `A` at a point and `d_axl` the analytic
/// gradient of its axial vector, `(D axl A)_{ij} = d(axl A)_i / dx_j`. Both
/// are supplied by the caller; no differentiation happens here. Returns the
/// Frobenius norm of the defect, which vanishes identically for exact data.
pub fn nye_residual(curl_a: &Tensor3, d_axl: &Tensor3) -> f64 {
    let rhs = d_axl.transpose() - Tensor3::IDENTITY * d_axl.trace();
    (-*curl_a - rhs).norm()
}
