//! Curvature energy densities and their classical quadratic-form equivalents.
//!
//! A microdistortion gradient is stored as `chi[i][j][k] = dP_jk / dx_i`.
//! All energies here are densities per unit volume evaluated on such a
//! constant third-order tensor.

use tensor_core::{curl_from_gradient, Tensor3};

use crate::{MaterialScales, MindlinCoefficients, SecondGradientCoefficients};

/// Microdistortion gradient, `chi[i][j][k] = dP_jk / dx_i`.
pub type Chi = [[[f64; 3]; 3]; 3];

fn slice(chi: &Chi, i: usize) -> Tensor3 {
    Tensor3(chi[i])
}

/// Curl-based curvature energy
/// `(mu lc^2 / 2) [a1 |dev sym Curl P|^2 + a2 |skew Curl P|^2 + (a3 / 3) tr^2 Curl P]`.
pub fn curvature_energy_curl(chi: &Chi, scales: &MaterialScales) -> f64 {
    let curl = curl_from_gradient(chi);
    let (d, w, _) = curl.decompose();
    let tr = curl.trace();
    scales.curvature_scale() / 2.0
        * (scales.a1 * d.inner(&d) + scales.a2 * w.inner(&w) + scales.a3 / 3.0 * tr * tr)
}

/// Full-gradient curvature energy
/// `(mu lc^2 / 2) sum_i [a1 |dev sym d_i P|^2 + a2 |skew d_i P|^2 + (2/9) a3 tr^2 d_i P]`.
pub fn curvature_energy_gradient(chi: &Chi, scales: &MaterialScales) -> f64 {
    let mut w_sum = 0.0;
    for i in 0..3 {
        let m = slice(chi, i);
        let (d, w, _) = m.decompose();
        let tr = m.trace();
        w_sum += scales.a1 * d.inner(&d)
            + scales.a2 * w.inner(&w)
            + 2.0 / 9.0 * scales.a3 * tr * tr;
    }
    scales.curvature_scale() / 2.0 * w_sum
}

/// The eleven third-order contractions of the quadratic form, one-based.
///
/// Nonzero slots: 1 `X_iik X_kjj`, 2 `X_iik X_jkj`, 3 `X_iik X_jjk`,
/// 4 `X_ijj X_ikk`, 5 `X_ijj X_kik`, 8 `X_iji X_kjk`, 10 `X_ijk X_ijk`,
/// 11 `X_ijk X_jki`, 13 `X_ijk X_ikj`, 14 `X_ijk X_jik`, 15 `X_ijk X_kji`.
fn contractions(x: &Chi) -> [f64; 16] {
    let mut b = [0.0; 16];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let v = x[i][j][k];
                b[10] += v * x[i][j][k];
                b[11] += v * x[j][k][i];
                b[13] += v * x[i][k][j];
                b[14] += v * x[j][i][k];
                b[15] += v * x[k][j][i];
            }
        }
    }
    // Contracted vectors: u_k = X_iik, v_i = X_ijj, w_j = X_iji.
    let mut u = [0.0; 3];
    let mut v = [0.0; 3];
    let mut w = [0.0; 3];
    for i in 0..3 {
        for k in 0..3 {
            u[k] += x[i][i][k];
            v[i] += x[i][k][k];
            w[k] += x[i][k][i];
        }
    }
    for k in 0..3 {
        b[1] += u[k] * v[k];
        b[2] += u[k] * w[k];
        b[3] += u[k] * u[k];
        b[4] += v[k] * v[k];
        b[5] += v[k] * w[k];
        b[8] += w[k] * w[k];
    }
    b
}

/// Eleven-invariant quadratic form
/// `W = ah1 B1 + ah2 B2 + ah3/2 B3 + ah4/2 B4 + ah5 B5 + ah8/2 B8
///    + ah10/2 B10 + ah11 B11 + ah13/2 B13 + ah14/2 B14 + ah15/2 B15`
/// evaluated on a microdistortion gradient.
pub fn quadratic_form_eleven(chi: &Chi, c: &MindlinCoefficients) -> f64 {
    let b = contractions(chi);
    c.a_hat(1) * b[1]
        + c.a_hat(2) * b[2]
        + c.a_hat(3) / 2.0 * b[3]
        + c.a_hat(4) / 2.0 * b[4]
        + c.a_hat(5) * b[5]
        + c.a_hat(8) / 2.0 * b[8]
        + c.a_hat(10) / 2.0 * b[10]
        + c.a_hat(11) * b[11]
        + c.a_hat(13) / 2.0 * b[13]
        + c.a_hat(14) / 2.0 * b[14]
        + c.a_hat(15) / 2.0 * b[15]
}

/// Five-invariant second-gradient quadratic form
/// `W = ah1 X_iik X_kjj + ah2 X_ijj X_ikk + ah3 X_iik X_jjk
///    + ah4 X_ijk X_ijk + ah5 X_ijk X_kji`
/// evaluated on a second displacement gradient that is symmetric in its
/// first two indices.
pub fn quadratic_form_five(chi: &Chi, c: &SecondGradientCoefficients) -> f64 {
    let b = contractions(chi);
    c.a_hat(1) * b[1] + c.a_hat(2) * b[4] + c.a_hat(3) * b[3] + c.a_hat(4) * b[10]
        + c.a_hat(5) * b[15]
}
