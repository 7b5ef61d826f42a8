//! Conversion of curvature energies into classical quadratic-form tables.

use crate::MaterialScales;

/// Indices of the curvature invariants that can carry a nonzero weight in
/// the eleven-term quadratic form.
pub const ELEVEN_FORM_INDICES: [usize; 11] = [1, 2, 3, 4, 5, 8, 10, 11, 13, 14, 15];

/// Coefficient table of the classical micromorphic quadratic form.
///
/// The elastic block `(mu_hat, lambda_hat, b1, b2, b3, g1, g2)` weighs the
/// microdistortion and its coupling to the strain; the curvature block
/// `a_hat[i]` weighs the third-order invariants of the microdistortion
/// gradient listed in [`ELEVEN_FORM_INDICES`]. Conversions that identify a
/// curvature energy only leave the elastic block zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MindlinCoefficients {
    /// Micro shear weight of the elastic block.
    pub mu_hat: f64,
    /// Micro Lame weight of the elastic block.
    pub lambda_hat: f64,
    /// Trace-trace coupling weight.
    pub b1: f64,
    /// Symmetric coupling weight.
    pub b2: f64,
    /// Transposed coupling weight.
    pub b3: f64,
    /// Strain-trace cross weight.
    pub g1: f64,
    /// Strain cross weight.
    pub g2: f64,
    /// Curvature weights, stored one-based: `a_hat[i]` for the invariant
    /// indices in [`ELEVEN_FORM_INDICES`]; unused slots stay zero.
    a_hat: [f64; 16],
}

impl MindlinCoefficients {
    /// Table with all entries zero.
    pub fn zeroed() -> Self {
        MindlinCoefficients {
            mu_hat: 0.0,
            lambda_hat: 0.0,
            b1: 0.0,
            b2: 0.0,
            b3: 0.0,
            g1: 0.0,
            g2: 0.0,
            a_hat: [0.0; 16],
        }
    }

    /// Curvature weight for a one-based invariant index.
    ///
    /// # Panics
    ///
    /// Panics when `i` is not one of [`ELEVEN_FORM_INDICES`].
    pub fn a_hat(&self, i: usize) -> f64 {
        assert!(
            ELEVEN_FORM_INDICES.contains(&i),
            "invariant index {i} is outside the eleven-term form"
        );
        self.a_hat[i]
    }

    /// Sets the curvature weight for a one-based invariant index.
    pub fn set_a_hat(&mut self, i: usize, value: f64) {
        assert!(
            ELEVEN_FORM_INDICES.contains(&i),
            "invariant index {i} is outside the eleven-term form"
        );
        self.a_hat[i] = value;
    }
}

/// Coefficient table of the five-invariant second-gradient quadratic form,
/// stored one-based in `a_hat[1..=5]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondGradientCoefficients {
    a_hat: [f64; 6],
}

impl SecondGradientCoefficients {
    /// Curvature weight for a one-based index in `1..=5`.
    pub fn a_hat(&self, i: usize) -> f64 {
        assert!((1..=5).contains(&i), "second-gradient index {i} outside 1..=5");
        self.a_hat[i]
    }
}

/// Classic rotational-coupling constants `(alpha, beta, gamma)` of the
/// couple-modulus tensor `m = alpha tr(k) I + beta k^T + gamma k` acting on
/// the micro-rotation gradient `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosseratClassicCoefficients {
    /// Spherical weight.
    pub alpha: f64,
    /// Transposed-gradient weight.
    pub beta: f64,
    /// Gradient weight.
    pub gamma: f64,
}

/// Conversion for the model whose curvature energy weighs the full gradient
/// of the microdistortion direction by direction:
/// `W = (mu lc^2 / 2) sum_i [a1 |dev sym d_i P|^2 + a2 |skew d_i P|^2 + (2/9) a3 tr^2 d_i P]`.
///
/// The elastic block keeps the micro moduli and couples strain and
/// microdistortion through `b1 = lambda_e + lambda_micro`,
/// `b2 = mu_e + mu_micro + mu_c`, `b3 = mu_e + mu_micro - mu_c`,
/// `g1 = -lambda_micro`, `g2 = -2 mu_micro`. The curvature block reduces to
/// `a_hat_4 = mu lc^2 (2 a3 - 3 a1) / 9`, `a_hat_10 = mu lc^2 (a1 + a2) / 2`,
/// `a_hat_13 = mu lc^2 (a1 - a2) / 2`.
pub fn to_mindlin_reduced(scales: &MaterialScales) -> MindlinCoefficients {
    let cl = scales.curvature_scale();
    let mut c = MindlinCoefficients::zeroed();
    c.mu_hat = scales.mu_micro;
    c.lambda_hat = scales.lambda_micro;
    c.b1 = scales.lambda_e + scales.lambda_micro;
    c.b2 = scales.mu_e + scales.mu_micro + scales.mu_c;
    c.b3 = scales.mu_e + scales.mu_micro - scales.mu_c;
    c.g1 = -scales.lambda_micro;
    c.g2 = -2.0 * scales.mu_micro;
    c.set_a_hat(4, cl * (2.0 * scales.a3 - 3.0 * scales.a1) / 9.0);
    c.set_a_hat(10, cl * (scales.a1 + scales.a2) / 2.0);
    c.set_a_hat(13, cl * (scales.a1 - scales.a2) / 2.0);
    c
}

/// Conversion for the model whose curvature energy weighs the Curl of the
/// microdistortion:
/// `W = (mu lc^2 / 2) [a1 |dev sym Curl P|^2 + a2 |skew Curl P|^2 + (a3 / 3) tr^2 Curl P]`.
///
/// Only curvature slots are populated; the identification is exact for every
/// microdistortion gradient. The resulting weights obey
/// `a_hat_1 = -a_hat_3 = -a_hat_4`, `a_hat_13 = a_hat_14 = -a_hat_11` and
/// `a_hat_15 = -a_hat_10`.
pub fn to_mindlin_relaxed(scales: &MaterialScales) -> MindlinCoefficients {
    let cl = scales.curvature_scale();
    let (a1, a2, a3) = (scales.a1, scales.a2, scales.a3);
    let mut c = MindlinCoefficients::zeroed();
    c.set_a_hat(1, cl * (a1 - a2) / 2.0);
    c.set_a_hat(3, cl * (a2 - a1) / 2.0);
    c.set_a_hat(4, cl * (a2 - a1) / 2.0);
    c.set_a_hat(10, cl * (2.0 * a1 + a3) / 3.0);
    c.set_a_hat(11, cl * (a3 - a1) / 3.0);
    c.set_a_hat(13, cl * (a1 - a3) / 3.0);
    c.set_a_hat(14, cl * (a1 - a3) / 3.0);
    c.set_a_hat(15, cl * -(2.0 * a1 + a3) / 3.0);
    c
}

/// Conversion for the strain-gradient model whose curvature energy weighs
/// the second displacement gradient direction by direction with the same
/// `(a1, a2, 2 a3 / 9)` split. The five-invariant weights are
/// `a_hat_2 = mu lc^2 (2 a3 - 3 a1) / 18`, `a_hat_4 = mu lc^2 (a1 + a2) / 4`,
/// `a_hat_5 = mu lc^2 (a1 - a2) / 4` with `a_hat_1 = a_hat_3 = 0`.
pub fn to_mindlin_second_gradient(scales: &MaterialScales) -> SecondGradientCoefficients {
    let cl = scales.curvature_scale();
    let (a1, a2, a3) = (scales.a1, scales.a2, scales.a3);
    let mut a_hat = [0.0; 6];
    a_hat[2] = cl * (2.0 * a3 - 3.0 * a1) / 18.0;
    a_hat[4] = cl * (a1 + a2) / 4.0;
    a_hat[5] = cl * (a1 - a2) / 4.0;
    SecondGradientCoefficients { a_hat }
}

/// Classic constants of the rotational coupling medium obtained from the
/// Curl-based curvature weights through the axial-vector map:
/// `alpha = mu lc^2 (4 a3 - a1) / 3`, `beta = mu lc^2 (a1 - a2) / 2`,
/// `gamma = mu lc^2 (a1 + a2) / 2`.
pub fn to_cosserat_classic(scales: &MaterialScales) -> CosseratClassicCoefficients {
    let cl = scales.curvature_scale();
    CosseratClassicCoefficients {
        alpha: cl * (4.0 * scales.a3 - scales.a1) / 3.0,
        beta: cl * (scales.a1 - scales.a2) / 2.0,
        gamma: cl * (scales.a1 + scales.a2) / 2.0,
    }
}
