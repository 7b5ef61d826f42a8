//! Two-scale material parameter sets and scale homogenization.

use crate::{IsotropicModuli, MaterialError};

/// Complete parameter set of the two-scale model family.
///
/// The meso moduli `(mu_e, lambda_e)` act on the difference between the
/// displacement gradient and the microdistortion, the micro moduli
/// `(mu_micro, lambda_micro)` on the microdistortion itself, `mu_c` on the
/// skew coupling, and the curvature energy carries the scale `mu * lc^2`
/// with the dimensionless weights `(a1, a2, a3)` on the deviatoric
/// symmetric, skew and spherical parts of the curvature measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialScales {
    /// Meso shear modulus.
    pub mu_e: f64,
    /// Meso Lame modulus.
    pub lambda_e: f64,
    /// Micro shear modulus.
    pub mu_micro: f64,
    /// Micro Lame modulus.
    pub lambda_micro: f64,
    /// Rotational coupling modulus, irrelevant in cylindrical bending.
    pub mu_c: f64,
    /// Shear modulus carried by the curvature scale.
    pub mu: f64,
    /// Characteristic length.
    pub lc: f64,
    /// Weight of the deviatoric symmetric curvature part.
    pub a1: f64,
    /// Weight of the skew curvature part.
    pub a2: f64,
    /// Weight of the spherical curvature part.
    pub a3: f64,
}

impl MaterialScales {
    /// Validates the ranges: both modulus pairs positive definite,
    /// `mu_c >= 0`, `mu > 0`, `lc >= 0` and `a1, a2, a3 >= 0`.
    ///
    /// # Errors
    ///
    /// Returns [`MaterialError::DegenerateMaterial`] for inadmissible moduli
    /// and [`MaterialError::InvalidArgument`] for negative scale parameters.
    pub fn validate(&self) -> Result<(), MaterialError> {
        self.meso()?;
        self.micro()?;
        if self.mu_c < 0.0 || !self.mu_c.is_finite() {
            return Err(MaterialError::InvalidArgument(format!(
                "mu_c must be non-negative, got {}",
                self.mu_c
            )));
        }
        if self.mu <= 0.0 || !self.mu.is_finite() {
            return Err(MaterialError::InvalidArgument(format!(
                "curvature shear modulus must be positive, got {}",
                self.mu
            )));
        }
        if self.lc < 0.0 || !self.lc.is_finite() {
            return Err(MaterialError::InvalidArgument(format!(
                "characteristic length must be non-negative, got {}",
                self.lc
            )));
        }
        for (name, a) in [("a1", self.a1), ("a2", self.a2), ("a3", self.a3)] {
            if a < 0.0 || !a.is_finite() {
                return Err(MaterialError::InvalidArgument(format!(
                    "curvature weight {name} must be non-negative, got {a}"
                )));
            }
        }
        Ok(())
    }

    /// Meso modulus pair.
    pub fn meso(&self) -> Result<IsotropicModuli, MaterialError> {
        IsotropicModuli::new(self.mu_e, self.lambda_e)
    }

    /// Micro modulus pair.
    pub fn micro(&self) -> Result<IsotropicModuli, MaterialError> {
        IsotropicModuli::new(self.mu_micro, self.lambda_micro)
    }

    /// Curvature energy scale `mu * lc^2`.
    pub fn curvature_scale(&self) -> f64 {
        self.mu * self.lc * self.lc
    }
}

/// Harmonic-mean homogenization of the meso and micro scales:
/// `mu_macro = mu_e mu_micro / (mu_e + mu_micro)` and
/// `kappa_macro = kappa_e kappa_micro / (kappa_e + kappa_micro)`.
///
/// # Errors
///
/// Returns [`MaterialError::DegenerateMaterial`] when either modulus pair is
/// inadmissible or a denominator vanishes.
pub fn homogenize(scales: &MaterialScales) -> Result<IsotropicModuli, MaterialError> {
    let e = scales.meso()?;
    let m = scales.micro()?;
    let mu_den = e.mu + m.mu;
    let kappa_den = e.kappa() + m.kappa();
    if mu_den == 0.0 || kappa_den == 0.0 {
        return Err(MaterialError::DegenerateMaterial(
            "homogenization denominator vanishes".to_string(),
        ));
    }
    let mu_macro = e.mu * m.mu / mu_den;
    let kappa_macro = e.kappa() * m.kappa() / kappa_den;
    IsotropicModuli::new(mu_macro, kappa_macro - 2.0 * mu_macro / 3.0)
}

/// Characteristic bending length `l_b = sqrt(gamma_tilde / (4 mu_macro))`
/// of a rotationally coupled medium whose curvature energy carries the
/// effective second-gradient constant
/// `gamma_tilde = mu lc^2 (a1 + a2) / 2`.
pub fn cosserat_bending_length(macro_mu: f64, mu: f64, lc: f64, a1: f64, a2: f64) -> f64 {
    let gamma_tilde = mu * lc * lc * (a1 + a2) / 2.0;
    (gamma_tilde / (4.0 * macro_mu)).sqrt()
}

/// Normalized size-effect stiffness ratio
/// `Omega = 1 + 24 (l_b / h)^2 (1 - nu)` for plate thickness `h`.
pub fn lakes_omega(macro_moduli: &IsotropicModuli, ell_b: f64, h: f64) -> f64 {
    1.0 + 24.0 * (ell_b / h).powi(2) * (1.0 - macro_moduli.nu())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn scales(mu_e: f64, lambda_e: f64, mu_micro: f64, lambda_micro: f64) -> MaterialScales {
        MaterialScales {
            mu_e,
            lambda_e,
            mu_micro,
            lambda_micro,
            mu_c: 0.0,
            mu: 1.0,
            lc: 1.0,
            a1: 1.0,
            a2: 1.0,
            a3: 0.0,
        }
    }

    #[test]
    fn harmonic_mean_of_shear_moduli() {
        // mu_e = 2 and mu_micro = 2/3 combine to mu_macro = 1/2.
        let s = scales(2.0, 0.0, 2.0 / 3.0, 0.0);
        let m = homogenize(&s).unwrap();
        assert_relative_eq!(m.mu, 0.5, max_relative = 1e-15);
    }

    #[test]
    fn harmonic_mean_of_bulk_moduli() {
        // kappa_e = kappa_micro = 5/3 combine to kappa_macro = 5/6.
        let s = scales(1.0, 1.0, 1.0, 1.0);
        let m = homogenize(&s).unwrap();
        assert_relative_eq!(m.kappa(), 5.0 / 6.0, max_relative = 1e-15);
    }

    #[test]
    fn lakes_ratio_for_reference_plate() {
        // mu = lambda = 1, gamma_tilde = 3/2, h = 1 gives Omega = 7.75.
        let m = IsotropicModuli::new(1.0, 1.0).unwrap();
        let ell_b = cosserat_bending_length(m.mu, 1.0, 1.0, 2.0, 1.0);
        assert_relative_eq!(ell_b * ell_b, 1.5 / 4.0, max_relative = 1e-15);
        assert_relative_eq!(lakes_omega(&m, ell_b, 1.0), 7.75, max_relative = 1e-14);
    }

    #[test]
    fn validate_rejects_negative_weights() {
        let mut s = scales(1.0, 1.0, 1.0, 1.0);
        s.a2 = -0.5;
        assert!(matches!(s.validate(), Err(MaterialError::InvalidArgument(_))));
    }
}
