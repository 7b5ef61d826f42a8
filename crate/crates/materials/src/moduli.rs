//! Isotropic elastic moduli at a single scale.

use crate::MaterialError;

/// Shear and Lame moduli of an isotropic material, with the derived
/// quantities used throughout the bending solutions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsotropicModuli {
    /// Shear modulus.
    pub mu: f64,
    /// First Lame modulus.
    pub lambda: f64,
}

impl IsotropicModuli {
    /// Builds a modulus pair, requiring a positive-definite quadratic energy:
    /// `mu > 0` and bulk modulus `kappa = lambda + 2 mu / 3 > 0`.
    ///
    /// # Errors
    ///
    /// Returns [`MaterialError::DegenerateMaterial`] when either condition
    /// fails or a value is not finite.
    pub fn new(mu: f64, lambda: f64) -> Result<Self, MaterialError> {
        if !mu.is_finite() || !lambda.is_finite() {
            return Err(MaterialError::DegenerateMaterial(format!(
                "non-finite moduli mu = {mu}, lambda = {lambda}"
            )));
        }
        let m = IsotropicModuli { mu, lambda };
        if mu <= 0.0 {
            return Err(MaterialError::DegenerateMaterial(format!(
                "shear modulus must be positive, got {mu}"
            )));
        }
        if m.kappa() <= 0.0 {
            return Err(MaterialError::DegenerateMaterial(format!(
                "bulk modulus must be positive, got {}",
                m.kappa()
            )));
        }
        Ok(m)
    }

    /// Bulk modulus `kappa = lambda + 2 mu / 3`.
    pub fn kappa(&self) -> f64 {
        self.lambda + 2.0 * self.mu / 3.0
    }

    /// Poisson ratio `nu = lambda / (2 (lambda + mu))`.
    pub fn nu(&self) -> f64 {
        self.lambda / (2.0 * (self.lambda + self.mu))
    }

    /// Young modulus `E = mu (3 lambda + 2 mu) / (lambda + mu)`.
    pub fn youngs(&self) -> f64 {
        self.mu * (3.0 * self.lambda + 2.0 * self.mu) / (self.lambda + self.mu)
    }

    /// Plane-stress Lame modulus `2 lambda mu / (lambda + 2 mu)`.
    pub fn lambda_hat(&self) -> f64 {
        2.0 * self.lambda * self.mu / (self.lambda + 2.0 * self.mu)
    }

    /// Plane-stress bending stiffness of a plate of thickness `h`,
    /// `(h^3 / 12) 4 mu (lambda + mu) / (lambda + 2 mu)`.
    pub fn bending_stiffness(&self, h: f64) -> f64 {
        h.powi(3) / 12.0 * 4.0 * self.mu * (self.lambda + self.mu) / (self.lambda + 2.0 * self.mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn derived_quantities_for_unit_moduli() {
        let m = IsotropicModuli::new(1.0, 1.0).unwrap();
        assert_relative_eq!(m.kappa(), 5.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(m.nu(), 0.25, max_relative = 1e-15);
        assert_relative_eq!(m.youngs(), 2.5, max_relative = 1e-15);
        assert_relative_eq!(m.lambda_hat(), 2.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(m.bending_stiffness(1.0), 2.0 / 9.0, max_relative = 1e-15);
    }

    #[test]
    fn bending_stiffness_equals_bulk_form() {
        // 4 mu (lambda + mu) / (lambda + 2 mu) = 4 mu (3 kappa + mu) / (3 kappa + 4 mu).
        let m = IsotropicModuli::new(0.7, 2.3).unwrap();
        let k = m.kappa();
        let bulk_form = 4.0 * m.mu * (3.0 * k + m.mu) / (3.0 * k + 4.0 * m.mu) / 12.0;
        assert_relative_eq!(m.bending_stiffness(1.0), bulk_form, max_relative = 1e-14);
    }

    #[test]
    fn rejects_non_positive_energy() {
        assert!(IsotropicModuli::new(-1.0, 1.0).is_err());
        assert!(IsotropicModuli::new(0.0, 1.0).is_err());
        assert!(IsotropicModuli::new(1.0, -1.0).is_err());
        // lambda slightly above -2 mu / 3 keeps kappa positive.
        assert!(IsotropicModuli::new(1.0, -0.6).is_ok());
    }
}
