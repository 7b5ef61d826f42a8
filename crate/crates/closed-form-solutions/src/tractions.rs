//! Generalized tractions on the cross-section of a bent relaxed plate.
//!
//! On a cut with normal along the bending axis the force traction and the
//! tangential moment traction of the micro-distortion together carry the
//! bending moment. These closed forms exist for the zero-Poisson
//! one-curvature variant, where the micro-distortion agrees with the
//! displacement gradient tangentially on the cut, so the pair can be used
//! as a consistent coupling boundary condition for embedding the model in a
//! classical neighbourhood.

use crate::special::{cosh_ratio, sinh_ratio};
use crate::{BendingProblem, Model, RelaxedVariant, SolveError};

/// Force and moment tractions on the cross-section at the positive face.
pub struct CouplingTractions {
    h: f64,
    mu_bar: f64,
    curvature_scale: f64,
    fraction: f64,
    rate: f64,
    kappa: f64,
    limit: bool,
}

impl CouplingTractions {
    /// Axial force traction at height `x2`.
    pub fn force(&self, x2: f64) -> f64 {
        let layer = if self.limit {
            0.0
        } else {
            sinh_ratio(self.rate, x2, 0.5 * self.h) / self.rate
        };
        2.0 * self.mu_bar * (-x2 + layer) * self.kappa
    }

    /// Tangential moment traction of the micro-distortion at height `x2`.
    pub fn moment(&self, x2: f64) -> f64 {
        let layer = if self.limit {
            0.0
        } else {
            cosh_ratio(self.rate, x2, 0.5 * self.h)
        };
        self.fraction * self.curvature_scale * (1.0 - layer) * self.kappa
    }

    /// First moment of the force traction over the thickness.
    pub fn force_first_moment(&self) -> f64 {
        let h = self.h;
        let layer = if self.limit {
            0.0
        } else {
            let r = self.rate;
            h / (r * r) - 2.0 * crate::special::tanh_sat(0.5 * r * h) / (r * r * r)
        };
        2.0 * self.mu_bar * (-h * h * h / 12.0 + layer) * self.kappa
    }
}

/// Builds the cross-section tractions for the zero-Poisson one-curvature
/// relaxed variant. Other models and variants do not admit this closed pair
/// and are rejected.
pub fn consistent_coupling_tractions(
    problem: &BendingProblem,
) -> Result<CouplingTractions, SolveError> {
    match problem.model {
        Model::Relaxed(RelaxedVariant::ZeroPoissonOneCurvature) => {}
        _ => {
            return Err(SolveError::UnsupportedVariant(format!(
                "consistent coupling tractions are defined for the zero-Poisson one-curvature \
                 relaxed variant, not {}",
                problem.model.name()
            )))
        }
    }
    let s = &problem.scales;
    if s.lambda_e != 0.0 || s.lambda_micro != 0.0 {
        return Err(SolveError::InvalidArgument(
            "zero-Poisson tractions require vanishing second Lame parameters".into(),
        ));
    }
    s.validate()
        .map_err(|e| SolveError::DegenerateMaterial(e.to_string()))?;

    let mu_bar = s.mu_e * s.mu_micro / (s.mu_e + s.mu_micro);
    let fraction = s.mu_micro / (s.mu_e + s.mu_micro);
    let limit = s.lc < crate::LC_LIMIT_RATIO * problem.h;
    let rate = if limit {
        0.0
    } else {
        (2.0 * (s.mu_e + s.mu_micro) / s.curvature_scale()).sqrt()
    };
    Ok(CouplingTractions {
        h: problem.h,
        mu_bar,
        curvature_scale: s.curvature_scale(),
        fraction,
        rate,
        kappa: problem.kappa,
        limit,
    })
}
