//! Limit stiffnesses of the bending curve at vanishing and diverging
//! characteristic length.

use materials::{homogenize, IsotropicModuli};

use crate::relaxed::effective_weights;
use crate::{BendingProblem, Model, RelaxedVariant, SolveError};

/// Large-length behaviour of the effective bending stiffness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StiffnessBound {
    /// The stiffness saturates at the given value.
    Bounded(f64),
    /// The stiffness grows like the square of the characteristic length.
    Unbounded,
}

/// Stiffness limits of a bending problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitStiffnesses {
    /// Stiffness at vanishing characteristic length.
    pub d_macro: f64,
    /// Behaviour at diverging characteristic length.
    pub large_lc: StiffnessBound,
    /// For the relaxed family: the curvature moment per unit curvature that
    /// the solution approaches when the micro scale stiffens without bound,
    /// which is the rotational (Cosserat) moment `h mu lc^2 (a1 + a2) / 2`.
    pub rotational_moment: Option<f64>,
}

fn plane_bending(moduli: &IsotropicModuli, h: f64) -> f64 {
    moduli.bending_stiffness(h)
}

fn meso_moduli(p: &BendingProblem) -> Result<IsotropicModuli, SolveError> {
    IsotropicModuli::new(p.scales.mu_e, p.scales.lambda_e)
        .map_err(|e| SolveError::DegenerateMaterial(e.to_string()))
}

fn macro_moduli(p: &BendingProblem) -> Result<IsotropicModuli, SolveError> {
    homogenize(&p.scales).map_err(|e| SolveError::DegenerateMaterial(e.to_string()))
}

/// Bulk-modulus harmonic mean used by the scalar micro-dilation models.
fn scalar_macro(p: &BendingProblem, mu_hat: f64) -> Result<IsotropicModuli, SolveError> {
    let ke = p.scales.lambda_e + 2.0 * p.scales.mu_e / 3.0;
    let km = p.scales.lambda_micro + 2.0 * p.scales.mu_micro / 3.0;
    let k = ke * km / (ke + km);
    IsotropicModuli::new(mu_hat, k - 2.0 * mu_hat / 3.0)
        .map_err(|e| SolveError::DegenerateMaterial(e.to_string()))
}

/// Computes the two ends of the stiffness curve for a bending problem.
pub fn limit_stiffnesses(p: &BendingProblem) -> Result<LimitStiffnesses, SolveError> {
    let h = p.h;
    match p.model {
        Model::Cauchy => {
            let d = plane_bending(&macro_moduli(p)?, h);
            Ok(LimitStiffnesses {
                d_macro: d,
                large_lc: StiffnessBound::Bounded(d),
                rotational_moment: None,
            })
        }
        Model::Relaxed(variant) => {
            let d_macro = plane_bending(&macro_moduli(p)?, h);
            let d_micro = plane_bending(&meso_moduli(p)?, h);
            let (a1, a2) = effective_weights(variant, &p.scales)?;
            if matches!(
                variant,
                RelaxedVariant::ZeroPoissonOneCurvature | RelaxedVariant::ZeroPoissonFullCurvature
            ) && (p.scales.lambda_e != 0.0 || p.scales.lambda_micro != 0.0)
            {
                return Err(SolveError::InvalidArgument(
                    "zero-Poisson variants require vanishing second Lame parameters".into(),
                ));
            }
            Ok(LimitStiffnesses {
                d_macro,
                large_lc: StiffnessBound::Bounded(d_micro),
                rotational_moment: Some(0.5 * h * p.scales.curvature_scale() * (a1 + a2)),
            })
        }
        Model::MicroStretch => {
            let mu_hat = macro_moduli(p)?.mu;
            Ok(LimitStiffnesses {
                d_macro: plane_bending(&scalar_macro(p, mu_hat)?, h),
                large_lc: StiffnessBound::Unbounded,
                rotational_moment: None,
            })
        }
        Model::MicroVoid => {
            let mu_hat = p.scales.mu_e;
            Ok(LimitStiffnesses {
                d_macro: plane_bending(&scalar_macro(p, mu_hat)?, h),
                large_lc: StiffnessBound::Bounded(plane_bending(&meso_moduli(p)?, h)),
                rotational_moment: None,
            })
        }
        Model::Cosserat | Model::CoupleStress(_) => Ok(LimitStiffnesses {
            d_macro: plane_bending(&macro_moduli(p)?, h),
            large_lc: StiffnessBound::Unbounded,
            rotational_moment: None,
        }),
        Model::Micromorphic => Ok(LimitStiffnesses {
            d_macro: plane_bending(&macro_moduli(p)?, h),
            large_lc: StiffnessBound::Unbounded,
            rotational_moment: None,
        }),
        Model::MicroStrain => Ok(LimitStiffnesses {
            d_macro: plane_bending(&macro_moduli(p)?, h),
            large_lc: StiffnessBound::Bounded(plane_bending(&meso_moduli(p)?, h)),
            rotational_moment: None,
        }),
        Model::SecondGradient(_) => Ok(LimitStiffnesses {
            d_macro: plane_bending(&macro_moduli(p)?, h),
            large_lc: StiffnessBound::Unbounded,
            rotational_moment: None,
        }),
    }
}
