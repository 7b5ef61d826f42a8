//! Material parameter sets for generalized continua.
//!
//! The crate collects the isotropic moduli used at a single scale, the
//! two-scale parameter set shared by all models of the family (meso and
//! micro moduli, rotational coupling, curvature scale and curvature
//! weights), the harmonic-mean homogenization between scales, and the
//! conversion tables that express the Curl-based and gradient-based
//! curvature energies in a classical eleven-invariant quadratic form.

mod curvature;
mod json;
mod mindlin;
mod moduli;
mod scales;

pub use curvature::{
    curvature_energy_curl, curvature_energy_gradient, quadratic_form_eleven, quadratic_form_five,
    Chi,
};
pub use json::{load_params_file, load_params_str, ParamSet};
pub use mindlin::{
    to_cosserat_classic, to_mindlin_reduced, to_mindlin_relaxed, to_mindlin_second_gradient,
    CosseratClassicCoefficients, MindlinCoefficients, SecondGradientCoefficients,
};
pub use moduli::IsotropicModuli;
pub use scales::{cosserat_bending_length, homogenize, lakes_omega, MaterialScales};

/// Errors produced when building or combining material parameter sets.
#[derive(Debug, thiserror::Error)]
pub enum MaterialError {
    /// A modulus combination leaves the quadratic energy non-positive or a
    /// homogenization denominator vanishes.
    #[error("degenerate material: {0}")]
    DegenerateMaterial(String),

    /// A parameter is outside its admissible range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A parameter document could not be parsed or contains unknown keys.
    #[error("parameter parse error: {0}")]
    Parse(String),
}
