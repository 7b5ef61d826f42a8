//! Closed-form solutions of the cylindrical bending problem for isotropic
//! generalized continua.
//!
//! Every model in this crate bends an infinite plate of thickness `h` to a
//! prescribed axis curvature `kappa` and reports the resulting stiffness
//! split into a force-stress moment `mc`, a moment contributed by the
//! curvature (higher order) terms `mm`, and the stored energy per unit
//! midsurface area `wtot`. The effective bending stiffness is
//! `(mc + mm) / kappa`, and for every admissible solution the energy and the
//! moments satisfy `2 wtot / kappa^2 = (mc + mm) / kappa`.
//!
//! The plate occupies `-h/2 <= x2 <= h/2`. All through-thickness profiles are
//! exposed as closures over `x2` together with the list of fields they
//! evaluate, so callers can tabulate or test them without re-deriving the
//! solution constants.

mod cauchy;
mod limits;
mod relaxed;
mod rotational;
mod scalar;
mod second_gradient;
pub mod special;
mod tractions;

pub use limits::{limit_stiffnesses, LimitStiffnesses, StiffnessBound};
pub use tractions::{consistent_coupling_tractions, CouplingTractions};

use materials::MaterialScales;

/// Ratio `lc / h` below which a solver switches to its vanishing-length
/// limit expressions instead of evaluating hyperbolic layer terms.
pub const LC_LIMIT_RATIO: f64 = 1e-9;

/// Errors produced while assembling or solving a bending problem.
#[derive(Debug, thiserror::Error)]
pub enum SolveError {
    /// A modulus combination leaves the stored energy indefinite or a
    /// required harmonic mean undefined.
    #[error("degenerate material: {0}")]
    DegenerateMaterial(String),
    /// The curvature weights entering this model make its stiffness operator
    /// singular, so the bending profile is not determined.
    #[error("ill-posed curvature energy: {0}")]
    IllPosedCurvature(String),
    /// The requested operation is not defined for this model or variant.
    #[error("unsupported variant: {0}")]
    UnsupportedVariant(String),
    /// An input value violates a documented requirement.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Curvature energy variants of the relaxed micromorphic model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelaxedVariant {
    /// Both Lame pairs have zero second parameter and the curvature energy is
    /// the one-constant form (both active weights equal one).
    ZeroPoissonOneCurvature,
    /// Arbitrary admissible moduli with the one-constant curvature energy.
    AnyPoissonOneCurvature,
    /// Zero second Lame parameters with independent curvature weights.
    ZeroPoissonFullCurvature,
    /// Arbitrary admissible moduli with independent curvature weights.
    General,
}

/// Couple stress flavours. All of them reuse the Cosserat bending solution;
/// they differ only in which curvature weights survive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoupleStressVariant {
    /// Keeps both weights; identical to the Cosserat model in bending.
    Indeterminate,
    /// Symmetric couple stress tensor: the skew weight is dropped.
    Modified,
    /// Skew couple stress tensor: the symmetric weight is dropped.
    PseudoConsistent,
}

/// Second gradient curvature variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecondGradientVariant {
    /// One-constant curvature energy with zero second Lame parameter.
    OneCurvatureZeroPoisson,
    /// One-constant curvature energy, arbitrary admissible moduli.
    OneCurvature,
    /// Independent curvature weights, arbitrary admissible moduli.
    Full,
}

/// The generalized continuum models covered by this workspace.
///
/// `Micromorphic` and `MicroStrain` have no closed-form profile; they are
/// solved by the companion semi-analytic crate and are rejected here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Cauchy,
    Relaxed(RelaxedVariant),
    MicroStretch,
    Cosserat,
    CoupleStress(CoupleStressVariant),
    MicroVoid,
    Micromorphic,
    MicroStrain,
    SecondGradient(SecondGradientVariant),
}

impl Model {
    /// Short stable name used in reports and output files.
    pub fn name(&self) -> &'static str {
        match self {
            Model::Cauchy => "cauchy",
            Model::Relaxed(RelaxedVariant::ZeroPoissonOneCurvature) => {
                "relaxed-zero-poisson-one-curvature"
            }
            Model::Relaxed(RelaxedVariant::AnyPoissonOneCurvature) => {
                "relaxed-any-poisson-one-curvature"
            }
            Model::Relaxed(RelaxedVariant::ZeroPoissonFullCurvature) => {
                "relaxed-zero-poisson-full-curvature"
            }
            Model::Relaxed(RelaxedVariant::General) => "relaxed-general",
            Model::MicroStretch => "micro-stretch",
            Model::Cosserat => "cosserat",
            Model::CoupleStress(CoupleStressVariant::Indeterminate) => {
                "couple-stress-indeterminate"
            }
            Model::CoupleStress(CoupleStressVariant::Modified) => "couple-stress-modified",
            Model::CoupleStress(CoupleStressVariant::PseudoConsistent) => {
                "couple-stress-pseudo-consistent"
            }
            Model::MicroVoid => "micro-void",
            Model::Micromorphic => "micromorphic",
            Model::MicroStrain => "micro-strain",
            Model::SecondGradient(SecondGradientVariant::OneCurvatureZeroPoisson) => {
                "second-gradient-one-curvature-zero-poisson"
            }
            Model::SecondGradient(SecondGradientVariant::OneCurvature) => {
                "second-gradient-one-curvature"
            }
            Model::SecondGradient(SecondGradientVariant::Full) => "second-gradient-full",
        }
    }
}

/// Through-thickness fields a solution can expose.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldId {
    /// Midsurface-normal displacement profile `v(x2)`.
    V,
    /// Its derivative `v'(x2)`.
    VPrime,
    /// Micro-distortion diagonal `P11` (micro-strain `S11` maps here too).
    P11,
    /// Micro-distortion diagonal `P22`.
    P22,
    /// Micro-distortion diagonal `P33`.
    P33,
    /// Scalar micro-dilation `omega` of the stretch and void models.
    Omega,
    /// Micro-rotation entry `A12` per unit `x1`.
    A12,
}

impl FieldId {
    pub fn name(&self) -> &'static str {
        match self {
            FieldId::V => "v",
            FieldId::VPrime => "v_prime",
            FieldId::P11 => "p11",
            FieldId::P22 => "p22",
            FieldId::P33 => "p33",
            FieldId::Omega => "omega",
            FieldId::A12 => "a12",
        }
    }
}

/// A bending problem: a model acting on a parameter set at plate thickness
/// `h` and prescribed curvature `kappa`.
#[derive(Debug, Clone)]
pub struct BendingProblem {
    pub model: Model,
    pub scales: MaterialScales,
    pub h: f64,
    pub kappa: f64,
}

impl BendingProblem {
    pub fn new(model: Model, scales: MaterialScales, h: f64, kappa: f64) -> Self {
        BendingProblem {
            model,
            scales,
            h,
            kappa,
        }
    }

    /// Checks the material scales, thickness, and curvature for a solvable
    /// problem. Every solver front end calls this before dispatching.
    pub fn validate(&self) -> Result<(), SolveError> {
        self.scales
            .validate()
            .map_err(|e| SolveError::DegenerateMaterial(e.to_string()))?;
        if !self.h.is_finite() || self.h <= 0.0 {
            return Err(SolveError::InvalidArgument(format!(
                "plate thickness must be positive and finite, got {}",
                self.h
            )));
        }
        if !self.kappa.is_finite() {
            return Err(SolveError::InvalidArgument(format!(
                "curvature must be finite, got {}",
                self.kappa
            )));
        }
        Ok(())
    }
}

pub(crate) type ProfileFn = Box<dyn Fn(f64) -> Vec<f64> + Send + Sync>;
pub(crate) type DensityFn = Box<dyn Fn(f64) -> f64 + Send + Sync>;

/// A solved bending problem.
///
/// `mc` is the moment of the force stress, `mm` the moment carried by the
/// curvature terms, and `wtot` the stored energy per unit midsurface area,
/// obtained by quadrature of the energy density over the thickness (not from
/// the moment formulas, so energy/moment agreement is a real consistency
/// check).
pub struct BendingSolution {
    pub model: Model,
    pub h: f64,
    pub kappa: f64,
    pub mc: f64,
    pub mm: f64,
    pub wtot: f64,
    coeffs: Vec<(&'static str, f64)>,
    fields: Vec<FieldId>,
    profile: ProfileFn,
    density: DensityFn,
}

impl BendingSolution {
    /// Assembles a solution from externally computed parts.
    ///
    /// This is the bridge for solvers living outside this crate (the
    /// semi-analytic micromorphic family) so every model presents the same
    /// interface. The total energy is integrated here from the supplied
    /// density, keeping it an independent check on the moments.
    pub fn from_parts(
        model: Model,
        h: f64,
        kappa: f64,
        mc: f64,
        mm: f64,
        coeffs: Vec<(&'static str, f64)>,
        fields: Vec<FieldId>,
        profile: impl Fn(f64) -> Vec<f64> + Send + Sync + 'static,
        density: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        let profile: ProfileFn = Box::new(profile);
        let density: DensityFn = Box::new(density);
        let wtot = integrate_density(&density, h);
        BendingSolution {
            model,
            h,
            kappa,
            mc,
            mm,
            wtot,
            coeffs,
            fields,
            profile,
            density,
        }
    }

    /// Effective bending stiffness `(mc + mm) / kappa`.
    pub fn deff(&self) -> f64 {
        (self.mc + self.mm) / self.kappa
    }

    /// Named solution constants (rates, amplitudes, particular slopes).
    pub fn coeffs(&self) -> &[(&'static str, f64)] {
        &self.coeffs
    }

    /// Looks up a named solution constant.
    pub fn coeff(&self, name: &str) -> Option<f64> {
        self.coeffs
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
    }

    /// The fields evaluated by [`eval`](Self::eval), in column order.
    pub fn fields(&self) -> &[FieldId] {
        &self.fields
    }

    /// Evaluates all profile fields at the through-thickness coordinate `x2`.
    pub fn eval(&self, x2: f64) -> Vec<f64> {
        (self.profile)(x2)
    }

    /// Energy density per unit midsurface area and thickness at `x2`.
    pub fn energy_density(&self, x2: f64) -> f64 {
        (self.density)(x2)
    }

    /// Tabulates the profile on `n` uniformly spaced points across the
    /// thickness. Returns the grid and one column per field.
    pub fn sample_profile(&self, n: usize) -> (Vec<f64>, Vec<Vec<f64>>) {
        assert!(n >= 2, "profile sampling needs at least two points");
        let half = 0.5 * self.h;
        let step = self.h / (n - 1) as f64;
        let xs: Vec<f64> = (0..n)
            .map(|i| {
                if i + 1 == n {
                    half
                } else {
                    -half + step * i as f64
                }
            })
            .collect();
        let mut cols = vec![Vec::with_capacity(n); self.fields.len()];
        for &x in &xs {
            let row = self.eval(x);
            for (c, v) in cols.iter_mut().zip(row) {
                c.push(v);
            }
        }
        (xs, cols)
    }
}

/// Solves a bending problem in closed form.
///
/// The classical micromorphic and micro-strain models need a numerical
/// eigenbasis and are served by the semi-analytic crate; requesting them here
/// returns [`SolveError::UnsupportedVariant`].
pub fn solve(problem: &BendingProblem) -> Result<BendingSolution, SolveError> {
    problem.validate()?;
    match problem.model {
        Model::Cauchy => cauchy::solve(problem),
        Model::Relaxed(v) => relaxed::solve(problem, v),
        Model::MicroStretch => scalar::solve_stretch(problem),
        Model::MicroVoid => scalar::solve_void(problem),
        Model::Cosserat => rotational::solve_cosserat(problem),
        Model::CoupleStress(v) => rotational::solve_couple_stress(problem, v),
        Model::SecondGradient(v) => second_gradient::solve(problem, v),
        Model::Micromorphic | Model::MicroStrain => Err(SolveError::UnsupportedVariant(format!(
            "{} has no closed-form profile; use the semi-analytic solver",
            problem.model.name()
        ))),
    }
}

/// Integrates a solution's energy density over the thickness with composite
/// Gauss-Legendre quadrature. Used internally to populate `wtot`.
pub(crate) fn integrate_density(density: &DensityFn, h: f64) -> f64 {
    special::integrate(|x| density(x), -0.5 * h, 0.5 * h, 8)
}
