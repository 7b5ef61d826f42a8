//! Relaxed micromorphic bending: the curvature energy acts on `Curl P` only,
//! which keeps the large-length stiffness bounded.
//!
//! Under the bending ansatz the micro-distortion is diagonal up to the
//! prescribed `-kappa x1` rotation block, and the diagonal splits into two
//! decoupled modes: the difference `D = P11 - P33`, driven by the symmetric
//! traceless part of `Curl P`, and the sum `S = P11 + P33`, driven by its
//! skew part. The trace weight never enters because `Curl P` is traceless on
//! this ansatz. Each mode solves
//! `a mu lc^2 m'' = k m + f x` with `m'(+-h/2) = -kappa`,
//! giving a linear particular part plus a `sinh` boundary layer.

use materials::{homogenize, MaterialScales};

use crate::special::{
    layer_antiderivative, layer_derivative, layer_first_moment, layer_span_deficit, layer_value,
};
use crate::{
    integrate_density, BendingProblem, BendingSolution, FieldId, RelaxedVariant, SolveError,
    LC_LIMIT_RATIO,
};

/// Variant-resolved curvature weights. One-constant variants pin both active
/// weights to one regardless of the stored values.
pub(crate) fn effective_weights(
    variant: RelaxedVariant,
    scales: &MaterialScales,
) -> Result<(f64, f64), SolveError> {
    match variant {
        RelaxedVariant::ZeroPoissonOneCurvature | RelaxedVariant::AnyPoissonOneCurvature => {
            Ok((1.0, 1.0))
        }
        RelaxedVariant::ZeroPoissonFullCurvature | RelaxedVariant::General => {
            if scales.a1 <= 0.0 || scales.a2 <= 0.0 {
                return Err(SolveError::IllPosedCurvature(format!(
                    "bending activates both curvature weights; got a1 = {}, a2 = {}",
                    scales.a1, scales.a2
                )));
            }
            Ok((scales.a1, scales.a2))
        }
    }
}

pub(crate) fn require_zero_poisson(scales: &MaterialScales) -> Result<(), SolveError> {
    if scales.lambda_e != 0.0 || scales.lambda_micro != 0.0 {
        return Err(SolveError::InvalidArgument(format!(
            "zero-Poisson variants require lambda_e = lambda_micro = 0, got {} and {}",
            scales.lambda_e, scales.lambda_micro
        )));
    }
    Ok(())
}

#[derive(Clone, Copy)]
struct Mode {
    /// Dimensionless rate `f = r lc`, exposed in the coefficient table.
    f: f64,
    /// Layer rate `r`; zero in the vanishing-length limit branch.
    r: f64,
    /// Particular slope: the mode tends to `alpha x` away from the faces.
    alpha: f64,
    /// Layer slope amplitude: the layer derivative equals `amp` at `x = h/2`.
    amp: f64,
    /// True when the layer is dropped (vanishing characteristic length).
    limit: bool,
}

impl Mode {
    /// Solves `a mu lc^2 m'' = k m + f_drive kappa x`, `m'(+-h/2) = -kappa`.
    fn new(stiffness: f64, drive: f64, weight: f64, p: &BendingProblem) -> Self {
        let curvature_scale = p.scales.curvature_scale();
        let alpha = -drive * p.kappa / stiffness;
        let f = (stiffness / (weight * p.scales.mu)).sqrt();
        if p.scales.lc < LC_LIMIT_RATIO * p.h {
            return Mode {
                f,
                r: 0.0,
                alpha,
                amp: 0.0,
                limit: true,
            };
        }
        let r = (stiffness / (weight * curvature_scale)).sqrt();
        Mode {
            f,
            r,
            alpha,
            amp: -p.kappa - alpha,
            limit: false,
        }
    }

    fn value(&self, h: f64, x: f64) -> f64 {
        if self.limit {
            self.alpha * x
        } else {
            self.alpha * x + layer_value(self.r, h, self.amp, x)
        }
    }

    fn derivative(&self, h: f64, x: f64) -> f64 {
        if self.limit {
            self.alpha
        } else {
            self.alpha + layer_derivative(self.r, h, self.amp, x)
        }
    }

    fn antiderivative(&self, h: f64, x: f64) -> f64 {
        if self.limit {
            0.5 * self.alpha * x * x
        } else {
            0.5 * self.alpha * x * x + layer_antiderivative(self.r, h, self.amp, x)
        }
    }

    fn first_moment(&self, h: f64) -> f64 {
        let particular = self.alpha * h * h * h / 12.0;
        if self.limit {
            particular
        } else {
            particular + layer_first_moment(self.r, h, self.amp)
        }
    }

    /// The couple-moment span `kappa h + 2 m(h/2)`.
    ///
    /// With `amp = -(kappa + alpha)` this collapses to
    /// `-amp (h - 2 tanh(r h/2) / r)`, which avoids the cancellation the
    /// direct sum suffers when the layer fills the whole thickness.
    fn moment_span(&self, h: f64, kappa: f64) -> f64 {
        if self.limit {
            (kappa + self.alpha) * h
        } else {
            -self.amp * layer_span_deficit(self.r, h)
        }
    }
}

pub fn solve(problem: &BendingProblem, variant: RelaxedVariant) -> Result<BendingSolution, SolveError> {
    match variant {
        RelaxedVariant::ZeroPoissonOneCurvature | RelaxedVariant::ZeroPoissonFullCurvature => {
            require_zero_poisson(&problem.scales)?
        }
        _ => {}
    }
    let (a1, a2) = effective_weights(variant, &problem.scales)?;
    homogenize(&problem.scales).map_err(|e| SolveError::DegenerateMaterial(e.to_string()))?;

    let s = &problem.scales;
    let (h, kappa) = (problem.h, problem.kappa);
    let (mu_e, lam_e) = (s.mu_e, s.lambda_e);
    let (mu_m, lam_m) = (s.mu_micro, s.lambda_micro);
    let lam_hat_e = 2.0 * lam_e * mu_e / (lam_e + 2.0 * mu_e);
    let lam_hat_m = 2.0 * lam_m * mu_m / (lam_m + 2.0 * mu_m);

    // Mode stiffnesses and drives after eliminating v' and P22 through the
    // traction-free and in-plane balance conditions.
    let k_d = 2.0 * (mu_e + mu_m);
    let k_s = 2.0 * (mu_e + lam_hat_e + mu_m + lam_hat_m);
    let drive_d = 2.0 * mu_e;
    let drive_s = 2.0 * (mu_e + lam_hat_e);

    let mode_d = Mode::new(k_d, drive_d, a1, problem);
    let mode_s = Mode::new(k_s, drive_s, a2, problem);

    // Pointwise closures of the eliminated fields over (S, x).
    let p22_of_s = -lam_m / (2.0 * mu_m + lam_m);
    let vp_of_sx = lam_e / (2.0 * mu_e + lam_e);
    // v' = p22 + vp_of_sx (kappa x + S)
    // Force stress sigma_11 as a linear form over (D, S, kappa x).
    let sig_d = -mu_e;
    let sig_s = -(mu_e + lam_hat_e);
    let sig_x = -(2.0 * mu_e + lam_hat_e);

    let mc = -(sig_x * kappa * h * h * h / 12.0
        + sig_d * mode_d.first_moment(h)
        + sig_s * mode_s.first_moment(h));
    let curvature_scale = s.curvature_scale();
    let mm = 0.5
        * curvature_scale
        * (a1 * mode_d.moment_span(h, kappa) + a2 * mode_s.moment_span(h, kappa));

    let coeffs = vec![
        ("f1", mode_d.f),
        ("f2", mode_s.f),
        ("alpha_d", mode_d.alpha),
        ("alpha_s", mode_s.alpha),
        ("amp_d", mode_d.amp),
        ("amp_s", mode_s.amp),
        ("k_d", k_d),
        ("k_s", k_s),
    ];

    let (prof_d, prof_s) = (mode_d, mode_s);
    let profile: crate::ProfileFn = Box::new(move |x: f64| {
        let d = prof_d.value(h, x);
        let sm = prof_s.value(h, x);
        let p11 = 0.5 * (sm + d);
        let p33 = 0.5 * (sm - d);
        let p22 = p22_of_s * sm;
        let vp = p22 + vp_of_sx * (kappa * x + sm);
        let v = p22_of_s * prof_s.antiderivative(h, x)
            + vp_of_sx * (0.5 * kappa * x * x + prof_s.antiderivative(h, x));
        vec![v, vp, p11, p22, p33]
    });

    let (dens_d, dens_s) = (mode_d, mode_s);
    let density: crate::DensityFn = Box::new(move |x: f64| {
        let d = dens_d.value(h, x);
        let sm = dens_s.value(h, x);
        let p11 = 0.5 * (sm + d);
        let p33 = 0.5 * (sm - d);
        let p22 = p22_of_s * sm;
        let vp = p22 + vp_of_sx * (kappa * x + sm);
        let e11 = -kappa * x - p11;
        let e22 = vp - p22;
        let e33 = -p33;
        let tr_e = e11 + e22 + e33;
        let tr_p = p11 + p22 + p33;
        let w_e =
            mu_e * (e11 * e11 + e22 * e22 + e33 * e33) + 0.5 * lam_e * tr_e * tr_e;
        let w_m =
            mu_m * (p11 * p11 + p22 * p22 + p33 * p33) + 0.5 * lam_m * tr_p * tr_p;
        // Curl P has entries q1 = -kappa - P11' and q3 = P33' at (1,3)/(3,1).
        let dp = dens_d.derivative(h, x);
        let sp = dens_s.derivative(h, x);
        let q1 = -kappa - 0.5 * (sp + dp);
        let q3 = 0.5 * (sp - dp);
        let sym = q1 + q3;
        let skew = q1 - q3;
        let w_c = 0.5 * curvature_scale * (0.5 * a1 * sym * sym + 0.5 * a2 * skew * skew);
        w_e + w_m + w_c
    });
    let wtot = integrate_density(&density, h);

    Ok(BendingSolution {
        model: problem.model,
        h,
        kappa,
        mc,
        mm,
        wtot,
        coeffs,
        fields: vec![
            FieldId::V,
            FieldId::VPrime,
            FieldId::P11,
            FieldId::P22,
            FieldId::P33,
        ],
        profile,
        density,
    })
}
