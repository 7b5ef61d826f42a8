//! Micro-stretch and micro-void bending.
//!
//! Both models carry a single scalar micro-field: the micro-distortion is
//! spherical, `P = omega * I` for the void model, and the stretch model adds
//! the prescribed rotation block on top of the sphere. Eliminating `v'`
//! through the traction-free face condition leaves one second order equation
//! `A omega'' + B omega + C x = 0` whose layer rate and particular slope are
//! reported as `f1` and `f2` in the coefficient table.
//!
//! The models differ in the shear modulus that resists bending (the
//! homogenized modulus for stretch, the meso modulus for void), in the
//! curvature weights that survive, and in their boundary conditions:
//! stretch couples the face flux to the curvature while void leaves the
//! micro-dilation flux-free, which also removes its curvature moment.

use materials::homogenize;

use crate::special::{
    layer_antiderivative, layer_derivative, layer_first_moment, layer_span_deficit, layer_value,
};
use crate::{
    integrate_density, BendingProblem, BendingSolution, FieldId, Model, SolveError,
    LC_LIMIT_RATIO,
};

struct ScalarSetup {
    /// Shear modulus resisting bending.
    mu_hat: f64,
    /// Meso and micro bulk moduli.
    kappa_e: f64,
    kappa_m: f64,
    /// Face flux of the micro-dilation per unit curvature: omega'(+-h/2) =
    /// `flux * kappa`.
    flux: f64,
    /// Curvature weights that multiply the constant and gradient parts of
    /// the stored curvature energy.
    a1: f64,
    a2: f64,
}

fn bulk(mu: f64, lambda: f64) -> f64 {
    lambda + 2.0 * mu / 3.0
}

fn solve_scalar(problem: &BendingProblem, setup: ScalarSetup) -> Result<BendingSolution, SolveError> {
    let s = &problem.scales;
    let (h, kappa) = (problem.h, problem.kappa);
    let ScalarSetup {
        mu_hat,
        kappa_e,
        kappa_m,
        flux,
        a1,
        a2,
    } = setup;
    if a2 <= 0.0 {
        return Err(SolveError::IllPosedCurvature(format!(
            "the micro-dilation gradient carries weight a2 = {}, leaving its profile undetermined",
            a2
        )));
    }

    // A omega'' + B omega + C x = 0 after eliminating v'.
    let denom = 3.0 * kappa_e + 4.0 * mu_hat;
    let a_coef = 2.0 * s.curvature_scale() * a2;
    let b_coef = -9.0 * (3.0 * kappa_e * kappa_m + 4.0 * kappa_e * mu_hat + 4.0 * kappa_m * mu_hat)
        / denom;
    let c_coef = -18.0 * kappa * kappa_e * mu_hat / denom;
    let alpha = -c_coef / b_coef;
    let f1 = (-b_coef / (2.0 * s.mu * a2)).sqrt();

    let limit = s.lc < LC_LIMIT_RATIO * h;
    let (r, amp) = if limit {
        (0.0, 0.0)
    } else {
        ((-b_coef / a_coef).sqrt(), flux * kappa - alpha)
    };

    let omega = move |x: f64| {
        if limit {
            alpha * x
        } else {
            alpha * x + layer_value(r, h, amp, x)
        }
    };
    let omega_prime = move |x: f64| {
        if limit {
            alpha
        } else {
            alpha + layer_derivative(r, h, amp, x)
        }
    };
    let omega_antideriv = move |x: f64| {
        if limit {
            0.5 * alpha * x * x
        } else {
            0.5 * alpha * x * x + layer_antiderivative(r, h, amp, x)
        }
    };
    let omega_moment = if limit {
        alpha * h * h * h / 12.0
    } else {
        alpha * h * h * h / 12.0 + layer_first_moment(r, h, amp)
    };
    // v' as a linear form over (x, omega), from the traction-free face.
    let vp_x = (3.0 * kappa * kappa_e - 2.0 * kappa * mu_hat) / denom;
    let vp_w = 9.0 * kappa_e / denom;

    // sigma_11 as a linear form over (x, omega).
    let sig = |x: f64, w: f64| {
        let e11 = -kappa * x;
        let t = e11 + vp_x * x + vp_w * w;
        2.0 * mu_hat * (e11 - t / 3.0) + kappa_e * (t - 3.0 * w)
    };
    let sig_x = sig(1.0, 0.0);
    let sig_w = sig(0.0, 1.0);
    let mc = -(sig_x * h * h * h / 12.0 + sig_w * omega_moment);

    let curvature_scale = s.curvature_scale();
    let mm = match problem.model {
        Model::MicroStretch => {
            // kappa h + 4 omega(h/2) collapses to -2 amp (h - 2 tanh(r h/2)/r)
            // through the face flux omega' = -kappa/2, avoiding cancellation
            // when the layer spans the whole thickness.
            let span = if limit {
                (kappa + 2.0 * alpha) * h
            } else {
                -2.0 * amp * layer_span_deficit(r, h)
            };
            0.5 * curvature_scale * (a1 * kappa * h + a2 * span)
        }
        _ => 0.0,
    };

    let is_stretch = matches!(problem.model, Model::MicroStretch);
    let profile: crate::ProfileFn = Box::new(move |x: f64| {
        let w = omega(x);
        let vp = vp_x * x + vp_w * w;
        let v = 0.5 * vp_x * x * x + vp_w * omega_antideriv(x);
        vec![v, vp, w]
    });
    let density: crate::DensityFn = Box::new(move |x: f64| {
        let w = omega(x);
        let wp = omega_prime(x);
        let d11 = -kappa * x;
        let vp = vp_x * x + vp_w * w;
        let t = d11 + vp;
        let dev1 = d11 - t / 3.0;
        let dev2 = vp - t / 3.0;
        let dev3 = -t / 3.0;
        let w_el = mu_hat * (dev1 * dev1 + dev2 * dev2 + dev3 * dev3)
            + 0.5 * kappa_e * (t - 3.0 * w) * (t - 3.0 * w)
            + 4.5 * kappa_m * w * w;
        let w_curv = if is_stretch {
            0.5 * curvature_scale
                * (0.5 * a1 * kappa * kappa
                    + 2.0 * a2 * (0.5 * kappa + wp) * (0.5 * kappa + wp))
        } else {
            0.5 * curvature_scale * (2.0 * a2 * wp * wp)
        };
        w_el + w_curv
    });
    let wtot = integrate_density(&density, h);

    Ok(BendingSolution {
        model: problem.model,
        h,
        kappa,
        mc,
        mm,
        wtot,
        coeffs: vec![
            ("f1", f1),
            ("f2", -alpha / kappa),
            ("alpha", alpha),
            ("amp", amp),
            ("b_coef", b_coef),
            ("c_coef", c_coef),
        ],
        fields: vec![FieldId::V, FieldId::VPrime, FieldId::Omega],
        profile,
        density,
    })
}

pub fn solve_stretch(problem: &BendingProblem) -> Result<BendingSolution, SolveError> {
    let s = &problem.scales;
    let macro_moduli =
        homogenize(s).map_err(|e| SolveError::DegenerateMaterial(e.to_string()))?;
    solve_scalar(
        problem,
        ScalarSetup {
            mu_hat: macro_moduli.mu,
            kappa_e: bulk(s.mu_e, s.lambda_e),
            kappa_m: bulk(s.mu_micro, s.lambda_micro),
            flux: -0.5,
            a1: s.a1,
            a2: s.a2,
        },
    )
}

pub fn solve_void(problem: &BendingProblem) -> Result<BendingSolution, SolveError> {
    let s = &problem.scales;
    solve_scalar(
        problem,
        ScalarSetup {
            mu_hat: s.mu_e,
            kappa_e: bulk(s.mu_e, s.lambda_e),
            kappa_m: bulk(s.mu_micro, s.lambda_micro),
            flux: 0.0,
            a1: 0.0,
            a2: s.a2,
        },
    )
}
