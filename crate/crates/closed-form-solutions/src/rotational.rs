//! Cosserat and couple stress bending.
//!
//! In bending the micro-rotation locks onto the continuum rotation, so the
//! displacement solves the classical problem while the rotation gradient is
//! spatially constant. The curvature moment is therefore exact and
//! length-quadratic, the stiffness grows without bound, and the rotational
//! coupling modulus never enters. All couple stress flavours share this
//! solution; they only mask one of the two curvature weights.

use materials::{cosserat_bending_length, homogenize, lakes_omega};

use crate::{
    integrate_density, BendingProblem, BendingSolution, CoupleStressVariant, FieldId, SolveError,
};

pub fn solve_cosserat(problem: &BendingProblem) -> Result<BendingSolution, SolveError> {
    solve_with_weights(problem, problem.scales.a1, problem.scales.a2)
}

pub fn solve_couple_stress(
    problem: &BendingProblem,
    variant: CoupleStressVariant,
) -> Result<BendingSolution, SolveError> {
    let (a1, a2) = match variant {
        CoupleStressVariant::Indeterminate => (problem.scales.a1, problem.scales.a2),
        CoupleStressVariant::Modified => (problem.scales.a1, 0.0),
        CoupleStressVariant::PseudoConsistent => (0.0, problem.scales.a2),
    };
    solve_with_weights(problem, a1, a2)
}

fn solve_with_weights(
    problem: &BendingProblem,
    a1: f64,
    a2: f64,
) -> Result<BendingSolution, SolveError> {
    let moduli =
        homogenize(&problem.scales).map_err(|e| SolveError::DegenerateMaterial(e.to_string()))?;
    let (mu, lambda) = (moduli.mu, moduli.lambda);
    let (h, kappa) = (problem.h, problem.kappa);
    let s = &problem.scales;

    let c0 = lambda * kappa / (lambda + 2.0 * mu);
    let d_macro = moduli.bending_stiffness(h);
    let mc = d_macro * kappa;

    // The rotation axis vector is kappa x1 e3, so its gradient is the
    // constant kappa e3 (x) e1 and the curvature energy density is uniform:
    // the symmetric and skew parts of the associated curl each carry half.
    let gamma_tilde = 0.5 * s.curvature_scale() * (a1 + a2);
    let mm = h * gamma_tilde * kappa;

    let ell_b = cosserat_bending_length(moduli.mu, s.mu, s.lc, a1, a2);
    let omega = lakes_omega(&moduli, ell_b, h);

    let profile: crate::ProfileFn = Box::new(move |x: f64| vec![0.5 * c0 * x * x, c0 * x, -kappa]);
    let density: crate::DensityFn = Box::new(move |x: f64| {
        let e11 = -kappa * x;
        let e22 = c0 * x;
        let tr = e11 + e22;
        mu * (e11 * e11 + e22 * e22) + 0.5 * lambda * tr * tr + 0.5 * gamma_tilde * kappa * kappa
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
            ("c0", c0),
            ("d_macro", d_macro),
            ("gamma_tilde", gamma_tilde),
            ("ell_b", ell_b),
            ("omega_ratio", omega),
        ],
        fields: vec![FieldId::V, FieldId::VPrime, FieldId::A12],
        profile,
        density,
    })
}
