//! Linear elastic (Cauchy) bending of the homogenized material.

use materials::homogenize;

use crate::{integrate_density, BendingProblem, BendingSolution, FieldId, SolveError};

pub fn solve(problem: &BendingProblem) -> Result<BendingSolution, SolveError> {
    let moduli =
        homogenize(&problem.scales).map_err(|e| SolveError::DegenerateMaterial(e.to_string()))?;
    let (mu, lambda) = (moduli.mu, moduli.lambda);
    let (h, kappa) = (problem.h, problem.kappa);

    // Traction-free faces force sigma_22 = 0, which fixes v' = c0 * x with
    // c0 = lambda kappa / (lambda + 2 mu).
    let c0 = lambda * kappa / (lambda + 2.0 * mu);
    let d_macro = moduli.bending_stiffness(h);
    let mc = d_macro * kappa;

    let profile: crate::ProfileFn = Box::new(move |x: f64| vec![0.5 * c0 * x * x, c0 * x]);
    let density: crate::DensityFn = Box::new(move |x: f64| {
        let e11 = -kappa * x;
        let e22 = c0 * x;
        let tr = e11 + e22;
        mu * (e11 * e11 + e22 * e22) + 0.5 * lambda * tr * tr
    });
    let wtot = integrate_density(&density, h);

    Ok(BendingSolution {
        model: problem.model,
        h,
        kappa,
        mc,
        mm: 0.0,
        wtot,
        coeffs: vec![("c0", c0), ("d_macro", d_macro)],
        fields: vec![FieldId::V, FieldId::VPrime],
        profile,
        density,
    })
}
