//! Bending solver for the classical micromorphic and micro-strain models.
//!
//! Unlike the models with closed-form profiles, these two couple all three
//! diagonal micro-distortion components through both the elastic energy and
//! the full curvature energy. Eliminating the in-plane strain through the
//! traction-free faces leaves the linear system `C S'' = E S + g kappa x`
//! over `S = (P11, P22, P33)` with flux-free faces `S'(+-h/2) = 0`. The
//! solver diagonalizes the symmetric pencil `(E, C)` numerically and builds
//! the solution from three hyperbolic boundary layers, so the result is
//! exact up to linear-algebra roundoff rather than up to a grid resolution.
//!
//! The two models share the system; they differ only in the constant
//! curvature carried by the in-plane micro-distortion components, which adds
//! a moment `2 h mu lc^2 a2 kappa` for the micromorphic model and nothing
//! for the micro-strain model, whose micro field is symmetric.

mod modal;

use closed_form_solutions::special::integrate;
use closed_form_solutions::{BendingProblem, BendingSolution, FieldId, Model, SolveError};
use materials::MaterialScales;

/// The reduced through-thickness system `C S'' = E S + g kappa x`.
#[derive(Debug, Clone, Copy)]
pub struct OdeSystem {
    /// Curvature stiffness acting on `S''`.
    pub c: [[f64; 3]; 3],
    /// Elastic coupling acting on `S`.
    pub e: [[f64; 3]; 3],
    /// Drive vector multiplying the imposed strain slope `kappa x`.
    pub g: [f64; 3],
}

/// Assembles the diagonal-sector system for a parameter set.
///
/// `C` collects the gradient curvature weights, `(mu lc^2 / 9)
/// (9 a1 I + (2 a3 - 3 a1) J)` with `J` the all-ones matrix. `E` couples the
/// plane-stress-reduced elastic scale to the micro scale, and `g` drives the
/// system with the bending strain.
pub fn diagonal_system(scales: &MaterialScales) -> OdeSystem {
    let cl = scales.curvature_scale();
    let (mu_e, lam_e) = (scales.mu_e, scales.lambda_e);
    let (mu_m, lam_m) = (scales.mu_micro, scales.lambda_micro);
    let lam_hat_e = 2.0 * lam_e * mu_e / (lam_e + 2.0 * mu_e);

    let diag = cl / 9.0 * (9.0 * scales.a1 + (2.0 * scales.a3 - 3.0 * scales.a1));
    let off = cl / 9.0 * (2.0 * scales.a3 - 3.0 * scales.a1);
    let c = [
        [diag, off, off],
        [off, diag, off],
        [off, off, diag],
    ];

    let outer = 2.0 * mu_e + lam_hat_e + 2.0 * mu_m + lam_m;
    let cross = lam_hat_e + lam_m;
    let e = [
        [outer, lam_m, cross],
        [lam_m, 2.0 * mu_m + lam_m, lam_m],
        [cross, lam_m, outer],
    ];

    let g = [2.0 * mu_e + lam_hat_e, 0.0, lam_hat_e];
    OdeSystem { c, e, g }
}

fn validate_model(model: Model) -> Result<(), SolveError> {
    match model {
        Model::Micromorphic | Model::MicroStrain => Ok(()),
        other => Err(SolveError::UnsupportedVariant(format!(
            "{} has a closed-form profile; the eigenbasis solver only serves \
             the micromorphic and micro-strain models",
            other.name()
        ))),
    }
}

/// Solves a micromorphic or micro-strain bending problem.
pub fn solve_semi_analytic(problem: &BendingProblem) -> Result<BendingSolution, SolveError> {
    problem.validate()?;
    validate_model(problem.model)?;

    let s = problem.scales.clone();
    let (h, kappa) = (problem.h, problem.kappa);
    let modal = modal::solve_modal(problem)?;

    let lam_hat_e = 2.0 * s.lambda_e * s.mu_e / (s.lambda_e + 2.0 * s.mu_e);
    let moment = modal.s_first_moment();
    let mc = (2.0 * s.mu_e + lam_hat_e) * (kappa * h * h * h / 12.0 + moment[0])
        + lam_hat_e * moment[2];
    let mm = match problem.model {
        Model::Micromorphic => 2.0 * h * s.curvature_scale() * s.a2 * kappa,
        _ => 0.0,
    };

    let mut coeffs = Vec::with_capacity(9);
    for (k, name) in ["r1", "r2", "r3"].into_iter().enumerate() {
        coeffs.push((name, modal.rates[k]));
    }
    for (k, name) in ["sp1", "sp2", "sp3"].into_iter().enumerate() {
        coeffs.push((name, modal.slope[k]));
    }
    for (k, name) in ["c1", "c2", "c3"].into_iter().enumerate() {
        coeffs.push((name, modal.amps[k]));
    }

    let fields = vec![
        FieldId::V,
        FieldId::VPrime,
        FieldId::P11,
        FieldId::P22,
        FieldId::P33,
    ];

    let vp_ratio = s.lambda_e / (s.lambda_e + 2.0 * s.mu_e);
    let profile = move |x: f64| {
        let sv = modal.s(x);
        let si = modal.s_integral(x);
        let vp = vp_ratio * (kappa * x + sv[0] + sv[2]) + sv[1];
        let v = vp_ratio * (0.5 * kappa * x * x + si[0] + si[2]) + si[1];
        vec![v, vp, sv[0], sv[1], sv[2]]
    };

    let dens_scales = s.clone();
    let model = problem.model;
    let density = move |x: f64| {
        let s = &dens_scales;
        let sv = modal.s(x);
        let sp = modal.s_prime(x);
        let e1 = -kappa * x - sv[0];
        let e3 = -sv[2];
        let e2 = -s.lambda_e * (e1 + e3) / (s.lambda_e + 2.0 * s.mu_e);
        let we = s.mu_e * (e1 * e1 + e2 * e2 + e3 * e3)
            + 0.5 * s.lambda_e * (e1 + e2 + e3) * (e1 + e2 + e3);
        let tr_s = sv[0] + sv[1] + sv[2];
        let wm = s.mu_micro * (sv[0] * sv[0] + sv[1] * sv[1] + sv[2] * sv[2])
            + 0.5 * s.lambda_micro * tr_s * tr_s;
        let tr_p = sp[0] + sp[1] + sp[2];
        let sq = sp[0] * sp[0] + sp[1] * sp[1] + sp[2] * sp[2];
        let mut wc =
            0.5 * s.curvature_scale() * (s.a1 * (sq - tr_p * tr_p / 3.0) + 2.0 / 9.0 * s.a3 * tr_p * tr_p);
        if matches!(model, Model::Micromorphic) {
            wc += s.curvature_scale() * s.a2 * kappa * kappa;
        }
        we + wm + wc
    };

    Ok(BendingSolution::from_parts(
        problem.model,
        h,
        kappa,
        mc,
        mm,
        coeffs,
        fields,
        profile,
        density,
    ))
}

/// Residual diagnostics for a solved problem, all relative sup norms.
#[derive(Debug, Clone, Copy)]
pub struct ResidualReport {
    /// Field equation `C S'' - E S - g kappa x` over the sample grid.
    pub field_equation: f64,
    /// Face flux `S'(+-h/2)`.
    pub boundary: f64,
    /// Odd-symmetry defect `S(x) + S(-x)`.
    pub parity: f64,
    /// Energy-moment duality gap `|2 W / kappa^2 - D_eff| / D_eff`.
    pub duality: f64,
}

/// Measures how well a solution satisfies the equations it came from.
///
/// The basis satisfies the field equation analytically, so every entry is a
/// direct gauge of the linear-algebra roundoff in the eigensplit, not of a
/// discretization error.
pub fn residual_report(problem: &BendingProblem, n: usize) -> Result<ResidualReport, SolveError> {
    problem.validate()?;
    validate_model(problem.model)?;
    assert!(n >= 3, "residual sampling needs at least three points");

    let system = diagonal_system(&problem.scales);
    let modal = modal::solve_modal(problem)?;
    let (h, kappa) = (problem.h, problem.kappa);

    let apply = |m: &[[f64; 3]; 3], v: nalgebra::Vector3<f64>| {
        nalgebra::Vector3::new(
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        )
    };

    let mut field = 0.0f64;
    let mut field_scale = 0.0f64;
    let mut parity = 0.0f64;
    let mut s_scale = 0.0f64;
    for i in 0..n {
        let x = -0.5 * h + h * i as f64 / (n - 1) as f64;
        let sv = modal.s(x);
        let load = apply(&system.e, sv)
            + nalgebra::Vector3::new(system.g[0], system.g[1], system.g[2]) * (kappa * x);
        let res = apply(&system.c, modal.s_second(x)) - load;
        field = field.max(res.amax());
        field_scale = field_scale.max(load.amax());
        parity = parity.max((sv + modal.s(-x)).amax());
        s_scale = s_scale.max(sv.amax());
    }

    let boundary = modal
        .s_prime(0.5 * h)
        .amax()
        .max(modal.s_prime(-0.5 * h).amax());
    let flux_scale = modal.slope.amax();

    let sol = solve_semi_analytic(problem)?;
    let duality = ((2.0 * sol.wtot / (kappa * kappa) - sol.deff()) / sol.deff()).abs();

    Ok(ResidualReport {
        field_equation: field / field_scale.max(f64::MIN_POSITIVE),
        boundary: boundary / flux_scale.max(f64::MIN_POSITIVE),
        parity: parity / s_scale.max(f64::MIN_POSITIVE),
        duality,
    })
}

/// Effective stiffness under elastic-scale penalization.
///
/// Multiplying `(mu_e, lambda_e)` by a growing factor drives the micro
/// distortion toward the displacement strain, so the stiffness climbs
/// monotonically toward the corresponding second-gradient model. Returns one
/// effective stiffness per factor.
pub fn penalized_second_gradient_limit(
    problem: &BendingProblem,
    factors: &[f64],
) -> Result<Vec<f64>, SolveError> {
    validate_model(problem.model)?;
    let mut out = Vec::with_capacity(factors.len());
    for &t in factors {
        if !(t > 0.0 && t.is_finite()) {
            return Err(SolveError::InvalidArgument(format!(
                "penalization factors must be positive and finite, got {t}"
            )));
        }
        let mut scales = problem.scales.clone();
        scales.mu_e *= t;
        scales.lambda_e *= t;
        let scaled = BendingProblem::new(problem.model, scales, problem.h, problem.kappa);
        out.push(solve_semi_analytic(&scaled)?.deff());
    }
    Ok(out)
}

/// Total energy per unit length recomputed by quadrature; exposed so tests
/// can compare an integration with a different panel count.
pub fn energy_by_quadrature(sol: &BendingSolution, panels: usize) -> f64 {
    let h = sol.h;
    integrate(|x| sol.energy_density(x), -0.5 * h, 0.5 * h, panels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn profile_scales(lc: f64) -> MaterialScales {
        MaterialScales {
            mu_e: 1.0 / 3.0,
            lambda_e: 1.0 / 8.0,
            mu_micro: 2.0,
            lambda_micro: 1.0,
            mu_c: 0.0,
            mu: 1.0,
            lc,
            a1: 0.5,
            a2: 0.5,
            a3: 1.5,
        }
    }

    #[test]
    fn curvature_matrix_has_the_closed_eigenvalues() {
        let scales = profile_scales(0.7);
        let system = diagonal_system(&scales);
        let c = nalgebra::Matrix3::from(system.c);
        let mut eig: Vec<f64> = nalgebra::SymmetricEigen::new(c)
            .eigenvalues
            .iter()
            .copied()
            .collect();
        eig.sort_by(f64::total_cmp);
        let cl = scales.curvature_scale();
        let mut expect = [cl * scales.a1, cl * scales.a1, 2.0 / 3.0 * cl * scales.a3];
        expect.sort_by(f64::total_cmp);
        for (got, want) in eig.iter().zip(expect) {
            assert_relative_eq!(*got, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn elastic_coupling_is_symmetric() {
        let system = diagonal_system(&profile_scales(1.0));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(system.e[i][j], system.e[j][i]);
                assert_eq!(system.c[i][j], system.c[j][i]);
            }
        }
    }

    #[test]
    fn closed_form_models_are_redirected() {
        let problem = BendingProblem::new(Model::Cauchy, profile_scales(1.0), 1.0, 1.0);
        assert!(matches!(
            solve_semi_analytic(&problem),
            Err(SolveError::UnsupportedVariant(_))
        ));
    }

    #[test]
    fn vanishing_curvature_weights_are_reported() {
        let mut scales = profile_scales(1.0);
        scales.a1 = 0.0;
        let problem = BendingProblem::new(Model::Micromorphic, scales, 1.0, 1.0);
        assert!(matches!(
            solve_semi_analytic(&problem),
            Err(SolveError::IllPosedCurvature(_))
        ));
    }

    #[test]
    fn micro_strain_drops_the_constant_moment() {
        let mm_problem = BendingProblem::new(Model::Micromorphic, profile_scales(1.0), 1.0, 1.0);
        let ms_problem = BendingProblem::new(Model::MicroStrain, profile_scales(1.0), 1.0, 1.0);
        let mm = solve_semi_analytic(&mm_problem).unwrap();
        let ms = solve_semi_analytic(&ms_problem).unwrap();
        assert_eq!(ms.mm, 0.0);
        assert_eq!(mm.mc.to_bits(), ms.mc.to_bits());
        assert_relative_eq!(
            mm.mm,
            2.0 * profile_scales(1.0).curvature_scale() * 0.5,
            max_relative = 1e-15
        );
    }

    #[test]
    fn decoupled_zero_poisson_point_matches_the_scalar_layer() {
        // At lambda_e = lambda_micro = 0 and 2 a3 = 3 a1 the system is
        // diagonal: S2 = S3 = 0 and S1 = alpha (x - phi(x)) with
        // r^2 = 2 (mu_e + mu_micro) / (mu lc^2 a1).
        let scales = MaterialScales {
            mu_e: 0.8,
            lambda_e: 0.0,
            mu_micro: 1.7,
            lambda_micro: 0.0,
            mu_c: 0.3,
            mu: 1.1,
            lc: 0.6,
            a1: 1.2,
            a2: 0.9,
            a3: 1.8,
        };
        let kappa = 1.3;
        let problem = BendingProblem::new(Model::Micromorphic, scales.clone(), 1.0, kappa);
        let sol = solve_semi_analytic(&problem).unwrap();

        let alpha = -2.0 * scales.mu_e * kappa / (2.0 * (scales.mu_e + scales.mu_micro));
        let r = (2.0 * (scales.mu_e + scales.mu_micro) / (scales.curvature_scale() * scales.a1))
            .sqrt();
        for &x in &[-0.5, -0.31, 0.0, 0.17, 0.5] {
            let row = sol.eval(x);
            let phi = closed_form_solutions::special::layer_value(r, 1.0, 1.0, x);
            assert_relative_eq!(row[2], alpha * (x - phi), max_relative = 1e-12, epsilon = 1e-13);
            assert!(row[3].abs() < 1e-13 && row[4].abs() < 1e-13);
            assert!(row[0].abs() < 1e-13 && row[1].abs() < 1e-13);
        }
    }
}
