//! Second gradient bending: the micro-distortion is locked to the
//! displacement gradient, so the curvature energy acts on second derivatives
//! of the displacement and only the deflection profile remains unknown.
//!
//! Writing `w = v''`, the field equation is `c1 w'' = (lam + 2 mu) w -
//! lam kappa` with the double-traction face condition `w(+-h/2) =
//! -c2 kappa / c1`, where `c1 = (2/9) mu0 lc^2 (3 a1 + a3)` and
//! `c2 = (mu0 lc^2 / 9) (3 a1 - 2 a3)` weight the through-thickness slice of
//! the curvature energy. `mu` and `lam` are the homogenized macro moduli.
//! The remaining face condition holds identically through a first integral,
//! which also pins the constant of `v'` to zero.

use materials::homogenize;

use crate::special::{
    layer_antiderivative, layer_derivative, layer_derivative_integral, layer_first_moment,
    layer_value,
};
use crate::{
    integrate_density, BendingProblem, BendingSolution, FieldId, SecondGradientVariant,
    SolveError, LC_LIMIT_RATIO,
};

fn effective_weights(
    variant: SecondGradientVariant,
    scales: &materials::MaterialScales,
) -> (f64, f64, f64) {
    match variant {
        SecondGradientVariant::OneCurvatureZeroPoisson | SecondGradientVariant::OneCurvature => {
            (1.0, 1.0, 1.5)
        }
        SecondGradientVariant::Full => (scales.a1, scales.a2, scales.a3),
    }
}

pub fn solve(
    problem: &BendingProblem,
    variant: SecondGradientVariant,
) -> Result<BendingSolution, SolveError> {
    let s = &problem.scales;
    let mut moduli = homogenize(s).map_err(|e| SolveError::DegenerateMaterial(e.to_string()))?;
    if variant == SecondGradientVariant::OneCurvatureZeroPoisson {
        crate::relaxed::require_zero_poisson(s)?;
        // Harmonic averaging of exactly Poisson-free scales can leave
        // roundoff in the composite; pin the limit it represents.
        moduli.lambda = 0.0;
    }
    let (a1, a2, a3) = effective_weights(variant, s);
    if 3.0 * a1 + a3 <= 0.0 {
        return Err(SolveError::IllPosedCurvature(format!(
            "the deflection layer carries weight 3 a1 + a3 = {}, leaving it undetermined",
            3.0 * a1 + a3
        )));
    }

    let (h, kappa) = (problem.h, problem.kappa);
    let (mu, lam) = (moduli.mu, moduli.lambda);
    let stiff = lam + 2.0 * mu;

    let scale = s.curvature_scale();
    let c1 = 2.0 / 9.0 * scale * (3.0 * a1 + a3);
    let c2 = scale / 9.0 * (3.0 * a1 - 2.0 * a3);
    let beta = lam / stiff;

    let limit = s.lc < LC_LIMIT_RATIO * h;
    // w(x) = beta kappa + amp cosh(rho x) / cosh(rho h / 2)
    let (rho, amp) = if limit {
        (0.0, 0.0)
    } else {
        let rho = (stiff / c1).sqrt();
        let w_face = -c2 * kappa / c1;
        (rho, w_face - beta * kappa)
    };

    let i2 = h * h * h / 12.0;
    let vprime_moment = if limit {
        beta * kappa * i2
    } else {
        beta * kappa * i2 + layer_first_moment(rho, h, amp)
    };
    let mc = stiff * kappa * i2 - lam * vprime_moment;

    let int_w = if limit {
        beta * kappa * h
    } else {
        beta * kappa * h + layer_derivative_integral(rho, h, amp)
    };
    let mm = 2.0 * scale * a2 * kappa * h + scale * a1 / 3.0 * (2.0 * kappa * h + int_w)
        - 2.0 / 9.0 * scale * a3 * (int_w - kappa * h);

    let coeffs = vec![
        ("f1", (stiff / (2.0 / 9.0 * s.mu * (3.0 * a1 + a3))).sqrt()),
        ("c0", beta),
        ("c1", c1),
        ("c2", c2),
        ("c3", -c2 * kappa / c1),
        ("c4", amp),
    ];

    // v'' = w; the first integral forces v'(0) = 0, and v(0) = 0 by
    // convention.
    let profile: crate::ProfileFn = Box::new(move |x: f64| {
        if limit {
            vec![0.5 * beta * kappa * x * x, beta * kappa * x]
        } else {
            let vp = beta * kappa * x + layer_value(rho, h, amp, x);
            let v = 0.5 * beta * kappa * x * x + layer_antiderivative(rho, h, amp, x);
            vec![v, vp]
        }
    });
    let density: crate::DensityFn = Box::new(move |x: f64| {
        let (w, vp) = if limit {
            (beta * kappa, beta * kappa * x)
        } else {
            (
                beta * kappa + layer_derivative(rho, h, amp, x),
                beta * kappa * x + layer_value(rho, h, amp, x),
            )
        };
        let e11 = -kappa * x;
        let e22 = vp;
        let tr = e11 + e22;
        let w_el = mu * (e11 * e11 + e22 * e22) + 0.5 * lam * tr * tr;
        // The x1 slice of the displacement second gradient is the constant
        // skew rotation block; the x2 slice is diag(-kappa, w, 0).
        let t = w - kappa;
        let d1 = -kappa - t / 3.0;
        let d2 = w - t / 3.0;
        let d3 = -t / 3.0;
        let devsym2 = d1 * d1 + d2 * d2 + d3 * d3;
        let w_curv = 0.5
            * scale
            * (2.0 * a2 * kappa * kappa + a1 * devsym2 + 2.0 / 9.0 * a3 * t * t);
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
        coeffs,
        fields: vec![FieldId::V, FieldId::VPrime],
        profile,
        density,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{solve as solve_any, Model};
    use approx::assert_relative_eq;
    use materials::MaterialScales;

    fn zero_poisson_scales(lc: f64) -> MaterialScales {
        MaterialScales {
            mu_e: 2.0,
            lambda_e: 0.0,
            mu_micro: 2.0,
            lambda_micro: 0.0,
            mu_c: 0.0,
            mu: 1.0,
            lc,
            a1: 1.0,
            a2: 1.0,
            a3: 1.5,
        }
    }

    fn unit_macro_scales(lc: f64, a1: f64, a2: f64, a3: f64) -> MaterialScales {
        MaterialScales {
            mu_e: 2.0,
            lambda_e: 2.0,
            mu_micro: 2.0,
            lambda_micro: 2.0,
            mu_c: 0.0,
            mu: 1.0,
            lc,
            a1,
            a2,
            a3,
        }
    }

    #[test]
    fn zero_poisson_reference_point() {
        let problem = BendingProblem::new(
            Model::SecondGradient(SecondGradientVariant::OneCurvatureZeroPoisson),
            zero_poisson_scales(0.5),
            1.0,
            1.0,
        );
        let sol = solve_any(&problem).unwrap();
        assert_relative_eq!(12.0 * sol.mc, 2.0, max_relative = 1e-14);
        assert_relative_eq!(12.0 * sol.mm, 9.0, max_relative = 1e-14);
        assert_relative_eq!(24.0 * sol.wtot, 11.0, max_relative = 1e-13);
    }

    #[test]
    fn one_curvature_reference_point() {
        let problem = BendingProblem::new(
            Model::SecondGradient(SecondGradientVariant::OneCurvature),
            unit_macro_scales(1.0, 1.0, 1.0, 1.5),
            1.0,
            1.0,
        );
        let sol = solve_any(&problem).unwrap();
        assert_relative_eq!(12.0 * sol.mc, 2.9232816141057046, max_relative = 1e-13);
        assert_relative_eq!(12.0 * sol.mm, 36.0, max_relative = 1e-13);
    }

    #[test]
    fn full_variant_reference_points() {
        let problem = BendingProblem::new(
            Model::SecondGradient(SecondGradientVariant::Full),
            unit_macro_scales(1.0, 2.0, 1.0, 0.5),
            1.0,
            1.0,
        );
        let sol = solve_any(&problem).unwrap();
        assert_relative_eq!(12.0 * sol.mc, 3.2613936879028923, max_relative = 1e-13);
        assert_relative_eq!(12.0 * sol.mm, 39.455454255272568, max_relative = 1e-13);

        let problem = BendingProblem::new(
            Model::SecondGradient(SecondGradientVariant::Full),
            unit_macro_scales(0.01, 2.0, 1.0, 0.5),
            1.0,
            1.0,
        );
        let sol = solve_any(&problem).unwrap();
        assert_relative_eq!(12.0 * sol.mc, 2.6670757247755076, max_relative = 1e-12);
        assert_relative_eq!(12.0 * sol.mm, 0.004348913202508826, max_relative = 1e-12);
    }

    #[test]
    fn energy_duality() {
        for lc in [0.05, 0.5, 2.0] {
            let problem = BendingProblem::new(
                Model::SecondGradient(SecondGradientVariant::Full),
                unit_macro_scales(lc, 2.0, 1.0, 0.5),
                1.0,
                0.9,
            );
            let sol = solve_any(&problem).unwrap();
            assert_relative_eq!(
                2.0 * sol.wtot / (sol.kappa * sol.kappa),
                sol.deff(),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn face_conditions_hold() {
        let problem = BendingProblem::new(
            Model::SecondGradient(SecondGradientVariant::Full),
            unit_macro_scales(0.8, 2.0, 1.0, 0.5),
            1.0,
            1.0,
        );
        let sol = solve_any(&problem).unwrap();
        let c1 = sol.coeff("c1").unwrap();
        let c2 = sol.coeff("c2").unwrap();
        let beta = sol.coeff("c0").unwrap();
        let amp = sol.coeff("c4").unwrap();
        // Double traction: c1 w(h/2) + c2 kappa = 0.
        let w_face = beta + amp;
        assert_relative_eq!(c1 * w_face + c2, 0.0, epsilon = 1e-14);
        // First integral at the face: (lam + 2 mu) v'(h/2) = lam kappa h/2 +
        // c1 w'(h/2), with homogenized moduli (1, 1).
        let rho = (3.0_f64 / c1).sqrt();
        let vp_face = sol.eval(0.5)[1];
        let wp_face = amp * rho * (rho * 0.5).tanh();
        assert_relative_eq!(3.0 * vp_face, 0.5 + c1 * wp_face, max_relative = 1e-12);
    }

    #[test]
    fn degenerate_layer_weights_are_rejected() {
        let problem = BendingProblem::new(
            Model::SecondGradient(SecondGradientVariant::Full),
            unit_macro_scales(1.0, 0.0, 1.0, 0.0),
            1.0,
            1.0,
        );
        assert!(matches!(
            solve_any(&problem),
            Err(SolveError::IllPosedCurvature(_))
        ));
    }

    #[test]
    fn zero_poisson_variant_rejects_poisson_coupling() {
        let problem = BendingProblem::new(
            Model::SecondGradient(SecondGradientVariant::OneCurvatureZeroPoisson),
            unit_macro_scales(1.0, 1.0, 1.0, 1.5),
            1.0,
            1.0,
        );
        assert!(matches!(
            solve_any(&problem),
            Err(SolveError::InvalidArgument(_))
        ));
    }
}
