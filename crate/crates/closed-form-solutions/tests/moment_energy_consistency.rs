//! Cross-checks tying the moment formulas to the energy quadrature.
//!
//! Every closed-form solution carries its own energy density, integrated
//! numerically and independently of the moment expressions. For the exact
//! solution the total energy per unit length obeys `2 W = (M_c + M_m) kappa`,
//! so the quadrature is a genuine consistency gate on both sides.

use approx::assert_relative_eq;
use closed_form_solutions::{
    solve, BendingProblem, CoupleStressVariant, Model, RelaxedVariant, SecondGradientVariant,
};
use materials::MaterialScales;

/// Small deterministic generator so all draws are reproducible.
struct SplitMix(u64);

impl SplitMix {
    fn next_f64(&mut self) -> f64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z = z ^ (z >> 31);
        (z >> 11) as f64 / (1u64 << 53) as f64
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

fn random_scales(rng: &mut SplitMix, h: f64) -> MaterialScales {
    MaterialScales {
        mu_e: rng.uniform(0.2, 4.0),
        lambda_e: rng.uniform(0.0, 4.0),
        mu_micro: rng.uniform(0.2, 4.0),
        lambda_micro: rng.uniform(0.0, 4.0),
        mu_c: rng.uniform(0.0, 2.0),
        mu: rng.uniform(0.2, 4.0),
        lc: rng.uniform(0.05, 5.0) * h,
        a1: rng.uniform(0.1, 3.0),
        a2: rng.uniform(0.1, 3.0),
        a3: rng.uniform(0.1, 3.0),
    }
}

fn zero_poisson(mut scales: MaterialScales) -> MaterialScales {
    scales.lambda_e = 0.0;
    scales.lambda_micro = 0.0;
    scales
}

fn closed_form_models() -> Vec<Model> {
    vec![
        Model::Cauchy,
        Model::Relaxed(RelaxedVariant::ZeroPoissonOneCurvature),
        Model::Relaxed(RelaxedVariant::AnyPoissonOneCurvature),
        Model::Relaxed(RelaxedVariant::ZeroPoissonFullCurvature),
        Model::Relaxed(RelaxedVariant::General),
        Model::MicroStretch,
        Model::MicroVoid,
        Model::Cosserat,
        Model::CoupleStress(CoupleStressVariant::Indeterminate),
        Model::CoupleStress(CoupleStressVariant::Modified),
        Model::CoupleStress(CoupleStressVariant::PseudoConsistent),
        Model::SecondGradient(SecondGradientVariant::OneCurvatureZeroPoisson),
        Model::SecondGradient(SecondGradientVariant::OneCurvature),
        Model::SecondGradient(SecondGradientVariant::Full),
    ]
}

fn needs_zero_poisson(model: Model) -> bool {
    matches!(
        model,
        Model::Relaxed(RelaxedVariant::ZeroPoissonOneCurvature)
            | Model::Relaxed(RelaxedVariant::ZeroPoissonFullCurvature)
            | Model::SecondGradient(SecondGradientVariant::OneCurvatureZeroPoisson)
    )
}

#[test]
fn energy_matches_moments_for_random_materials() {
    let mut rng = SplitMix(0x5eed);
    for _ in 0..50 {
        let h = rng.uniform(0.5, 2.0);
        let kappa = rng.uniform(0.3, 2.0);
        let scales = random_scales(&mut rng, h);
        for model in closed_form_models() {
            let scales = if needs_zero_poisson(model) {
                zero_poisson(scales.clone())
            } else {
                scales.clone()
            };
            let problem = BendingProblem::new(model, scales, h, kappa);
            let sol = solve(&problem).unwrap();
            assert_relative_eq!(
                2.0 * sol.wtot / (kappa * kappa),
                sol.deff(),
                max_relative = 1e-12
            );
        }
    }
}

#[test]
fn stiffness_grows_with_the_characteristic_length() {
    let mut rng = SplitMix(0xfeed);
    let h = 1.0;
    for _ in 0..10 {
        let base = random_scales(&mut rng, h);
        for model in closed_form_models() {
            let base = if needs_zero_poisson(model) {
                zero_poisson(base.clone())
            } else {
                base.clone()
            };
            let mut last = f64::NEG_INFINITY;
            for k in 0..13 {
                let mut scales = base.clone();
                scales.lc = 10f64.powf(-2.0 + k as f64 / 3.0);
                let problem = BendingProblem::new(model, scales, h, 1.0);
                let deff = solve(&problem).unwrap().deff();
                assert!(
                    deff >= last * (1.0 - 1e-13),
                    "{} stiffness dropped at lc step {k}: {deff} < {last}",
                    model.name()
                );
                last = deff;
            }
        }
    }
}

#[test]
fn saturation_separates_bounded_from_unbounded_models() {
    let mut rng = SplitMix(0xcafe);
    let h = 1.0;
    let scales = random_scales(&mut rng, h);

    let deff_at = |model: Model, lc: f64| {
        let mut scales = if needs_zero_poisson(model) {
            zero_poisson(scales.clone())
        } else {
            scales.clone()
        };
        scales.lc = lc;
        solve(&BendingProblem::new(model, scales, h, 1.0))
            .unwrap()
            .deff()
    };

    let bounded = [
        Model::Relaxed(RelaxedVariant::ZeroPoissonOneCurvature),
        Model::Relaxed(RelaxedVariant::AnyPoissonOneCurvature),
        Model::Relaxed(RelaxedVariant::ZeroPoissonFullCurvature),
        Model::Relaxed(RelaxedVariant::General),
        Model::MicroVoid,
    ];
    for model in bounded {
        let ratio = deff_at(model, 1e4) / deff_at(model, 1e3);
        assert!(
            ratio < 1.001,
            "{} should plateau, got ratio {ratio}",
            model.name()
        );
    }

    let unbounded = [
        Model::MicroStretch,
        Model::Cosserat,
        Model::CoupleStress(CoupleStressVariant::Modified),
        Model::SecondGradient(SecondGradientVariant::Full),
    ];
    for model in unbounded {
        let slope = (deff_at(model, 1e4) / deff_at(model, 1e3)).log10();
        assert!(
            (slope - 2.0).abs() < 0.05,
            "{} should grow quadratically, got slope {slope}",
            model.name()
        );
    }
}
