//! The conversion tables reproduce the curvature energies exactly.
//!
//! Each conversion is checked on 200 random constant microdistortion
//! gradients: the quadratic form evaluated with the converted coefficients
//! must match the direct curvature energy to 1e-12 relative.

use materials::{
    curvature_energy_curl, curvature_energy_gradient, quadratic_form_eleven, quadratic_form_five,
    to_mindlin_reduced, to_mindlin_relaxed, to_mindlin_second_gradient, Chi, MaterialScales,
};

/// Small deterministic generator so all 200 draws are reproducible.
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

    /// Uniform draw in `[lo, hi)`.
    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

fn random_scales(rng: &mut SplitMix) -> MaterialScales {
    MaterialScales {
        mu_e: rng.uniform(0.2, 4.0),
        lambda_e: rng.uniform(0.0, 4.0),
        mu_micro: rng.uniform(0.2, 4.0),
        lambda_micro: rng.uniform(0.0, 4.0),
        mu_c: rng.uniform(0.0, 2.0),
        mu: rng.uniform(0.2, 4.0),
        lc: rng.uniform(0.05, 5.0),
        a1: rng.uniform(0.0, 3.0),
        a2: rng.uniform(0.0, 3.0),
        a3: rng.uniform(0.0, 3.0),
    }
}

fn random_chi(rng: &mut SplitMix) -> Chi {
    let mut chi = [[[0.0; 3]; 3]; 3];
    for plane in chi.iter_mut() {
        for row in plane.iter_mut() {
            for v in row.iter_mut() {
                *v = rng.uniform(-2.0, 2.0);
            }
        }
    }
    chi
}

/// A second displacement gradient is symmetric in its first two indices.
fn symmetrize_first_pair(chi: &mut Chi) {
    for i in 0..3 {
        for j in 0..i {
            for k in 0..3 {
                let s = 0.5 * (chi[i][j][k] + chi[j][i][k]);
                chi[i][j][k] = s;
                chi[j][i][k] = s;
            }
        }
    }
}

fn assert_close(label: &str, draw: usize, form: f64, direct: f64) {
    let scale = direct.abs().max(form.abs()).max(1e-30);
    let rel = (form - direct).abs() / scale;
    assert!(
        rel <= 1e-12,
        "{label} draw {draw}: quadratic form {form:.17e} vs direct energy {direct:.17e} (rel {rel:.3e})"
    );
}

#[test]
fn full_gradient_energy_matches_eleven_form() {
    let mut rng = SplitMix(0x51a7_0001);
    for draw in 0..200 {
        let scales = random_scales(&mut rng);
        let chi = random_chi(&mut rng);
        let coeffs = to_mindlin_reduced(&scales);
        let form = quadratic_form_eleven(&chi, &coeffs);
        let direct = curvature_energy_gradient(&chi, &scales);
        assert_close("full gradient", draw, form, direct);
    }
}

#[test]
fn curl_energy_matches_eleven_form() {
    let mut rng = SplitMix(0x51a7_0002);
    for draw in 0..200 {
        let scales = random_scales(&mut rng);
        let chi = random_chi(&mut rng);
        let coeffs = to_mindlin_relaxed(&scales);
        let form = quadratic_form_eleven(&chi, &coeffs);
        let direct = curvature_energy_curl(&chi, &scales);
        assert_close("curl", draw, form, direct);
    }
}

#[test]
fn second_gradient_energy_matches_five_form() {
    let mut rng = SplitMix(0x51a7_0003);
    for draw in 0..200 {
        let scales = random_scales(&mut rng);
        let mut chi = random_chi(&mut rng);
        symmetrize_first_pair(&mut chi);
        let coeffs = to_mindlin_second_gradient(&scales);
        let form = quadratic_form_five(&chi, &coeffs);
        let direct = curvature_energy_gradient(&chi, &scales);
        assert_close("second gradient", draw, form, direct);
    }
}
