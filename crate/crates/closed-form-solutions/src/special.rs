//! Overflow-safe hyperbolic helpers and Gauss-Legendre quadrature.
//!
//! Bending layers behave like `sinh(r x) / cosh(r h / 2)` with rates `r`
//! that grow without bound as the characteristic length shrinks. Evaluating
//! numerator and denominator separately overflows long before the ratio
//! does, so every ratio here is formed from exponentials of non-positive
//! arguments only.

use std::sync::OnceLock;

/// `tanh(x)` clamped to its saturated value for large arguments.
pub fn tanh_sat(x: f64) -> f64 {
    if x.abs() > 40.0 {
        x.signum()
    } else {
        x.tanh()
    }
}

/// `cosh(r x) / cosh(r b)` for `|x| <= b`, `r >= 0`, without overflow.
pub fn cosh_ratio(r: f64, x: f64, b: f64) -> f64 {
    debug_assert!(r >= 0.0 && b >= 0.0 && x.abs() <= b * (1.0 + 1e-12) + 1e-300);
    let num = (r * (x - b)).exp() + (-r * (x + b)).exp();
    let den = 1.0 + (-2.0 * r * b).exp();
    num / den
}

/// `sinh(r x) / cosh(r b)` for `|x| <= b`, `r >= 0`, without overflow.
pub fn sinh_ratio(r: f64, x: f64, b: f64) -> f64 {
    debug_assert!(r >= 0.0 && b >= 0.0 && x.abs() <= b * (1.0 + 1e-12) + 1e-300);
    let num = (r * (x - b)).exp() - (-r * (x + b)).exp();
    let den = 1.0 + (-2.0 * r * b).exp();
    num / den
}

/// `t - tanh(t)` without cancellation for small `t`.
///
/// Uses the identity `t - tanh t = (t cosh t - sinh t) / cosh t` whose
/// numerator has the all-positive series `sum_{k>=1} 2k t^(2k+1) / (2k+1)!`.
fn t_minus_tanh(t: f64) -> f64 {
    if t.abs() > 0.35 {
        return t - tanh_sat(t);
    }
    let t2 = t * t;
    let mut term = t * t2 / 3.0;
    let mut sum = term;
    let mut k = 1.0;
    while term.abs() > 1e-18 * sum.abs() {
        term *= t2 / ((2.0 * k) * (2.0 * k + 3.0));
        sum += term;
        k += 1.0;
    }
    sum / t.cosh()
}

/// Span deficit of the normalized layer: `h - 2 tanh(r h/2) / r`.
///
/// This difference drives the couple moments. For small `r h` both terms
/// approach `h` and the direct subtraction loses most of its digits, so it
/// is evaluated as `(2/r) (t - tanh t)` with `t = r h / 2`.
pub fn layer_span_deficit(r: f64, h: f64) -> f64 {
    2.0 * t_minus_tanh(0.5 * r * h) / r
}

/// First moment of a boundary layer term over the thickness.
///
/// For the profile `p(x) = s * sinh(r x) / (r cosh(r h / 2))`, normalized so
/// that `p'(h/2) = s`, this returns `int_{-h/2}^{h/2} x p(x) dx
/// = s (h / r^2 - 2 tanh(r h / 2) / r^3)`.
pub fn layer_first_moment(r: f64, h: f64, s: f64) -> f64 {
    s * layer_span_deficit(r, h) / (r * r)
}

/// Boundary value of the same normalized layer: `p(h/2) = s tanh(r h/2) / r`.
pub fn layer_boundary_value(r: f64, h: f64, s: f64) -> f64 {
    s * tanh_sat(0.5 * r * h) / r
}

/// Pointwise value of the normalized layer `p(x) = s sinh(r x) / (r cosh(r h/2))`.
pub fn layer_value(r: f64, h: f64, s: f64, x: f64) -> f64 {
    s * sinh_ratio(r, x, 0.5 * h) / r
}

/// Pointwise derivative `p'(x) = s cosh(r x) / cosh(r h/2)`.
pub fn layer_derivative(r: f64, h: f64, s: f64, x: f64) -> f64 {
    s * cosh_ratio(r, x, 0.5 * h)
}

/// Antiderivative of the normalized layer vanishing at `x = 0`:
/// `int_0^x p = s (cosh(r x) - 1) / (r^2 cosh(r h / 2))`.
pub fn layer_antiderivative(r: f64, h: f64, s: f64, x: f64) -> f64 {
    let b = 0.5 * h;
    s * (cosh_ratio(r, x, b) - cosh_ratio(r, 0.0, b)) / (r * r)
}

/// Thickness integral of the normalized layer's derivative:
/// `int_{-h/2}^{h/2} p' dx = 2 p(h/2) = 2 s tanh(r h/2) / r`.
pub fn layer_derivative_integral(r: f64, h: f64, s: f64) -> f64 {
    2.0 * s * tanh_sat(0.5 * r * h) / r
}

const GAUSS_POINTS: usize = 64;

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn gauss_legendre_nodes() -> &'static Vec<(f64, f64)> {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| {
        let n = GAUSS_POINTS;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_and_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre_and_derivative(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            out.push((x, w));
        }
        out
    })
}

/// Composite 64-point Gauss-Legendre quadrature of `f` over `[a, b]` with
/// `panels` equal subintervals.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    assert!(panels >= 1);
    let nodes = gauss_legendre_nodes();
    let width = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + width * p as f64;
        let mid = lo + 0.5 * width;
        let half = 0.5 * width;
        let mut acc = 0.0;
        for &(x, w) in nodes {
            acc += w * f(mid + half * x);
        }
        total += acc * half;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ratios_match_direct_evaluation_at_moderate_rates() {
        let (r, b) = (3.0, 0.5);
        for &x in &[-0.5, -0.2, 0.0, 0.3, 0.5] {
            assert_relative_eq!(
                cosh_ratio(r, x, b),
                (r * x).cosh() / (r * b).cosh(),
                max_relative = 1e-14
            );
            assert_relative_eq!(
                sinh_ratio(r, x, b),
                (r * x).sinh() / (r * b).cosh(),
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn ratios_stay_finite_at_extreme_rates() {
        let r = 1e9;
        let b = 0.5;
        assert_eq!(cosh_ratio(r, 0.5, b), 1.0);
        assert_eq!(sinh_ratio(r, 0.5, b), 1.0);
        assert_eq!(cosh_ratio(r, 0.0, b), 0.0);
        assert!(cosh_ratio(r, 0.49, b).is_finite());
    }

    #[test]
    fn layer_moment_matches_quadrature() {
        let (r, h, s) = (4.0, 1.0, 1.7);
        let direct = integrate(|x| x * layer_value(r, h, s, x), -0.5, 0.5, 4);
        assert_relative_eq!(layer_first_moment(r, h, s), direct, max_relative = 1e-13);
    }

    #[test]
    fn span_deficit_survives_small_rates() {
        assert_relative_eq!(
            layer_span_deficit(2.0, 1.0),
            1.0 - (1.0f64).tanh(),
            max_relative = 1e-15
        );
        for &r in &[1e-1, 1e-3, 1e-6] {
            let deficit = layer_span_deficit(r, 1.0);
            let leading = r * r / 12.0 - r.powi(4) / 120.0;
            assert_relative_eq!(deficit, leading, max_relative = 1e-5);
            assert!(deficit > 0.0);
        }
        assert_eq!(layer_span_deficit(0.7, 0.0), 0.0);
    }

    #[test]
    fn quadrature_is_exact_on_polynomials_and_sharp_on_layers() {
        let poly = integrate(|x| 3.0 * x * x * x * x, -1.0, 2.0, 1);
        assert_relative_eq!(poly, 3.0 * (2.0_f64.powi(5) + 1.0) / 5.0, max_relative = 1e-14);
        let layer = integrate(|x| cosh_ratio(60.0, x, 0.5), -0.5, 0.5, 8);
        let exact = 2.0 * tanh_sat(30.0) / 60.0;
        assert_relative_eq!(layer, exact, max_relative = 1e-12);
    }
}
