//! Real complementary error function.

use num_complex::Complex64;

use crate::special::incgamma::upper_incomplete_gamma;

const SQRT_PI: f64 = 1.772453850905516;

/// erfc(x) = (2/√π) ∫_x^∞ e^{-t²} dt.
///
/// Maclaurin series of erf for |x| < 1, the Γ(1/2, x²) continued fraction
/// for x >= 1, and the reflection erfc(-x) = 2 - erfc(x) below.
pub fn erfc_real(x: f64) -> f64 {
    if x < 0.0 {
        return 2.0 - erfc_real(-x);
    }
    if x < 1.0 {
        return 1.0 - erf_series(x);
    }
    // erfc(x) = Γ(1/2, x²) / √π for x >= 0; the fraction converges fast here
    let g = upper_incomplete_gamma(Complex64::new(0.5, 0.0), x * x)
        .expect("continued fraction converges for x >= 1");
    g.re / SQRT_PI
}

fn erf_series(x: f64) -> f64 {
    // 2/√π Σ (-1)^n x^{2n+1} / (n! (2n+1))
    let x2 = x * x;
    let mut term = x;
    let mut sum = x / 1.0;
    for n in 1..160 {
        term *= -x2 / n as f64;
        let contrib = term / (2 * n + 1) as f64;
        sum += contrib;
        if contrib.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    2.0 / SQRT_PI * sum
}
