//! Quadrature oracles for tests, independent of the library's evaluation
//! paths: plain adaptive Simpson on transformed integrands.

#![allow(clippy::too_many_arguments)]

use num_complex::Complex64;

pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(a: f64, fa: f64, b: f64, fb: f64, fm: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    fn rec(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        fm: f64,
        whole: f64,
        tol: f64,
        depth: usize,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(a, fa, m, fm, flm);
        let right = simpson(m, fm, b, fb, frm);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
            return left + right + (left + right - whole) / 15.0;
        }
        rec(f, a, fa, m, fm, flm, left, tol / 2.0, depth - 1)
            + rec(f, m, fm, b, fb, frm, right, tol / 2.0, depth - 1)
    }
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = simpson(a, fa, b, fb, fm);
    rec(f, a, fa, b, fb, fm, whole, tol, 48)
}

pub fn adaptive_simpson_c(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, tol: f64) -> Complex64 {
    let re = adaptive_simpson(&|t| f(t).re, a, b, tol);
    let im = adaptive_simpson(&|t| f(t).im, a, b, tol);
    Complex64::new(re, im)
}

/// Γ(z) for real z in (0, 3) by quadrature of the Euler integral.
/// The substitution t = u^4 removes the endpoint singularity.
pub fn gamma_euler_quadrature(z: f64) -> f64 {
    let head = adaptive_simpson(
        &|u: f64| 4.0 * u.powf(4.0 * z - 1.0) * (-u.powi(4)).exp(),
        0.0,
        1.0,
        1e-13,
    );
    let tail = adaptive_simpson(&|t: f64| t.powf(z - 1.0) * (-t).exp(), 1.0, 45.0, 1e-13);
    head + tail
}

/// Γ(a, x) = ∫_x^∞ t^{a-1} e^{-t} dt by quadrature; the tail beyond x + 60
/// is below 1e-20 of the head for the x used in tests.
pub fn upper_gamma_quadrature(a: Complex64, x: f64) -> Complex64 {
    adaptive_simpson_c(
        &|t: f64| ((a - 1.0) * t.ln() - t).exp(),
        x,
        x + 60.0,
        1e-13,
    )
}

/// γ(a, x) = ∫_0^x t^{a-1} e^{-t} dt by dyadic splitting toward the origin;
/// each octave sees a bounded phase change of the oscillatory t^{i Im a}.
pub fn lower_gamma_quadrature(a: Complex64, x: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut hi = x;
    for _ in 0..300 {
        let lo = hi / 2.0;
        let piece = adaptive_simpson_c(&|t: f64| ((a - 1.0) * t.ln() - t).exp(), lo, hi, 3e-17);
        acc += piece;
        if piece.norm() < 1e-17 * acc.norm() && acc.norm() > 0.0 {
            break;
        }
        hi = lo;
    }
    acc
}

/// erfc(x) by quadrature of the Gaussian tail.
pub fn erfc_quadrature(x: f64) -> f64 {
    let sqrt_pi = std::f64::consts::PI.sqrt();
    2.0 / sqrt_pi * adaptive_simpson(&|t: f64| (-t * t).exp(), x, x + 12.0, 1e-13)
}

/// ∫_1^∞ x^{s/2-1} e^{-n²πx} dx, the n-th kernel integral. The quadrature
/// tolerance follows the e^{-n²π} scale of the integrand.
pub fn kernel_integral_quadrature(s: Complex64, n: u32) -> Complex64 {
    let rate = (n * n) as f64 * std::f64::consts::PI;
    let upper = 1.0 + 50.0 / rate.min(50.0);
    let tol = 1e-12 * (-rate).exp() + 1e-18;
    adaptive_simpson_c(&|x: f64| ((s / 2.0 - 1.0) * x.ln() - rate * x).exp(), 1.0, upper, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_integrates_polynomial_exactly() {
        let got = adaptive_simpson(&|x| x * x * x, 0.0, 2.0, 1e-12);
        assert!((got - 4.0).abs() < 1e-10);
    }

    #[test]
    fn gamma_one_from_quadrature() {
        assert!((gamma_euler_quadrature(1.0) - 1.0).abs() < 1e-10);
    }
}
