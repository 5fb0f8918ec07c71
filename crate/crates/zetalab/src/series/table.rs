//! Coefficient table for the series numerators
//! c[m] = Σ_{n>=1} e^{-n²π} (n²π)^{m-1}.
//!
//! c[m] grows like Γ(m-1/2)/(2√π) and overflows f64 near m = 171; past that
//! horizon only the log values are populated and consumers must work through
//! the ratio recurrence or in the log domain.

use num_complex::Complex64;

use crate::special::gamma_complex;

const N_CAP: usize = 64;
const PI: f64 = std::f64::consts::PI;

/// Precomputed c[m], consecutive ratios c[m+1]/c[m], and log magnitudes.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    max_order: usize,
    values: Vec<f64>,
    log_values: Vec<f64>,
    ratios: Vec<f64>,
}

impl CoefficientTable {
    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// c[m] (1-indexed). None past the overflow horizon.
    pub fn value(&self, m: usize) -> Option<f64> {
        let v = self.values[m - 1];
        v.is_finite().then_some(v)
    }

    /// ln c[m] (1-indexed), always populated.
    pub fn log_value(&self, m: usize) -> f64 {
        self.log_values[m - 1]
    }

    /// c[m+1]/c[m] for 1 <= m <= max_order-1.
    pub fn ratio(&self, m: usize) -> f64 {
        self.ratios[m - 1]
    }

    pub fn ratios(&self) -> &[f64] {
        &self.ratios
    }
}

/// Build the table up to order M (1 <= M <= 500).
///
/// Each c[m] is summed over n until the next n-term falls below
/// `n_tol` times the accumulated sum, n capped at 64.
pub fn build_coefficient_table(max_order: usize, n_tol: f64) -> CoefficientTable {
    assert!(
        (1..=500).contains(&max_order),
        "coefficient table order must be in 1..=500, got {max_order}"
    );
    assert!(n_tol > 0.0, "n_tol must be positive");

    let mut values = Vec::with_capacity(max_order);
    let mut log_values = Vec::with_capacity(max_order);
    for m in 1..=max_order {
        let (log_c, _terms) = log_coefficient(m, n_tol);
        log_values.push(log_c);
        values.push(if log_c < 705.0 { log_c.exp() } else { f64::INFINITY });
    }
    let ratios: Vec<f64> = (0..max_order.saturating_sub(1))
        .map(|i| {
            if values[i].is_finite() && values[i + 1].is_finite() {
                values[i + 1] / values[i]
            } else {
                (log_values[i + 1] - log_values[i]).exp()
            }
        })
        .collect();

    let table = CoefficientTable { max_order, values, log_values, ratios };
    check_invariants(&table);
    table
}

/// ln Σ_n exp(-n²π + (m-1) ln(n²π)) with the n-truncation rule applied
/// in the scaled domain.
fn log_coefficient(m: usize, n_tol: f64) -> (f64, usize) {
    let mut args = Vec::with_capacity(N_CAP);
    for n in 1..=N_CAP {
        let n2pi = (n * n) as f64 * PI;
        args.push(-n2pi + (m as f64 - 1.0) * n2pi.ln());
    }
    let peak = args.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut acc = 0.0;
    let mut used = 0;
    for (i, &a) in args.iter().enumerate() {
        let term = (a - peak).exp();
        if used > 0 && term < n_tol * acc {
            break;
        }
        acc += term;
        used = i + 1;
    }
    (peak + acc.ln(), used)
}

fn check_invariants(table: &CoefficientTable) {
    for (i, &lv) in table.log_values.iter().enumerate() {
        assert!(lv.is_finite(), "log c[{}] not finite", i + 1);
    }
    for (i, &r) in table.ratios.iter().enumerate() {
        assert!(r > 0.0, "ratio r[{}] not positive", i + 1);
    }
    // measured property: ratios strictly increase from m = 2 on
    for m in 2..table.max_order.saturating_sub(1) {
        assert!(
            table.ratios[m] > table.ratios[m - 1],
            "ratio monotonicity broken at m = {m}"
        );
    }
    // c[1] against the closed form (π^{1/4}/Γ(3/4) - 1)/2
    let g34 = gamma_complex(Complex64::new(0.75, 0.0))
        .expect("gamma(3/4) is regular")
        .re;
    let expected = (PI.powf(0.25) / g34 - 1.0) / 2.0;
    let c1 = table.values[0];
    assert!(
        (c1 - expected).abs() <= 1e-7 * expected,
        "c[1] = {c1} disagrees with closed form {expected}"
    );
}
