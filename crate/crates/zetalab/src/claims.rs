//! Measurable checks over regions of the critical strip.
//!
//! Provable term-wise facts are asserted; contested sum-level claims are
//! measured and reported with witnesses and error bars, never assumed. An
//! inequality counts as violated only when the gap exceeds the combined
//! error estimates of both operands.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::ToleranceBudget;
use crate::error::{Error, Result};
use crate::series::{
    decomposition_sign, eval_f, eval_j, eval_omega, lambda_series, CoefficientTable, OmegaRoute,
    Strategy,
};
use crate::special::{erfc_real, ln_gamma_real};
use crate::spiral::SpiralTrace;

const PI: f64 = std::f64::consts::PI;
const LINE_OFFSET: f64 = 1e-3;

/// Rectangular sweep region in the strip.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionGrid {
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub sigma_steps: usize,
    pub t_steps: usize,
    pub exclude_critical_line: bool,
}

impl Default for RegionGrid {
    /// σ in [0.05, 0.95] step 0.05, t in [0.5, 45] step 0.25, line excluded.
    fn default() -> Self {
        RegionGrid {
            sigma_min: 0.05,
            sigma_max: 0.95,
            t_min: 0.5,
            t_max: 45.0,
            sigma_steps: 19,
            t_steps: 179,
            exclude_critical_line: true,
        }
    }
}

impl RegionGrid {
    pub fn validate(&self) -> Result<()> {
        if !(self.sigma_min > 0.0 && self.sigma_min < self.sigma_max && self.sigma_max < 1.0) {
            return Err(Error::Domain(format!(
                "sigma range ({}, {}) must sit inside (0, 1)",
                self.sigma_min, self.sigma_max
            )));
        }
        if !(self.t_min < self.t_max) {
            return Err(Error::Domain("t range is empty".into()));
        }
        if self.sigma_steps < 2 || self.t_steps < 2 {
            return Err(Error::Domain("step counts must be at least 2".into()));
        }
        Ok(())
    }

    /// σ nodes; nodes within 1e-3 of the critical line are pushed off it
    /// when exclusion is on.
    pub fn sigma_values(&self) -> Vec<f64> {
        (0..self.sigma_steps)
            .map(|i| {
                let sigma = self.sigma_min
                    + (self.sigma_max - self.sigma_min) * i as f64
                        / (self.sigma_steps - 1) as f64;
                if self.exclude_critical_line && (sigma - 0.5).abs() < LINE_OFFSET {
                    if sigma < 0.5 {
                        0.5 - LINE_OFFSET
                    } else {
                        0.5 + LINE_OFFSET
                    }
                } else {
                    sigma
                }
            })
            .collect()
    }

    pub fn t_values(&self) -> Vec<f64> {
        (0..self.t_steps)
            .map(|i| self.t_min + (self.t_max - self.t_min) * i as f64 / (self.t_steps - 1) as f64)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClaimId {
    #[serde(rename = "CASE1_NONVANISHING")]
    Case1Nonvanishing,
    #[serde(rename = "CASE2_MONOTONE")]
    Case2Monotone,
    #[serde(rename = "TERMWISE_ORDER")]
    TermwiseOrder,
    #[serde(rename = "RATIO_LT1")]
    RatioLt1,
    #[serde(rename = "LAMBDA_DOMINANCE")]
    LambdaDominance,
    #[serde(rename = "APPENDIX_SANDWICH")]
    AppendixSandwich,
    #[serde(rename = "RECONSTRUCTION_SIGN")]
    ReconstructionSign,
    #[serde(rename = "MONOTONE_RADIAL")]
    MonotoneRadial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "HOLDS_ON_GRID")]
    HoldsOnGrid,
    #[serde(rename = "VIOLATED")]
    Violated,
    #[serde(rename = "MEASURED_ONLY")]
    MeasuredOnly,
}

/// Point where a claim is tightest or violated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub sigma: f64,
    pub t: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Grid(RegionGrid),
    Points(Vec<(f64, f64)>),
    Trace { label: String },
}

/// One claim tested over a region.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: ClaimId,
    pub region: Region,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub metrics: BTreeMap<String, f64>,
}

impl ClaimReport {
    fn check_invariants(&self) {
        if self.verdict == Verdict::Violated {
            assert!(self.witness.is_some(), "violated verdict without witness");
        }
        assert!(!self.metrics.is_empty(), "report must carry metrics");
        for (k, v) in &self.metrics {
            assert!(v.is_finite(), "metric {k} not finite");
        }
    }
}

/// Per-point record of a Case-1 sweep.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Case1Row {
    pub sigma: f64,
    pub t: f64,
    pub abs_f: f64,
    pub qo: f64,
    pub qa: f64,
    pub error_estimate: f64,
}

/// Per-pair record of a Case-2 sweep.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Case2Row {
    pub t: f64,
    pub alpha: f64,
    pub abs_f_left: f64,
    pub abs_f_right: f64,
    pub gap: f64,
    pub combined_error: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SandwichRow {
    pub x: f64,
    pub lambda: f64,
    pub corrected_lo: f64,
    pub corrected_hi: f64,
    pub paper_lo: f64,
    pub paper_hi: f64,
    pub corrected_holds: bool,
    pub paper_holds: bool,
}

/// Sweep of |f| with the Q-geometry diagnostics at each grid point.
pub fn case1_rows(
    grid: &RegionGrid,
    budget: &ToleranceBudget,
    table: &CoefficientTable,
) -> (Vec<Case1Row>, usize) {
    let two_c1 = 2.0 * table.value(1).expect("c[1] representable");
    let points: Vec<(f64, f64)> = grid
        .sigma_values()
        .iter()
        .flat_map(|&sigma| grid.t_values().iter().map(move |&t| (sigma, t)).collect::<Vec<_>>())
        .collect();
    let rows: Vec<Option<Case1Row>> = points
        .par_iter()
        .map(|&(sigma, t)| {
            let s = Complex64::new(sigma, t);
            match eval_f(s, Strategy::Regularized, budget, table) {
                Ok(f) => Some(Case1Row {
                    sigma,
                    t,
                    abs_f: f.value.norm(),
                    qo: 1.0 / s.norm(),
                    qa: (1.0 + two_c1) / s.norm(),
                    error_estimate: f.error_estimate,
                }),
                Err(_) => None,
            }
        })
        .collect();
    let failures = rows.iter().filter(|r| r.is_none()).count();
    (rows.into_iter().flatten().collect(), failures)
}

/// Non-vanishing of f off the critical line, with the QO < QA sanity
/// diagnostic recorded at every point.
pub fn check_case1(
    grid: &RegionGrid,
    budget: &ToleranceBudget,
    table: &CoefficientTable,
) -> ClaimReport {
    assert!(grid.exclude_critical_line, "case 1 requires the critical line excluded");
    let (rows, failures) = case1_rows(grid, budget, table);
    let mut metrics = BTreeMap::new();
    let mut witness = None;
    let mut verdict = Verdict::MeasuredOnly;
    if let Some(worst) = rows.iter().min_by(|a, b| a.abs_f.total_cmp(&b.abs_f)) {
        let min_abs_f = worst.abs_f;
        let max_abs_f = rows.iter().map(|r| r.abs_f).fold(0.0, f64::max);
        let qo_lt_qa_all = rows.iter().all(|r| r.qo < r.qa);
        metrics.insert("min_abs_f".into(), min_abs_f);
        metrics.insert("max_abs_f".into(), max_abs_f);
        metrics.insert("qo_lt_qa_all".into(), if qo_lt_qa_all { 1.0 } else { 0.0 });
        metrics.insert(
            "min_qa_minus_qo".into(),
            rows.iter().map(|r| r.qa - r.qo).fold(f64::INFINITY, f64::min),
        );
        witness = Some(Witness { sigma: worst.sigma, t: worst.t, value: min_abs_f });
        verdict = if min_abs_f > budget.abs_floor { Verdict::HoldsOnGrid } else { Verdict::Violated };
    }
    metrics.insert("points_evaluated".into(), rows.len() as f64);
    metrics.insert("failures".into(), failures as f64);
    let report = ClaimReport {
        claim_id: ClaimId::Case1Nonvanishing,
        region: Region::Grid(*grid),
        verdict,
        witness,
        metrics,
    };
    report.check_invariants();
    report
}

/// |f| comparisons across each t-row, σ mirrored around the critical line.
pub fn case2_rows(
    grid: &RegionGrid,
    budget: &ToleranceBudget,
    table: &CoefficientTable,
) -> (Vec<Case2Row>, usize) {
    let alphas: Vec<f64> = (0..grid.sigma_steps)
        .map(|i| {
            grid.sigma_min
                + (grid.sigma_max - grid.sigma_min) * i as f64 / (grid.sigma_steps - 1) as f64
        })
        .filter(|&sigma| sigma < 0.5 - 1e-12)
        .map(|sigma| 0.5 - sigma)
        .collect();
    let pairs: Vec<(f64, f64)> = grid
        .t_values()
        .iter()
        .flat_map(|&t| alphas.iter().map(move |&a| (t, a)).collect::<Vec<_>>())
        .collect();
    let rows: Vec<Option<Case2Row>> = pairs
        .par_iter()
        .map(|&(t, alpha)| {
            let left = eval_f(Complex64::new(0.5 - alpha, t), Strategy::Regularized, budget, table);
            let right =
                eval_f(Complex64::new(0.5 + alpha, t), Strategy::Regularized, budget, table);
            match (left, right) {
                (Ok(l), Ok(r)) => Some(Case2Row {
                    t,
                    alpha,
                    abs_f_left: l.value.norm(),
                    abs_f_right: r.value.norm(),
                    gap: l.value.norm() - r.value.norm(),
                    combined_error: l.error_estimate + r.error_estimate,
                }),
                _ => None,
            }
        })
        .collect();
    let failures = rows.iter().filter(|r| r.is_none()).count();
    (rows.into_iter().flatten().collect(), failures)
}

/// Monotonicity of |f| in σ and the mirrored-pair inequality, measured
/// per t-row.
pub fn check_case2(
    grid: &RegionGrid,
    budget: &ToleranceBudget,
    table: &CoefficientTable,
) -> ClaimReport {
    let (rows, failures) = case2_rows(grid, budget, table);

    // row-wise monotonicity of |f| across the σ nodes
    let sigmas = grid.sigma_values();
    let monotone_rows: Vec<bool> = grid
        .t_values()
        .par_iter()
        .map(|&t| {
            let mut prev = f64::INFINITY;
            for &sigma in &sigmas {
                match eval_f(Complex64::new(sigma, t), Strategy::Regularized, budget, table) {
                    Ok(f) => {
                        let cur = f.value.norm();
                        if cur >= prev {
                            return false;
                        }
                        prev = cur;
                    }
                    Err(_) => return false,
                }
            }
            true
        })
        .collect();

    let mut metrics = BTreeMap::new();
    let mut verdict = Verdict::MeasuredOnly;
    let mut witness = None;
    if !rows.is_empty() {
        let min_gap_row = rows
            .iter()
            .min_by(|a, b| a.gap.total_cmp(&b.gap))
            .expect("nonempty");
        let violated: Vec<&Case2Row> =
            rows.iter().filter(|r| r.gap < -r.combined_error).collect();
        verdict = if violated.is_empty() { Verdict::HoldsOnGrid } else { Verdict::Violated };
        witness = Some(Witness {
            sigma: 0.5 - min_gap_row.alpha,
            t: min_gap_row.t,
            value: min_gap_row.gap,
        });
        metrics.insert("min_gap".into(), min_gap_row.gap);
        metrics.insert(
            "max_gap".into(),
            rows.iter().map(|r| r.gap).fold(f64::NEG_INFINITY, f64::max),
        );
        metrics.insert("pairs_checked".into(), rows.len() as f64);
        metrics.insert("pairs_violated".into(), violated.len() as f64);
    }
    metrics.insert(
        "rows_strictly_decreasing".into(),
        monotone_rows.iter().filter(|&&m| m).count() as f64,
    );
    metrics.insert("rows_checked".into(), monotone_rows.len() as f64);
    metrics.insert("failures".into(), failures as f64);
    let report = ClaimReport {
        claim_id: ClaimId::Case2Monotone,
        region: Region::Grid(*grid),
        verdict,
        witness,
        metrics,
    };
    report.check_invariants();
    report
}

/// Term-by-term magnitude and argument orderings between two abscissae at
/// the same height. Provable from |s1/2+k| < |s2/2+k|, so a violation flags
/// a precision problem rather than a finding.
pub fn check_termwise(
    s1: Complex64,
    s2: Complex64,
    m_max: usize,
    table: &CoefficientTable,
) -> Result<ClaimReport> {
    if !(s1.re < s2.re) {
        return Err(Error::Domain(format!("need Re(s1) < Re(s2), got {} and {}", s1.re, s2.re)));
    }
    if s1.im != s2.im || s1.im == 0.0 {
        return Err(Error::Domain("need Im(s1) = Im(s2) != 0".into()));
    }
    if m_max > table.max_order() {
        return Err(Error::Domain(format!(
            "m_max {m_max} exceeds table order {}",
            table.max_order()
        )));
    }
    let half_t = s1.im.abs() / 2.0;
    let mut ln_rf1 = 0.0;
    let mut ln_rf2 = 0.0;
    let mut theta1 = 0.0;
    let mut theta2 = 0.0;
    let mut violations = 0usize;
    let mut min_log_margin = f64::INFINITY;
    let mut min_theta_margin = f64::INFINITY;
    for m in 1..=m_max {
        let k = (m - 1) as f64;
        ln_rf1 += (Complex64::new(s1.re / 2.0 + k, s1.im / 2.0)).norm().ln();
        ln_rf2 += (Complex64::new(s2.re / 2.0 + k, s2.im / 2.0)).norm().ln();
        theta1 += (half_t / (s1.re / 2.0 + k)).atan();
        theta2 += (half_t / (s2.re / 2.0 + k)).atan();
        // |T_m(s1)| > |T_m(s2)| reduces to ln_rf1 < ln_rf2
        let log_margin = ln_rf2 - ln_rf1;
        let theta_margin = theta1 - theta2;
        min_log_margin = min_log_margin.min(log_margin);
        min_theta_margin = min_theta_margin.min(theta_margin);
        if log_margin <= 0.0 || theta_margin <= 0.0 {
            violations += 1;
        }
    }
    let verdict = if violations == 0 { Verdict::HoldsOnGrid } else { Verdict::Violated };
    let mut metrics = BTreeMap::new();
    metrics.insert("m_checked".into(), m_max as f64);
    metrics.insert("violations".into(), violations as f64);
    metrics.insert("min_log_magnitude_margin".into(), min_log_margin);
    metrics.insert("min_theta_margin".into(), min_theta_margin);
    metrics.insert(
        "precision_investigation".into(),
        if violations > 0 { 1.0 } else { 0.0 },
    );
    let witness = (verdict == Verdict::Violated).then_some(Witness {
        sigma: s1.re,
        t: s1.im,
        value: min_log_margin.min(min_theta_margin),
    });
    let report = ClaimReport {
        claim_id: ClaimId::TermwiseOrder,
        region: Region::Points(vec![(s1.re, s1.im), (s2.re, s2.im)]),
        verdict,
        witness,
        metrics,
    };
    report.check_invariants();
    Ok(report)
}

/// Consecutive-term ratio ρ_m = c[m+1]/(c[m] |s/2+m|) against the claim
/// that it stays below 1.
pub fn check_ratio(s: Complex64, m_max: usize, table: &CoefficientTable) -> ClaimReport {
    assert!(m_max < table.max_order(), "ratio check needs table order above m_max");
    let half = s / 2.0;
    let mut max_rho = 0.0f64;
    let mut argmax = 0usize;
    let mut first_violation: Option<(usize, f64)> = None;
    for m in 1..=m_max {
        let rho = table.ratio(m) / (half + m as f64).norm();
        if rho > max_rho {
            max_rho = rho;
            argmax = m;
        }
        if rho >= 1.0 && first_violation.is_none() {
            first_violation = Some((m, rho));
        }
    }
    let verdict = if first_violation.is_some() { Verdict::Violated } else { Verdict::HoldsOnGrid };
    let mut metrics = BTreeMap::new();
    metrics.insert("max_rho".into(), max_rho);
    metrics.insert("argmax_m".into(), argmax as f64);
    metrics.insert("m_checked".into(), m_max as f64);
    metrics.insert("rho_1".into(), table.ratio(1) / (half + 1.0).norm());
    if let Some((m, _)) = first_violation {
        metrics.insert("first_violation_m".into(), m as f64);
    }
    let witness = first_violation.map(|(_, rho)| Witness { sigma: s.re, t: s.im, value: rho });
    let report = ClaimReport {
        claim_id: ClaimId::RatioLt1,
        region: Region::Points(vec![(s.re, s.im)]),
        verdict,
        witness,
        metrics,
    };
    report.check_invariants();
    report
}

/// Records |Λ(s/2)| next to m-ordered partial-sum magnitudes and the drift
/// metric. The dominance inequality is never asserted.
pub fn check_lambda_dominance(
    s: Complex64,
    m_max: usize,
    budget: &ToleranceBudget,
    table: &CoefficientTable,
) -> Result<ClaimReport> {
    if !(s.re > 0.0) {
        return Err(Error::Domain(format!("lambda dominance requires Re(s) > 0, got {}", s.re)));
    }
    let lam = lambda_series(s / 2.0, budget)?;
    let mut metrics = BTreeMap::new();
    metrics.insert("lambda_half_s_abs".into(), lam.value.norm());

    // m-ordered partial sums at the checkpoints
    let half = s / 2.0;
    let mut term = table.value(1).expect("c[1] representable") / half;
    let mut acc = term;
    for m in 1..m_max {
        term = term * table.ratio(m) / (half + m as f64);
        acc += term;
        let mm = m + 1;
        if mm == 10 || mm == 50 || mm == 100 || mm == 150 {
            metrics.insert(format!("j_partial_abs_m{mm}"), acc.norm());
        }
    }
    let j = eval_j(s, Strategy::MOrdered, &ToleranceBudget { max_terms: m_max, ..*budget }, table)?;
    metrics.insert("partial_sum_drift".into(), j.partial_sum_drift);

    // count of terms within the scaled factorial surrogate bound
    // 1/|(s/2)^(m)| <= |s/2|^{m-1}/(m-1)!
    let ln_half = half.norm().ln();
    let mut ln_rf = 0.0;
    let mut within = 0usize;
    for m in 1..=m_max {
        ln_rf += (half + (m - 1) as f64).norm().ln();
        let surrogate = (m as f64 - 1.0) * ln_half - ln_gamma_real(m as f64);
        if -ln_rf <= surrogate {
            within += 1;
        }
    }
    metrics.insert("surrogate_bound_count".into(), within as f64);
    metrics.insert("m_checked".into(), m_max as f64);
    let report = ClaimReport {
        claim_id: ClaimId::LambdaDominance,
        region: Region::Points(vec![(s.re, s.im)]),
        verdict: Verdict::MeasuredOnly,
        witness: None,
        metrics,
    };
    report.check_invariants();
    Ok(report)
}

/// Integral-test bounds on Λ(x), in both the printed form (erfc(1)) and the
/// corrected form (erfc(√(πx))).
pub fn sandwich_rows(x_grid: &[f64]) -> Vec<SandwichRow> {
    let budget = ToleranceBudget { rel_tol: 1e-14, ..ToleranceBudget::default() };
    x_grid
        .iter()
        .map(|&x| {
            assert!(x > 0.0, "sandwich grid needs x > 0");
            let lambda = lambda_series(Complex64::new(x, 0.0), &budget)
                .expect("real positive argument")
                .value
                .re;
            let corrected_tail = erfc_real((PI * x).sqrt()) / (2.0 * x.sqrt());
            let paper_tail = erfc_real(1.0) / (2.0 * x.sqrt());
            let a1 = (-PI * x).exp();
            SandwichRow {
                x,
                lambda,
                corrected_lo: corrected_tail,
                corrected_hi: a1 + corrected_tail,
                paper_lo: paper_tail,
                paper_hi: a1 + paper_tail,
                corrected_holds: corrected_tail <= lambda && lambda <= a1 + corrected_tail,
                paper_holds: paper_tail <= lambda && lambda <= a1 + paper_tail,
            }
        })
        .collect()
}

pub fn check_appendix_sandwich(x_grid: &[f64]) -> ClaimReport {
    let rows = sandwich_rows(x_grid);
    let corrected_violations: Vec<&SandwichRow> =
        rows.iter().filter(|r| !r.corrected_holds).collect();
    let paper_violations: Vec<&SandwichRow> = rows.iter().filter(|r| !r.paper_holds).collect();
    let verdict =
        if corrected_violations.is_empty() { Verdict::HoldsOnGrid } else { Verdict::Violated };
    let witness = if let Some(r) = corrected_violations.first() {
        Some(Witness { sigma: r.x, t: 0.0, value: r.lambda })
    } else {
        paper_violations
            .first()
            .map(|r| Witness { sigma: r.x, t: 0.0, value: r.paper_lo - r.lambda })
    };
    let mut metrics = BTreeMap::new();
    metrics.insert("grid_size".into(), rows.len() as f64);
    metrics.insert("corrected_violations".into(), corrected_violations.len() as f64);
    metrics.insert(
        "paper_lower_violations".into(),
        rows.iter().filter(|r| r.paper_lo > r.lambda).count() as f64,
    );
    metrics.insert(
        "paper_upper_violations".into(),
        rows.iter().filter(|r| r.lambda > r.paper_hi).count() as f64,
    );
    if let Some(r) = paper_violations.first() {
        metrics.insert("paper_first_violation_x".into(), r.x);
        metrics.insert("paper_lower_at_first_violation".into(), r.paper_lo);
        metrics.insert("lambda_at_first_violation".into(), r.lambda);
    }
    let report = ClaimReport {
        claim_id: ClaimId::AppendixSandwich,
        region: Region::Points(x_grid.iter().map(|&x| (x, 0.0)).collect()),
        verdict,
        witness,
        metrics,
    };
    report.check_invariants();
    report
}

/// Residual of sign (f(s) + f(1-s)) against the G-route Ω at each point.
pub fn check_reconstruction(
    points: &[Complex64],
    budget: &ToleranceBudget,
    table: &CoefficientTable,
) -> Result<ClaimReport> {
    let sign = decomposition_sign() as f64;
    let mut worst_scaled = 0.0f64;
    let mut max_abs = 0.0f64;
    let mut witness = Witness { sigma: 0.0, t: 0.0, value: 0.0 };
    for &s in points {
        let f1 = eval_f(s, Strategy::Regularized, budget, table)?;
        let f2 = eval_f(1.0 - s, Strategy::Regularized, budget, table)?;
        let omega = eval_omega(s, OmegaRoute::GRoute, budget)?;
        let residual = (sign * (f1.value + f2.value) - omega.value).norm();
        let scaled = residual / (1e-8 * omega.value.norm() + budget.abs_floor);
        max_abs = max_abs.max(residual);
        if scaled > worst_scaled {
            worst_scaled = scaled;
            witness = Witness { sigma: s.re, t: s.im, value: residual };
        }
    }
    let verdict = if worst_scaled <= 1.0 { Verdict::HoldsOnGrid } else { Verdict::Violated };
    let mut metrics = BTreeMap::new();
    metrics.insert("sign".into(), sign);
    metrics.insert("points".into(), points.len() as f64);
    metrics.insert("max_residual_abs".into(), max_abs);
    metrics.insert("max_residual_scaled".into(), worst_scaled);
    let report = ClaimReport {
        claim_id: ClaimId::ReconstructionSign,
        region: Region::Points(points.iter().map(|s| (s.re, s.im)).collect()),
        verdict,
        witness: Some(witness),
        metrics,
    };
    report.check_invariants();
    Ok(report)
}

/// Monotonicity of the radial distances of a trace about its anchor. The
/// witness carries the first index where the direction flips.
pub fn check_monotone_radial(trace: &SpiralTrace) -> ClaimReport {
    let diffs: Vec<f64> = trace.radial.windows(2).map(|w| w[1] - w[0]).collect();
    let direction = diffs
        .iter()
        .find(|d| d.abs() > 0.0)
        .map(|d| d.signum())
        .unwrap_or(0.0);
    let mut first_flip = None;
    for (i, d) in diffs.iter().enumerate() {
        if d.signum() != direction && d.abs() > 0.0 {
            first_flip = Some(i + 1);
            break;
        }
    }
    let verdict = if first_flip.is_none() { Verdict::HoldsOnGrid } else { Verdict::Violated };
    let mut metrics = BTreeMap::new();
    metrics.insert("points".into(), trace.radial.len() as f64);
    metrics.insert("direction".into(), direction);
    metrics.insert(
        "flips".into(),
        diffs
            .iter()
            .filter(|d| d.signum() != direction && d.abs() > 0.0)
            .count() as f64,
    );
    if let Some(i) = first_flip {
        metrics.insert("first_flip_index".into(), i as f64);
    }
    let witness = first_flip.map(|i| Witness {
        sigma: i as f64,
        t: 0.0,
        value: trace.radial[i],
    });
    let report = ClaimReport {
        claim_id: ClaimId::MonotoneRadial,
        region: Region::Trace { label: trace.label.clone() },
        verdict,
        witness,
        metrics,
    };
    report.check_invariants();
    report
}
