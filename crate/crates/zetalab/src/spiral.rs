//! Partial-sum geometry: traces of the m-ordered series, the constant-
//! magnitude polygon series U, the decaying spiral μ, nested enclosing
//! circles, and discrete curvature.
//!
//! Cumulative arguments are built from running sums of principal-value
//! increments of consecutive term quotients, never from per-point atan2 of
//! the partial sums, so branch cuts cannot jump the channel.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::budget::ToleranceBudget;
use crate::error::{Error, Result};
use crate::series::{eval_j, CoefficientTable, Strategy};
use crate::special::POLE_GUARD;

const PI: f64 = std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnchorMode {
    Origin,
    RegularizedLimit,
    MinusOneOverS,
}

/// Ordered record of partial sums and per-term geometry.
///
/// `points` has one more entry than the term channels; `radial` is the
/// distance from each point to `anchor`. For traces of J the per-term
/// unfastening angles arctan((|t|/2)/(σ/2+m-1)) are attached from m = 2 on
/// (None marks the fixed first term; other traces leave the channel empty).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpiralTrace {
    #[serde(with = "crate::report::complex_seq")]
    pub points: Vec<Complex64>,
    pub term_abs: Vec<f64>,
    /// Cumulative unwrapped argument of the m-th term.
    pub term_arg: Vec<f64>,
    pub radial: Vec<f64>,
    #[serde(with = "crate::report::complex_parts")]
    pub anchor: Complex64,
    pub label: String,
    pub unfasten_angle: Vec<Option<f64>>,
}

impl SpiralTrace {
    fn from_terms(
        terms: &[Complex64],
        term_arg: Vec<f64>,
        anchor: Complex64,
        label: String,
        unfasten_angle: Vec<Option<f64>>,
    ) -> Self {
        let mut points = Vec::with_capacity(terms.len() + 1);
        points.push(Complex64::new(0.0, 0.0));
        let mut acc = Complex64::new(0.0, 0.0);
        for &t in terms {
            acc += t;
            points.push(acc);
        }
        let term_abs = terms.iter().map(|t| t.norm()).collect();
        let radial = points.iter().map(|p| (p - anchor).norm()).collect();
        SpiralTrace { points, term_abs, term_arg, radial, anchor, label, unfasten_angle }
    }

    /// Worst reconstruction defect of |P_m - P_{m-1}| against term_abs[m],
    /// normalized so values <= 1 meet the contract
    /// ||ΔP| - |T|| <= 1e-12 |T| + 4ε |P_m|.
    pub fn consistency_defect(&self) -> f64 {
        let eps = f64::EPSILON;
        let mut worst = 0.0f64;
        for m in 0..self.term_abs.len() {
            let step = (self.points[m + 1] - self.points[m]).norm();
            let defect = (step - self.term_abs[m]).abs();
            let allowance = 1e-12 * self.term_abs[m] + 4.0 * eps * self.points[m + 1].norm();
            if allowance > 0.0 {
                worst = worst.max(defect / allowance);
            } else {
                worst = worst.max(if defect == 0.0 { 0.0 } else { f64::INFINITY });
            }
        }
        worst
    }
}

/// Nested circle construction: centers and strictly decreasing radii.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CircleSeq {
    #[serde(with = "crate::report::complex_seq")]
    pub centers: Vec<Complex64>,
    pub radii: Vec<f64>,
}

#[derive(Debug, Clone)]
pub enum MagnitudeSchedule {
    Constant(f64),
    PerTerm(Vec<f64>),
}

/// Closure classification of the constant-magnitude series U.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UClosure {
    /// 2π/θ is an integer: the trace closes into a polygon with that many
    /// sides.
    Polygon { sides: usize },
    /// Otherwise the last sector angle β = 2π - (n-1)θ with n = ceil(2π/θ)
    /// satisfies 0 < β < θ.
    Offset { sides: usize, beta: f64 },
}

/// Partial sums of the m-ordered J at s, with the chosen anchor.
pub fn trace_j(
    s: Complex64,
    m_max: usize,
    anchor_mode: AnchorMode,
    budget: &ToleranceBudget,
    table: &CoefficientTable,
) -> Result<SpiralTrace> {
    if s.im == 0.0 {
        return Err(Error::Domain("trace of J needs t != 0".into()));
    }
    if m_max > 150 {
        return Err(Error::Domain(format!("trace depth capped at 150, got {m_max}")));
    }
    if table.max_order() < m_max {
        return Err(Error::Domain(format!(
            "table order {} below trace depth {m_max}",
            table.max_order()
        )));
    }
    let half = s / 2.0;
    if half.norm() < POLE_GUARD {
        return Err(Error::Pole { at: s });
    }
    let mut terms = Vec::with_capacity(m_max);
    let mut args = Vec::with_capacity(m_max);
    let mut term = table.value(1).expect("c[1] representable") / half;
    let mut theta = term.arg();
    terms.push(term);
    args.push(theta);
    for m in 1..m_max {
        let factor = half + m as f64;
        if factor.norm() < POLE_GUARD {
            return Err(Error::Pole { at: factor });
        }
        let quotient = table.ratio(m) / factor;
        term *= quotient;
        theta += quotient.arg();
        terms.push(term);
        args.push(theta);
    }
    let anchor = match anchor_mode {
        AnchorMode::Origin => Complex64::new(0.0, 0.0),
        AnchorMode::MinusOneOverS => -s.inv(),
        AnchorMode::RegularizedLimit => eval_j(s, Strategy::Regularized, budget, table)?.value,
    };
    let half_t = s.im.abs() / 2.0;
    let mut unfasten = vec![None];
    for m in 2..=m_max {
        unfasten.push(Some((half_t / (s.re / 2.0 + (m - 1) as f64)).atan()));
    }
    let label = format!("J trace at s = {} + {}i", s.re, s.im);
    Ok(SpiralTrace::from_terms(&terms, args, anchor, label, unfasten))
}

/// Constant-magnitude series: T_m = T e^{imθ}. Any turning angle below a
/// straight angle is admissible; the closure cases need θ = 2π/k down to
/// the triangle.
pub fn generate_u(theta: f64, term_abs: f64, m_max: usize) -> SpiralTrace {
    assert!(theta > 0.0 && theta < PI, "theta must lie in (0, π)");
    assert!(term_abs > 0.0 && m_max >= 1);
    let terms: Vec<Complex64> = (1..=m_max)
        .map(|m| Complex64::from_polar(term_abs, m as f64 * theta))
        .collect();
    let args = (1..=m_max).map(|m| m as f64 * theta).collect();
    let label = format!("U polygon, theta = {theta}");
    SpiralTrace::from_terms(&terms, args, Complex64::new(0.0, 0.0), label, Vec::new())
}

/// Polygon-or-offset classification for U at this angle.
pub fn u_closure(theta: f64) -> UClosure {
    let k = 2.0 * PI / theta;
    if (k - k.round()).abs() < 1e-9 {
        UClosure::Polygon { sides: k.round() as usize }
    } else {
        let sides = k.ceil() as usize;
        UClosure::Offset { sides, beta: 2.0 * PI - (sides as f64 - 1.0) * theta }
    }
}

/// Decaying spiral: |T_{m+1}| = ratio_m |T_m|, θ_m = mθ.
pub fn generate_mu(
    theta: f64,
    first_abs: f64,
    schedule: &MagnitudeSchedule,
    m_max: usize,
) -> SpiralTrace {
    assert!(theta > 0.0 && theta < PI / 2.0, "theta must lie in (0, π/2)");
    assert!(first_abs > 0.0 && m_max >= 1);
    let mut mags = Vec::with_capacity(m_max);
    let mut mag = first_abs;
    mags.push(mag);
    for m in 1..m_max {
        let r = match schedule {
            MagnitudeSchedule::Constant(r) => *r,
            MagnitudeSchedule::PerTerm(rs) => rs[m - 1],
        };
        mag *= r;
        mags.push(mag);
    }
    let terms: Vec<Complex64> = mags
        .iter()
        .enumerate()
        .map(|(i, &m)| Complex64::from_polar(m, (i as f64 + 1.0) * theta))
        .collect();
    let args = (1..=m_max).map(|m| m as f64 * theta).collect();
    let label = format!("mu spiral, theta = {theta}");
    SpiralTrace::from_terms(&terms, args, Complex64::new(0.0, 0.0), label, Vec::new())
}

/// Closed-form limit of the constant-ratio spiral.
pub fn mu_limit(theta: f64, first_abs: f64, ratio: f64) -> Complex64 {
    let rot = Complex64::from_polar(1.0, theta);
    first_abs * rot / (1.0 - ratio * rot)
}

/// Similar-triangle circle nesting: the first circumradius comes from the
/// U polygon of the trace's first angle increment, and each radius scales
/// by the measured term ratio. Circle k+1 is tangent to circle k at the
/// trace point P_k.
pub fn enclosing_radii(trace: &SpiralTrace) -> Result<CircleSeq> {
    let n = trace.term_abs.len();
    if n < 2 {
        return Err(Error::Domain("circle construction needs at least two terms".into()));
    }
    for k in 1..n {
        if trace.term_abs[k] >= trace.term_abs[k - 1] {
            return Err(Error::Monotonicity { index: k + 1 });
        }
    }
    let dtheta = trace.term_arg[1] - trace.term_arg[0];
    if !(dtheta.abs() > 0.0 && dtheta.abs() < PI) {
        return Err(Error::Domain(format!("degenerate first angle increment {dtheta}")));
    }
    let r1 = trace.term_abs[0] / (2.0 * (dtheta.abs() / 2.0).sin());
    let chord = trace.points[1] - trace.points[0];
    let dir = chord / chord.norm();
    let h = r1 * (dtheta.abs() / 2.0).cos();
    let side = if dtheta > 0.0 { Complex64::new(0.0, 1.0) } else { Complex64::new(0.0, -1.0) };
    let mut centers = Vec::with_capacity(n);
    let mut radii = Vec::with_capacity(n);
    let mut center = (trace.points[0] + trace.points[1]) / 2.0 + side * dir * h;
    let mut radius = r1;
    centers.push(center);
    radii.push(radius);
    for k in 1..n {
        let scale = trace.term_abs[k] / trace.term_abs[k - 1];
        let contact = trace.points[k];
        center = contact + (center - contact) * scale;
        radius *= scale;
        centers.push(center);
        radii.push(radius);
    }
    debug_assert!(radii.windows(2).all(|w| w[1] < w[0]));
    Ok(CircleSeq { centers, radii })
}

/// Discrete curvature profile: inverse circumradius of consecutive point
/// triples; collinear triples give 0.
pub fn curvature_profile(trace: &SpiralTrace) -> Vec<f64> {
    assert!(trace.points.len() >= 3, "curvature needs at least three points");
    let p = &trace.points;
    let mut out = Vec::with_capacity(p.len() - 2);
    for i in 1..p.len() - 1 {
        let a = p[i] - p[i - 1];
        let b = p[i + 1] - p[i];
        let c = p[i + 1] - p[i - 1];
        let cross = (a.conj() * b).im;
        let denom = a.norm() * b.norm() * c.norm();
        out.push(if denom == 0.0 { 0.0 } else { 2.0 * cross.abs() / denom });
    }
    out
}
