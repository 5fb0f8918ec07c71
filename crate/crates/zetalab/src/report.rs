//! Deterministic artifact emission. CSV and textual values carry a fixed
//! 17-significant-digit float format, '\n' line endings, and '#'-prefixed
//! header lines echoing the run configuration and the decomposition sign.

use crate::claims::{Case1Row, Case2Row, ClaimReport, SandwichRow};
use crate::spiral::SpiralTrace;
use crate::zeros::ZeroRecord;

/// Fixed 17-significant-digit formatting, locale independent.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

fn header_block(header: &[(String, String)]) -> String {
    let mut out = String::new();
    for (k, v) in header {
        out.push_str(&format!("# {k}={v}\n"));
    }
    out
}

pub fn zeros_csv(records: &[ZeroRecord], header: &[(String, String)]) -> String {
    let mut out = header_block(header);
    out.push_str("ordinate,residual_omega,residual_ref,iterations\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt_f64(r.ordinate),
            fmt_f64(r.residual_omega),
            fmt_f64(r.residual_ref),
            r.iterations
        ));
    }
    out
}

pub fn brackets_csv(brackets: &[(f64, f64)], header: &[(String, String)]) -> String {
    let mut out = header_block(header);
    out.push_str("t_lo,t_hi\n");
    for (lo, hi) in brackets {
        out.push_str(&format!("{},{}\n", fmt_f64(*lo), fmt_f64(*hi)));
    }
    out
}

pub fn trace_csv(trace: &SpiralTrace, header: &[(String, String)]) -> String {
    let mut out = header_block(header);
    out.push_str("m,re_partial,im_partial,term_abs,theta_cum,radial,unfasten_angle\n");
    for (m, p) in trace.points.iter().enumerate() {
        let (abs, theta, unfasten) = if m == 0 {
            (String::new(), String::new(), String::new())
        } else {
            (
                fmt_f64(trace.term_abs[m - 1]),
                fmt_f64(trace.term_arg[m - 1]),
                trace
                    .unfasten_angle
                    .get(m - 1)
                    .copied()
                    .map(fmt_opt)
                    .unwrap_or_default(),
            )
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            m,
            fmt_f64(p.re),
            fmt_f64(p.im),
            abs,
            theta,
            fmt_f64(trace.radial[m]),
            unfasten
        ));
    }
    out
}

pub fn case1_csv(rows: &[Case1Row], header: &[(String, String)]) -> String {
    let mut out = header_block(header);
    out.push_str("sigma,t,abs_f,qo,qa,error_estimate\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            fmt_f64(r.sigma),
            fmt_f64(r.t),
            fmt_f64(r.abs_f),
            fmt_f64(r.qo),
            fmt_f64(r.qa),
            fmt_f64(r.error_estimate)
        ));
    }
    out
}

pub fn case2_csv(rows: &[Case2Row], header: &[(String, String)]) -> String {
    let mut out = header_block(header);
    out.push_str("t,alpha,abs_f_left,abs_f_right,gap,combined_error\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            fmt_f64(r.t),
            fmt_f64(r.alpha),
            fmt_f64(r.abs_f_left),
            fmt_f64(r.abs_f_right),
            fmt_f64(r.gap),
            fmt_f64(r.combined_error)
        ));
    }
    out
}

pub fn sandwich_csv(rows: &[SandwichRow], header: &[(String, String)]) -> String {
    let mut out = header_block(header);
    out.push_str("x,lambda,corrected_lo,corrected_hi,paper_lo,paper_hi,corrected_holds,paper_holds\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            fmt_f64(r.x),
            fmt_f64(r.lambda),
            fmt_f64(r.corrected_lo),
            fmt_f64(r.corrected_hi),
            fmt_f64(r.paper_lo),
            fmt_f64(r.paper_hi),
            r.corrected_holds,
            r.paper_holds
        ));
    }
    out
}

pub fn claims_json(reports: &[ClaimReport], header: &[(String, String)]) -> String {
    #[derive(serde::Serialize)]
    struct Envelope<'a> {
        config: std::collections::BTreeMap<&'a str, &'a str>,
        reports: &'a [ClaimReport],
    }
    let config = header.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
    to_json(&Envelope { config, reports })
}

/// Serde adapter: Complex64 as {"re": .., "im": ..}.
pub mod complex_parts {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Parts {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(v: &Complex64, ser: S) -> Result<S::Ok, S::Error> {
        Parts { re: v.re, im: v.im }.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Complex64, D::Error> {
        let p = Parts::deserialize(de)?;
        Ok(Complex64::new(p.re, p.im))
    }
}

/// Serde adapter: Vec<Complex64> as [[re, im], ...].
pub mod complex_seq {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Complex64], ser: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(f64, f64)> = v.iter().map(|z| (z.re, z.im)).collect();
        pairs.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Complex64>, D::Error> {
        let pairs = Vec::<(f64, f64)>::deserialize(de)?;
        Ok(pairs.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
    }
}
