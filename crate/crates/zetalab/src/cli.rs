//! Command-line entry point. Identical configurations yield byte-identical
//! artifacts: fixed float formatting, ordered report assembly, and a
//! deterministic worker pool fan-out.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::budget::ToleranceBudget;
use crate::claims::{
    case1_rows, case2_rows, check_appendix_sandwich, check_case1, check_case2,
    check_lambda_dominance, check_monotone_radial, check_ratio, check_reconstruction,
    check_termwise, sandwich_rows, RegionGrid,
};
use crate::error::Error;
use crate::report;
use crate::series::{
    build_coefficient_table, completed_zeta, decomposition_sign, eval_f, eval_j, eval_omega,
    OmegaRoute, Strategy,
};
use crate::spiral::{trace_j, AnchorMode};
use crate::zeros::{refine_zero, scan_brackets, verify_zero, ZeroRecord};

#[derive(Debug, Parser)]
#[command(name = "zetalab", version, about = "Series laboratory for the completed zeta function")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Worker pool size (default: available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StrategyArg {
    MOrdered,
    NOrdered,
    Regularized,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::MOrdered => Strategy::MOrdered,
            StrategyArg::NOrdered => Strategy::NOrdered,
            StrategyArg::Regularized => Strategy::Regularized,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum AnchorArg {
    Origin,
    /// Anchor at Q = -1/s.
    Q,
    /// Anchor at the regularized limit of the series.
    Limit,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Target relative error.
    #[arg(long, default_value_t = 1e-10)]
    pub rel_tol: f64,
    /// Absolute error floor near zeros.
    #[arg(long, default_value_t = 1e-12)]
    pub abs_floor: f64,
    /// Term cap of the active summation index.
    #[arg(long, default_value_t = 150)]
    pub max_terms: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Result<ToleranceBudget, RunError> {
        let b = ToleranceBudget::new(self.rel_tol, self.abs_floor, self.max_terms);
        b.validate().map_err(|e| RunError::Config(e.to_string()))?;
        Ok(b)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate J and f at a point under a chosen strategy.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        sigma: f64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, value_enum, default_value_t = StrategyArg::Regularized)]
        strategy: StrategyArg,
        /// Coefficient-table order.
        #[arg(long, default_value_t = 200)]
        max_m: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate Ω by both routes next to the reference oracle.
    Omega {
        #[arg(long, allow_negative_numbers = true)]
        sigma: f64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Scan and refine critical-line zeros.
    Zeros {
        #[arg(long, default_value_t = 0.1)]
        t_min: f64,
        #[arg(long, default_value_t = 50.0)]
        t_max: f64,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        /// Bracket-width refinement target.
        #[arg(long, default_value_t = 1e-9)]
        refine_tol: f64,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit sign-change brackets only.
    Scan {
        #[arg(long, default_value_t = 0.1)]
        t_min: f64,
        #[arg(long, default_value_t = 50.0)]
        t_max: f64,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the partial-sum trace of J at a point.
    Trace {
        #[arg(long, allow_negative_numbers = true)]
        sigma: f64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        /// Trace depth (at most 150).
        #[arg(long, default_value_t = 100)]
        max_m: usize,
        #[arg(long, value_enum, default_value_t = AnchorArg::Q)]
        anchor: AnchorArg,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Integral-test bounds for the theta tail over an x grid.
    Bounds {
        /// Comma-separated x values.
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0])]
        x: Vec<f64>,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the claim suite over a strip region.
    Claims {
        #[arg(long, default_value_t = 0.05)]
        sigma_min: f64,
        #[arg(long, default_value_t = 0.95)]
        sigma_max: f64,
        #[arg(long, default_value_t = 0.5)]
        t_min: f64,
        #[arg(long, default_value_t = 45.0)]
        t_max: f64,
        #[arg(long, default_value_t = 19)]
        sigma_steps: usize,
        #[arg(long, default_value_t = 179)]
        t_steps: usize,
        /// Coefficient-table order.
        #[arg(long, default_value_t = 220)]
        max_m: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Report file; CSV sweeps land next to it.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Startup sign determination and the oracle grid check.
    Selftest,
}

#[derive(Debug)]
pub enum RunError {
    Config(String),
    Numeric(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) => 1,
            RunError::Numeric(_) => 2,
        }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Config(m) => write!(f, "configuration error: {m}"),
            RunError::Numeric(m) => write!(f, "numeric failure: {m}"),
        }
    }
}

fn numeric(e: Error) -> RunError {
    RunError::Numeric(e.to_string())
}

fn write_artifact(path: &Path, contents: &str) -> Result<(), RunError> {
    std::fs::write(path, contents)
        .map_err(|e| RunError::Config(format!("cannot write {}: {e}", path.display())))
}

pub fn run(config: RunConfig) -> Result<(), RunError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.unwrap_or(0))
        .build()
        .map_err(|e| RunError::Config(e.to_string()))?;
    pool.install(|| dispatch(config.command))
}

fn dispatch(command: Command) -> Result<(), RunError> {
    match command {
        Command::Eval { sigma, t, strategy, max_m, budget, output } => {
            let b = budget.budget()?;
            if max_m > 500 {
                return Err(RunError::Config("max-m is capped at 500".into()));
            }
            let table = build_coefficient_table(max_m.max(b.max_terms.min(500)), 1e-16);
            let s = Complex64::new(sigma, t);
            let strat: Strategy = strategy.into();
            let j = eval_j(s, strat, &b, &table).map_err(numeric)?;
            let f = eval_f(s, strat, &b, &table).map_err(numeric)?;
            let mut out = String::new();
            let _ = writeln!(out, "# command=eval sigma={sigma} t={t} strategy={strat}");
            let _ = writeln!(out, "# sign={}", decomposition_sign());
            let _ = writeln!(
                out,
                "J = {} + {}i  (terms={}, err<={}, converged={}, drift={})",
                report::fmt_f64(j.value.re),
                report::fmt_f64(j.value.im),
                j.terms_used,
                report::fmt_f64(j.error_estimate),
                j.converged,
                report::fmt_f64(j.partial_sum_drift)
            );
            let _ = writeln!(
                out,
                "f = {} + {}i",
                report::fmt_f64(f.value.re),
                report::fmt_f64(f.value.im)
            );
            print!("{out}");
            if let Some(path) = output {
                write_artifact(&path, &report::to_json(&j))?;
            }
            Ok(())
        }
        Command::Omega { sigma, t, budget } => {
            let b = budget.budget()?;
            let s = Complex64::new(sigma, t);
            let g = eval_omega(s, OmegaRoute::GRoute, &b).map_err(numeric)?;
            let f = eval_omega(s, OmegaRoute::FRoute, &b).map_err(numeric)?;
            let oracle = completed_zeta(s, &b).map_err(numeric)?;
            let residual = (g.value - oracle).norm();
            println!("# command=omega sigma={sigma} t={t} sign={}", decomposition_sign());
            println!(
                "omega_g      = {} + {}i",
                report::fmt_f64(g.value.re),
                report::fmt_f64(g.value.im)
            );
            println!(
                "omega_f      = {} + {}i",
                report::fmt_f64(f.value.re),
                report::fmt_f64(f.value.im)
            );
            println!(
                "oracle       = {} + {}i",
                report::fmt_f64(oracle.re),
                report::fmt_f64(oracle.im)
            );
            println!("abs_residual = {}", report::fmt_f64(residual));
            println!(
                "rel_residual = {}",
                report::fmt_f64(residual / oracle.norm().max(f64::MIN_POSITIVE))
            );
            Ok(())
        }
        Command::Zeros { t_min, t_max, step, refine_tol, budget, format, output } => {
            let b = budget.budget()?;
            if !(refine_tol > 0.0) {
                return Err(RunError::Config("refine-tol must be positive".into()));
            }
            let brackets = scan_brackets(t_min, t_max, step, &b).map_err(numeric)?;
            let mut records: Vec<ZeroRecord> = Vec::with_capacity(brackets.len());
            for br in &brackets {
                let rec = refine_zero(*br, refine_tol, &b).map_err(numeric)?;
                if !verify_zero(&rec, &b) {
                    return Err(RunError::Numeric(format!(
                        "zero at t={} failed verification",
                        rec.ordinate
                    )));
                }
                records.push(rec);
            }
            let header = vec![
                ("command".to_string(), "zeros".to_string()),
                ("t_min".to_string(), format!("{t_min}")),
                ("t_max".to_string(), format!("{t_max}")),
                ("step".to_string(), format!("{step}")),
                ("refine_tol".to_string(), format!("{refine_tol}")),
                ("rel_tol".to_string(), format!("{}", b.rel_tol)),
                ("sign".to_string(), format!("{}", decomposition_sign())),
            ];
            println!("{} zero(s) on ({t_min}, {t_max}]", records.len());
            for r in &records {
                println!(
                    "t = {}  |omega| = {}  |Re f| = {}",
                    report::fmt_f64(r.ordinate),
                    report::fmt_f64(r.residual_omega),
                    report::fmt_f64(r.residual_ref)
                );
            }
            if let Some(path) = output {
                let body = match format {
                    FormatArg::Csv => report::zeros_csv(&records, &header),
                    FormatArg::Json => report::to_json(&records),
                };
                write_artifact(&path, &body)?;
            }
            Ok(())
        }
        Command::Scan { t_min, t_max, step, budget, output } => {
            let b = budget.budget()?;
            let brackets = scan_brackets(t_min, t_max, step, &b).map_err(numeric)?;
            let header = vec![
                ("command".to_string(), "scan".to_string()),
                ("t_min".to_string(), format!("{t_min}")),
                ("t_max".to_string(), format!("{t_max}")),
                ("step".to_string(), format!("{step}")),
                ("sign".to_string(), format!("{}", decomposition_sign())),
            ];
            println!("{} bracket(s)", brackets.len());
            if let Some(path) = output {
                write_artifact(&path, &report::brackets_csv(&brackets, &header))?;
            }
            Ok(())
        }
        Command::Trace { sigma, t, max_m, anchor, budget, format, output } => {
            let b = budget.budget()?;
            if max_m > 150 {
                return Err(RunError::Config("trace depth max-m is capped at 150".into()));
            }
            let table = build_coefficient_table(max_m.max(2), 1e-16);
            let mode = match anchor {
                AnchorArg::Origin => AnchorMode::Origin,
                AnchorArg::Q => AnchorMode::MinusOneOverS,
                AnchorArg::Limit => AnchorMode::RegularizedLimit,
            };
            let trace = trace_j(Complex64::new(sigma, t), max_m, mode, &b, &table)
                .map_err(numeric)?;
            let header = vec![
                ("command".to_string(), "trace".to_string()),
                ("sigma".to_string(), format!("{sigma}")),
                ("t".to_string(), format!("{t}")),
                ("max_m".to_string(), format!("{max_m}")),
                ("anchor".to_string(), format!("{mode:?}")),
                ("sign".to_string(), format!("{}", decomposition_sign())),
            ];
            println!(
                "trace of {} points, first term {}",
                trace.points.len(),
                report::fmt_f64(trace.term_abs[0])
            );
            if let Some(path) = output {
                let body = match format {
                    FormatArg::Csv => report::trace_csv(&trace, &header),
                    FormatArg::Json => report::to_json(&trace),
                };
                write_artifact(&path, &body)?;
            }
            Ok(())
        }
        Command::Bounds { x, format, output } => {
            if x.is_empty() || x.iter().any(|&v| v <= 0.0) {
                return Err(RunError::Config("x grid must be positive".into()));
            }
            let report_struct = check_appendix_sandwich(&x);
            let rows = sandwich_rows(&x);
            let header = vec![
                ("command".to_string(), "bounds".to_string()),
                ("x".to_string(), x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
                ("sign".to_string(), format!("{}", decomposition_sign())),
            ];
            println!("sandwich verdict: {:?}", report_struct.verdict);
            if let Some(path) = output {
                let body = match format {
                    FormatArg::Csv => report::sandwich_csv(&rows, &header),
                    FormatArg::Json => report::to_json(&report_struct),
                };
                write_artifact(&path, &body)?;
            }
            Ok(())
        }
        Command::Claims {
            sigma_min,
            sigma_max,
            t_min,
            t_max,
            sigma_steps,
            t_steps,
            max_m,
            budget,
            format,
            output,
        } => {
            let b = budget.budget()?;
            let grid = RegionGrid {
                sigma_min,
                sigma_max,
                t_min,
                t_max,
                sigma_steps,
                t_steps,
                exclude_critical_line: true,
            };
            grid.validate().map_err(|e| RunError::Config(e.to_string()))?;
            if !(2..=500).contains(&max_m) {
                return Err(RunError::Config("max-m must lie in 2..=500".into()));
            }
            let table = build_coefficient_table(max_m, 1e-16);
            let m_cap = (max_m - 1).min(150);

            let case1 = check_case1(&grid, &b, &table);
            let case2 = check_case2(&grid, &b, &table);
            let termwise = check_termwise(
                Complex64::new(0.3, -14.0),
                Complex64::new(0.7, -14.0),
                max_m.min(200),
                &table,
            )
            .map_err(numeric)?;
            let ratio_real = check_ratio(Complex64::new(0.5, 0.0), m_cap, &table);
            let ratio_line = check_ratio(Complex64::new(0.5, 14.13), m_cap, &table);
            let dominance =
                check_lambda_dominance(Complex64::new(0.5, 14.13), m_cap, &b, &table)
                    .map_err(numeric)?;
            let sandwich = check_appendix_sandwich(&[0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0]);
            let reconstruction = check_reconstruction(
                &[
                    Complex64::new(0.3, 5.0),
                    Complex64::new(0.2, 11.0),
                    Complex64::new(0.5, 14.134725),
                    Complex64::new(0.65, 21.0),
                ],
                &b,
                &table,
            )
            .map_err(numeric)?;
            let probe_trace = trace_j(
                Complex64::new(0.3, -14.0),
                100.min(max_m),
                AnchorMode::MinusOneOverS,
                &b,
                &table,
            )
            .map_err(numeric)?;
            let radial = check_monotone_radial(&probe_trace);

            let reports = vec![
                case1, case2, termwise, ratio_real, ratio_line, dominance, sandwich,
                reconstruction, radial,
            ];
            let header = vec![
                ("command".to_string(), "claims".to_string()),
                ("sigma_min".to_string(), format!("{sigma_min}")),
                ("sigma_max".to_string(), format!("{sigma_max}")),
                ("t_min".to_string(), format!("{t_min}")),
                ("t_max".to_string(), format!("{t_max}")),
                ("sigma_steps".to_string(), format!("{sigma_steps}")),
                ("t_steps".to_string(), format!("{t_steps}")),
                ("max_m".to_string(), format!("{max_m}")),
                ("rel_tol".to_string(), format!("{}", b.rel_tol)),
                ("sign".to_string(), format!("{}", decomposition_sign())),
            ];
            for r in &reports {
                println!("{:?}: {:?}", r.claim_id, r.verdict);
            }
            if let Some(path) = output {
                write_artifact(&path, &report::claims_json(&reports, &header))?;
                if matches!(format, FormatArg::Csv) {
                    let stem = path.with_extension("");
                    let stem = stem.to_string_lossy();
                    let (c1, _) = case1_rows(&grid, &b, &table);
                    let (c2, _) = case2_rows(&grid, &b, &table);
                    write_artifact(
                        Path::new(&format!("{stem}_case1.csv")),
                        &report::case1_csv(&c1, &header),
                    )?;
                    write_artifact(
                        Path::new(&format!("{stem}_case2.csv")),
                        &report::case2_csv(&c2, &header),
                    )?;
                    write_artifact(
                        Path::new(&format!("{stem}_sandwich.csv")),
                        &report::sandwich_csv(
                            &sandwich_rows(&[0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0]),
                            &header,
                        ),
                    )?;
                }
            }
            Ok(())
        }
        Command::Selftest => selftest(),
    }
}

fn selftest() -> Result<(), RunError> {
    let b = ToleranceBudget::default();
    let sign = decomposition_sign();
    println!("decomposition sign: {sign}");

    let sigmas = [0.2, 0.35, 0.5, 0.65, 0.8];
    let ts = [0.5, 5.0, 14.134725, 21.02204, 30.0];
    let mut max_rel: f64 = 0.0;
    let mut max_abs: f64 = 0.0;
    let mut failures = 0usize;
    for &sigma in &sigmas {
        for &t in &ts {
            let s = Complex64::new(sigma, t);
            let omega = eval_omega(s, OmegaRoute::GRoute, &b).map_err(numeric)?;
            let oracle = completed_zeta(s, &b).map_err(numeric)?;
            let abs = (omega.value - oracle).norm();
            let rel = abs / oracle.norm().max(f64::MIN_POSITIVE);
            max_abs = max_abs.max(abs);
            if rel > 1e-8 && abs > b.abs_floor {
                failures += 1;
                eprintln!(
                    "grid point sigma={sigma} t={t}: abs={} rel={}",
                    report::fmt_f64(abs),
                    report::fmt_f64(rel)
                );
            }
            if oracle.norm() > 1e-4 {
                max_rel = max_rel.max(rel);
            }
        }
    }
    println!("oracle grid: max_abs_residual = {}", report::fmt_f64(max_abs));
    println!("oracle grid: max_rel_residual (away from zeros) = {}", report::fmt_f64(max_rel));
    if failures > 0 {
        return Err(RunError::Numeric(format!("{failures} grid points out of tolerance")));
    }
    println!("selftest: PASS");
    Ok(())
}
