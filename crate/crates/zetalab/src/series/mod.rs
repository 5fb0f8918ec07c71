//! Coefficients, rising factorials, the theta tail, and the series J, f,
//! Ω, ξ with explicit truncation control and error reporting.

mod eval;
mod table;

pub use eval::{
    completed_zeta, decomposition_sign, eval_f, eval_g, eval_j, eval_omega, eval_xi,
    jacobi_theta, lambda_series, rising_factorial, EvalResult, OmegaRoute, RisingFactorial,
    Strategy,
};
pub(crate) use eval::g_sum as g_sum_on_line;
pub use table::{build_coefficient_table, CoefficientTable};
