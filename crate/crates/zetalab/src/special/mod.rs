//! Reference special functions the series laboratory is checked against:
//! complex gamma, upper/lower incomplete gamma, real complementary error
//! function, and zeta in the half-plane Re(s) > 0.
//!
//! Everything here is a pure function of its inputs and safe to call from
//! any number of threads.

mod erf;
mod gamma;
mod incgamma;
mod zeta;

pub use erf::erfc_real;
pub use gamma::{gamma_complex, ln_gamma_real};
pub use incgamma::{lower_incomplete_gamma, upper_incomplete_gamma};
pub use zeta::{acceleration_order, zeta_reference, zeta_with_order};

/// Guard distance around poles of gamma and zeta.
pub const POLE_GUARD: f64 = 1e-8;
