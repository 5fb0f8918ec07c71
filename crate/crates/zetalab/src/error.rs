use std::fmt;

use num_complex::Complex64;

/// Errors surfaced by evaluation and geometry operations.
///
/// Numerical results never silently carry NaN or infinity out of an
/// operation; anything that would produce one maps to a variant here.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument within the pole guard distance of a pole.
    Pole { at: Complex64 },
    /// A series or continued fraction failed to reach tolerance.
    Convergence { what: &'static str, iterations: usize },
    /// Input outside an operation's domain.
    Domain(String),
    /// Root bracket does not straddle a sign change.
    Bracket { t_lo: f64, t_hi: f64 },
    /// Term magnitudes are not strictly decreasing where the circle
    /// construction requires it.
    Monotonicity { index: usize },
    /// A grid or scan point failed; carries the failing ordinate.
    Point { t: f64, source: Box<Error> },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { at } => write!(f, "argument {at} within pole guard of a pole"),
            Error::Convergence { what, iterations } => {
                write!(f, "{what} did not converge within {iterations} iterations")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Bracket { t_lo, t_hi } => {
                write!(f, "no sign change on bracket ({t_lo}, {t_hi})")
            }
            Error::Monotonicity { index } => {
                write!(f, "term magnitudes not strictly decreasing at term {index}")
            }
            Error::Point { t, source } => write!(f, "evaluation failed at t={t}: {source}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
