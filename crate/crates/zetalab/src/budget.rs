use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Accuracy and truncation contract handed to every series evaluation.
///
/// `error_estimate` fields in results are absolute; a value passes the budget
/// when its estimate is at most `rel_tol * |value| + abs_floor`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceBudget {
    /// Target relative error.
    pub rel_tol: f64,
    /// Absolute error floor near zeros.
    pub abs_floor: f64,
    /// Cap on the number of terms of the active summation index.
    pub max_terms: usize,
}

impl Default for ToleranceBudget {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_floor: 1e-12, max_terms: 150 }
    }
}

impl ToleranceBudget {
    pub fn new(rel_tol: f64, abs_floor: f64, max_terms: usize) -> Self {
        Self { rel_tol, abs_floor, max_terms }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::Domain(format!("rel_tol must be > 0, got {}", self.rel_tol)));
        }
        if !(self.abs_floor >= 0.0) {
            return Err(Error::Domain(format!("abs_floor must be >= 0, got {}", self.abs_floor)));
        }
        if self.max_terms < 1 {
            return Err(Error::Domain("max_terms must be >= 1".into()));
        }
        Ok(())
    }

    /// Absolute tolerance for a value of the given magnitude.
    pub fn tol_abs(&self, value_abs: f64) -> f64 {
        self.rel_tol * value_abs + self.abs_floor
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_budget() {
        let b = ToleranceBudget::default();
        assert_eq!(b.rel_tol, 1e-10);
        assert_eq!(b.max_terms, 150);
        b.validate().unwrap();
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(ToleranceBudget::new(0.0, 0.0, 10).validate().is_err());
        assert!(ToleranceBudget::new(1e-10, -1.0, 10).validate().is_err());
        assert!(ToleranceBudget::new(1e-10, 0.0, 0).validate().is_err());
    }
}
