use serde::Serialize;

/// Value of a series or quadrature evaluation together with its error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    /// Bound on the absolute truncation (series) or discretization
    /// (quadrature) error. Never negative.
    pub err_estimate: f64,
    /// Terms summed, or integrand evaluations performed. At least 1.
    pub work: u64,
}

impl EvalResult {
    pub(crate) fn new(value: f64, err_estimate: f64, work: u64) -> Self {
        debug_assert!(err_estimate >= 0.0);
        Self {
            value,
            err_estimate,
            work: work.max(1),
        }
    }

    /// Multiplies the value and the error bound by `factor`.
    pub fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            err_estimate: self.err_estimate * factor.abs(),
            work: self.work,
        }
    }
}
