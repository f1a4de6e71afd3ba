use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A gamma argument sits on (or within tolerance of) a non-positive integer.
    #[error("gamma pole at argument {arg}")]
    Pole { arg: f64 },

    #[error("result overflows: log-magnitude {log_magnitude}")]
    Overflow { log_magnitude: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A series did not reach the requested tolerance before its term cap.
    #[error("series did not converge within {terms} terms (last term {last_term:e})")]
    NonConvergence { terms: usize, last_term: f64 },

    /// Fox–Wright weights violate `sum(beta) - sum(alpha) > -1`.
    #[error("Fox-Wright convergence condition violated: delta = {delta} <= -1")]
    ConvergenceCondition { delta: f64 },

    #[error("quadrature did not converge: error {error:e} after {intervals} intervals")]
    QuadratureNonConvergence { error: f64, intervals: usize },

    #[error("integrand failed at t = {t}: {source}")]
    Integrand {
        t: f64,
        #[source]
        source: Box<Error>,
    },

    /// Cancellation between series terms leaves less accuracy than requested.
    #[error("cancellation: rounding error {rounding:e} exceeds the error budget {budget:e}")]
    PrecisionLoss { rounding: f64, budget: f64 },

    #[error("empty verification grid")]
    EmptyGrid,
}
