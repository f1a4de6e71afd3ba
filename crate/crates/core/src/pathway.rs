//! The pathway fractional integral operator
//!
//! ```text
//! (P^{(η,α)}_{0+} f)(x) = x^η ∫_0^U (1 - t/U)^{η/(1-α)} f(t) dt,   U = x / (a(1-α)),
//! ```
//!
//! for `α < 1`, evaluated by quadrature, and its closed form on power
//! functions `t^{β-1}`.
//!
//! The integral is rewritten over `u = t/U ∈ (0, 1)` and mapped to the real
//! line with the double-exponential substitution
//! `u = 1 / (1 + exp(-π sinh τ))`. Algebraic endpoint behaviour at either
//! end (the `(1-u)^μ` weight, `t^{ρ-1}` factors in `f`) turns into double
//! exponential decay in `τ`, and the transformed integrand is integrated by
//! adaptive Gauss–Kronrod quadrature. Both `u` and `1 - u` are computed
//! without cancellation, so `f` is only ever sampled strictly inside
//! `(0, U)`.

use std::f64::consts::PI;

use crate::gamma::ln_gamma;
use crate::quadrature::{integrate, QuadratureOptions};
use crate::{Error, EvalResult, Result};

const LN_MAX: f64 = 709.782_712_893_384;

/// `π sinh τ` at the truncation point. `u` and `1 - u` stay above `e^{-600}`.
const DE_EXPONENT_LIMIT: f64 = 600.0;

/// Parameters `(η, α, a)` of `P^{(η,α)}_{0+}` with scale `a`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PathwayParams {
    pub eta: f64,
    pub alpha: f64,
    pub a: f64,
}

impl PathwayParams {
    /// Requires `α < 1`, `a > 0`, `η > 0` (hence `η/(1-α) > -1`).
    pub fn new(eta: f64, alpha: f64, a: f64) -> Result<Self> {
        if !(alpha < 1.0) || !alpha.is_finite() {
            return Err(Error::InvalidParams(format!(
                "pathway parameter alpha must be < 1, got {alpha}"
            )));
        }
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::InvalidParams(format!("a must be positive, got {a}")));
        }
        if !(eta > 0.0) || !eta.is_finite() {
            return Err(Error::InvalidParams(format!("eta must be positive, got {eta}")));
        }
        let p = Self { eta, alpha, a };
        if !(p.mu() > -1.0) {
            return Err(Error::InvalidParams(format!(
                "eta/(1-alpha) must exceed -1, got {}",
                p.mu()
            )));
        }
        Ok(p)
    }

    /// Weight exponent `μ = η/(1-α)`.
    pub fn mu(&self) -> f64 {
        self.eta / (1.0 - self.alpha)
    }

    /// `a(1-α)`.
    pub fn scale(&self) -> f64 {
        self.a * (1.0 - self.alpha)
    }

    /// Upper integration limit `U = x / (a(1-α))`.
    pub fn upper_limit(&self, x: f64) -> f64 {
        x / self.scale()
    }
}

/// The function `f` under the operator.
pub trait Integrand: Sync {
    fn eval(&self, t: f64) -> Result<f64>;
}

impl<F> Integrand for F
where
    F: Fn(f64) -> f64 + Sync,
{
    fn eval(&self, t: f64) -> Result<f64> {
        Ok(self(t))
    }
}

/// Wraps a fallible closure as an [`Integrand`].
pub struct Fallible<F>(pub F);

impl<F> Integrand for Fallible<F>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    fn eval(&self, t: f64) -> Result<f64> {
        (self.0)(t)
    }
}

/// `ln(1 + e^s)` without overflow.
#[inline]
fn softplus(s: f64) -> f64 {
    s.max(0.0) + (-s.abs()).exp().ln_1p()
}

/// Evaluates `(P^{(η,α)}_{0+} f)(x)` with `err_estimate ≤ tol · max(1, |value|)`.
///
/// Integrand failures are reported as [`Error::Integrand`] with the
/// offending `t`.
pub fn pathway_integral<I: Integrand + ?Sized>(
    params: &PathwayParams,
    f: &I,
    x: f64,
    tol: f64,
) -> Result<EvalResult> {
    pathway_integral_with(params, f, x, tol, QuadratureOptions::default())
}

pub fn pathway_integral_with<I: Integrand + ?Sized>(
    params: &PathwayParams,
    f: &I,
    x: f64,
    tol: f64,
    opts: QuadratureOptions,
) -> Result<EvalResult> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("pathway integral needs x > 0, got {x}")));
    }
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::InvalidParams(format!("tolerance must lie in (0, 1), got {tol}")));
    }
    let upper = params.upper_limit(x);
    let exponent = params.mu() + 1.0;
    // x^η U, folded into the integrand so the tolerance applies to the result.
    let outer = x.powf(params.eta) * upper;
    if !outer.is_finite() {
        return Err(Error::Overflow {
            log_magnitude: params.eta * x.ln() + upper.ln(),
        });
    }
    let below_upper = upper.next_down();
    let tau_max = (DE_EXPONENT_LIMIT / PI).asinh();

    let transformed = |tau: f64| -> Result<f64> {
        let s = PI * tau.sinh();
        // u = 1/(1 + e^{-s}), 1 - u = 1/(1 + e^{s}), du/dτ = π cosh τ · u (1 - u).
        let ln_u = -softplus(-s);
        let ln_v = -softplus(s);
        let log_weight = ln_u + exponent * ln_v + (PI * tau.cosh()).ln();
        let weight = log_weight.exp();
        if weight == 0.0 {
            return Ok(0.0);
        }
        let t = if s <= 0.0 {
            upper * ln_u.exp()
        } else {
            upper - upper * ln_v.exp()
        };
        let t = t.clamp(f64::MIN_POSITIVE, below_upper);
        let value = f.eval(t).map_err(|e| Error::Integrand {
            t,
            source: Box::new(e),
        })?;
        if !value.is_finite() {
            return Err(Error::Integrand {
                t,
                source: Box::new(Error::Domain(format!("integrand returned {value}"))),
            });
        }
        Ok(outer * weight * value)
    };

    integrate(transformed, -tau_max, tau_max, tol, opts)
}

/// Closed form of the operator on `t^{β-1}`:
///
/// ```text
/// x^{η+β} / (a(1-α))^β · Γ(β) Γ(1 + η/(1-α)) / Γ(1 + η/(1-α) + β)
/// ```
///
/// assembled in log-gamma form.
pub fn pathway_power_closed(params: &PathwayParams, beta: f64, x: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::Domain(format!("power closed form needs beta > 0, got {beta}")));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!("power closed form needs x > 0, got {x}")));
    }
    let mu = params.mu();
    let ln_value = (params.eta + beta) * x.ln() - beta * params.scale().ln() + ln_gamma(beta)
        + ln_gamma(1.0 + mu)
        - ln_gamma(1.0 + mu + beta);
    if ln_value > LN_MAX {
        return Err(Error::Overflow { log_magnitude: ln_value });
    }
    Ok(ln_value.exp())
}
