//! The k-Struve function
//!
//! ```text
//! S^k_{ν,c}(x) = Σ_{r≥0} (-c)^r / [Γ_k(rk + ν + 3k/2) Γ(r + 3/2)] · (x/2)^{2r + ν/k + 1}
//! ```
//!
//! and its elementary closed forms at the orders `ν = ±k/2`.
//!
//! The leading term is assembled in log form. Later terms follow from the
//! ratio
//!
//! ```text
//! t_{r+1} / t_r = -c (x/2)^2 / (k (r + ν/k + 3/2) (r + 3/2)),
//! ```
//!
//! which comes from `Γ_k(y + k) = y Γ_k(y)` and `Γ(y + 1) = y Γ(y)`, so no
//! gamma function is evaluated after the first term.

use std::f64::consts::PI;

use crate::gamma::ln_gamma;
use crate::kgamma::{log_k_gamma, KGammaArg};
use crate::sum::CompensatedSum;
use crate::{Error, EvalResult, Result};

/// Series terms summed before giving up.
pub const MAX_TERMS: usize = 10_000;

const LN_GAMMA_3_2: f64 = -0.120_782_237_635_245_222_3;
const LN_MAX: f64 = 709.782_712_893_384;

/// Parameters `(k, ν, c)` of `S^k_{ν,c}`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct KStruveParams {
    pub k: f64,
    pub nu: f64,
    pub c: f64,
}

impl KStruveParams {
    /// Requires `k > 0` and `ν > -3k/2`.
    pub fn new(k: f64, nu: f64, c: f64) -> Result<Self> {
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::InvalidParams(format!("k must be positive, got {k}")));
        }
        if !nu.is_finite() || !c.is_finite() {
            return Err(Error::InvalidParams("nu and c must be finite".into()));
        }
        if !(nu > -1.5 * k) {
            return Err(Error::InvalidParams(format!(
                "nu must exceed -3k/2 = {}, got {nu}",
                -1.5 * k
            )));
        }
        Ok(Self { k, nu, c })
    }

    /// Exponent `ν/k + 1` of `x/2` in the leading term.
    pub fn leading_power(&self) -> f64 {
        self.nu / self.k + 1.0
    }

    /// `ν/k + 3/2`, the reduced gamma argument of the leading term.
    fn base_arg(&self) -> f64 {
        self.nu / self.k + 1.5
    }

    /// `ln` of the constant `1 / (Γ_k(ν + 3k/2) Γ(3/2))`.
    fn ln_leading_constant(&self) -> Result<f64> {
        let lk = log_k_gamma(KGammaArg::new(self.nu + 1.5 * self.k, self.k)?)?;
        Ok(-lk - LN_GAMMA_3_2)
    }

    /// Ratio `t_{r+1} / t_r` at argument `x`.
    #[inline]
    fn term_ratio(&self, r: f64, half_x_sq: f64) -> f64 {
        -self.c * half_x_sq / (self.k * (r + self.base_arg()) * (r + 1.5))
    }
}

/// Sign of `(x/2)^p` for negative `x` when `p` is a nonnegative integer.
fn negative_axis_sign(p: f64) -> f64 {
    if (p as i64) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::InvalidParams(format!("tolerance must lie in (0, 1), got {tol}")));
    }
    Ok(())
}

/// Evaluates `S^k_{ν,c}(x)` with truncation error `≤ tol · max(1, |value|)`.
///
/// For `c > 0` the series alternates and is cut once the terms decrease and
/// the next one is below the tolerance; the alternating-series bound gives
/// the error. For `c < 0` every term is positive and the tail is bounded by
/// a geometric series with the (decreasing) term ratio. `c = 0` leaves only
/// the leading term.
///
/// `err_estimate` is the truncation bound plus a rounding estimate
/// `eps Σ (r + 2) |t_r|` for the ratio recurrence. For large `c x²` the
/// alternating terms grow far beyond the result and the rounding part can
/// exceed the requested tolerance; the estimate then says so.
pub fn eval_k_struve(params: &KStruveParams, x: f64, tol: f64) -> Result<EvalResult> {
    check_tol(tol)?;
    if !x.is_finite() {
        return Err(Error::Domain(format!("x must be finite, got {x}")));
    }
    let p = params.leading_power();
    let p_is_nonneg_int = p >= 0.0 && p == p.floor();

    if x == 0.0 {
        return if p > 0.0 {
            Ok(EvalResult::new(0.0, 0.0, 1))
        } else if p == 0.0 {
            Ok(EvalResult::new(params.ln_leading_constant()?.exp(), 0.0, 1))
        } else {
            Err(Error::Domain(format!(
                "S diverges at x = 0 for nu/k + 1 = {p} < 0"
            )))
        };
    }
    if x < 0.0 && !p_is_nonneg_int {
        return Err(Error::Domain(format!(
            "x = {x} < 0 needs nu/k + 1 to be a nonnegative integer, got {p}"
        )));
    }
    let sign = if x < 0.0 { negative_axis_sign(p) } else { 1.0 };
    let ax = x.abs();

    let ln_scale = p * (0.5 * ax).ln() + params.ln_leading_constant()?;
    if ln_scale > LN_MAX {
        return Err(Error::Overflow { log_magnitude: ln_scale });
    }
    let scale = ln_scale.exp();
    if scale == 0.0 {
        return Ok(EvalResult::new(0.0, 0.0, 1));
    }

    // Terms are kept in units of the leading term.
    let half_x_sq = 0.25 * ax * ax;
    let alternating = params.c >= 0.0;
    let mut sum = CompensatedSum::new();
    let mut term = 1.0_f64;
    sum.add(term);
    let mut weighted_abs = 2.0_f64;
    let mut r = 0usize;
    loop {
        let ratio = params.term_ratio(r as f64, half_x_sq);
        let next = term * ratio;
        if !next.is_finite() {
            return Err(Error::Overflow { log_magnitude: f64::INFINITY });
        }
        let partial = sum.value() * scale;
        let budget = tol * partial.abs().max(1.0);
        let rounding = f64::EPSILON * weighted_abs * scale;
        if alternating {
            // |ratio| decreases in r, so once below one the terms shrink monotonically.
            let err = next.abs() * scale;
            if ratio.abs() < 1.0 && err <= budget {
                return Ok(EvalResult::new(sign * partial, err + rounding, r as u64 + 1));
            }
        } else {
            let following = params.term_ratio(r as f64 + 1.0, half_x_sq);
            if following < 0.5 {
                let err = next * scale / (1.0 - following);
                if err <= tol * partial.abs() {
                    return Ok(EvalResult::new(sign * partial, err + rounding, r as u64 + 1));
                }
            }
        }
        sum.add(next);
        term = next;
        r += 1;
        weighted_abs += (r as f64 + 2.0) * next.abs();
        if r >= MAX_TERMS {
            return Err(Error::NonConvergence {
                terms: MAX_TERMS,
                last_term: term * scale,
            });
        }
    }
}

/// The `r`-th series term evaluated directly from log-gamma values,
/// independent of the ratio recurrence. Requires `x > 0`.
pub fn k_struve_term_direct(params: &KStruveParams, x: f64, r: usize) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("direct term needs x > 0, got {x}")));
    }
    if params.c == 0.0 {
        return if r == 0 { ln_mag_c0(params, x) } else { Ok(0.0) };
    }
    let rf = r as f64;
    let k = params.k;
    let lk = log_k_gamma(KGammaArg::new(rf * k + params.nu + 1.5 * k, k)?)?;
    let ln_mag = rf * params.c.abs().ln() - lk - ln_gamma(rf + 1.5)
        + (2.0 * rf + params.leading_power()) * (0.5 * x).ln();
    let sign = if params.c < 0.0 || r.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(sign * ln_mag.exp())
}

fn ln_mag_c0(params: &KStruveParams, x: f64) -> Result<f64> {
    Ok((params.leading_power() * (0.5 * x).ln() + params.ln_leading_constant()?).exp())
}

/// Iterator over the series terms produced by the ratio recurrence.
pub struct KStruveTerms {
    params: KStruveParams,
    half_x_sq: f64,
    r: usize,
    term: f64,
}

impl KStruveTerms {
    /// Terms at `x > 0`.
    pub fn new(params: &KStruveParams, x: f64) -> Result<Self> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("term iterator needs x > 0, got {x}")));
        }
        let first = ln_mag_c0(params, x)?;
        Ok(Self {
            params: *params,
            half_x_sq: 0.25 * x * x,
            r: 0,
            term: first,
        })
    }
}

impl Iterator for KStruveTerms {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let out = self.term;
        self.term *= self.params.term_ratio(self.r as f64, self.half_x_sq);
        self.r += 1;
        Some(out)
    }
}

/// Elementary functions expressible through k-Struve functions of order `±k/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TrigKind {
    /// `1 - cos(γx/√k)`, order `ν = k/2`, `c = γ²`.
    OneMinusCos,
    /// `cosh(γx/√k) - 1`, order `ν = k/2`, `c = -γ²`.
    CoshMinusOne,
    /// `sin(γx/√k)`, order `ν = -k/2`, `c = γ²`.
    Sin,
    /// `sinh(γx/√k)`, order `ν = -k/2`, `c = -γ²`.
    Sinh,
}

impl TrigKind {
    pub const ALL: [TrigKind; 4] = [
        TrigKind::OneMinusCos,
        TrigKind::CoshMinusOne,
        TrigKind::Sin,
        TrigKind::Sinh,
    ];
}

/// A trigonometric/hyperbolic integrand family together with its scale `γ`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct TrigFunction {
    pub kind: TrigKind,
    pub gamma: f64,
}

impl TrigFunction {
    pub fn new(kind: TrigKind, gamma: f64) -> Self {
        Self { kind, gamma }
    }

    /// The k-Struve parameters whose function reproduces this family.
    pub fn struve_params(&self, k: f64) -> Result<KStruveParams> {
        let g2 = self.gamma * self.gamma;
        match self.kind {
            TrigKind::OneMinusCos => KStruveParams::new(k, 0.5 * k, g2),
            TrigKind::CoshMinusOne => KStruveParams::new(k, 0.5 * k, -g2),
            TrigKind::Sin => KStruveParams::new(k, -0.5 * k, g2),
            TrigKind::Sinh => KStruveParams::new(k, -0.5 * k, -g2),
        }
    }

    /// Factor `F` with `elementary(x) = F · S(x)`.
    ///
    /// `γ √(πx/(2k))` for the sine pair and `γ² √(πx/2)` for the cosine pair.
    pub fn struve_prefactor(&self, k: f64, x: f64) -> f64 {
        match self.kind {
            TrigKind::Sin | TrigKind::Sinh => self.gamma * (PI * x / (2.0 * k)).sqrt(),
            TrigKind::OneMinusCos | TrigKind::CoshMinusOne => {
                self.gamma * self.gamma * (0.5 * PI * x).sqrt()
            }
        }
    }
}

/// The elementary left-hand side: `1 - cos`, `cosh - 1`, `sin` or `sinh` of `γx/√k`.
///
/// The differences with one are formed through half-angle squares so they
/// keep full relative accuracy for small arguments.
pub fn trig_closed_form(f: &TrigFunction, k: f64, x: f64) -> f64 {
    let y = f.gamma * x / k.sqrt();
    match f.kind {
        TrigKind::OneMinusCos => {
            let s = (0.5 * y).sin();
            2.0 * s * s
        }
        TrigKind::CoshMinusOne => {
            let s = (0.5 * y).sinh();
            2.0 * s * s
        }
        TrigKind::Sin => y.sin(),
        TrigKind::Sinh => y.sinh(),
    }
}

/// The k-Struve value implied by the elementary closed form,
/// `S(x) = elementary(x) / F(x)`.
pub fn struve_via_trig(f: &TrigFunction, k: f64, x: f64) -> Result<f64> {
    if !(k > 0.0) {
        return Err(Error::InvalidParams(format!("k must be positive, got {k}")));
    }
    if f.gamma == 0.0 {
        return Err(Error::Domain("gamma = 0 makes the identity singular".into()));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!("identity needs x > 0, got {x}")));
    }
    Ok(trig_closed_form(f, k, x) / f.struve_prefactor(k, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn eval(k: f64, nu: f64, c: f64, x: f64, tol: f64) -> EvalResult {
        eval_k_struve(&KStruveParams::new(k, nu, c).unwrap(), x, tol).unwrap()
    }

    #[test]
    fn c_zero_keeps_leading_term() {
        let r = eval(1.0, 0.0, 0.0, 2.0, 1e-12);
        assert!((r.value - 4.0 / PI).abs() < 1e-15);
        assert_eq!(r.work, 1);
        assert!(r.err_estimate < 1e-15);
    }

    #[test]
    fn sine_order_at_half_pi() {
        // 60-term extended-precision sum: 2/π.
        let r = eval(1.0, -0.5, 1.0, FRAC_PI_2, 1e-14);
        assert!((r.value - std::f64::consts::FRAC_2_PI).abs() < 1e-15);
        assert!(((PI * FRAC_PI_2 / 2.0).sqrt() * r.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn k2_reference() {
        // 50-term extended-precision sum.
        let r = eval(2.0, 1.0, 1.0, 1.5, 1e-14);
        assert!((r.value - 0.333_359_766_812_342_346_7).abs() < 1e-15);
    }

    #[test]
    fn x_zero_cases() {
        assert_eq!(eval(1.0, 0.0, 1.0, 0.0, 1e-10).value, 0.0);
        // ν/k + 1 = 0: the r = 0 constant 1/(Γ_k(k/2) Γ(3/2)) = 1/(√π · √π/2) at k = 1.
        let v = eval(1.0, -1.0, 1.0, 0.0, 1e-10).value;
        assert!((v - 2.0 / PI).abs() < 1e-15);
        let p = KStruveParams::new(1.0, -1.2, 1.0).unwrap();
        assert!(matches!(eval_k_struve(&p, 0.0, 1e-10), Err(Error::Domain(_))));
    }

    #[test]
    fn negative_x() {
        let p = KStruveParams::new(1.0, 0.5, 1.0).unwrap();
        assert!(matches!(eval_k_struve(&p, -1.0, 1e-10), Err(Error::Domain(_))));
        // ν/k + 1 = 1 is odd: S(-x) = -S(x).
        let p = KStruveParams::new(2.0, 0.0, 0.7).unwrap();
        let a = eval_k_struve(&p, 1.3, 1e-13).unwrap().value;
        let b = eval_k_struve(&p, -1.3, 1e-13).unwrap().value;
        assert_eq!(a, -b);
    }

    #[test]
    fn parameter_validation() {
        assert!(KStruveParams::new(0.0, 1.0, 1.0).is_err());
        assert!(KStruveParams::new(1.0, -1.5, 1.0).is_err());
        assert!(KStruveParams::new(2.0, -2.9, 1.0).is_ok());
        let p = KStruveParams::new(1.0, 0.0, 1.0).unwrap();
        assert!(eval_k_struve(&p, 1.0, 0.0).is_err());
        assert!(eval_k_struve(&p, 1.0, 1.5).is_err());
    }

    #[test]
    fn term_cap_reports_nonconvergence() {
        // Terms peak near r ≈ x/2; a cap of 10 000 terms is exceeded long before.
        let p = KStruveParams::new(1.0, 0.0, -1.0).unwrap();
        let r = eval_k_struve(&p, 30_000.0, 1e-10);
        assert!(matches!(r, Err(Error::NonConvergence { .. } | Error::Overflow { .. })));
    }

    #[test]
    fn ratio_path_matches_direct_terms() {
        let p = KStruveParams::new(1.5, 0.4, 0.8).unwrap();
        let x = 2.3;
        let terms: Vec<f64> = KStruveTerms::new(&p, x).unwrap().take(21).collect();
        for r in [1usize, 5, 20] {
            let direct = k_struve_term_direct(&p, x, r).unwrap();
            assert!(((terms[r] - direct) / direct).abs() < 1e-12, "r = {r}");
        }
    }

    #[test]
    fn trig_closed_forms() {
        let f = TrigFunction::new(TrigKind::OneMinusCos, 1.0);
        assert_eq!(trig_closed_form(&f, 1.0, 0.0), 0.0);
        let f = TrigFunction::new(TrigKind::Sinh, 2.0);
        assert_eq!(trig_closed_form(&f, 4.0, 1.0), 1.0f64.sinh());
        let f = TrigFunction::new(TrigKind::Sin, 1.0);
        assert!((trig_closed_form(&f, 1.0, PI / 6.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn struve_via_trig_values() {
        let f = TrigFunction::new(TrigKind::Sin, 1.0);
        let v = struve_via_trig(&f, 1.0, FRAC_PI_2).unwrap();
        assert!((v - 2.0 / PI).abs() < 1e-15);

        let f = TrigFunction::new(TrigKind::OneMinusCos, 1.0);
        let small = struve_via_trig(&f, 1.0, 1e-6).unwrap();
        assert!(small.abs() < 1e-8);

        // S^2_{1,-1}(1) from a 60-term extended-precision sum; equals
        // (cosh(1/√2) - 1) / √(π/2).
        let f = TrigFunction::new(TrigKind::CoshMinusOne, 1.0);
        let v = struve_via_trig(&f, 2.0, 1.0).unwrap();
        assert!((v - 0.207_922_203_031_654_315_6).abs() < 1e-15);

        assert!(struve_via_trig(&f, 2.0, 0.0).is_err());
        assert!(struve_via_trig(&TrigFunction::new(TrigKind::Sin, 0.0), 1.0, 1.0).is_err());
    }
}
