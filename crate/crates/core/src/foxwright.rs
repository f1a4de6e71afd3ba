//! The Fox–Wright (generalized Wright) function
//!
//! ```text
//! pΨq[(a_i, α_i); (b_j, β_j) | z] = Σ_{n≥0} Π Γ(a_i + α_i n) / Π Γ(b_j + β_j n) · z^n / n!
//! ```
//!
//! The series is entire when `Σβ_j - Σα_i > -1`; evaluation is refused
//! otherwise. Each term is built from log-gamma values with an explicit sign,
//! so negative non-pole gamma arguments are handled. A lower gamma argument on
//! a pole makes its term vanish (`1/Γ(pole) = 0`).

use serde::{Deserialize, Serialize};

use crate::gamma::{is_pole, ln_gamma_signed};
use crate::sum::CompensatedSum;
use crate::{Error, EvalResult, Result};

/// Series terms summed before giving up.
pub const MAX_TERMS: usize = 20_000;

/// Consecutive below-tolerance terms required before stopping.
const SMALL_RUN: usize = 3;

/// Upper pairs `(a_i, α_i)` and lower pairs `(b_j, β_j)` of `pΨq`.
///
/// Deserializes from `{"upper": [[a, alpha], ...], "lower": [[b, beta], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoxWrightSpec {
    pub upper: Vec<(f64, f64)>,
    pub lower: Vec<(f64, f64)>,
}

impl FoxWrightSpec {
    pub fn new(upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> Result<Self> {
        let spec = Self { upper, lower };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let finite = self
            .upper
            .iter()
            .chain(&self.lower)
            .all(|&(o, w)| o.is_finite() && w.is_finite());
        if finite {
            Ok(())
        } else {
            Err(Error::InvalidParams("Fox-Wright offsets and weights must be finite".into()))
        }
    }

    /// `Σβ_j - Σα_i`.
    pub fn delta(&self) -> f64 {
        let lower: f64 = self.lower.iter().map(|&(_, w)| w).sum();
        let upper: f64 = self.upper.iter().map(|&(_, w)| w).sum();
        lower - upper
    }

    /// Copy with both pair lists sorted by `(weight, offset)`.
    fn canonical(&self) -> Self {
        let key = |a: &(f64, f64), b: &(f64, f64)| a.1.total_cmp(&b.1).then(a.0.total_cmp(&b.0));
        let mut upper = self.upper.clone();
        let mut lower = self.lower.clone();
        upper.sort_by(key);
        lower.sort_by(key);
        Self { upper, lower }
    }

    /// First index from which every positively weighted gamma argument is
    /// positive. Terms before it may vanish or be temporarily small.
    fn asymptotic_start(&self) -> usize {
        self.upper
            .iter()
            .chain(&self.lower)
            .filter(|&&(o, w)| w > 0.0 && o <= 0.0)
            .map(|&(o, w)| (-o / w).floor() as usize + 1)
            .max()
            .unwrap_or(0)
    }

    /// A zero-weight lower pair on a pole annihilates every term.
    fn identically_zero(&self) -> bool {
        self.lower.iter().any(|&(o, w)| w == 0.0 && is_pole(o))
    }
}

/// One series term and the root-sum-square of its log-domain parts, a
/// probabilistic estimate of the term's relative rounding error in units of
/// `eps`.
/// `(0.0, 0.0)` when a lower gamma sits on a pole.
fn term(spec: &FoxWrightSpec, n: usize, ln_abs_z: f64, z_negative: bool) -> Result<(f64, f64)> {
    let nf = n as f64;
    let mut ln_mag = if n == 0 { 0.0 } else { nf * ln_abs_z };
    let mut ln_sq = ln_mag * ln_mag;
    let mut sign = if z_negative && n % 2 == 1 { -1.0 } else { 1.0 };
    let lf = ln_gamma_signed(nf + 1.0).0;
    ln_mag -= lf;
    ln_sq += lf * lf;
    for &(a, alpha) in &spec.upper {
        let arg = a + alpha * nf;
        if is_pole(arg) {
            return Err(Error::Pole { arg });
        }
        let (lg, s) = ln_gamma_signed(arg);
        ln_mag += lg;
        ln_sq += lg * lg;
        sign *= s;
    }
    for &(b, beta) in &spec.lower {
        let arg = b + beta * nf;
        if is_pole(arg) {
            return Ok((0.0, 0.0));
        }
        let (lg, s) = ln_gamma_signed(arg);
        ln_mag -= lg;
        ln_sq += lg * lg;
        sign *= s;
    }
    let v = sign * ln_mag.exp();
    if v.is_finite() {
        Ok((v, ln_sq.sqrt()))
    } else {
        Err(Error::Overflow { log_magnitude: ln_mag })
    }
}

/// Evaluates `pΨq(z)` with `err_estimate ≤ tol · max(1, |value|)`.
///
/// Summation stops once [`SMALL_RUN`] consecutive terms are below
/// `tol · max(1, |partial|)` and the geometric tail bound
/// `|t_n| r/(1 - r)`, `r = |t_n / t_{n-1}| < 1`, plus the rounding estimate
/// fits in the same budget. The reported error is their sum. When the
/// rounding estimate alone exceeds the budget the evaluation fails with
/// [`Error::PrecisionLoss`].
pub fn eval_fox_wright(spec: &FoxWrightSpec, z: f64, tol: f64) -> Result<EvalResult> {
    eval_fox_wright_with_floor(spec, z, tol, 1.0)
}

/// [`eval_fox_wright`] with budget `tol · max(floor, |value|)`.
///
/// A floor below one asks for relative accuracy on small values, as needed
/// when the result is later multiplied by a large prefactor.
pub fn eval_fox_wright_with_floor(spec: &FoxWrightSpec, z: f64, tol: f64, floor: f64) -> Result<EvalResult> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::InvalidParams(format!("tolerance must lie in (0, 1), got {tol}")));
    }
    if !(floor > 0.0 && floor <= 1.0) {
        return Err(Error::InvalidParams(format!("error floor must lie in (0, 1], got {floor}")));
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!("z must be finite, got {z}")));
    }
    spec.validate()?;
    let delta = spec.delta();
    if !(delta > -1.0) {
        return Err(Error::ConvergenceCondition { delta });
    }
    let spec = spec.canonical();
    if spec.identically_zero() {
        return Ok(EvalResult::new(0.0, 0.0, 1));
    }

    let ln_abs_z = z.abs().ln();
    let z_negative = z < 0.0;
    let (first, first_ln) = term(&spec, 0, ln_abs_z, z_negative)?;
    if z == 0.0 {
        return Ok(EvalResult::new(first, 0.0, 1));
    }

    let start = spec.asymptotic_start();
    let mut sum = CompensatedSum::new();
    sum.add(first);
    // Σ |t_n| (2 + L_n) eps: per-term exp/log-gamma rounding plus summation.
    let mut rounding = first.abs() * (2.0 + first_ln) * f64::EPSILON;
    let mut prev = first;
    let mut small_run = 0usize;
    for n in 1..MAX_TERMS {
        let (t, ln_parts) = term(&spec, n, ln_abs_z, z_negative)?;
        sum.add(t);
        rounding += t.abs() * (2.0 + ln_parts) * f64::EPSILON;
        let partial = sum.value();
        let budget = tol * partial.abs().max(floor);
        if t.abs() <= budget {
            small_run += 1;
        } else {
            small_run = 0;
        }
        let ratio = if t == 0.0 {
            0.0
        } else if prev == 0.0 {
            f64::INFINITY
        } else {
            (t / prev).abs()
        };
        if n >= start && small_run >= SMALL_RUN && ratio < 1.0 {
            if rounding > budget {
                return Err(Error::PrecisionLoss { rounding, budget });
            }
            let tail = t.abs() * ratio / (1.0 - ratio);
            if tail + rounding <= budget {
                return Ok(EvalResult::new(partial, tail + rounding, n as u64 + 1));
            }
        }
        prev = t;
    }
    Err(Error::NonConvergence {
        terms: MAX_TERMS,
        last_term: prev,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn spec(upper: &[(f64, f64)], lower: &[(f64, f64)]) -> FoxWrightSpec {
        FoxWrightSpec::new(upper.to_vec(), lower.to_vec()).unwrap()
    }

    #[test]
    fn delta_values() {
        let th1 = spec(&[(2.3, 2.0), (1.0, 1.0)], &[(4.1, 2.0), (1.5, 1.0), (1.5, 1.0)]);
        assert_eq!(th1.delta(), 1.0);
        assert_eq!(spec(&[], &[]).delta(), 0.0);
        let th4 = spec(&[(1.5, 2.0)], &[(3.0, 2.0), (1.5, 1.0)]);
        assert_eq!(th4.delta(), 1.0);
    }

    #[test]
    fn exponential_reductions() {
        let r = eval_fox_wright(&spec(&[(1.0, 1.0)], &[(1.0, 1.0)]), 1.0, 1e-14).unwrap();
        assert!((r.value - E).abs() < 1e-15 * E);
        let r = eval_fox_wright(&spec(&[(1.0, 1.0)], &[(2.0, 1.0)]), 1.0, 1e-14).unwrap();
        assert!((r.value - (E - 1.0)).abs() < 1e-15 * E);
    }

    #[test]
    fn z_zero_is_leading_term() {
        let s = spec(&[(2.5, 2.0), (1.0, 1.0)], &[(3.0, 2.0), (1.5, 1.0)]);
        let r = eval_fox_wright(&s, 0.0, 1e-12).unwrap();
        let expected = crate::gamma::gamma(2.5) / (crate::gamma::gamma(3.0) * crate::gamma::gamma(1.5));
        assert!((r.value - expected).abs() < 1e-15);
        assert_eq!(r.work, 1);
        assert_eq!(r.err_estimate, 0.0);
    }

    #[test]
    fn convergence_condition_enforced() {
        let s = spec(&[(1.0, 1.0), (1.0, 1.0)], &[]);
        assert!(matches!(
            eval_fox_wright(&s, 0.5, 1e-10),
            Err(Error::ConvergenceCondition { .. })
        ));
        // Boundary delta = -1 is rejected too.
        let s = spec(&[(1.0, 1.0)], &[]);
        assert!(matches!(
            eval_fox_wright(&s, 0.5, 1e-10),
            Err(Error::ConvergenceCondition { .. })
        ));
    }

    #[test]
    fn lower_poles_zero_their_terms() {
        // 1/Γ(n - 2): terms n = 0, 1, 2 vanish. Σ_{n≥3} z^n / (n! (n-3)!) at z = 1.
        let s = spec(&[], &[(-2.0, 1.0)]);
        let r = eval_fox_wright(&s, 1.0, 1e-14).unwrap();
        let mut expected = 0.0;
        let mut fact_n = 6.0;
        let mut fact_m = 1.0;
        for n in 3..40 {
            if n > 3 {
                fact_n *= n as f64;
                fact_m *= (n - 3) as f64;
            }
            expected += 1.0 / (fact_n * fact_m);
        }
        assert!((r.value - expected).abs() < 1e-15, "{} vs {expected}", r.value);

        // 1/Γ(1 - n) vanishes for every n ≥ 1.
        let s = spec(&[], &[(1.0, -1.0), (1.0, 1.0)]);
        assert_eq!(eval_fox_wright(&s, 3.0, 1e-12).unwrap().value, 1.0);

        // Zero weight on a pole kills everything.
        let s = spec(&[(1.0, 1.0)], &[(-1.0, 0.0), (1.0, 1.0)]);
        assert_eq!(eval_fox_wright(&s, 3.0, 1e-12).unwrap().value, 0.0);
    }

    #[test]
    fn upper_pole_is_an_error() {
        let s = spec(&[(-1.0, 1.0)], &[(1.0, 1.0)]);
        assert!(matches!(eval_fox_wright(&s, 0.5, 1e-10), Err(Error::Pole { .. })));
    }

    #[test]
    fn negative_gamma_arguments_carry_sign() {
        // Γ(-0.5 + n) / Γ(1 + n) · z^n / n!: n = 0 term is Γ(-0.5) < 0.
        let s = spec(&[(-0.5, 1.0)], &[(1.0, 1.0)]);
        let r = eval_fox_wright(&s, 0.1, 1e-14).unwrap();
        let mut expected = 0.0;
        for n in 0..30 {
            let nf = n as f64;
            let g = crate::gamma::gamma;
            expected += g(-0.5 + nf) / g(1.0 + nf) * 0.1f64.powi(n) / g(1.0 + nf);
        }
        assert!((r.value - expected).abs() < 1e-14 * expected.abs());
        assert!(r.value < 0.0);
    }

    #[test]
    fn pair_order_is_irrelevant() {
        let a = spec(&[(1.3, 2.0), (1.0, 1.0)], &[(2.2, 2.0), (0.7, 1.0), (1.5, 1.0)]);
        let b = spec(&[(1.0, 1.0), (1.3, 2.0)], &[(1.5, 1.0), (2.2, 2.0), (0.7, 1.0)]);
        let ra = eval_fox_wright(&a, -3.7, 1e-12).unwrap();
        let rb = eval_fox_wright(&b, -3.7, 1e-12).unwrap();
        assert_eq!(ra.value.to_bits(), rb.value.to_bits());
        assert_eq!(ra.work, rb.work);
    }

    #[test]
    fn rejects_nonfinite_pairs() {
        assert!(FoxWrightSpec::new(vec![(f64::NAN, 1.0)], vec![]).is_err());
        assert!(FoxWrightSpec::new(vec![], vec![(1.0, f64::INFINITY)]).is_err());
    }
}
