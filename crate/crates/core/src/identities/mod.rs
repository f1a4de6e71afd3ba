//! Pathway images of k-Struve and trigonometric integrands.
//!
//! Every case applies `P^{(η,α)}_{0+}` to `t^{ρ-1} g(t)` where `g` is a
//! k-Struve function (`TH1`, `COR1`) or one of the elementary functions
//! `1 - cos`, `cosh - 1`, `sin`, `sinh` of `γt/√k` (`TH2`..`TH5` and their
//! `k = 1` corollaries). Termwise application of the power-function closed
//! form turns the image into a prefactor times a Fox–Wright function.
//!
//! Two right-hand sides are provided per case:
//!
//! * [`rhs_as_printed`] transcribes the closed forms as originally stated, stray
//!   factors included;
//! * [`rhs_corrected`] is the termwise derivation redone from scratch.
//!
//! [`lhs_quadrature`] evaluates the operator by quadrature and arbitrates
//! between them; [`verify`] sweeps a parameter grid.

mod grid;
mod verify;

pub use grid::{Grid, GridKind, GridPoint, PointParams};
pub use verify::{verify, PointFailure, Status, VerificationReport};

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::foxwright::{eval_fox_wright_with_floor, FoxWrightSpec};
use crate::gamma::ln_gamma;
use crate::kstruve::{eval_k_struve, trig_closed_form, KStruveParams, TrigFunction, TrigKind};
use crate::pathway::{pathway_integral, Fallible, PathwayParams};
use crate::{Error, EvalResult, Result};

/// Identifier of a theorem or corollary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseId {
    Th1,
    Cor1,
    Th2,
    Cor2,
    Th3,
    Cor3,
    Th4,
    Cor4,
    Th5,
    Cor5,
}

impl CaseId {
    pub const ALL: [CaseId; 10] = [
        CaseId::Th1,
        CaseId::Cor1,
        CaseId::Th2,
        CaseId::Cor2,
        CaseId::Th3,
        CaseId::Cor3,
        CaseId::Th4,
        CaseId::Cor4,
        CaseId::Th5,
        CaseId::Cor5,
    ];

    pub fn is_corollary(self) -> bool {
        matches!(
            self,
            CaseId::Cor1 | CaseId::Cor2 | CaseId::Cor3 | CaseId::Cor4 | CaseId::Cor5
        )
    }

    /// The elementary family for `TH2`..`COR5`; `None` for the k-Struve cases.
    pub fn trig_kind(self) -> Option<TrigKind> {
        match self {
            CaseId::Th1 | CaseId::Cor1 => None,
            CaseId::Th2 | CaseId::Cor2 => Some(TrigKind::OneMinusCos),
            CaseId::Th3 | CaseId::Cor3 => Some(TrigKind::CoshMinusOne),
            CaseId::Th4 | CaseId::Cor4 => Some(TrigKind::Sin),
            CaseId::Th5 | CaseId::Cor5 => Some(TrigKind::Sinh),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::Th1 => "th1",
            CaseId::Cor1 => "cor1",
            CaseId::Th2 => "th2",
            CaseId::Cor2 => "cor2",
            CaseId::Th3 => "th3",
            CaseId::Cor3 => "cor3",
            CaseId::Th4 => "th4",
            CaseId::Cor4 => "cor4",
            CaseId::Th5 => "th5",
            CaseId::Cor5 => "cor5",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown case '{s}'")))
    }
}

/// The function multiplying `t^{ρ-1}` under the operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum CaseFunction {
    Struve(KStruveParams),
    Trig { k: f64, gamma: f64 },
}

/// One theorem instance: case, operator parameters, `ρ` and the integrand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoremCase {
    pub id: CaseId,
    pub pathway: PathwayParams,
    pub rho: f64,
    pub function: CaseFunction,
}

impl TheoremCase {
    /// `TH1` (any `k`) or `COR1` (`k = 1`).
    pub fn struve(id: CaseId, pathway: PathwayParams, rho: f64, struve: KStruveParams) -> Result<Self> {
        if !matches!(id, CaseId::Th1 | CaseId::Cor1) {
            return Err(Error::InvalidParams(format!("{id} is not a k-Struve case")));
        }
        Self::check_common(id, rho, struve.k)?;
        // Leading power of the integrand must be integrable at t = 0.
        if !(rho + struve.leading_power() > 0.0) {
            return Err(Error::InvalidParams(format!(
                "rho + nu/k + 1 must be positive, got {}",
                rho + struve.leading_power()
            )));
        }
        Ok(Self {
            id,
            pathway,
            rho,
            function: CaseFunction::Struve(struve),
        })
    }

    /// `TH2`..`TH5` (any `k`) or their corollaries (`k = 1`).
    pub fn trig(id: CaseId, pathway: PathwayParams, rho: f64, k: f64, gamma: f64) -> Result<Self> {
        if id.trig_kind().is_none() {
            return Err(Error::InvalidParams(format!("{id} is not a trigonometric case")));
        }
        Self::check_common(id, rho, k)?;
        if !gamma.is_finite() {
            return Err(Error::InvalidParams(format!("gamma must be finite, got {gamma}")));
        }
        Ok(Self {
            id,
            pathway,
            rho,
            function: CaseFunction::Trig { k, gamma },
        })
    }

    fn check_common(id: CaseId, rho: f64, k: f64) -> Result<()> {
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::InvalidParams(format!("rho must be positive, got {rho}")));
        }
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::InvalidParams(format!("k must be positive, got {k}")));
        }
        if id.is_corollary() && k != 1.0 {
            return Err(Error::InvalidParams(format!("{id} fixes k = 1, got {k}")));
        }
        Ok(())
    }

    pub fn k(&self) -> f64 {
        match self.function {
            CaseFunction::Struve(p) => p.k,
            CaseFunction::Trig { k, .. } => k,
        }
    }

    fn trig_function(&self) -> Option<TrigFunction> {
        match (self.id.trig_kind(), self.function) {
            (Some(kind), CaseFunction::Trig { gamma, .. }) => Some(TrigFunction::new(kind, gamma)),
            _ => None,
        }
    }

    fn struve_params(&self) -> Option<KStruveParams> {
        match self.function {
            CaseFunction::Struve(p) => Some(p),
            CaseFunction::Trig { .. } => None,
        }
    }

    fn gamma_scale(&self) -> f64 {
        match self.function {
            CaseFunction::Trig { gamma, .. } => gamma,
            CaseFunction::Struve(_) => f64::NAN,
        }
    }
}

/// Tolerance of inner k-Struve evaluations relative to the quadrature tolerance.
const SERIES_TOL_FACTOR: f64 = 0.1;

/// Left-hand side `P[t^{ρ-1} g(t)](x)` by quadrature.
///
/// k-Struve integrands are summed to `tol/10`; the elementary families use
/// their closed forms directly.
pub fn lhs_quadrature(case: &TheoremCase, x: f64, tol: f64) -> Result<EvalResult> {
    let rho_m1 = case.rho - 1.0;
    match case.function {
        CaseFunction::Struve(params) => {
            let series_tol = tol * SERIES_TOL_FACTOR;
            let f = Fallible(move |t: f64| {
                let s = eval_k_struve(&params, t, series_tol)?;
                Ok(t.powf(rho_m1) * s.value)
            });
            pathway_integral(&case.pathway, &f, x, tol)
        }
        CaseFunction::Trig { k, .. } => {
            let trig = case.trig_function().expect("trig case");
            let f = move |t: f64| t.powf(rho_m1) * trig_closed_form(&trig, k, t);
            pathway_integral(&case.pathway, &f, x, tol)
        }
    }
}

/// How the ambiguous `[a(1-α)]^{ρ+1/2}` factor of the printed sine/sinh
/// displays is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PrintedReading {
    /// `... x^{ρ+η+1}/2 · [a(1-α)]^{ρ+1/2} ...`
    Multiplied,
    /// `... x^{ρ+η+1} / (2 [a(1-α)]^{ρ+1/2}) ...`
    Divided,
}

/// Prefactor and Fox–Wright data of a closed form.
struct ClosedForm {
    prefactor: f64,
    spec: FoxWrightSpec,
    z: f64,
}

impl ClosedForm {
    fn eval(&self, tol: f64) -> Result<EvalResult> {
        let delta = self.spec.delta();
        if !(delta > -1.0) {
            return Err(Error::ConvergenceCondition { delta });
        }
        if self.prefactor == 0.0 {
            return Ok(EvalResult::new(0.0, 0.0, 1));
        }
        if !self.prefactor.is_finite() {
            return Err(Error::Overflow {
                log_magnitude: f64::INFINITY,
            });
        }
        // Ask the series for accuracy relative to 1/|prefactor| so the scaled
        // result meets tol · max(1, |value|).
        let floor = (1.0 / self.prefactor.abs()).min(1.0);
        Ok(eval_fox_wright_with_floor(&self.spec, self.z, tol, floor)?.scaled(self.prefactor))
    }
}

fn spec(upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> FoxWrightSpec {
    FoxWrightSpec { upper, lower }
}

/// The displayed right-hand side, transcribed as originally stated. The sine and
/// sinh cases use [`PrintedReading::Multiplied`].
pub fn rhs_as_printed(case: &TheoremCase, x: f64, tol: f64) -> Result<EvalResult> {
    rhs_as_printed_with(case, x, tol, PrintedReading::Multiplied)
}

/// [`rhs_as_printed`] with an explicit reading of the sine/sinh prefactor.
/// The reading is ignored by the other cases.
pub fn rhs_as_printed_with(
    case: &TheoremCase,
    x: f64,
    tol: f64,
    reading: PrintedReading,
) -> Result<EvalResult> {
    printed_form(case, x, reading)?.eval(tol)
}

fn printed_form(case: &TheoremCase, x: f64, reading: PrintedReading) -> Result<ClosedForm> {
    let pw = &case.pathway;
    let (eta, alpha, a) = (pw.eta, pw.alpha, pw.a);
    let rho = case.rho;
    let k = case.k();
    let mu = eta / (1.0 - alpha);
    let big_a = a * (1.0 - alpha);
    let a2_1ma2 = a * a * (1.0 - alpha) * (1.0 - alpha);
    let g1mu = ln_gamma(1.0 + mu).exp();
    let sqrt_pi = PI.sqrt();

    let form = match case.id {
        CaseId::Th1 => {
            let p = case.struve_params().expect("struve case");
            let nk = p.nu / k;
            ClosedForm {
                prefactor: x.powf(eta) * (x / big_a).powf(rho + nk + 1.0) * g1mu
                    / (k.powf(nk + 0.5) * 2f64.powf(nk + 1.0)),
                spec: spec(
                    vec![(rho + nk + 1.0, 2.0), (1.0, 1.0)],
                    vec![(rho + nk + mu + 2.0, 2.0), (nk + 1.5, 1.0), (1.5, 1.0)],
                ),
                z: -p.c * x * x / (4.0 * k * a2_1ma2),
            }
        }
        CaseId::Cor1 => {
            let p = case.struve_params().expect("struve case");
            let nu = p.nu;
            ClosedForm {
                prefactor: x.powf(eta) * (x / big_a).powf(rho + nu + 1.0) * g1mu / 2f64.powf(nu + 1.0),
                spec: spec(
                    vec![(rho + nu + 1.0, 2.0), (1.0, 1.0)],
                    vec![(rho + nu + mu + 2.0, 2.0), (nu + 1.5, 1.0), (1.5, 1.0)],
                ),
                z: -p.c * x * x / (4.0 * a2_1ma2),
            }
        }
        CaseId::Th2 | CaseId::Th3 | CaseId::Cor2 | CaseId::Cor3 => {
            let g = case.gamma_scale();
            let scale = if case.id.is_corollary() { g } else { g / (k * k) };
            let sign = if matches!(case.id, CaseId::Th2 | CaseId::Cor2) { -1.0 } else { 1.0 };
            // The corollary-2 argument drops k; the corollary-3 display keeps it.
            let z_k = if case.id == CaseId::Cor2 { 1.0 } else { k };
            ClosedForm {
                prefactor: sqrt_pi * scale * x.powf(eta + rho + 2.0) / (4.0 * big_a.powf(rho + 2.0)) * g1mu,
                spec: spec(
                    vec![(rho + 2.0, 2.0), (1.0, 1.0)],
                    vec![(rho + 3.0 + mu, 2.0), (2.0, 1.0), (1.5, 1.0)],
                ),
                z: sign * g * g * x * x / (4.0 * z_k * a2_1ma2),
            }
        }
        CaseId::Th4 | CaseId::Th5 | CaseId::Cor4 | CaseId::Cor5 => {
            let g = case.gamma_scale();
            let root = if case.id.is_corollary() { sqrt_pi } else { (PI / k).sqrt() };
            let z_k = if case.id.is_corollary() { 1.0 } else { k };
            let sign = if matches!(case.id, CaseId::Th4 | CaseId::Cor4) { -1.0 } else { 1.0 };
            let odd_factor = big_a.powf(rho + 0.5);
            let scaled = match reading {
                PrintedReading::Multiplied => odd_factor,
                PrintedReading::Divided => 1.0 / odd_factor,
            };
            ClosedForm {
                prefactor: g * root * x.powf(rho + eta + 1.0) / 2.0 * scaled * g1mu,
                spec: spec(vec![(rho + 0.5, 2.0)], vec![(rho + mu + 1.5, 2.0), (1.5, 1.0)]),
                z: sign * g * g * x * x / (4.0 * z_k * a2_1ma2),
            }
        }
    };
    Ok(form)
}

/// The closed form derived termwise from the power-function image.
///
/// Corollaries evaluate their theorem's form at `k = 1` through the same
/// code path.
pub fn rhs_corrected(case: &TheoremCase, x: f64, tol: f64) -> Result<EvalResult> {
    corrected_form(case, x)?.eval(tol)
}

fn corrected_form(case: &TheoremCase, x: f64) -> Result<ClosedForm> {
    let pw = &case.pathway;
    let rho = case.rho;
    let k = case.k();
    let mu = pw.mu();
    let big_a = pw.scale();
    // Common argument scale x² / (4k [a(1-α)]²).
    let w = x * x / (4.0 * k * big_a * big_a);
    let ln_g1mu = ln_gamma(1.0 + mu);
    let ln_x = x.ln();
    let ln_a = big_a.ln();

    let form = match case.function {
        CaseFunction::Struve(p) => {
            // Term r: β_r = ρ + ν/k + 1 + 2r, and 1/Γ_k(rk + ν + 3k/2) = k^{-(r + ν/k + 1/2)} / Γ(r + ν/k + 3/2).
            let nk = p.nu / k;
            let beta0 = rho + nk + 1.0;
            let ln_pref = pw.eta * ln_x + beta0 * (ln_x - ln_a) + ln_g1mu
                - (nk + 0.5) * k.ln()
                - (nk + 1.0) * std::f64::consts::LN_2;
            ClosedForm {
                prefactor: ln_pref.exp(),
                spec: spec(
                    vec![(beta0, 2.0), (1.0, 1.0)],
                    vec![(beta0 + mu + 1.0, 2.0), (nk + 1.5, 1.0), (1.5, 1.0)],
                ),
                z: -p.c * w,
            }
        }
        CaseFunction::Trig { gamma: g, .. } => {
            let kind = case.id.trig_kind().expect("trig case");
            match kind {
                TrigKind::OneMinusCos | TrigKind::CoshMinusOne => {
                    // Series Σ_{m≥1} (∓1)^{m+1} (γt/√k)^{2m}/(2m)!, β_r = ρ + 2 + 2r.
                    let beta0 = rho + 2.0;
                    let ln_pref = (pw.eta + beta0) * ln_x - beta0 * ln_a + ln_g1mu;
                    let sign = if kind == TrigKind::OneMinusCos { -1.0 } else { 1.0 };
                    ClosedForm {
                        prefactor: PI.sqrt() * g * g / (4.0 * k) * ln_pref.exp(),
                        spec: spec(
                            vec![(beta0, 2.0), (1.0, 1.0)],
                            vec![(beta0 + mu + 1.0, 2.0), (2.0, 1.0), (1.5, 1.0)],
                        ),
                        z: sign * g * g * w,
                    }
                }
                TrigKind::Sin | TrigKind::Sinh => {
                    // Series Σ (∓1)^r (γt/√k)^{2r+1}/(2r+1)!, β_r = ρ + 1 + 2r.
                    let beta0 = rho + 1.0;
                    let ln_pref = (pw.eta + beta0) * ln_x - beta0 * ln_a + ln_g1mu;
                    let sign = if kind == TrigKind::Sin { -1.0 } else { 1.0 };
                    ClosedForm {
                        prefactor: g * (PI / k).sqrt() / 2.0 * ln_pref.exp(),
                        spec: spec(vec![(beta0, 2.0)], vec![(beta0 + mu + 1.0, 2.0), (1.5, 1.0)]),
                        z: sign * g * g * w,
                    }
                }
            }
        }
    };
    Ok(form)
}

/// Fox–Wright spec of the printed display, for inspection.
pub fn printed_spec(case: &TheoremCase, x: f64) -> Result<(FoxWrightSpec, f64)> {
    let f = printed_form(case, x, PrintedReading::Multiplied)?;
    Ok((f.spec, f.z))
}

/// Fox–Wright spec of the corrected form, for inspection.
pub fn corrected_spec(case: &TheoremCase, x: f64) -> Result<(FoxWrightSpec, f64)> {
    let f = corrected_form(case, x)?;
    Ok((f.spec, f.z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foxwright::eval_fox_wright;
    use crate::pathway::pathway_power_closed;

    fn pw(eta: f64, alpha: f64, a: f64) -> PathwayParams {
        PathwayParams::new(eta, alpha, a).unwrap()
    }

    fn th1(k: f64, nu: f64, c: f64, rho: f64, p: PathwayParams) -> TheoremCase {
        TheoremCase::struve(CaseId::Th1, p, rho, KStruveParams::new(k, nu, c).unwrap()).unwrap()
    }

    #[test]
    fn th1_printed_transcription() {
        let case = th1(2.0, 1.0, 0.7, 1.3, pw(0.5, 0.25, 2.0));
        let x = 1.1;
        let (s, z) = printed_spec(&case, x).unwrap();
        let mu = 0.5 / 0.75;
        assert_eq!(s.upper, vec![(1.3 + 0.5 + 1.0, 2.0), (1.0, 1.0)]);
        assert_eq!(s.lower, vec![(1.3 + 0.5 + mu + 2.0, 2.0), (0.5 + 1.5, 1.0), (1.5, 1.0)]);
        let expected_z = -0.7 * x * x / (4.0 * 2.0 * (4.0 * 0.75 * 0.75));
        assert!((z - expected_z).abs() < 1e-16);
        assert_eq!(s.delta(), 1.0);
    }

    #[test]
    fn th1_pinned_reference() {
        // Extended-precision quadrature of the left side at
        // (k, ν, c, ρ, η, α, a, x) = (1, 1, 1, 1, 1, 0, 1, 1).
        let case = th1(1.0, 1.0, 1.0, 1.0, pw(1.0, 0.0, 1.0));
        let lhs = lhs_quadrature(&case, 1.0, 1e-11).unwrap();
        assert!((lhs.value - 0.017_219_459_475_735_187_44).abs() < 1e-12);
        let printed = rhs_as_printed(&case, 1.0, 1e-13).unwrap();
        let corrected = rhs_corrected(&case, 1.0, 1e-13).unwrap();
        assert!((printed.value - 0.017_219_459_475_735_187_44).abs() < 1e-15);
        assert!((corrected.value - printed.value).abs() < 1e-16);
        // The bare Fox–Wright factor: LHS / prefactor.
        let (s, z) = printed_spec(&case, 1.0).unwrap();
        let psi = eval_fox_wright(&s, z, 1e-14).unwrap();
        assert!((psi.value - 0.068_877_837_902_940_749_75).abs() < 1e-15);
    }

    #[test]
    fn th1_c_zero_reduces_to_power_image() {
        let p = pw(1.5, -0.5, 0.5);
        let case = th1(2.0, 1.0, 0.0, 0.6, p);
        let x = 1.7;
        // With c = 0, S(t) = c0 (t/2)^{ν/k+1}; c0 is S(2).
        let s = KStruveParams::new(2.0, 1.0, 0.0).unwrap();
        let c0 = eval_k_struve(&s, 2.0, 1e-12).unwrap().value;
        let power = s.leading_power();
        let expected = c0 * 0.5f64.powf(power) * pathway_power_closed(&p, 0.6 + power, x).unwrap();
        let lhs = lhs_quadrature(&case, x, 1e-12).unwrap().value;
        let rhs = rhs_corrected(&case, x, 1e-12).unwrap().value;
        assert!(((lhs - expected) / expected).abs() < 1e-10);
        assert!(((rhs - expected) / expected).abs() < 1e-12);
    }

    #[test]
    fn th4_corrected_matches_quadrature() {
        let case = TheoremCase::trig(CaseId::Th4, pw(1.0, 0.0, 1.0), 1.0, 1.0, 1.0).unwrap();
        let lhs = lhs_quadrature(&case, 1.0, 1e-11).unwrap().value;
        // Extended-precision quadrature of ∫_0^1 (1 - t) sin t dt.
        assert!((lhs - 0.158_529_015_192_103_493_3).abs() < 1e-12);
        let rhs = rhs_corrected(&case, 1.0, 1e-12).unwrap().value;
        assert!(((rhs - lhs) / lhs).abs() < 1e-8);
        // Neither reading of the printed display agrees.
        for reading in [PrintedReading::Multiplied, PrintedReading::Divided] {
            let printed = rhs_as_printed_with(&case, 1.0, 1e-12, reading).unwrap().value;
            assert!(((printed - lhs) / lhs).abs() > 1e-3, "{reading:?}");
        }
    }

    #[test]
    fn th5_is_th4_with_flipped_argument() {
        let p = pw(0.7, 0.3, 1.2);
        let th4 = TheoremCase::trig(CaseId::Th4, p, 1.4, 2.0, 0.8).unwrap();
        let th5 = TheoremCase::trig(CaseId::Th5, p, 1.4, 2.0, 0.8).unwrap();
        let (s4, z4) = corrected_spec(&th4, 1.5).unwrap();
        let (s5, z5) = corrected_spec(&th5, 1.5).unwrap();
        assert_eq!(s4, s5);
        assert_eq!(z4, -z5);
        let f4 = corrected_form(&th4, 1.5).unwrap();
        let f5 = corrected_form(&th5, 1.5).unwrap();
        assert_eq!(f4.prefactor, f5.prefactor);
    }

    #[test]
    fn th2_printed_prefactor() {
        let p = pw(1.0, 0.5, 0.5);
        let (g, k, rho, x) = (0.5, 2.0, 0.6, 2.0);
        let case = TheoremCase::trig(CaseId::Th2, p, rho, k, g).unwrap();
        let form = printed_form(&case, x, PrintedReading::Multiplied).unwrap();
        let big_a: f64 = 0.25;
        let expected = PI.sqrt() * (g / (k * k)) * x.powf(1.0 + rho + 2.0)
            / (4.0 * big_a.powf(rho + 2.0))
            * ln_gamma(3.0).exp();
        assert!(((form.prefactor - expected) / expected).abs() < 1e-14);
        // At γk = 1 the printed and derived prefactors coincide.
        let corrected = corrected_form(&case, x).unwrap();
        assert!(((form.prefactor - corrected.prefactor) / expected).abs() < 1e-14);
    }

    #[test]
    fn corollaries_agree_with_theorems_at_k_one() {
        let p = pw(2.0, -0.5, 1.0);
        let x = 1.3;
        let th = th1(1.0, 0.5, -1.0, 1.0, p);
        let cor = TheoremCase::struve(CaseId::Cor1, p, 1.0, KStruveParams::new(1.0, 0.5, -1.0).unwrap())
            .unwrap();
        let a = rhs_as_printed(&th, x, 1e-13).unwrap().value;
        let b = rhs_as_printed(&cor, x, 1e-13).unwrap().value;
        assert!(((a - b) / a).abs() < 1e-13);
        assert_eq!(
            rhs_corrected(&th, x, 1e-13).unwrap().value,
            rhs_corrected(&cor, x, 1e-13).unwrap().value
        );
        for (t, c) in [
            (CaseId::Th2, CaseId::Cor2),
            (CaseId::Th3, CaseId::Cor3),
            (CaseId::Th4, CaseId::Cor4),
            (CaseId::Th5, CaseId::Cor5),
        ] {
            let tc = TheoremCase::trig(t, p, 0.6, 1.0, 0.5).unwrap();
            let cc = TheoremCase::trig(c, p, 0.6, 1.0, 0.5).unwrap();
            let a = rhs_as_printed(&tc, x, 1e-13).unwrap().value;
            let b = rhs_as_printed(&cc, x, 1e-13).unwrap().value;
            assert!(((a - b) / a).abs() < 1e-13, "{t} vs {c}");
            assert_eq!(
                rhs_corrected(&tc, x, 1e-13).unwrap().value,
                rhs_corrected(&cc, x, 1e-13).unwrap().value
            );
        }
    }

    #[test]
    fn gamma_zero_is_identically_zero() {
        let p = pw(1.0, 0.0, 1.0);
        for id in [CaseId::Th2, CaseId::Th3, CaseId::Th4, CaseId::Th5] {
            let case = TheoremCase::trig(id, p, 1.0, 1.0, 0.0).unwrap();
            assert_eq!(lhs_quadrature(&case, 1.0, 1e-10).unwrap().value, 0.0);
            assert_eq!(rhs_as_printed(&case, 1.0, 1e-10).unwrap().value, 0.0);
            assert_eq!(rhs_corrected(&case, 1.0, 1e-10).unwrap().value, 0.0);
        }
    }

    #[test]
    fn case_validation() {
        let p = pw(1.0, 0.0, 1.0);
        assert!(TheoremCase::trig(CaseId::Cor2, p, 1.0, 2.0, 1.0).is_err());
        assert!(TheoremCase::trig(CaseId::Th1, p, 1.0, 1.0, 1.0).is_err());
        assert!(TheoremCase::trig(CaseId::Th2, p, 0.0, 1.0, 1.0).is_err());
        let s = KStruveParams::new(1.0, -1.4, 1.0).unwrap();
        // ρ + ν/k + 1 = 0.1 - 0.4 < 0 is not integrable.
        assert!(TheoremCase::struve(CaseId::Th1, p, 0.1, s).is_err());
        assert_eq!("TH4".parse::<CaseId>().unwrap(), CaseId::Th4);
        assert!("th6".parse::<CaseId>().is_err());
    }
}
