//! Grid sweep comparing quadrature against both closed forms.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::grid::{Grid, GridPoint, PointParams};
use super::{lhs_quadrature, rhs_as_printed_with, rhs_corrected, CaseId, PrintedReading};
use crate::{Error, Result};

/// Component tolerance (quadrature and Fox–Wright) relative to the
/// verification tolerance.
const COMPONENT_TOL_FACTOR: f64 = 1e-3;

/// Rounding allowance added to the error estimates when comparing the two
/// closed forms with each other.
const ROUNDOFF_FLOOR: f64 = 64.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "CONFIRMED")]
    Confirmed,
    #[serde(rename = "PRINTED_MISMATCH")]
    PrintedMismatch,
    #[serde(rename = "FAIL")]
    Failed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Confirmed => "CONFIRMED",
            Status::PrintedMismatch => "PRINTED_MISMATCH",
            Status::Failed => "FAIL",
        }
    }
}

/// A grid point whose evaluation raised an error.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointFailure {
    pub point: PointParams,
    pub stage: &'static str,
    pub error: String,
}

fn finite_or_null<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else {
        s.serialize_none()
    }
}

/// Outcome of [`verify`] for one case.
///
/// Relative errors use the denominator `max(1, |lhs|)`. `status` is
/// `CONFIRMED` when both closed forms are within `tolerance` everywhere,
/// `PRINTED_MISMATCH` when only the corrected one is, and `FAIL` otherwise
/// or when any point could not be evaluated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub case: CaseId,
    pub grid: Grid,
    pub points: usize,
    pub tolerance: f64,
    #[serde(serialize_with = "finite_or_null")]
    pub max_rel_err_printed: f64,
    #[serde(serialize_with = "finite_or_null")]
    pub max_rel_err_corrected: f64,
    /// Largest `|printed - corrected| / max(1, |corrected|)`.
    #[serde(serialize_with = "finite_or_null")]
    pub max_rel_gap_printed_corrected: f64,
    /// Whether the two closed forms agree within their combined error
    /// estimates (plus rounding) at every point.
    pub printed_agrees_within_estimates: bool,
    /// Point of largest corrected-form error.
    pub worst_point: Option<PointParams>,
    /// Point of largest printed-form error.
    pub worst_point_printed: Option<PointParams>,
    /// Reading of the ambiguous sine/sinh prefactor that fits best.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed_reading: Option<PrintedReading>,
    pub failures: Vec<PointFailure>,
    pub status: Status,
}

struct Readings {
    rel_err: f64,
    gap: f64,
    within: bool,
}

struct Outcome {
    corrected_err: f64,
    printed: Vec<Readings>,
}

fn readings_for(id: CaseId) -> &'static [PrintedReading] {
    match id {
        CaseId::Th4 | CaseId::Th5 | CaseId::Cor4 | CaseId::Cor5 => {
            &[PrintedReading::Multiplied, PrintedReading::Divided]
        }
        _ => &[PrintedReading::Multiplied],
    }
}

fn evaluate(point: &GridPoint, tol: f64) -> std::result::Result<Outcome, Box<PointFailure>> {
    let fail = |stage: &'static str, e: Error| Box::new(PointFailure {
        point: point.params,
        stage,
        error: e.to_string(),
    });
    let component_tol = tol * COMPONENT_TOL_FACTOR;
    let lhs = lhs_quadrature(&point.case, point.x, component_tol).map_err(|e| fail("lhs", e))?;
    let corrected = rhs_corrected(&point.case, point.x, component_tol).map_err(|e| fail("corrected", e))?;
    let denom = lhs.value.abs().max(1.0);
    let corrected_err = (corrected.value - lhs.value).abs() / denom;
    if !corrected_err.is_finite() {
        return Err(fail("corrected", Error::Domain("non-finite discrepancy".into())));
    }
    let printed = readings_for(point.case.id)
        .iter()
        .map(|&reading| match rhs_as_printed_with(&point.case, point.x, component_tol, reading) {
            Ok(p) => {
                let diff = (p.value - corrected.value).abs();
                let scale = corrected.value.abs().max(1.0);
                let rel_err = (p.value - lhs.value).abs() / denom;
                Readings {
                    rel_err: if rel_err.is_finite() { rel_err } else { f64::INFINITY },
                    gap: if diff.is_finite() { diff / scale } else { f64::INFINITY },
                    within: diff <= p.err_estimate + corrected.err_estimate + ROUNDOFF_FLOOR * scale,
                }
            }
            // A printed display that cannot be evaluated does not match.
            Err(_) => Readings {
                rel_err: f64::INFINITY,
                gap: f64::INFINITY,
                within: false,
            },
        })
        .collect();
    Ok(Outcome {
        corrected_err,
        printed,
    })
}

/// Sweeps `grid` for case `id` at verification tolerance `tol`.
///
/// Points are evaluated in parallel and merged in grid order, so the report
/// does not depend on scheduling. Per-point errors are collected in
/// `failures` without stopping the sweep.
pub fn verify(id: CaseId, grid: &Grid, tol: f64) -> Result<VerificationReport> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::InvalidParams(format!("tolerance must lie in (0, 1), got {tol}")));
    }
    let points = grid.points(id)?;
    let outcomes: Vec<_> = points.par_iter().map(|p| evaluate(p, tol)).collect();

    let readings = readings_for(id);
    let mut failures = Vec::new();
    let mut max_corrected = 0.0f64;
    let mut worst_point = None;
    let mut max_printed = vec![0.0f64; readings.len()];
    let mut worst_printed = vec![None; readings.len()];
    let mut max_gap = vec![0.0f64; readings.len()];
    let mut within = vec![true; readings.len()];

    for (point, outcome) in points.iter().zip(outcomes) {
        let outcome = match outcome {
            Ok(o) => o,
            Err(f) => {
                failures.push(*f);
                continue;
            }
        };
        if worst_point.is_none() || outcome.corrected_err > max_corrected {
            max_corrected = outcome.corrected_err;
            worst_point = Some(point.params);
        }
        for (i, r) in outcome.printed.iter().enumerate() {
            if worst_printed[i].is_none() || r.rel_err > max_printed[i] {
                max_printed[i] = r.rel_err;
                worst_printed[i] = Some(point.params);
            }
            max_gap[i] = max_gap[i].max(r.gap);
            within[i] &= r.within;
        }
    }

    // Best reading: smallest maximum error, first on ties.
    let best = (0..readings.len())
        .min_by(|&i, &j| max_printed[i].total_cmp(&max_printed[j]))
        .unwrap_or(0);
    let max_rel_err_printed = if failures.len() == points.len() {
        f64::INFINITY
    } else {
        max_printed[best]
    };
    let status = if !failures.is_empty() || !(max_corrected <= tol) {
        Status::Failed
    } else if max_rel_err_printed <= tol {
        Status::Confirmed
    } else {
        Status::PrintedMismatch
    };

    Ok(VerificationReport {
        case: id,
        grid: grid.clone(),
        points: points.len(),
        tolerance: tol,
        max_rel_err_printed,
        max_rel_err_corrected: if worst_point.is_some() { max_corrected } else { f64::INFINITY },
        max_rel_gap_printed_corrected: max_gap[best],
        printed_agrees_within_estimates: worst_point.is_some() && within[best],
        worst_point,
        worst_point_printed: worst_printed[best],
        printed_reading: (readings.len() > 1).then(|| readings[best]),
        failures,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::GridKind;

    fn small_grid(id: CaseId) -> Grid {
        let mut g = Grid::default_for(id);
        g.kind = GridKind::Custom;
        g.eta = vec![1.0];
        g.alpha = vec![0.0, 0.5];
        g.a = vec![1.0];
        g.rho = vec![1.0];
        g.x = vec![1.0];
        g
    }

    #[test]
    fn th1_small_grid_confirmed() {
        let r = verify(CaseId::Th1, &small_grid(CaseId::Th1), 1e-6).unwrap();
        assert!(r.failures.is_empty(), "{:?}", r.failures);
        assert_eq!(r.status, Status::Confirmed);
        assert!(r.printed_agrees_within_estimates);
    }

    #[test]
    fn sine_case_prints_mismatch() {
        let r = verify(CaseId::Th4, &small_grid(CaseId::Th4), 1e-6).unwrap();
        assert_eq!(r.status, Status::PrintedMismatch);
        assert!(r.max_rel_err_corrected <= 1e-6);
        assert!(r.printed_reading.is_some());
    }

    #[test]
    fn empty_grid_is_rejected() {
        let mut g = small_grid(CaseId::Th2);
        g.x.clear();
        assert!(matches!(verify(CaseId::Th2, &g, 1e-6), Err(Error::EmptyGrid)));
    }

    #[test]
    fn report_is_deterministic() {
        let g = small_grid(CaseId::Th3);
        assert_eq!(verify(CaseId::Th3, &g, 1e-6).unwrap(), verify(CaseId::Th3, &g, 1e-6).unwrap());
    }
}
