//! Parameter grids for the verification sweep.

use serde::Serialize;

use super::{CaseId, TheoremCase};
use crate::kstruve::KStruveParams;
use crate::pathway::PathwayParams;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Default,
    Dense,
    Custom,
}

impl std::str::FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "default" => Ok(GridKind::Default),
            "dense" => Ok(GridKind::Dense),
            _ => Err(Error::InvalidParams(format!("unknown grid '{s}'"))),
        }
    }
}

/// Cartesian product of parameter values for one case.
///
/// `nu_over_k` and `c` apply to the k-Struve cases, `gamma` to the
/// elementary ones; the unused axes are ignored. `ν` is stored relative to
/// `k` so the same axis serves every `k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Grid {
    pub kind: GridKind,
    pub eta: Vec<f64>,
    pub alpha: Vec<f64>,
    pub a: Vec<f64>,
    pub rho: Vec<f64>,
    pub x: Vec<f64>,
    pub k: Vec<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub nu_over_k: Vec<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub c: Vec<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub gamma: Vec<f64>,
}

/// Parameter tuple of one grid point, as reported.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointParams {
    pub eta: f64,
    pub alpha: f64,
    pub a: f64,
    pub rho: f64,
    pub x: f64,
    pub k: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
}

/// A validated case together with its evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub case: TheoremCase,
    pub x: f64,
    pub params: PointParams,
}

fn v(values: &[f64]) -> Vec<f64> {
    values.to_vec()
}

impl Grid {
    pub fn for_case(id: CaseId, kind: GridKind) -> Self {
        match kind {
            GridKind::Dense => Self::dense_for(id),
            _ => Self::default_for(id),
        }
    }

    pub fn default_for(id: CaseId) -> Self {
        let k = if id.is_corollary() { v(&[1.0]) } else { v(&[0.5, 1.0, 2.0]) };
        let mut grid = Grid {
            kind: GridKind::Default,
            eta: v(&[0.5, 1.0, 2.0]),
            alpha: v(&[-0.5, 0.0, 0.5]),
            a: v(&[0.5, 1.0]),
            rho: v(&[0.6, 1.0, 2.0]),
            x: v(&[0.5, 1.0, 2.0]),
            k,
            nu_over_k: Vec::new(),
            c: Vec::new(),
            gamma: Vec::new(),
        };
        if id.trig_kind().is_some() {
            grid.gamma = v(&[0.5, 1.0]);
        } else {
            grid.nu_over_k = v(&[-0.4, 0.5, 1.0]);
            grid.c = v(&[-1.0, 0.5, 1.0]);
        }
        grid
    }

    /// Refinement of [`Grid::default_for`] inside the same parameter ranges.
    pub fn dense_for(id: CaseId) -> Self {
        let k = if id.is_corollary() {
            v(&[1.0])
        } else {
            v(&[0.5, 1.0, 1.5, 2.0])
        };
        let mut grid = Grid {
            kind: GridKind::Dense,
            eta: v(&[0.5, 0.75, 1.0, 1.5, 2.0]),
            alpha: v(&[-0.5, -0.25, 0.0, 0.25, 0.5]),
            a: v(&[0.5, 0.75, 1.0]),
            rho: v(&[0.6, 0.8, 1.0, 1.5, 2.0]),
            x: v(&[0.5, 0.75, 1.0, 1.5, 2.0]),
            k,
            nu_over_k: Vec::new(),
            c: Vec::new(),
            gamma: Vec::new(),
        };
        if id.trig_kind().is_some() {
            grid.gamma = v(&[0.5, 0.75, 1.0]);
        } else {
            grid.nu_over_k = v(&[-0.4, 0.0, 0.5, 1.0]);
            grid.c = v(&[-1.0, -0.5, 0.5, 1.0]);
        }
        grid
    }

    /// Number of points [`Grid::points`] yields for `id`.
    pub fn len(&self, id: CaseId) -> usize {
        let base = self.eta.len()
            * self.alpha.len()
            * self.a.len()
            * self.rho.len()
            * self.x.len()
            * self.k.len();
        if id.trig_kind().is_some() {
            base * self.gamma.len()
        } else {
            base * self.nu_over_k.len() * self.c.len()
        }
    }

    pub fn is_empty(&self, id: CaseId) -> bool {
        self.len(id) == 0
    }

    /// Enumerates the grid in a fixed lexicographic order
    /// `(k, ν/k or γ, c, η, α, a, ρ, x)`.
    pub fn points(&self, id: CaseId) -> Result<Vec<GridPoint>> {
        if self.is_empty(id) {
            return Err(Error::EmptyGrid);
        }
        let mut out = Vec::with_capacity(self.len(id));
        for &k in &self.k {
            let functions: Vec<(Option<f64>, Option<f64>, Option<f64>)> = if id.trig_kind().is_some() {
                self.gamma.iter().map(|&g| (None, None, Some(g))).collect()
            } else {
                self.nu_over_k
                    .iter()
                    .flat_map(|&m| self.c.iter().map(move |&c| (Some(m * k), Some(c), None)))
                    .collect()
            };
            for &(nu, c, gamma) in &functions {
                for &eta in &self.eta {
                    for &alpha in &self.alpha {
                        for &a in &self.a {
                            let pathway = PathwayParams::new(eta, alpha, a)?;
                            for &rho in &self.rho {
                                let case = match gamma {
                                    Some(g) => TheoremCase::trig(id, pathway, rho, k, g)?,
                                    None => {
                                        let s = KStruveParams::new(k, nu.unwrap(), c.unwrap())?;
                                        TheoremCase::struve(id, pathway, rho, s)?
                                    }
                                };
                                for &x in &self.x {
                                    out.push(GridPoint {
                                        case,
                                        x,
                                        params: PointParams {
                                            eta,
                                            alpha,
                                            a,
                                            rho,
                                            x,
                                            k,
                                            nu,
                                            c,
                                            gamma,
                                        },
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}
