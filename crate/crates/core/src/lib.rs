//! k-Struve functions, the Fox–Wright function and the pathway fractional
//! integral operator.
//!
//! The crate has two sides. The *series* side evaluates the k-Struve function
//! [`kstruve::eval_k_struve`] and the generalized Wright function
//! [`foxwright::eval_fox_wright`]. The *quadrature* side evaluates the pathway
//! operator [`pathway::pathway_integral`] directly from its defining integral.
//! [`identities`] connects the two: each closed-form pathway image of a
//! k-Struve (or trigonometric) integrand is checked against the quadrature.
//!
//! ```
//! use kstruve::kstruve::{eval_k_struve, KStruveParams};
//!
//! // c = 0 keeps only the leading term: (x/2) / Γ(3/2)^2 = 4/π at x = 2.
//! let p = KStruveParams::new(1.0, 0.0, 0.0).unwrap();
//! let r = eval_k_struve(&p, 2.0, 1e-12).unwrap();
//! assert!((r.value - 4.0 / std::f64::consts::PI).abs() < 1e-14);
//! ```

// Coefficient tables keep full-precision digits; `!(x > 0.0)` rejects NaN.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod foxwright;
pub mod gamma;
pub mod identities;
pub mod kgamma;
pub mod kstruve;
pub mod pathway;
pub mod quadrature;
pub mod sum;

mod error;
mod result;

pub use error::{Error, Result};
pub use result::EvalResult;
