//! Globally adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! The interval with the largest error estimate is bisected until the summed
//! error meets the tolerance. The split sequence depends only on the
//! integrand, so a looser tolerance stops on a prefix of the same sequence
//! and never costs more evaluations than a tighter one.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::sum::CompensatedSum;
use crate::{Error, EvalResult, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
pub struct QuadratureOptions {
    /// Maximum bisection depth of any subinterval.
    pub max_depth: u32,
    /// Maximum number of live subintervals.
    pub max_intervals: usize,
    /// Number of equal panels the interval is cut into before adapting.
    pub initial_panels: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            max_depth: 40,
            max_intervals: 4000,
            initial_panels: 8,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    // Largest error first; ties broken by position so the order is total.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gauss_kronrod<F>(f: &mut F, a: f64, b: f64, depth: u32) -> Result<Segment>
where
    F: FnMut(f64) -> Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = fc.abs() * WGK[7];
    for (j, (&x, &wk)) in XGK.iter().zip(&WGK).take(7).enumerate() {
        let dx = half * x;
        let f1 = f(center - dx)?;
        let f2 = f(center + dx)?;
        kronrod += wk * (f1 + f2);
        abs_sum += wk * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let value = kronrod * half;
    let roundoff = 50.0 * f64::EPSILON * abs_sum * half.abs();
    let error = ((kronrod - gauss) * half).abs().max(roundoff);
    Ok(Segment {
        a,
        b,
        value,
        error,
        depth,
    })
}

/// Integrates `f` over `[a, b]` until `error ≤ tol · max(1, |value|)`.
///
/// `work` in the result counts integrand evaluations. Fails with
/// [`Error::QuadratureNonConvergence`] when the worst interval can no
/// longer be split (depth or interval cap) before the tolerance is met.
pub fn integrate<F>(mut f: F, a: f64, b: f64, tol: f64, opts: QuadratureOptions) -> Result<EvalResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(tol > 0.0) {
        return Err(Error::InvalidParams(format!("quadrature tolerance must be positive, got {tol}")));
    }
    let mut evals = 0u64;
    let mut counted = |x: f64| {
        evals += 1;
        f(x)
    };

    let panels = opts.initial_panels.max(1);
    let width = (b - a) / panels as f64;
    let mut heap = BinaryHeap::with_capacity(opts.max_intervals);
    let mut value = 0.0;
    let mut error = 0.0;
    for i in 0..panels {
        let lo = a + width * i as f64;
        let hi = if i + 1 == panels { b } else { lo + width };
        let seg = gauss_kronrod(&mut counted, lo, hi, 0)?;
        value += seg.value;
        error += seg.error;
        heap.push(seg);
    }

    loop {
        if error <= tol * value.abs().max(1.0) {
            break;
        }
        let worst = *heap.peek().expect("at least one segment");
        if worst.depth >= opts.max_depth || heap.len() >= opts.max_intervals {
            return Err(Error::QuadratureNonConvergence {
                error,
                intervals: heap.len(),
            });
        }
        heap.pop();
        let mid = 0.5 * (worst.a + worst.b);
        let left = gauss_kronrod(&mut counted, worst.a, mid, worst.depth + 1)?;
        let right = gauss_kronrod(&mut counted, mid, worst.b, worst.depth + 1)?;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Final totals: resum in positional order with compensation.
    let mut segments = heap.into_vec();
    segments.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value: CompensatedSum = segments.iter().map(|s| s.value).collect();
    let error: CompensatedSum = segments.iter().map(|s| s.error).collect();
    Ok(EvalResult::new(value.value(), error.value().max(0.0), evals))
}
