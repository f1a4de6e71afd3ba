//! Compensated summation.

/// Neumaier's variant of Kahan summation.
///
/// Tracks the low-order bits lost by each addition in a separate
/// compensation term, so the accumulated rounding error is independent of
/// the number of summands to first order.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.comp += (self.sum - t) + value;
        } else {
            self.comp += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for v in iter {
            self.add(v);
        }
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_small_terms_lost_by_naive_sum() {
        let values = [1.0, 1e100, 1.0, -1e100];
        let naive: f64 = values.iter().sum();
        let comp: CompensatedSum = values.iter().copied().collect();
        assert_eq!(naive, 0.0);
        assert_eq!(comp.value(), 2.0);
    }

    #[test]
    fn harmonic_tail() {
        let n = 100_000;
        let comp: CompensatedSum = (1..=n).map(|i| 1.0 / i as f64).collect();
        // H_n = ln n + γ + 1/(2n) - 1/(12n^2) + ...
        let nf = n as f64;
        let expected = nf.ln() + 0.577_215_664_901_532_9 + 0.5 / nf - 1.0 / (12.0 * nf * nf);
        assert!((comp.value() - expected).abs() < 1e-15 * expected);
    }
}
