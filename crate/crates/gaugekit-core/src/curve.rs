//! Time-stamped point sequences on curves, with optional analytic tangents.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg;

/// How close the last sample must be to the first for a curve to count as
/// closed.
pub const CLOSURE_TOL: f64 = 1e-6;

/// A sampled curve `c(tᵢ) = pᵢ`. Closed curves carry the closing duplicate:
/// the last sample repeats the first (within [`CLOSURE_TOL`]).
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    times: Vec<f64>,
    points: Vec<Vec<f64>>,
    tangents: Option<Vec<Vec<f64>>>,
    closed: bool,
}

impl SampledCurve {
    pub fn new(
        times: Vec<f64>,
        points: Vec<Vec<f64>>,
        tangents: Option<Vec<Vec<f64>>>,
        closed: bool,
    ) -> Result<Self> {
        if times.len() != points.len() {
            return Err(Error::DimensionMismatch { expected: times.len(), found: points.len() });
        }
        if times.len() < 2 {
            return Err(Error::TooFewSamples { needed: 2, found: times.len() });
        }
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Numerical("curve times must be strictly increasing"));
        }
        let dim = points[0].len();
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: 0 });
        }
        if let Some(ts) = &tangents {
            if ts.len() != points.len() {
                return Err(Error::DimensionMismatch { expected: points.len(), found: ts.len() });
            }
            if ts.iter().any(|t| t.len() != dim) {
                return Err(Error::DimensionMismatch { expected: dim, found: 0 });
            }
        }
        if closed {
            let gap = linalg::distance(&points[0], &points[points.len() - 1]);
            if gap > CLOSURE_TOL {
                return Err(Error::CurveNotClosed);
            }
        }
        Ok(SampledCurve { times, points, tangents, closed })
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn analytic_tangents(&self) -> Option<&[Vec<f64>]> {
        self.tangents.as_deref()
    }

    /// Tangent vectors at every sample: the analytic ones when the curve
    /// carries them, otherwise centered finite differences (with periodic
    /// wrap for closed curves, one-sided at open ends).
    pub fn tangent_samples(&self) -> Vec<Vec<f64>> {
        if let Some(ts) = &self.tangents {
            return ts.clone();
        }
        let n = self.points.len();
        let mut out = Vec::with_capacity(n);
        if self.closed && n >= 3 {
            // Distinct samples are 0..n-2; the last duplicates the first.
            let m = n - 1;
            let period = self.times[n - 1] - self.times[0];
            for i in 0..m {
                let prev = (i + m - 1) % m;
                let next = (i + 1) % m;
                let mut dt_next = self.times[next] - self.times[i];
                if next <= i {
                    dt_next += period;
                }
                let mut dt_prev = self.times[i] - self.times[prev];
                if prev >= i {
                    dt_prev += period;
                }
                let diff = linalg::sub(&self.points[next], &self.points[prev]);
                out.push(linalg::scale(&diff, 1.0 / (dt_next + dt_prev)));
            }
            out.push(out[0].clone());
        } else {
            for i in 0..n {
                let (lo, hi) = if i == 0 {
                    (0, 1)
                } else if i == n - 1 {
                    (n - 2, n - 1)
                } else {
                    (i - 1, i + 1)
                };
                let dt = self.times[hi] - self.times[lo];
                let diff = linalg::sub(&self.points[hi], &self.points[lo]);
                out.push(linalg::scale(&diff, 1.0 / dt));
            }
        }
        out
    }

    /// The same trace with the opposite orientation. Reversal flips tangent
    /// signs; for an asymmetric gauge the length generally changes.
    pub fn reversed(&self) -> SampledCurve {
        let n = self.times.len();
        let t0 = self.times[0];
        let t_end = self.times[n - 1];
        let times: Vec<f64> = (0..n).map(|i| t0 + (t_end - self.times[n - 1 - i])).collect();
        let points: Vec<Vec<f64>> = self.points.iter().rev().cloned().collect();
        let tangents = self
            .tangents
            .as_ref()
            .map(|ts| ts.iter().rev().map(|t| linalg::neg(t)).collect());
        SampledCurve { times, points, tangents, closed: self.closed }
    }

    /// The dilated curve `α·c`, `α > 0`.
    pub fn scaled(&self, alpha: f64) -> SampledCurve {
        SampledCurve {
            times: self.times.clone(),
            points: self.points.iter().map(|p| linalg::scale(p, alpha)).collect(),
            tangents: self
                .tangents
                .as_ref()
                .map(|ts| ts.iter().map(|t| linalg::scale(t, alpha)).collect()),
            closed: self.closed,
        }
    }
}
