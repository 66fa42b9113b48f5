//! Gauge evaluation and the metric quantities it induces: asymmetric
//! distances, point–line distance, the symmetrized norm, and curve length.

use alloc::vec;
use alloc::vec::Vec;

use crate::body::Body;
use crate::curve::SampledCurve;
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::lp;

/// Tolerance in `t` for one-dimensional convex minimization on smooth
/// bodies.
const LINE_SEARCH_TOL: f64 = 1e-10;

/// A line `{ p₀ + t·u : t ∈ ℝ }`.
#[derive(Debug, Clone, PartialEq)]
pub struct Line {
    point: Vec<f64>,
    direction: Vec<f64>,
}

impl Line {
    pub fn new(point: Vec<f64>, direction: Vec<f64>) -> Result<Self> {
        if point.len() != direction.len() {
            return Err(Error::DimensionMismatch { expected: point.len(), found: direction.len() });
        }
        if linalg::is_zero(&direction, 0.0) {
            return Err(Error::ZeroVector);
        }
        Ok(Line { point, direction })
    }

    pub fn point(&self) -> &[f64] {
        &self.point
    }

    pub fn direction(&self) -> &[f64] {
        &self.direction
    }
}

/// Result of minimizing the gauge over a line.
#[derive(Debug, Clone, PartialEq)]
pub struct LineMin {
    pub t: f64,
    pub value: f64,
}

/// Result of minimizing the gauge over an affine slice `x + span(dirs)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceMin {
    /// Coefficients of the minimizer in the slice directions.
    pub shift: Vec<f64>,
    pub value: f64,
    /// The minimizing point itself.
    pub point: Vec<f64>,
}

/// Point-to-line distance with the attaining foot point.
#[derive(Debug, Clone, PartialEq)]
pub struct PointLineDistance {
    pub distance: f64,
    pub foot: Vec<f64>,
}

/// A gauge `γ_K`, carried by its unit ball.
#[derive(Debug, Clone, PartialEq)]
pub struct Gauge {
    body: Body,
}

impl Gauge {
    pub fn new(body: Body) -> Self {
        Gauge { body }
    }

    pub fn body(&self) -> &Body {
        &self.body
    }

    pub fn dim(&self) -> usize {
        self.body.dim()
    }

    /// `γ_K(x) = inf { λ ≥ 0 : x ∈ λK }`.
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        self.body.gauge_value(x)
    }

    /// The induced distance `d(x, y) = γ(y - x)`: translation invariant but
    /// generally not symmetric.
    pub fn distance(&self, from: &[f64], to: &[f64]) -> Result<f64> {
        if from.len() != to.len() {
            return Err(Error::DimensionMismatch { expected: from.len(), found: to.len() });
        }
        self.eval(&linalg::sub(to, from))
    }

    /// `‖x‖ = γ(x) + γ(-x)`: a genuine norm.
    pub fn symmetrized_norm(&self, x: &[f64]) -> Result<f64> {
        Ok(self.eval(x)? + self.eval(&linalg::neg(x))?)
    }

    /// The gauge of the reflected body: `γ_{-K}(x) = γ_K(-x)`.
    pub fn opposite_eval(&self, x: &[f64]) -> Result<f64> {
        self.eval(&linalg::neg(x))
    }

    /// Minimize `t ↦ γ(base + t·dir)`: an exact linear program for
    /// polytopes, golden-section search for smooth bodies.
    pub fn min_on_line(&self, base: &[f64], dir: &[f64]) -> Result<LineMin> {
        if linalg::is_zero(dir, 0.0) {
            return Err(Error::ZeroVector);
        }
        let m = self.min_on_slice(base, core::slice::from_ref(&dir.to_vec()))?;
        Ok(LineMin { t: m.shift[0], value: m.value })
    }

    /// Minimize the gauge over the affine slice `base + span(dirs)`.
    pub fn min_on_slice(&self, base: &[f64], dirs: &[Vec<f64>]) -> Result<SliceMin> {
        let d = self.dim();
        if base.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: base.len() });
        }
        for dir in dirs {
            if dir.len() != d {
                return Err(Error::DimensionMismatch { expected: d, found: dir.len() });
            }
            if linalg::is_zero(dir, 0.0) {
                return Err(Error::ZeroVector);
            }
        }
        let assemble = |shift: &[f64]| -> Vec<f64> {
            let mut p = base.to_vec();
            for (c, dir) in shift.iter().zip(dirs) {
                linalg::axpy(&mut p, *c, dir);
            }
            p
        };
        let (value, shift) = match &self.body {
            Body::Halfspaces(h) => lp::min_halfspace_gauge_on_slice(h.normals(), base, dirs)?,
            Body::Vertices(v) => lp::min_vertex_gauge_on_slice(v.vertices(), base, dirs)?,
            Body::Smooth(s) => {
                if dirs.len() == 1 {
                    let f = |t: f64| crate::float::sqrt(s.level(&assemble(&[t])));
                    let t = golden_section_min(f, LINE_SEARCH_TOL);
                    (f(t), vec![t])
                } else {
                    // Normal equations for the quadratic level function:
                    // minimize (base + Bt)ᵀQ(base + Bt) ⇒ BᵀQB t = -BᵀQ base.
                    let b = Mat::from_cols(dirs)?;
                    let qb = s.matrix().matmul(&b);
                    let btqb = b.transpose().matmul(&qb).symmetrized();
                    let rhs = linalg::neg(&b.transpose().matvec(&s.matrix().matvec(base)));
                    let l = btqb.cholesky()?;
                    let t = linalg::cholesky_solve(&l, &rhs);
                    let value = crate::float::sqrt(s.level(&assemble(&t)));
                    (value, t)
                }
            }
        };
        let point = assemble(&shift);
        Ok(SliceMin { shift, value, point })
    }

    /// Distance from a point to a line: the smallest `r` with
    /// `B_p(r) ∩ ℓ ≠ ∅`; the line supports that ball at the returned foot.
    pub fn point_line_distance(&self, p: &[f64], line: &Line) -> Result<PointLineDistance> {
        let base = linalg::sub(line.point(), p);
        let m = self.min_on_line(&base, line.direction())?;
        let mut foot = line.point().to_vec();
        linalg::axpy(&mut foot, m.t, line.direction());
        Ok(PointLineDistance { distance: m.value, foot })
    }

    /// Length `∫ γ(c'(t)) dt` by trapezoid quadrature over the sample grid,
    /// with tangents from the curve (analytic when present, centered
    /// differences otherwise). Orientation matters for asymmetric gauges.
    pub fn curve_length(&self, curve: &SampledCurve) -> Result<f64> {
        if curve.len() < 3 {
            return Err(Error::TooFewSamples { needed: 3, found: curve.len() });
        }
        if curve.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: curve.dim() });
        }
        let tangents = curve.tangent_samples();
        let mut speeds = Vec::with_capacity(tangents.len());
        for t in &tangents {
            speeds.push(self.eval(t)?);
        }
        let times = curve.times();
        let mut length = 0.0;
        for i in 0..times.len() - 1 {
            length += 0.5 * (speeds[i] + speeds[i + 1]) * (times[i + 1] - times[i]);
        }
        Ok(length)
    }
}

/// Golden-section minimization of a convex function over the reals; the
/// bracket is grown by doubling from `[-1, 1]`.
pub(crate) fn golden_section_min<F: Fn(f64) -> f64>(f: F, tol: f64) -> f64 {
    let mut a = -1.0;
    let mut b = 1.0;
    let mut m = 0.0;
    let mut fa = f(a);
    let mut fb = f(b);
    let mut fm = f(m);
    let mut width = 1.0;
    for _ in 0..200 {
        if fa < fm {
            b = m;
            fb = fm;
            m = a;
            fm = fa;
            width *= 2.0;
            a = m - width;
            fa = f(a);
        } else if fb < fm {
            a = m;
            fa = fm;
            m = b;
            fm = fb;
            width *= 2.0;
            b = m + width;
            fb = f(b);
        } else {
            break;
        }
    }
    let inv_phi = 0.618_033_988_749_894_9;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::{v_to_h_2d, SmoothBody};
    use crate::rng::SplitMix64;
    use crate::sampling;
    use approx::assert_relative_eq;

    fn triangle_gauge() -> Gauge {
        Gauge::new(Body::Vertices(sampling::equilateral_triangle()))
    }

    #[test]
    fn triangle_gauge_values() {
        let g = triangle_gauge();
        assert_relative_eq!(g.eval(&[0.0, 2.0]).unwrap(), 1.0, epsilon = 1e-10);
        assert_relative_eq!(g.eval(&[0.0, -2.0]).unwrap(), 2.0, epsilon = 1e-10);
        assert_relative_eq!(g.eval(&[1.0, 0.0]).unwrap(), 3.0f64.sqrt() / 2.0, epsilon = 1e-10);
        assert_relative_eq!(g.eval(&[0.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn distances_are_asymmetric_but_triangular() {
        let g = triangle_gauge();
        assert_relative_eq!(g.distance(&[0.0, 0.0], &[0.0, 2.0]).unwrap(), 1.0, epsilon = 1e-10);
        assert_relative_eq!(g.distance(&[0.0, 2.0], &[0.0, 0.0]).unwrap(), 2.0, epsilon = 1e-10);
        let mut rng = SplitMix64::new(2);
        for _ in 0..200 {
            let x = rng.point(2, 3.0);
            let y = rng.point(2, 3.0);
            let z = rng.point(2, 3.0);
            let dxz = g.distance(&x, &z).unwrap();
            let dxy = g.distance(&x, &y).unwrap();
            let dyz = g.distance(&y, &z).unwrap();
            assert!(dxz <= dxy + dyz + 1e-10);
            assert_relative_eq!(g.distance(&x, &x).unwrap(), 0.0);
            // Translation invariance.
            let shift = rng.point(2, 2.0);
            let xs = linalg::add(&x, &shift);
            let zs = linalg::add(&z, &shift);
            assert_relative_eq!(g.distance(&xs, &zs).unwrap(), dxz, epsilon = 1e-9);
        }
    }

    #[test]
    fn point_line_distances_show_asymmetry() {
        let g = triangle_gauge();
        let vertical = Line::new(vec![2.0, 0.0], vec![0.0, 1.0]).unwrap();
        let d = g.point_line_distance(&[0.0, 0.0], &vertical).unwrap();
        assert_relative_eq!(d.distance, 2.0 / 3.0f64.sqrt(), epsilon = 1e-9);

        let top = Line::new(vec![0.0, 3.0], vec![1.0, 0.0]).unwrap();
        let d = g.point_line_distance(&[0.0, 0.0], &top).unwrap();
        assert_relative_eq!(d.distance, 1.5, epsilon = 1e-9);

        let bottom = Line::new(vec![0.0, -3.0], vec![1.0, 0.0]).unwrap();
        let d = g.point_line_distance(&[0.0, 0.0], &bottom).unwrap();
        assert_relative_eq!(d.distance, 3.0, epsilon = 1e-9);
    }

    #[test]
    fn foot_point_supports_the_ball() {
        let g = triangle_gauge();
        let mut rng = SplitMix64::new(8);
        let line = Line::new(vec![2.0, 0.5], vec![0.3, 1.0]).unwrap();
        let p = vec![0.1, -0.2];
        let d = g.point_line_distance(&p, &line).unwrap();
        assert_relative_eq!(
            g.eval(&linalg::sub(&d.foot, &p)).unwrap(),
            d.distance,
            epsilon = 1e-9
        );
        for _ in 0..100 {
            let t = rng.in_range(-20.0, 20.0);
            let mut q = line.point().to_vec();
            linalg::axpy(&mut q, t, line.direction());
            assert!(g.eval(&linalg::sub(&q, &p)).unwrap() >= d.distance - 1e-9);
        }
    }

    #[test]
    fn smooth_line_search_matches_closed_form() {
        // Euclidean distance from the origin to the line x = 2 is 2.
        let g = Gauge::new(Body::Smooth(SmoothBody::unit_ball(2)));
        let line = Line::new(vec![2.0, 0.0], vec![0.0, 1.0]).unwrap();
        let d = g.point_line_distance(&[0.0, 0.0], &line).unwrap();
        assert_relative_eq!(d.distance, 2.0, epsilon = 1e-9);
        assert_relative_eq!(d.foot[1], 0.0, epsilon = 1e-5);
    }

    #[test]
    fn symmetrized_norm_axioms() {
        let g = triangle_gauge();
        assert_relative_eq!(g.symmetrized_norm(&[0.0, 1.0]).unwrap(), 1.5, epsilon = 1e-10);
        let ball = Gauge::new(Body::Smooth(sampling::unit_disk()));
        let mut rng = SplitMix64::new(3);
        for _ in 0..100 {
            let x = rng.point(2, 3.0);
            let y = rng.point(2, 3.0);
            let nx = g.symmetrized_norm(&x).unwrap();
            assert_relative_eq!(g.symmetrized_norm(&linalg::neg(&x)).unwrap(), nx, epsilon = 1e-10);
            let alpha = rng.in_range(-3.0, 3.0);
            assert_relative_eq!(
                g.symmetrized_norm(&linalg::scale(&x, alpha)).unwrap(),
                alpha.abs() * nx,
                epsilon = 1e-9,
                max_relative = 1e-9
            );
            assert!(
                g.symmetrized_norm(&linalg::add(&x, &y)).unwrap()
                    <= nx + g.symmetrized_norm(&y).unwrap() + 1e-10
            );
            // Centered ball: symmetrization doubles the gauge.
            assert_relative_eq!(
                ball.symmetrized_norm(&x).unwrap(),
                2.0 * ball.eval(&x).unwrap(),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn opposite_gauge_is_reflection() {
        let g = triangle_gauge();
        assert_relative_eq!(g.opposite_eval(&[0.0, 2.0]).unwrap(), 2.0, epsilon = 1e-10);
        let opposite = Gauge::new(g.body().opposite());
        let mut rng = SplitMix64::new(4);
        for _ in 0..100 {
            let x = rng.point(2, 3.0);
            assert_relative_eq!(
                g.opposite_eval(&x).unwrap(),
                opposite.eval(&x).unwrap(),
                epsilon = 1e-10
            );
            // Double reflection is the original gauge.
            assert_relative_eq!(
                opposite.opposite_eval(&x).unwrap(),
                g.eval(&x).unwrap(),
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn circle_length_is_two_pi() {
        let g = Gauge::new(Body::Smooth(sampling::unit_disk()));
        let circle = sampling::circle_curve(2, 0, 1, 1.0, 2048);
        assert_relative_eq!(g.curve_length(&circle).unwrap(), core::f64::consts::TAU, epsilon = 1e-6);
        // Finite-difference tangents agree at this resolution.
        let no_tangents = SampledCurve::new(
            circle.times().to_vec(),
            circle.points().to_vec(),
            None,
            true,
        )
        .unwrap();
        assert_relative_eq!(
            g.curve_length(&no_tangents).unwrap(),
            core::f64::consts::TAU,
            epsilon = 1e-5
        );
        // Reversed orientation: same length for a symmetric gauge.
        assert_relative_eq!(
            g.curve_length(&circle.reversed()).unwrap(),
            core::f64::consts::TAU,
            epsilon = 1e-6
        );
    }

    #[test]
    fn segment_length_depends_on_orientation() {
        let g = triangle_gauge();
        let n = 33;
        let times: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
        let points: Vec<Vec<f64>> = times.iter().map(|t| vec![0.0, 2.0 * t]).collect();
        let seg = SampledCurve::new(times, points, None, false).unwrap();
        assert_relative_eq!(g.curve_length(&seg).unwrap(), 1.0, epsilon = 1e-9);
        assert_relative_eq!(g.curve_length(&seg.reversed()).unwrap(), 2.0, epsilon = 1e-9);
    }

    #[test]
    fn length_scales_with_the_curve() {
        let g = triangle_gauge();
        let mut rng = SplitMix64::new(6);
        let circle = sampling::circle_curve(2, 0, 1, 1.0, 256);
        let base = g.curve_length(&circle).unwrap();
        for _ in 0..10 {
            let alpha = rng.in_range(0.2, 4.0);
            assert_relative_eq!(
                g.curve_length(&circle.scaled(alpha)).unwrap(),
                alpha * base,
                epsilon = 1e-9,
                max_relative = 1e-9
            );
        }
    }

    #[test]
    fn too_few_samples_rejected() {
        let g = triangle_gauge();
        let c = SampledCurve::new(
            vec![0.0, 1.0],
            vec![vec![0.0, 0.0], vec![1.0, 0.0]],
            None,
            false,
        )
        .unwrap();
        assert!(matches!(g.curve_length(&c), Err(Error::TooFewSamples { .. })));
    }

    #[test]
    fn gauge_agrees_across_representations() {
        let mut rng = SplitMix64::new(12);
        for _ in 0..5 {
            let poly = sampling::random_polygon(&mut rng, 3, 9).unwrap();
            let gv = Gauge::new(Body::Vertices(poly.clone()));
            let gh = Gauge::new(Body::Halfspaces(v_to_h_2d(&poly).unwrap()));
            for _ in 0..100 {
                let x = rng.point(2, 3.0);
                assert_relative_eq!(
                    gv.eval(&x).unwrap(),
                    gh.eval(&x).unwrap(),
                    epsilon = 1e-9,
                    max_relative = 1e-9
                );
            }
        }
    }

    #[test]
    fn unit_ball_recovery() {
        let mut rng = SplitMix64::new(13);
        let bodies = [
            Body::Vertices(sampling::equilateral_triangle()),
            Body::Halfspaces(v_to_h_2d(&sampling::unit_square()).unwrap()),
            Body::Smooth(SmoothBody::ellipsoid(&[0.8, 1.5]).unwrap()),
        ];
        for body in &bodies {
            let g = Gauge::new(body.clone());
            let mut checked = 0;
            while checked < 500 {
                let x = rng.point(body.dim(), 2.5);
                let v = g.eval(&x).unwrap();
                if (v - 1.0).abs() < 1e-8 {
                    continue; // skip the ambiguous boundary band
                }
                assert_eq!(body.contains(&x, 0.0).unwrap(), v <= 1.0);
                checked += 1;
            }
        }
    }
}
