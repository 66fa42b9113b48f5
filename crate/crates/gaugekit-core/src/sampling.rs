//! Canonical fixtures and seeded random geometry for property suites.

use alloc::vec;
use alloc::vec::Vec;

use crate::body::{convex_hull_2d, HPolytope, SmoothBody, VPolytope};
use crate::curve::SampledCurve;
use crate::error::{Error, Result};
use crate::float::{cos, sin, sqrt};
use crate::linalg::{self, Mat};
use crate::rng::SplitMix64;
use crate::symplectic::{PlaneSubspace, SymplecticForm};

/// The equilateral triangle with vertices `(0, 2)`, `(±√3, -1)` — barycenter
/// at the origin, so the gauge it induces is asymmetric but well defined.
pub fn equilateral_triangle() -> VPolytope {
    let r3 = sqrt(3.0);
    VPolytope::new(vec![vec![0.0, 2.0], vec![r3, -1.0], vec![-r3, -1.0]])
        .expect("fixture is valid")
}

/// The square with vertices `(±1, ±1)`.
pub fn unit_square() -> VPolytope {
    VPolytope::new(vec![vec![1.0, 1.0], vec![-1.0, 1.0], vec![-1.0, -1.0], vec![1.0, -1.0]])
        .expect("fixture is valid")
}

/// The Euclidean unit disk as a smooth body.
pub fn unit_disk() -> SmoothBody {
    SmoothBody::unit_ball(2)
}

/// Random convex polygon with the origin strictly interior: jittered angles
/// and radii, hulled; regenerates until the vertex count lands in
/// `[min_vertices, max_vertices]`.
pub fn random_polygon(
    rng: &mut SplitMix64,
    min_vertices: usize,
    max_vertices: usize,
) -> Result<VPolytope> {
    for _ in 0..256 {
        let m = min_vertices + rng.next_usize(max_vertices - min_vertices + 1);
        let mut points = Vec::with_capacity(m);
        for k in 0..m {
            let theta = core::f64::consts::TAU * (k as f64 + 0.8 * rng.next_f64()) / m as f64;
            let r = rng.in_range(0.6, 1.9);
            points.push(vec![r * cos(theta), r * sin(theta)]);
        }
        let hull = convex_hull_2d(&points);
        if hull.len() < min_vertices || hull.len() > max_vertices {
            continue;
        }
        if let Ok(p) = VPolytope::new(hull) {
            return Ok(p);
        }
    }
    Err(Error::Numerical("random polygon generation failed"))
}

/// Random bounded halfspace body: axis-aligned slabs at random offsets plus
/// `extra` random unit normals, all normalized to offset 1.
pub fn random_hpolytope(rng: &mut SplitMix64, dim: usize, extra: usize) -> Result<HPolytope> {
    let mut rows = Vec::with_capacity(2 * dim + extra);
    for j in 0..dim {
        for sign in [1.0, -1.0] {
            let mut a = vec![0.0; dim];
            a[j] = sign;
            rows.push((a, rng.in_range(0.7, 1.9)));
        }
    }
    for _ in 0..extra {
        rows.push((rng.unit_vector(dim), rng.in_range(0.7, 1.9)));
    }
    HPolytope::from_inequalities(&rows)
}

/// Random nondegenerate skew form, regenerating until well conditioned.
pub fn random_skew_form(rng: &mut SplitMix64, dim: usize) -> Result<SymplecticForm> {
    for _ in 0..256 {
        let mut m = Mat::zeros(dim, dim);
        for i in 0..dim {
            for j in i + 1..dim {
                let v = rng.in_range(-2.0, 2.0);
                m[(i, j)] = v;
                m[(j, i)] = -v;
            }
        }
        if let Ok(lu) = m.lu() {
            if lu.min_pivot() > 1e-2 {
                return SymplecticForm::from_matrix(m);
            }
        }
    }
    Err(Error::Numerical("random form generation failed"))
}

/// Random symplectic plane, regenerating until `|ω(u, v)|` is comfortably
/// nonzero.
pub fn random_symplectic_plane(
    rng: &mut SplitMix64,
    form: &SymplecticForm,
) -> Result<PlaneSubspace> {
    for _ in 0..256 {
        let u = rng.unit_vector(form.dim());
        let v = rng.unit_vector(form.dim());
        let Ok(plane) = PlaneSubspace::new(u, v) else { continue };
        let (u, v) = plane.basis();
        if crate::float::fabs(form.eval(u, v)?) > 0.1 {
            return Ok(plane);
        }
    }
    Err(Error::Numerical("random symplectic plane generation failed"))
}

/// Random point on the boundary of a smooth body (radial projection of a
/// random direction).
pub fn random_boundary_point(rng: &mut SplitMix64, body: &SmoothBody) -> Vec<f64> {
    body.project_to_boundary(&rng.unit_vector(body.dim()))
        .expect("unit vector is nonzero")
}

/// Clockwise circle of radius `r` in the `(axis_a, axis_b)` coordinate
/// plane, sampled with the closing duplicate and analytic tangents. For the
/// standard form on a symplectic coordinate pair this parametrization is
/// positive: `ω(c', c) = r² > 0`.
pub fn circle_curve(
    dim: usize,
    axis_a: usize,
    axis_b: usize,
    radius: f64,
    samples: usize,
) -> SampledCurve {
    let n = samples.max(4);
    let mut times = Vec::with_capacity(n);
    let mut points = Vec::with_capacity(n);
    let mut tangents = Vec::with_capacity(n);
    for k in 0..n {
        let theta = core::f64::consts::TAU * k as f64 / (n - 1) as f64;
        let mut p = vec![0.0; dim];
        p[axis_a] = radius * cos(theta);
        p[axis_b] = -radius * sin(theta);
        let mut t = vec![0.0; dim];
        t[axis_a] = -radius * sin(theta);
        t[axis_b] = -radius * cos(theta);
        times.push(theta);
        points.push(p);
        tangents.push(t);
    }
    // Snap the closing sample exactly onto the first.
    let first = points[0].clone();
    *points.last_mut().expect("nonempty") = first;
    let first_t = tangents[0].clone();
    *tangents.last_mut().expect("nonempty") = first_t;
    SampledCurve::new(times, points, Some(tangents), true).expect("circle curve is valid")
}

/// A closed loop on the boundary of a 4-dimensional smooth body: the
/// first-block circle perturbed by small trigonometric terms in the second
/// block, radially projected back onto the boundary (tangents follow by the
/// chain rule). The amplitude shrinks until the loop is positively
/// parametrized for the given form.
pub fn perturbed_boundary_loop(
    rng: &mut SplitMix64,
    body: &SmoothBody,
    form: &SymplecticForm,
    samples: usize,
    amplitude: f64,
) -> Result<SampledCurve> {
    if body.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: body.dim() });
    }
    let k1 = 1 + rng.next_usize(3) as i32;
    let k2 = 1 + rng.next_usize(3) as i32;
    let phase1 = rng.in_range(0.0, core::f64::consts::TAU);
    let phase2 = rng.in_range(0.0, core::f64::consts::TAU);

    let mut eps = amplitude;
    'retry: for _ in 0..12 {
        let n = samples.max(16);
        let mut times = Vec::with_capacity(n);
        let mut points = Vec::with_capacity(n);
        let mut tangents = Vec::with_capacity(n);
        for idx in 0..n {
            let theta = core::f64::consts::TAU * idx as f64 / (n - 1) as f64;
            let theta = if idx == n - 1 { 0.0 } else { theta };
            let p = vec![
                cos(theta),
                -sin(theta),
                eps * sin(k1 as f64 * theta + phase1),
                eps * cos(k2 as f64 * theta + phase2),
            ];
            let dp = vec![
                -sin(theta),
                -cos(theta),
                eps * k1 as f64 * cos(k1 as f64 * theta + phase1),
                -eps * k2 as f64 * sin(k2 as f64 * theta + phase2),
            ];
            // z = p / √g(p);  z' = p'/√g - p (∇g·p') / (2 g^{3/2})
            let g = body.level(&p);
            let grad = body.gradient(&p);
            let gdot = linalg::dot(&grad, &dp);
            let sg = sqrt(g);
            let z = linalg::scale(&p, 1.0 / sg);
            let mut dz = linalg::scale(&dp, 1.0 / sg);
            linalg::axpy(&mut dz, -gdot / (2.0 * g * sg), &p);
            times.push(if idx == n - 1 { core::f64::consts::TAU } else { theta });
            points.push(z);
            tangents.push(dz);
        }
        for (z, dz) in points.iter().zip(&tangents) {
            if form.eval(dz, z)? <= 1e-9 {
                eps *= 0.5;
                continue 'retry;
            }
        }
        return SampledCurve::new(times, points, Some(tangents), true);
    }
    Err(Error::NotPositivelyParametrized { index: 0, value: 0.0 })
}
