//! Characteristic flows on smooth convex boundaries.
//!
//! At a boundary point `x` of a smooth body `K`, `Jx` is the unique vector
//! whose symplectic complement (translated to `x`) supports `K` at `x` with
//! `ω(Jx, x) = 1`; concretely `Jx = (Ωᵀ)⁻¹∇g(x) / (∇g(x)·x)`. The integral
//! curves of the field `J` are the characteristics of `∂K`. A closed,
//! positively parametrized curve on `∂K` is a characteristic exactly when
//! the isoperimetric-style equality `2A(c) = L_ω(c)` holds, where `A` is the
//! symplectic area and `L_ω` the length in the dual gauge; the minimum
//! symplectic area over closed characteristics is the capacity of the body.

use alloc::vec::Vec;

use crate::body::{Body, HPolytope, SmoothBody, VPolytope};
use crate::curve::SampledCurve;
use crate::directions::circle_directions;
use crate::duality::{dual_body, dual_gauge_eval, support_gap};
use crate::error::{Error, Result};
use crate::float::fabs;
use crate::linalg::{self, Mat};
use crate::symplectic::{PlaneSubspace, SymplecticForm};

/// Tolerance on `|g(x) - 1|` for a point to count as on the boundary.
const BOUNDARY_TOL: f64 = 1e-8;

/// Parameters of the characteristic-flow integrator.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowOptions {
    /// RK4 step size.
    pub step: f64,
    /// Give up on closure after this much flow time.
    pub max_time: f64,
    /// Position tolerance for declaring the orbit closed.
    pub closure_tol: f64,
    /// Minimum number of steps before closure detection arms, so the start
    /// point does not trigger itself.
    pub min_steps: usize,
    /// Cosine threshold for tangent alignment at closure.
    pub tangent_alignment: f64,
    /// Abort when a step drifts farther than this from the boundary before
    /// renormalization.
    pub drift_limit: f64,
}

impl Default for FlowOptions {
    fn default() -> Self {
        FlowOptions {
            step: 1e-3,
            max_time: 100.0,
            closure_tol: 1e-6,
            min_steps: 10,
            tangent_alignment: 0.999,
            drift_limit: 1e-6,
        }
    }
}

impl FlowOptions {
    pub fn with_step(step: f64) -> Self {
        FlowOptions { step, ..FlowOptions::default() }
    }
}

/// Output of a characteristic-flow integration.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowResult {
    pub curve: SampledCurve,
    pub closed: bool,
    /// Flow time of the closed orbit, when it closed.
    pub period: Option<f64>,
    /// Symplectic area `½∮ω(c', c) dt` along the integrated curve.
    pub area: f64,
    /// Length of the curve in the dual gauge.
    pub dual_length: f64,
    /// Largest pre-renormalization boundary violation `|g - 1|` per step.
    pub max_constraint_drift: f64,
}

/// Isoperimetric comparison of a closed boundary curve.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoperimetricReport {
    pub area: f64,
    pub dual_length: f64,
    /// `2A / L_ω`: 1 exactly on closed characteristics, below 1 otherwise.
    pub ratio: f64,
}

/// Capacity estimate from a family of flow starts.
#[derive(Debug, Clone, PartialEq)]
pub struct CapacityEstimate {
    /// Minimum symplectic area over the closed flows.
    pub capacity: f64,
    /// Half the minimum dual-gauge length over the closed flows; agrees with
    /// the capacity at integrator precision.
    pub half_min_dual_length: f64,
    pub closed_flows: usize,
    pub attempted: usize,
    /// When false, some starts failed to close and the estimate is a
    /// heuristic upper bound from the orbits that did close.
    pub all_closed: bool,
}

fn check_on_boundary(body: &SmoothBody, x: &[f64]) -> Result<()> {
    if x.len() != body.dim() {
        return Err(Error::DimensionMismatch { expected: body.dim(), found: x.len() });
    }
    let residual = fabs(body.level(x) - 1.0);
    if residual > BOUNDARY_TOL {
        return Err(Error::NotOnBoundary { residual });
    }
    Ok(())
}

/// The characteristic direction `Jx` at a boundary point:
/// `(Ωᵀ)⁻¹ ∇g(x) / (∇g(x)·x)`. Satisfies `ω(Jx, x) = 1`, vanishes on the
/// tangent space of `∂K` at `x` under `ω(Jx, ·)`, and has dual gauge 1.
pub fn j_map(body: &SmoothBody, form: &SymplecticForm, x: &[f64]) -> Result<Vec<f64>> {
    check_on_boundary(body, x)?;
    if body.dim() != form.dim() {
        return Err(Error::DimensionMismatch { expected: form.dim(), found: body.dim() });
    }
    let grad = body.gradient(x);
    let denom = linalg::dot(&grad, x);
    if denom <= 0.0 {
        // ∇g(x)·x = 2g(x) > 0 on the boundary of an origin-interior body.
        return Err(Error::Numerical("gradient pairing with the position is not positive"));
    }
    let raw = form.matrix().transpose().solve(&grad)?;
    Ok(linalg::scale(&raw, 1.0 / denom))
}

/// Residual `‖J^ω(Jx) + x‖` of the involution identity `J^ω ∘ J = -id` on
/// the boundary of a smooth strictly convex body.
pub fn jj_involution_check(body: &SmoothBody, form: &SymplecticForm, x: &[f64]) -> Result<f64> {
    let jx = j_map(body, form, x)?;
    let dual = match dual_body(&Body::Smooth(body.clone()), form)? {
        Body::Smooth(s) => s,
        _ => return Err(Error::UnsupportedRepresentation("dual of a smooth body")),
    };
    let jjx = j_map(&dual, form, &jx)?;
    Ok(linalg::distance(&linalg::neg(&jjx), x))
}

struct JField<'a> {
    body: &'a SmoothBody,
    omega_t_inv: Mat,
}

impl<'a> JField<'a> {
    fn new(body: &'a SmoothBody, form: &SymplecticForm) -> Result<Self> {
        Ok(JField { body, omega_t_inv: form.matrix().transpose().inverse()? })
    }

    /// The field extends off the boundary; it is tangent to every level set
    /// of `g`, so the exact flow preserves `g`.
    fn eval(&self, x: &[f64]) -> Vec<f64> {
        let grad = self.body.gradient(x);
        let denom = linalg::dot(&grad, x);
        linalg::scale(&self.omega_t_inv.matvec(&grad), 1.0 / denom)
    }

    fn rk4_step(&self, x: &[f64], h: f64) -> Vec<f64> {
        let k1 = self.eval(x);
        let mut s = x.to_vec();
        linalg::axpy(&mut s, 0.5 * h, &k1);
        let k2 = self.eval(&s);
        let mut s = x.to_vec();
        linalg::axpy(&mut s, 0.5 * h, &k2);
        let k3 = self.eval(&s);
        let mut s = x.to_vec();
        linalg::axpy(&mut s, h, &k3);
        let k4 = self.eval(&s);
        let mut out = x.to_vec();
        for i in 0..out.len() {
            out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        out
    }
}

/// Integrate the characteristic field from a boundary point with classical
/// RK4, renormalizing each accepted point radially back onto the boundary.
/// Closure is declared when the state recrosses the section through the
/// start point (within `closure_tol`, with aligned tangent) after a minimum
/// number of steps; the crossing time is refined by bisection.
pub fn integrate_characteristic(
    body: &SmoothBody,
    form: &SymplecticForm,
    start: &[f64],
    opts: &FlowOptions,
) -> Result<FlowResult> {
    check_on_boundary(body, start)?;
    if !(opts.step > 0.0) || !(opts.max_time > opts.step) {
        return Err(Error::Numerical("flow needs 0 < step < max_time"));
    }
    let field = JField::new(body, form)?;
    let x0 = body.project_to_boundary(start)?;
    let tangent0 = field.eval(&x0);
    let tau0 = linalg::normalize(&tangent0)?;
    let speed0 = linalg::norm(&tangent0);
    let capture_radius = (20.0 * opts.step * speed0).max(4.0 * opts.closure_tol);

    let section = |z: &[f64]| linalg::dot(&linalg::sub(z, &x0), &tau0);

    let mut times = alloc::vec![0.0];
    let mut points = alloc::vec![x0.clone()];
    let mut tangents = alloc::vec![tangent0.clone()];
    let mut max_drift = 0.0f64;
    let mut closed = false;
    let mut period = None;

    let mut state = x0.clone();
    let mut phi_prev = 0.0;
    let mut k: u64 = 0;
    loop {
        let t = opts.step * k as f64;
        if t >= opts.max_time {
            break;
        }
        let raw = field.rk4_step(&state, opts.step);
        let drift = fabs(body.level(&raw) - 1.0);
        if drift > opts.drift_limit {
            return Err(Error::ConstraintDrift { drift, limit: opts.drift_limit });
        }
        if drift > max_drift {
            max_drift = drift;
        }
        let next = body.project_to_boundary(&raw)?;
        let t_next = opts.step * (k + 1) as f64;
        let phi_next = section(&next);

        let armed = k + 1 >= opts.min_steps as u64;
        let near = linalg::distance(&next, &x0) <= capture_radius;
        if armed && near && phi_prev < 0.0 && phi_next >= 0.0 {
            // Refine the section crossing between `state` and `next`.
            let mut lo = 0.0;
            let mut hi = opts.step;
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                let z = body.project_to_boundary(&field.rk4_step(&state, mid))?;
                if section(&z) < 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let alpha = 0.5 * (lo + hi);
            let z = body.project_to_boundary(&field.rk4_step(&state, alpha))?;
            let aligned = linalg::dot(&linalg::normalize(&field.eval(&z))?, &tau0);
            if linalg::distance(&z, &x0) <= opts.closure_tol
                && aligned >= opts.tangent_alignment
            {
                let t_close = t + alpha;
                times.push(t_close);
                points.push(z.clone());
                tangents.push(field.eval(&z));
                closed = true;
                period = Some(t_close);
                break;
            }
        }

        times.push(t_next);
        points.push(next.clone());
        tangents.push(field.eval(&next));
        state = next;
        phi_prev = phi_next;
        k += 1;
    }

    // Quadratures along the integrated samples.
    let k_body = Body::Smooth(body.clone());
    let mut pairing = Vec::with_capacity(points.len());
    let mut dual_speed = Vec::with_capacity(points.len());
    for (p, tg) in points.iter().zip(&tangents) {
        pairing.push(form.eval(tg, p)?);
        dual_speed.push(dual_gauge_eval(&k_body, form, tg)?);
    }
    let mut area2 = 0.0;
    let mut dual_length = 0.0;
    for i in 0..times.len() - 1 {
        let dt = times[i + 1] - times[i];
        area2 += 0.5 * (pairing[i] + pairing[i + 1]) * dt;
        dual_length += 0.5 * (dual_speed[i] + dual_speed[i + 1]) * dt;
    }

    let curve = SampledCurve::new(times, points, Some(tangents), closed)?;
    Ok(FlowResult {
        curve,
        closed,
        period,
        area: 0.5 * area2,
        dual_length,
        max_constraint_drift: max_drift,
    })
}

/// Symplectic area `A(c) = ½∮ω(c'(t), c(t)) dt` of a closed, positively
/// parametrized curve (trapezoid quadrature).
pub fn symplectic_area(form: &SymplecticForm, curve: &SampledCurve) -> Result<f64> {
    if !curve.closed() {
        return Err(Error::CurveNotClosed);
    }
    let tangents = curve.tangent_samples();
    let times = curve.times();
    let mut pairing = Vec::with_capacity(tangents.len());
    for (i, (p, tg)) in curve.points().iter().zip(&tangents).enumerate() {
        let w = form.eval(tg, p)?;
        if w <= 0.0 {
            return Err(Error::NotPositivelyParametrized { index: i, value: w });
        }
        pairing.push(w);
    }
    let mut integral = 0.0;
    for i in 0..times.len() - 1 {
        integral += 0.5 * (pairing[i] + pairing[i + 1]) * (times[i + 1] - times[i]);
    }
    Ok(0.5 * integral)
}

/// Compare twice the symplectic area against the dual-gauge length for a
/// closed, positively parametrized curve on `∂K`. The ratio is 1 (within
/// quadrature error) exactly on closed characteristics and strictly below 1
/// otherwise.
pub fn isoperimetric_report(
    k: &Body,
    form: &SymplecticForm,
    curve: &SampledCurve,
) -> Result<IsoperimetricReport> {
    for p in curve.points() {
        let residual = fabs(k.gauge_value(p)? - 1.0);
        if residual > 1e-6 {
            return Err(Error::NotOnBoundary { residual });
        }
    }
    let area = symplectic_area(form, curve)?;
    let tangents = curve.tangent_samples();
    let times = curve.times();
    let mut speeds = Vec::with_capacity(tangents.len());
    for tg in &tangents {
        speeds.push(dual_gauge_eval(k, form, tg)?);
    }
    let mut dual_length = 0.0;
    for i in 0..times.len() - 1 {
        dual_length += 0.5 * (speeds[i] + speeds[i + 1]) * (times[i + 1] - times[i]);
    }
    Ok(IsoperimetricReport { area, dual_length, ratio: 2.0 * area / dual_length })
}

/// The planar section `K ∩ Y` expressed in the plane's `(u, v)` coordinates.
pub fn section_body(k: &Body, form: &SymplecticForm, plane: &PlaneSubspace) -> Result<Body> {
    if !form.is_symplectic_plane(plane)? {
        return Err(Error::NotSymplecticPlane);
    }
    if k.dim() != plane.dim() {
        return Err(Error::DimensionMismatch { expected: plane.dim(), found: k.dim() });
    }
    let (u, v) = plane.basis();
    match k {
        Body::Halfspaces(h) => {
            let mut rows = Vec::new();
            for a in h.normals() {
                let row = alloc::vec![linalg::dot(a, u), linalg::dot(a, v)];
                // A halfspace parallel to the plane does not constrain the
                // section.
                if linalg::norm(&row) > 1e-12 {
                    rows.push(row);
                }
            }
            Ok(Body::Halfspaces(HPolytope::new(rows)?))
        }
        Body::Smooth(s) => {
            let b = Mat::from_cols(&[u.to_vec(), v.to_vec()])?;
            let q = b.transpose().matmul(s.matrix()).matmul(&b).symmetrized();
            Ok(Body::Smooth(SmoothBody::from_quadratic(q)?))
        }
        Body::Vertices(p) => {
            if p.dim() != 2 {
                return Err(Error::UnsupportedRepresentation(
                    "vertex-form sections above dimension 2",
                ));
            }
            // The only symplectic plane of a plane is the whole space: this
            // is a coordinate change.
            let b = Mat::from_cols(&[u.to_vec(), v.to_vec()])?;
            let b_inv = b.inverse()?;
            let vertices = p.vertices().iter().map(|w| b_inv.matvec(w)).collect();
            Ok(Body::Vertices(VPolytope::new(vertices)?))
        }
    }
}

/// Both sides of the section-duality identity
/// `(K ∩ Y)^ω = proj_Y(K^ω)` in `(u, v)` coordinates, with their largest
/// support gap over 512 planar directions.
#[derive(Debug, Clone, PartialEq)]
pub struct SectionDuality {
    pub section_dual: Body,
    pub projected_dual: Body,
    pub hausdorff: f64,
}

pub fn section_duality_check(
    k: &Body,
    form: &SymplecticForm,
    plane: &PlaneSubspace,
) -> Result<SectionDuality> {
    let restricted = form.restrict_to_plane(plane)?;
    let section_dual = dual_body(&section_body(k, form, plane)?, &restricted)?;
    let dual = dual_body(k, form)?;
    let projected_dual = project_body_to_plane(&dual, form, plane)?;
    let hausdorff = support_gap(&section_dual, &projected_dual, &circle_directions(512))?;
    Ok(SectionDuality { section_dual, projected_dual, hausdorff })
}

/// Projection of a body onto a symplectic plane along `Y^⊥`, in `(u, v)`
/// coordinates. Polytope vertices project pointwise; an ellipsoid projects
/// through the Schur complement of its level matrix in an adapted basis.
fn project_body_to_plane(
    body: &Body,
    form: &SymplecticForm,
    plane: &PlaneSubspace,
) -> Result<Body> {
    let (u, v) = plane.basis();
    match body {
        Body::Vertices(p) => {
            let mut projected = Vec::with_capacity(p.vertices().len());
            for w in p.vertices() {
                let c = form.plane_coordinates(plane, w)?;
                projected.push(alloc::vec![c[0], c[1]]);
            }
            Ok(Body::Vertices(VPolytope::new(projected)?))
        }
        Body::Smooth(s) => {
            let mut cols = alloc::vec![u.to_vec(), v.to_vec()];
            cols.extend(form.complement(&[u.to_vec(), v.to_vec()])?);
            let b = Mat::from_cols(&cols)?;
            let m = b.transpose().matmul(s.matrix()).matmul(&b).symmetrized();
            let d = m.rows();
            // Schur complement of the complement block: the projection of
            // { z : zᵀMz ≤ 1 } to the leading 2×2 coordinates.
            let myy = submatrix(&m, 0, 2, 0, 2);
            let myc = submatrix(&m, 0, 2, 2, d);
            let mcc = submatrix(&m, 2, d, 2, d);
            let mcc_inv = mcc.inverse()?;
            let q = myy
                .add(&myc.matmul(&mcc_inv).matmul(&myc.transpose()).scaled(-1.0))
                .symmetrized();
            Ok(Body::Smooth(SmoothBody::from_quadratic(q)?))
        }
        Body::Halfspaces(p) => {
            if p.dim() != 2 {
                return Err(Error::UnsupportedRepresentation(
                    "halfspace-form projections above dimension 2",
                ));
            }
            let b = Mat::from_cols(&[u.to_vec(), v.to_vec()])?;
            let normals = p.normals().iter().map(|a| b.transpose().matvec(a)).collect();
            Ok(Body::Halfspaces(HPolytope::new(normals)?))
        }
    }
}

fn submatrix(m: &Mat, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
    let mut out = Mat::zeros(r1 - r0, c1 - c0);
    for i in r0..r1 {
        for j in c0..c1 {
            out[(i - r0, j - c0)] = m[(i, j)];
        }
    }
    out
}

/// Whether `∂K ∩ Y` is a planar closed characteristic of `∂K`, decided by
/// the identity `(K ∩ Y)^ω = K^ω ∩ Y` (support comparison in plane
/// coordinates within `tol`).
pub fn planar_characteristic_check(
    body: &SmoothBody,
    form: &SymplecticForm,
    plane: &PlaneSubspace,
    tol: f64,
) -> Result<bool> {
    let k = Body::Smooth(body.clone());
    let restricted = form.restrict_to_plane(plane)?;
    let lhs = dual_body(&section_body(&k, form, plane)?, &restricted)?;
    let rhs = section_body(&dual_body(&k, form)?, form, plane)?;
    let gap = support_gap(&lhs, &rhs, &circle_directions(512))?;
    Ok(gap <= tol)
}

/// Largest out-of-plane component along a flow started on `∂K ∩ Y`; stays
/// at integrator noise exactly when the section is a planar characteristic.
pub fn flow_plane_drift(
    body: &SmoothBody,
    form: &SymplecticForm,
    plane: &PlaneSubspace,
    opts: &FlowOptions,
) -> Result<f64> {
    let (u, _) = plane.basis();
    let start = body.project_to_boundary(u)?;
    let flow = integrate_characteristic(body, form, &start, opts)?;
    let mut worst = 0.0f64;
    for p in flow.curve.points() {
        let proj = form.project_onto_plane(plane, p)?;
        let out = linalg::distance(p, &proj);
        if out > worst {
            worst = out;
        }
    }
    Ok(worst)
}

/// Run the flow from every start and report the minimum symplectic area of
/// the closed orbits, together with half the minimum dual-gauge length.
/// Starts that fail to close (or abort on drift) lower the confidence flag
/// rather than the estimate.
pub fn capacity_estimate(
    body: &SmoothBody,
    form: &SymplecticForm,
    starts: &[Vec<f64>],
    opts: &FlowOptions,
) -> Result<CapacityEstimate> {
    let mut min_area = f64::INFINITY;
    let mut min_dual = f64::INFINITY;
    let mut closed_flows = 0;
    let mut attempted = 0;
    for start in starts {
        attempted += 1;
        let flow = match integrate_characteristic(body, form, start, opts) {
            Ok(flow) => flow,
            Err(Error::ConstraintDrift { .. }) => continue,
            Err(e) => return Err(e),
        };
        if flow.closed {
            closed_flows += 1;
            if flow.area < min_area {
                min_area = flow.area;
            }
            if flow.dual_length < min_dual {
                min_dual = flow.dual_length;
            }
        }
    }
    if closed_flows == 0 {
        return Err(Error::NoClosedCharacteristic);
    }
    Ok(CapacityEstimate {
        capacity: min_area,
        half_min_dual_length: 0.5 * min_dual,
        closed_flows,
        attempted,
        all_closed: closed_flows == attempted,
    })
}

/// Period error of the first-block flow of a smooth body against a known
/// reference, for convergence-order measurements.
pub fn period_error(
    body: &SmoothBody,
    form: &SymplecticForm,
    start: &[f64],
    step: f64,
    reference_period: f64,
) -> Result<f64> {
    let opts = FlowOptions {
        step,
        max_time: reference_period * 1.5,
        ..FlowOptions::default()
    };
    let flow = integrate_characteristic(body, form, start, &opts)?;
    let period = flow.period.ok_or(Error::NoClosedCharacteristic)?;
    Ok(fabs(period - reference_period))
}
