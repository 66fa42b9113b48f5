//! The orthogonality relation of a gauge: `x ⊣ y` iff `γ(x) ≤ γ(x + ty)`
//! for every real `t` — the line through `x` in direction `y` supports the
//! gauge ball of radius `γ(x)` at `x`. Extends to hyperplanes (`x ⊣ H`)
//! and connects to duality through attainment points of the dual gauge.

use alloc::vec::Vec;

use crate::body::Body;
use crate::error::{Error, Result};
use crate::gauge::{Gauge, LineMin};
use crate::linalg::{self, Mat};
use crate::symplectic::SymplecticForm;

/// Default relative tolerance for orthogonality decisions: flat minima on
/// polytope edges make exact equality float-fragile.
pub const DEFAULT_ORTHO_TOL: f64 = 1e-8;

/// Outcome of an orthogonality test.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalityReport {
    /// Minimizer of `t ↦ γ(x + ty)`.
    pub t_min: f64,
    /// The minimum value; always `≤ γ(x)`.
    pub min_value: f64,
    /// `γ(x)` itself.
    pub gauge_at_x: f64,
    /// Whether the minimum is attained at `t = 0` within tolerance.
    pub orthogonal: bool,
    /// The unit-sphere witness `x / γ(x)`.
    pub witness: Vec<f64>,
}

/// Minimize `t ↦ γ(x + ty)`; exact LP for polytopes, golden-section search
/// for smooth bodies.
pub fn min_gauge_on_line(gauge: &Gauge, x: &[f64], y: &[f64]) -> Result<LineMin> {
    gauge.min_on_line(x, y)
}

/// Decide `x ⊣ y` with relative tolerance `tol`: the line minimum must not
/// improve on `γ(x)` by more than `tol·γ(x)`.
pub fn is_orthogonal(gauge: &Gauge, x: &[f64], y: &[f64], tol: f64) -> Result<OrthogonalityReport> {
    if linalg::is_zero(x, 0.0) {
        return Err(Error::ZeroVector);
    }
    let gauge_at_x = gauge.eval(x)?;
    let m = gauge.min_on_line(x, y)?;
    let orthogonal = m.value >= gauge_at_x * (1.0 - tol);
    Ok(OrthogonalityReport {
        t_min: m.t,
        min_value: m.value,
        gauge_at_x,
        orthogonal,
        witness: linalg::scale(x, 1.0 / gauge_at_x),
    })
}

/// Decide `x ⊣ H` for a hyperplane spanned by `basis` (d-1 independent
/// vectors): the gauge minimum over the whole affine slice `x + span(H)`
/// must be attained at `x`. One joint convex minimization — an LP on
/// polytope slices, normal equations on smooth bodies — which also settles
/// orthogonality to every vector of `H`.
pub fn is_orthogonal_to_hyperplane(
    gauge: &Gauge,
    x: &[f64],
    basis: &[Vec<f64>],
    tol: f64,
) -> Result<bool> {
    let d = gauge.dim();
    if basis.len() != d - 1 {
        return Err(Error::RankDeficient);
    }
    if linalg::rank(&Mat::from_rows(basis)?, 1e-10) != d - 1 {
        return Err(Error::RankDeficient);
    }
    if linalg::is_zero(x, 0.0) {
        return Err(Error::ZeroVector);
    }
    let gauge_at_x = gauge.eval(x)?;
    let m = gauge.min_on_slice(x, basis)?;
    Ok(m.value >= gauge_at_x * (1.0 - tol))
}

/// Two distinct unit-sphere points where translates of the hyperplane `H`
/// support the unit ball: the support points in the two conormal directions
/// of `H`.
pub fn support_pair_for_hyperplane(
    gauge: &Gauge,
    basis: &[Vec<f64>],
) -> Result<(Vec<f64>, Vec<f64>)> {
    let d = gauge.dim();
    if basis.len() != d - 1 {
        return Err(Error::RankDeficient);
    }
    let normals = linalg::null_space(&Mat::from_rows(basis)?, 1e-10);
    if normals.len() != 1 {
        return Err(Error::RankDeficient);
    }
    let n = linalg::canonical_direction(&normals[0])?;
    let plus = gauge.body().support(&crate::symplectic::Covector::new(n.clone())?)?;
    let minus = gauge.body().support(&crate::symplectic::Covector::new(linalg::neg(&n))?)?;
    Ok((plus.point, minus.point))
}

/// The attainment point of the dual gauge: `y₀ ∈ ∂B_γ` maximizing
/// `ω(x, ·)` over `K`, so that `γ_ω(x) = ω(x, y₀)`; it satisfies
/// `y₀ ⊣ {x}^⊥`. Ties on flat maximizing faces resolve to the
/// deterministic optimal vertex of the support program.
pub fn dual_attainment_point(k: &Body, form: &SymplecticForm, x: &[f64]) -> Result<Vec<f64>> {
    if linalg::is_zero(x, 0.0) {
        return Err(Error::ZeroVector);
    }
    let f = form.contract(x)?;
    Ok(k.support(&f)?.point)
}
