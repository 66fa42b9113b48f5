//! Convex bodies containing the origin as an interior point, in three
//! representations: vertex polytopes, halfspace polytopes with offsets
//! normalized to 1, and smooth bodies given by a convex quadratic level
//! function.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::float::{fabs, sqrt};
use crate::linalg::{self, Mat};
use crate::lp;
use crate::symplectic::Covector;

/// Minimum convex-combination weight for the origin to count as strictly
/// interior to a vertex polytope.
const INTERIOR_MARGIN: f64 = 1e-9;
/// Tolerance on `|γ(x) - 1|` for boundary-point queries.
const BOUNDARY_TOL: f64 = 1e-8;

// ---------------------------------------------------------------------------
// Vertex polytopes
// ---------------------------------------------------------------------------

/// Convex hull of a finite vertex set with the origin strictly interior.
#[derive(Debug, Clone, PartialEq)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<Vec<f64>>,
}

impl VPolytope {
    pub fn new(vertices: Vec<Vec<f64>>) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::TooFewVertices { needed: 3, found: 0 });
        };
        let dim = first.len();
        if dim < 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: dim });
        }
        if vertices.len() < dim + 1 {
            return Err(Error::TooFewVertices { needed: dim + 1, found: vertices.len() });
        }
        for v in &vertices {
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
            if v.iter().any(|c| !c.is_finite()) {
                return Err(Error::Numerical("vertex with non-finite coordinate"));
            }
        }
        if linalg::affine_rank(&vertices, 1e-12) < dim {
            return Err(Error::RankDeficient);
        }
        let margin = lp::simplex_interior_margin(&vertices).map_err(|e| match e {
            Error::Infeasible => Error::OriginNotInterior { margin: f64::NEG_INFINITY },
            other => other,
        })?;
        if margin < INTERIOR_MARGIN {
            return Err(Error::OriginNotInterior { margin });
        }
        Ok(VPolytope { dim, vertices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }
}

// ---------------------------------------------------------------------------
// Halfspace polytopes
// ---------------------------------------------------------------------------

/// Bounded intersection `{ x : aᵢ·x ≤ 1 }`. Offsets are normalized to 1 at
/// construction, which keeps polar and dual bodies closed-form.
#[derive(Debug, Clone, PartialEq)]
pub struct HPolytope {
    dim: usize,
    normals: Vec<Vec<f64>>,
}

impl HPolytope {
    /// Build from normals with all offsets already equal to 1.
    pub fn new(normals: Vec<Vec<f64>>) -> Result<Self> {
        let Some(first) = normals.first() else {
            return Err(Error::TooFewVertices { needed: 3, found: 0 });
        };
        let dim = first.len();
        if dim < 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: dim });
        }
        for a in &normals {
            if a.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: a.len() });
            }
            if a.iter().any(|c| !c.is_finite()) {
                return Err(Error::Numerical("normal with non-finite coordinate"));
            }
            if linalg::is_zero(a, 0.0) {
                return Err(Error::ZeroVector);
            }
        }
        let body = HPolytope { dim, normals };
        // Boundedness: every coordinate extent must be finite.
        for j in 0..dim {
            for sign in [1.0, -1.0] {
                let mut obj = vec![0.0; dim];
                obj[j] = sign;
                match lp::maximize_over_halfspaces(&body.normals, &obj) {
                    Ok(_) => {}
                    Err(Error::Unbounded) => return Err(Error::UnboundedBody),
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(body)
    }

    /// Build from raw inequalities `aᵢ·x ≤ bᵢ`, dividing each row by its
    /// offset. Rows with `bᵢ ≤ 0` are rejected: the origin would not be
    /// interior.
    pub fn from_inequalities(rows: &[(Vec<f64>, f64)]) -> Result<Self> {
        let mut normals = Vec::with_capacity(rows.len());
        for (a, b) in rows {
            if *b <= 1e-12 {
                return Err(Error::NonPositiveOffset { offset: *b });
            }
            normals.push(linalg::scale(a, 1.0 / b));
        }
        HPolytope::new(normals)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[Vec<f64>] {
        &self.normals
    }
}

// ---------------------------------------------------------------------------
// Smooth bodies
// ---------------------------------------------------------------------------

/// Strictly convex smooth body `{ x : g(x) ≤ 1 }` with `g(x) = xᵀQx`,
/// `Q` symmetric positive definite; the gradient `∇g(x) = 2Qx` is analytic.
#[derive(Debug, Clone, PartialEq)]
pub struct SmoothBody {
    q: Mat,
    q_inv: Mat,
}

impl SmoothBody {
    pub fn from_quadratic(q: Mat) -> Result<Self> {
        if q.rows() != q.cols() {
            return Err(Error::DimensionMismatch { expected: q.rows(), found: q.cols() });
        }
        if q.asymmetry() > 1e-9 {
            return Err(Error::Numerical("level matrix is not symmetric"));
        }
        let q = q.symmetrized();
        // Positive definiteness via Cholesky.
        q.cholesky()?;
        let q_inv = q.inverse()?.symmetrized();
        Ok(SmoothBody { q, q_inv })
    }

    /// Ellipsoid with radius `rⱼ` on the j-th symplectic coordinate pair:
    /// `Q = diag(1/r₁², 1/r₁², …, 1/rₙ², 1/rₙ²)` in interleaved coordinates.
    pub fn ellipsoid(radii: &[f64]) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::NotPositiveDefinite);
        }
        let dim = 2 * radii.len();
        let mut q = Mat::zeros(dim, dim);
        for (j, r) in radii.iter().enumerate() {
            if !(*r > 0.0) || !r.is_finite() {
                return Err(Error::NotPositiveDefinite);
            }
            let w = 1.0 / (r * r);
            q[(2 * j, 2 * j)] = w;
            q[(2 * j + 1, 2 * j + 1)] = w;
        }
        SmoothBody::from_quadratic(q)
    }

    /// Euclidean unit ball.
    pub fn unit_ball(dim: usize) -> Self {
        SmoothBody::from_quadratic(Mat::identity(dim)).expect("identity is positive definite")
    }

    pub fn dim(&self) -> usize {
        self.q.rows()
    }

    pub fn matrix(&self) -> &Mat {
        &self.q
    }

    pub fn matrix_inverse(&self) -> &Mat {
        &self.q_inv
    }

    /// `g(x) = xᵀQx`.
    pub fn level(&self, x: &[f64]) -> f64 {
        linalg::dot(x, &self.q.matvec(x))
    }

    /// `∇g(x) = 2Qx`.
    pub fn gradient(&self, x: &[f64]) -> Vec<f64> {
        linalg::scale(&self.q.matvec(x), 2.0)
    }

    /// Radial projection of a point near the boundary back onto it:
    /// `x ← x / √g(x)`.
    pub fn project_to_boundary(&self, x: &[f64]) -> Result<Vec<f64>> {
        let g = self.level(x);
        if g <= 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(linalg::scale(x, 1.0 / sqrt(g)))
    }
}

// ---------------------------------------------------------------------------
// The tagged union
// ---------------------------------------------------------------------------

/// A support query result: the maximum of `f` over the body and a point
/// attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct Support {
    pub value: f64,
    pub point: Vec<f64>,
}

/// Face information at a boundary point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceInfo {
    /// Dimension of the minimal face containing the point (0 for a vertex or
    /// a smooth boundary point, d-1 for a facet interior).
    pub face_dim: usize,
    /// Whether exactly one hyperplane supports the body there.
    pub smooth_at: bool,
}

/// A convex body with the origin interior, in any representation.
#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    Vertices(VPolytope),
    Halfspaces(HPolytope),
    Smooth(SmoothBody),
}

impl From<VPolytope> for Body {
    fn from(p: VPolytope) -> Self {
        Body::Vertices(p)
    }
}

impl From<HPolytope> for Body {
    fn from(p: HPolytope) -> Self {
        Body::Halfspaces(p)
    }
}

impl From<SmoothBody> for Body {
    fn from(s: SmoothBody) -> Self {
        Body::Smooth(s)
    }
}

impl Body {
    pub fn dim(&self) -> usize {
        match self {
            Body::Vertices(p) => p.dim(),
            Body::Halfspaces(p) => p.dim(),
            Body::Smooth(s) => s.dim(),
        }
    }

    fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.len() });
        }
        Ok(())
    }

    /// The Minkowski functional `γ_K(x) = inf { λ ≥ 0 : x ∈ λK }`.
    pub fn gauge_value(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        if linalg::is_zero(x, 0.0) {
            return Ok(0.0);
        }
        match self {
            Body::Halfspaces(p) => {
                let worst = p.normals.iter().map(|a| linalg::dot(a, x)).fold(0.0, f64::max);
                Ok(worst)
            }
            Body::Vertices(p) => {
                let (value, _) = lp::min_vertex_gauge_on_slice(&p.vertices, x, &[])?;
                Ok(value)
            }
            Body::Smooth(s) => Ok(sqrt(s.level(x))),
        }
    }

    /// Membership `x ∈ (1+eps)·K`.
    pub fn contains(&self, x: &[f64], eps: f64) -> Result<bool> {
        self.check_dim(x)?;
        match self {
            Body::Smooth(s) => Ok(s.level(x) <= 1.0 + eps),
            _ => Ok(self.gauge_value(x)? <= 1.0 + eps),
        }
    }

    /// `max { f(x) : x ∈ K }` together with an attaining point. For vertex
    /// polytopes the first maximizing vertex is returned; for halfspace
    /// polytopes the simplex vertex chosen by Bland's rule.
    pub fn support(&self, f: &Covector) -> Result<Support> {
        self.check_dim(f.coords())?;
        if f.is_zero(0.0) {
            return Err(Error::ZeroVector);
        }
        match self {
            Body::Vertices(p) => {
                let mut best = f64::NEG_INFINITY;
                let mut arg = 0;
                for (i, v) in p.vertices.iter().enumerate() {
                    let val = linalg::dot(f.coords(), v);
                    if val > best {
                        best = val;
                        arg = i;
                    }
                }
                Ok(Support { value: best, point: p.vertices[arg].clone() })
            }
            Body::Halfspaces(p) => {
                let (value, point) = lp::maximize_over_halfspaces(&p.normals, f.coords())?;
                Ok(Support { value, point })
            }
            Body::Smooth(s) => {
                let qf = s.q_inv.matvec(f.coords());
                let value = sqrt(linalg::dot(f.coords(), &qf));
                Ok(Support { value, point: linalg::scale(&qf, 1.0 / value) })
            }
        }
    }

    /// Support value in a plain direction (the covector with those
    /// coefficients).
    pub fn support_value(&self, dir: &[f64]) -> Result<f64> {
        Ok(self.support(&Covector::new(dir.to_vec())?)?.value)
    }

    /// The unique boundary point `t·dir` with `t > 0`, i.e.
    /// `dir / γ_K(dir)`.
    pub fn boundary_ray_intersection(&self, dir: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(dir)?;
        if linalg::is_zero(dir, 0.0) {
            return Err(Error::ZeroVector);
        }
        let g = self.gauge_value(dir)?;
        Ok(linalg::scale(dir, 1.0 / g))
    }

    /// Minimal-face data at a boundary point (within 1e-8 of the boundary).
    ///
    /// For halfspace bodies the face is read off the active constraints; for
    /// vertex bodies a vertex `v` belongs to the face of `x` iff the segment
    /// from `v` through `x` extends past `x` inside the body, which is probed
    /// with a small step.
    pub fn face_query(&self, x: &[f64]) -> Result<FaceInfo> {
        self.check_dim(x)?;
        let g = self.gauge_value(x)?;
        if fabs(g - 1.0) > BOUNDARY_TOL {
            return Err(Error::NotOnBoundary { residual: fabs(g - 1.0) });
        }
        let d = self.dim();
        match self {
            Body::Smooth(_) => Ok(FaceInfo { face_dim: 0, smooth_at: true }),
            Body::Halfspaces(p) => {
                let active: Vec<Vec<f64>> = p
                    .normals
                    .iter()
                    .filter(|a| linalg::dot(a, x) >= 1.0 - BOUNDARY_TOL)
                    .cloned()
                    .collect();
                let r = linalg::rank(&Mat::from_rows(&active)?, 1e-10);
                Ok(FaceInfo { face_dim: d - r, smooth_at: r == 1 })
            }
            Body::Vertices(p) => {
                let delta = 1e-6;
                let mut face_vertices: Vec<Vec<f64>> = Vec::new();
                for v in &p.vertices {
                    let probe: Vec<f64> =
                        x.iter().zip(v).map(|(xi, vi)| xi + delta * (xi - vi)).collect();
                    if self.contains(&probe, 1e-10)? {
                        face_vertices.push(v.clone());
                    }
                }
                let fdim = linalg::affine_rank(&face_vertices, 1e-9);
                Ok(FaceInfo { face_dim: fdim, smooth_at: fdim == d - 1 })
            }
        }
    }

    /// The reflected body `-K = { -x : x ∈ K }`.
    pub fn opposite(&self) -> Body {
        match self {
            Body::Vertices(p) => Body::Vertices(VPolytope {
                dim: p.dim,
                vertices: p.vertices.iter().map(|v| linalg::neg(v)).collect(),
            }),
            Body::Halfspaces(p) => Body::Halfspaces(HPolytope {
                dim: p.dim,
                normals: p.normals.iter().map(|a| linalg::neg(a)).collect(),
            }),
            Body::Smooth(s) => Body::Smooth(s.clone()),
        }
    }

    /// The image `T(K)` under an invertible linear map.
    pub fn linear_image(&self, t: &Mat) -> Result<Body> {
        if t.rows() != self.dim() || t.cols() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: t.rows() });
        }
        let t_inv = t.inverse().map_err(|_| Error::SingularMap)?;
        Ok(match self {
            Body::Vertices(p) => Body::Vertices(VPolytope {
                dim: p.dim,
                vertices: p.vertices.iter().map(|v| t.matvec(v)).collect(),
            }),
            // { x : a·x ≤ 1 } maps to { y : (T⁻ᵀa)·y ≤ 1 }.
            Body::Halfspaces(p) => Body::Halfspaces(HPolytope {
                dim: p.dim,
                normals: p.normals.iter().map(|a| t_inv.transpose().matvec(a)).collect(),
            }),
            // Level matrix transforms as Q ↦ T⁻ᵀ Q T⁻¹.
            Body::Smooth(s) => {
                let q = t_inv.transpose().matmul(&s.q).matmul(&t_inv).symmetrized();
                Body::Smooth(SmoothBody::from_quadratic(q)?)
            }
        })
    }

    /// The dilate `α·K`, `α > 0`.
    pub fn scaled(&self, alpha: f64) -> Result<Body> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::Numerical("scale factor must be positive"));
        }
        Ok(match self {
            Body::Vertices(p) => Body::Vertices(VPolytope {
                dim: p.dim,
                vertices: p.vertices.iter().map(|v| linalg::scale(v, alpha)).collect(),
            }),
            Body::Halfspaces(p) => Body::Halfspaces(HPolytope {
                dim: p.dim,
                normals: p.normals.iter().map(|a| linalg::scale(a, 1.0 / alpha)).collect(),
            }),
            Body::Smooth(s) => {
                Body::Smooth(SmoothBody::from_quadratic(s.q.scaled(1.0 / (alpha * alpha)))?)
            }
        })
    }
}

// ---------------------------------------------------------------------------
// Planar representation conversions
// ---------------------------------------------------------------------------

/// Counter-clockwise convex hull (monotone chain), dropping collinear points.
pub fn convex_hull_2d(points: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut pts: Vec<(f64, f64)> = points.iter().map(|p| (p[0], p[1])).collect();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12);
    if pts.len() < 3 {
        return pts.iter().map(|p| vec![p.0, p.1]).collect();
    }
    let scale = pts.iter().fold(1.0f64, |m, p| m.max(fabs(p.0)).max(fabs(p.1)));
    let eps = 1e-12 * scale * scale;
    let cross =
        |o: (f64, f64), a: (f64, f64), b: (f64, f64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= eps {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= eps {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower.iter().map(|p| vec![p.0, p.1]).collect()
}

/// Planar V→H conversion: hull the vertices counter-clockwise and emit one
/// normalized halfspace per edge.
pub fn v_to_h_2d(p: &VPolytope) -> Result<HPolytope> {
    if p.dim() != 2 {
        return Err(Error::PlanarOnly { dim: p.dim() });
    }
    let hull = convex_hull_2d(p.vertices());
    let n = hull.len();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let a = &hull[i];
        let b = &hull[(i + 1) % n];
        let edge = linalg::sub(b, a);
        // Outward normal of a counter-clockwise edge.
        let normal = vec![edge[1], -edge[0]];
        let offset = linalg::dot(&normal, a);
        rows.push((normal, offset));
    }
    HPolytope::from_inequalities(&rows)
}

/// Planar H→V conversion: intersect constraint pairs, keep feasible points,
/// and hull them counter-clockwise. Redundant halfspaces disappear.
pub fn h_to_v_2d(p: &HPolytope) -> Result<VPolytope> {
    if p.dim() != 2 {
        return Err(Error::PlanarOnly { dim: p.dim() });
    }
    let normals = p.normals();
    let m = normals.len();
    let mut candidates: Vec<Vec<f64>> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let a = Mat::from_rows(&[normals[i].clone(), normals[j].clone()])?;
            let Ok(lu) = a.lu() else { continue };
            if lu.is_singular(1e-12) {
                continue;
            }
            let pt = lu.solve(&[1.0, 1.0])?;
            let feasible =
                normals.iter().all(|nrm| linalg::dot(nrm, &pt) <= 1.0 + 1e-9);
            if feasible {
                candidates.push(pt);
            }
        }
    }
    VPolytope::new(convex_hull_2d(&candidates))
}
