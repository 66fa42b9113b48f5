//! Symplectic linear algebra: nondegenerate skew forms, the identification
//! between a space and its dual, complements, bases, and symplectic planes.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::float::fabs;
use crate::linalg::{self, Mat};

/// Threshold on the smallest LU pivot below which a form matrix counts as
/// degenerate.
const DEGENERACY_TOL: f64 = 1e-12;
/// Allowed asymmetry `max |Ω + Ωᵀ|` of a form matrix.
const SKEW_TOL: f64 = 1e-12;
/// Smallest normalized singular value for a plane basis to count as rank 2.
const PLANE_RANK_TOL: f64 = 1e-10;

/// A linear functional, stored as its coefficient vector in the dual basis:
/// `f(x) = coords · x`.
#[derive(Debug, Clone, PartialEq)]
pub struct Covector {
    coords: Vec<f64>,
}

impl Covector {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::Numerical("covector with non-finite entries"));
        }
        Ok(Covector { coords })
    }

    /// The i-th dual basis covector `eᵢ*`.
    pub fn basis(dim: usize, i: usize) -> Self {
        Covector { coords: linalg::basis_vector(dim, i) }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Evaluate `f(x)`.
    pub fn apply(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.coords.len() {
            return Err(Error::DimensionMismatch { expected: self.coords.len(), found: x.len() });
        }
        Ok(linalg::dot(&self.coords, x))
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        linalg::is_zero(&self.coords, tol)
    }
}

/// A two-dimensional subspace given by two linearly independent vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneSubspace {
    u: Vec<f64>,
    v: Vec<f64>,
}

impl PlaneSubspace {
    pub fn new(u: Vec<f64>, v: Vec<f64>) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch { expected: u.len(), found: v.len() });
        }
        let nu = linalg::normalize(&u)?;
        let nv = linalg::normalize(&v)?;
        // Smallest singular value of the normalized 2-column matrix is
        // √(1 - |û·v̂|); rank 2 needs it above the tolerance.
        let c = fabs(linalg::dot(&nu, &nv));
        if c >= 1.0 || crate::float::sqrt(1.0 - c) <= PLANE_RANK_TOL {
            return Err(Error::RankDeficient);
        }
        Ok(PlaneSubspace { u, v })
    }

    pub fn dim(&self) -> usize {
        self.u.len()
    }

    pub fn basis(&self) -> (&[f64], &[f64]) {
        (&self.u, &self.v)
    }

    /// The point `a·u + b·v` in ambient coordinates.
    pub fn embed(&self, coords: [f64; 2]) -> Vec<f64> {
        let mut p = linalg::scale(&self.u, coords[0]);
        linalg::axpy(&mut p, coords[1], &self.v);
        p
    }
}

/// A nondegenerate skew-symmetric bilinear form `ω(x, y) = xᵀ Ω y` on an
/// even-dimensional space.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticForm {
    dim: usize,
    matrix: Mat,
}

impl SymplecticForm {
    /// The standard form on `ℝ^{2n}` in interleaved coordinates
    /// `(x₁, y₁, …, xₙ, yₙ)`: block-diagonal with `[[0, 1], [-1, 0]]` blocks.
    /// For `n = 1` this is the determinant form of the plane.
    pub fn standard(n: usize) -> Self {
        assert!(n >= 1, "standard form needs n ≥ 1");
        let dim = 2 * n;
        let mut m = Mat::zeros(dim, dim);
        for block in 0..n {
            m[(2 * block, 2 * block + 1)] = 1.0;
            m[(2 * block + 1, 2 * block)] = -1.0;
        }
        SymplecticForm { dim, matrix: m }
    }

    /// The planar determinant form `ω(x, y) = x₁y₂ - x₂y₁`.
    pub fn determinant() -> Self {
        SymplecticForm::standard(1)
    }

    /// Validates skew-symmetry and nondegeneracy (LU with partial pivoting,
    /// smallest pivot above 1e-12).
    pub fn from_matrix(matrix: Mat) -> Result<Self> {
        let dim = matrix.rows();
        if matrix.cols() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: matrix.cols() });
        }
        if dim < 2 || dim % 2 != 0 {
            return Err(Error::OddDimension { dim });
        }
        let asym = matrix.add(&matrix.transpose()).max_abs();
        if asym > SKEW_TOL {
            return Err(Error::NotSkewSymmetric { max_asymmetry: asym });
        }
        let lu = matrix.lu()?;
        if lu.min_pivot() <= DEGENERACY_TOL {
            return Err(Error::DegenerateForm { min_pivot: lu.min_pivot() });
        }
        Ok(SymplecticForm { dim, matrix })
    }

    /// The form `α·ω`, for `α ≠ 0`.
    pub fn scaled(&self, alpha: f64) -> Result<Self> {
        if alpha == 0.0 || !alpha.is_finite() {
            return Err(Error::DegenerateForm { min_pivot: 0.0 });
        }
        Ok(SymplecticForm { dim: self.dim, matrix: self.matrix.scaled(alpha) })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    /// `ω(x, y) = xᵀ Ω y`.
    pub fn eval(&self, x: &[f64], y: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        if y.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: y.len() });
        }
        Ok(linalg::dot(x, &self.matrix.matvec(y)))
    }

    /// The covector `ι_x ω = ω(x, ·)`, i.e. `Ωᵀ x` in dual coordinates.
    pub fn contract(&self, x: &[f64]) -> Result<Covector> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        Covector::new(self.matrix.transpose().matvec(x))
    }

    /// The identification `I : X* → X`: the unique `x_f` with
    /// `ω(x_f, y) = f(y)` for all `y`, found by solving `Ωᵀ x_f = f`.
    pub fn identify(&self, f: &Covector) -> Result<Vec<f64>> {
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: f.dim() });
        }
        self.matrix.transpose().solve(f.coords())
    }

    /// The inverse identification `I⁻¹ : X → X*`, i.e. `f = Ωᵀ x`.
    pub fn identify_inverse(&self, x: &[f64]) -> Result<Covector> {
        self.contract(x)
    }

    /// Orthonormal basis of the symplectic complement
    /// `{ x : ω(x, s) = 0 for every spanning vector s }`.
    pub fn complement(&self, span: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
        if span.is_empty() {
            return Ok((0..self.dim).map(|i| linalg::basis_vector(self.dim, i)).collect());
        }
        let mut rows = Vec::with_capacity(span.len());
        for s in span {
            if s.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: s.len() });
            }
            // ω(x, s) = x · (Ω s)
            rows.push(self.matrix.matvec(s));
        }
        let m = Mat::from_rows(&rows)?;
        Ok(linalg::null_space(&m, 1e-12))
    }

    /// The unique direction `x` inside the hyperplane `H = ker n` with
    /// `H = {x}^⊥`, returned as a unit vector with its first nonzero
    /// coordinate positive. Solves `Ωᵀ x = n`; the containment `n·x = 0`
    /// holds automatically by skew-symmetry.
    pub fn hyperplane_characteristic_direction(&self, normal: &Covector) -> Result<Vec<f64>> {
        if normal.is_zero(0.0) {
            return Err(Error::ZeroVector);
        }
        let x = self.identify(normal)?;
        linalg::canonical_direction(&x)
    }

    /// A symplectic basis `(x₁, …, xₙ, y₁, …, yₙ)` with
    /// `ω(xᵢ, xⱼ) = ω(yᵢ, yⱼ) = 0` and `ω(xᵢ, yⱼ) = δᵢⱼ`, built by skew
    /// Gram–Schmidt. The pivot pair maximizes `|ω(rᵢ, rⱼ)|` over the
    /// remaining working vectors at each step.
    pub fn symplectic_basis(&self) -> Vec<Vec<f64>> {
        let n = self.dim / 2;
        let mut remaining: Vec<Vec<f64>> =
            (0..self.dim).map(|i| linalg::basis_vector(self.dim, i)).collect();
        let mut xs: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut ys: Vec<Vec<f64>> = Vec::with_capacity(n);
        while remaining.len() >= 2 {
            let mut best = (0usize, 1usize);
            let mut best_val = 0.0;
            for i in 0..remaining.len() {
                for j in i + 1..remaining.len() {
                    let w = fabs(self.eval(&remaining[i], &remaining[j]).unwrap_or(0.0));
                    if w > best_val {
                        best_val = w;
                        best = (i, j);
                    }
                }
            }
            let x = remaining[best.0].clone();
            let w = self.eval(&x, &remaining[best.1]).expect("dims fixed");
            let y = linalg::scale(&remaining[best.1], 1.0 / w);
            // Project the rest onto the symplectic complement of span{x, y}:
            // z ← z - ω(z, y)·x + ω(z, x)·y keeps ω(z', x) = ω(z', y) = 0.
            let mut next = Vec::with_capacity(remaining.len() - 2);
            for (idx, z) in remaining.iter().enumerate() {
                if idx == best.0 || idx == best.1 {
                    continue;
                }
                let mut zp = z.clone();
                let zy = self.eval(z, &y).expect("dims fixed");
                let zx = self.eval(z, &x).expect("dims fixed");
                linalg::axpy(&mut zp, -zy, &x);
                linalg::axpy(&mut zp, zx, &y);
                if linalg::norm(&zp) > 1e-12 {
                    next.push(zp);
                }
            }
            xs.push(x);
            ys.push(y);
            remaining = next;
        }
        xs.extend(ys);
        xs
    }

    /// A plane is symplectic iff the form does not vanish on its basis pair.
    pub fn is_symplectic_plane(&self, plane: &PlaneSubspace) -> Result<bool> {
        let (u, v) = plane.basis();
        Ok(fabs(self.eval(u, v)?) > PLANE_RANK_TOL)
    }

    /// Coordinates `(a, b)` of the projection of `x` onto the plane along its
    /// symplectic complement: `proj x = a·u + b·v`.
    pub fn plane_coordinates(&self, plane: &PlaneSubspace, x: &[f64]) -> Result<[f64; 2]> {
        let (u, v) = plane.basis();
        let w = self.eval(u, v)?;
        if fabs(w) <= PLANE_RANK_TOL {
            return Err(Error::NotSymplecticPlane);
        }
        let a = self.eval(x, v)? / w;
        let b = -self.eval(x, u)? / w;
        Ok([a, b])
    }

    /// Projection onto a symplectic plane with respect to `X = Y ⊕ Y^⊥`.
    pub fn project_onto_plane(&self, plane: &PlaneSubspace, x: &[f64]) -> Result<Vec<f64>> {
        let coords = self.plane_coordinates(plane, x)?;
        Ok(plane.embed(coords))
    }

    /// The restriction `ω|_Y` expressed in the plane's `(u, v)` coordinates:
    /// the 2×2 form `[[0, ω(u,v)], [-ω(u,v), 0]]`.
    pub fn restrict_to_plane(&self, plane: &PlaneSubspace) -> Result<SymplecticForm> {
        let (u, v) = plane.basis();
        let w = self.eval(u, v)?;
        if fabs(w) <= PLANE_RANK_TOL {
            return Err(Error::NotSymplecticPlane);
        }
        let m = Mat::from_rows(&[vec![0.0, w], vec![-w, 0.0]])?;
        SymplecticForm::from_matrix(m)
    }
}
