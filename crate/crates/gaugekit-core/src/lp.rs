//! Small dense linear programs via a two-phase simplex with Bland's rule.
//!
//! Everything here is sized for desk-scale geometry (a few dozen constraints
//! in dimension ≤ 10), where determinism matters more than speed: Bland's
//! rule makes the pivot sequence — and hence the returned optimal vertex —
//! a pure function of the input.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::float::fabs;
use crate::linalg::{dot, Mat};

const PIVOT_TOL: f64 = 1e-9;
const COST_TOL: f64 = 1e-9;
const FEAS_TOL: f64 = 1e-8;
const MAX_ITERATIONS: usize = 50_000;

/// Outcome of a standard-form program `min c·x, Ax = b, x ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<f64>, value: f64 },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// `m × (n+1)` matrix `[B⁻¹A | B⁻¹b]` kept in canonical form.
    t: Mat,
    basis: Vec<usize>,
    n: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> f64 {
        self.t[(i, self.n)]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let m = self.t.rows();
        let w = self.t.cols();
        let p = self.t[(row, col)];
        for j in 0..w {
            self.t[(row, j)] /= p;
        }
        for i in 0..m {
            if i == row {
                continue;
            }
            let f = self.t[(i, col)];
            if f == 0.0 {
                continue;
            }
            for j in 0..w {
                self.t[(i, j)] -= f * self.t[(row, j)];
            }
        }
        self.basis[row] = col;
    }

    /// Simplex iterations under Bland's rule: entering variable is the
    /// lowest-index column with negative reduced cost, leaving variable the
    /// ratio-test winner with the lowest basis index on ties.
    fn run(&mut self, cost: &[f64]) -> Result<bool> {
        let m = self.t.rows();
        for _ in 0..MAX_ITERATIONS {
            let basis_cost: Vec<f64> = self.basis.iter().map(|&j| cost[j]).collect();
            let mut entering = None;
            for j in 0..self.n {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j];
                for i in 0..m {
                    reduced -= basis_cost[i] * self.t[(i, j)];
                }
                if reduced < -COST_TOL {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else {
                return Ok(true);
            };
            let mut leaving: Option<usize> = None;
            let mut best_ratio = f64::INFINITY;
            for i in 0..m {
                let a = self.t[(i, col)];
                if a > PIVOT_TOL {
                    let ratio = self.rhs(i) / a;
                    let better = ratio < best_ratio - 1e-12
                        || (fabs(ratio - best_ratio) <= 1e-12
                            && leaving.is_some_and(|l| self.basis[i] < self.basis[l]));
                    if better || leaving.is_none() {
                        best_ratio = ratio;
                        leaving = Some(i);
                    }
                }
            }
            let Some(row) = leaving else {
                return Ok(false);
            };
            self.pivot(row, col);
        }
        Err(Error::Numerical("simplex iteration limit"))
    }
}

/// Solve `min c·x` subject to `Ax = b`, `x ≥ 0`.
pub fn solve_standard(a: &Mat, b: &[f64], c: &[f64]) -> Result<LpOutcome> {
    let m = a.rows();
    let n = a.cols();
    if b.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: b.len() });
    }
    if c.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: c.len() });
    }

    // Phase 1 tableau: [A | I | b] with b ≥ 0 and an artificial basis.
    let mut t = Mat::zeros(m, n + m + 1);
    for i in 0..m {
        let flip = if b[i] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            t[(i, j)] = flip * a[(i, j)];
        }
        t[(i, n + i)] = 1.0;
        t[(i, n + m)] = flip * b[i];
    }
    let mut tab = Tableau { t, basis: (n..n + m).collect(), n: n + m };
    let mut phase1_cost = vec![0.0; n + m];
    for j in n..n + m {
        phase1_cost[j] = 1.0;
    }
    if !tab.run(&phase1_cost)? {
        return Err(Error::Numerical("phase-1 simplex unbounded"));
    }
    let phase1_value: f64 = tab.basis.iter().enumerate().map(|(i, &j)| phase1_cost[j] * tab.rhs(i)).sum();
    if phase1_value > FEAS_TOL {
        return Ok(LpOutcome::Infeasible);
    }

    // Drive remaining artificials out of the basis, dropping redundant rows.
    let mut keep_rows: Vec<usize> = Vec::with_capacity(m);
    for i in 0..m {
        if tab.basis[i] < n {
            keep_rows.push(i);
            continue;
        }
        let mut pivot_col = None;
        for j in 0..n {
            if fabs(tab.t[(i, j)]) > PIVOT_TOL && !tab.basis.contains(&j) {
                pivot_col = Some(j);
                break;
            }
        }
        if let Some(j) = pivot_col {
            tab.pivot(i, j);
            keep_rows.push(i);
        }
        // No pivot available: the row is a redundant constraint; drop it.
    }

    // Rebuild without artificial columns and dropped rows.
    let m2 = keep_rows.len();
    let mut t2 = Mat::zeros(m2, n + 1);
    let mut basis2 = Vec::with_capacity(m2);
    for (r2, &r) in keep_rows.iter().enumerate() {
        for j in 0..n {
            t2[(r2, j)] = tab.t[(r, j)];
        }
        t2[(r2, n)] = tab.rhs(r);
        basis2.push(tab.basis[r]);
    }
    let mut tab2 = Tableau { t: t2, basis: basis2, n };

    if !tab2.run(c)? {
        return Ok(LpOutcome::Unbounded);
    }
    let mut x = vec![0.0; n];
    for (i, &j) in tab2.basis.iter().enumerate() {
        x[j] = tab2.rhs(i);
    }
    Ok(LpOutcome::Optimal { value: dot(c, &x), x })
}

// ---------------------------------------------------------------------------
// Geometry-flavored wrappers
// ---------------------------------------------------------------------------

/// `max obj·x` over `{ x : nᵢ·x ≤ 1 }`. The returned point is the basic
/// optimal vertex picked by Bland's rule.
pub fn maximize_over_halfspaces(normals: &[Vec<f64>], obj: &[f64]) -> Result<(f64, Vec<f64>)> {
    let m = normals.len();
    let d = obj.len();
    let n = 2 * d + m;
    let mut a = Mat::zeros(m, n);
    for (i, row) in normals.iter().enumerate() {
        if row.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: row.len() });
        }
        for j in 0..d {
            a[(i, j)] = row[j];
            a[(i, d + j)] = -row[j];
        }
        a[(i, 2 * d + i)] = 1.0;
    }
    let b = vec![1.0; m];
    let mut c = vec![0.0; n];
    for j in 0..d {
        c[j] = -obj[j];
        c[d + j] = obj[j];
    }
    match solve_standard(&a, &b, &c)? {
        LpOutcome::Optimal { x, value } => {
            let point: Vec<f64> = (0..d).map(|j| x[j] - x[d + j]).collect();
            Ok((-value, point))
        }
        LpOutcome::Unbounded => Err(Error::Unbounded),
        LpOutcome::Infeasible => Err(Error::Infeasible),
    }
}

/// Minimize `s` subject to `nᵢ·(base + Σ tₖ dₖ) ≤ s` over free `(t, s)`:
/// the exact gauge minimum of a halfspace body over an affine slice.
/// Returns `(s*, t*)`.
pub fn min_halfspace_gauge_on_slice(
    normals: &[Vec<f64>],
    base: &[f64],
    dirs: &[Vec<f64>],
) -> Result<(f64, Vec<f64>)> {
    let m = normals.len();
    let d = base.len();
    let k = dirs.len();
    let n = 2 * k + 2 + m;
    let mut a = Mat::zeros(m, n);
    let mut b = vec![0.0; m];
    for (i, row) in normals.iter().enumerate() {
        if row.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: row.len() });
        }
        for (kk, dir) in dirs.iter().enumerate() {
            let nd = dot(row, dir);
            a[(i, kk)] = nd;
            a[(i, k + kk)] = -nd;
        }
        a[(i, 2 * k)] = -1.0;
        a[(i, 2 * k + 1)] = 1.0;
        a[(i, 2 * k + 2 + i)] = 1.0;
        b[i] = -dot(row, base);
    }
    let mut c = vec![0.0; n];
    c[2 * k] = 1.0;
    c[2 * k + 1] = -1.0;
    match solve_standard(&a, &b, &c)? {
        LpOutcome::Optimal { x, value } => {
            let t: Vec<f64> = (0..k).map(|kk| x[kk] - x[k + kk]).collect();
            Ok((value, t))
        }
        LpOutcome::Unbounded => Err(Error::Unbounded),
        LpOutcome::Infeasible => Err(Error::Infeasible),
    }
}

/// Minimize `Σ cⱼ` subject to `Σ cⱼ vⱼ = target + Σ tₖ dₖ`, `c ≥ 0`, `t`
/// free: the vertex-form gauge over an affine slice. Returns `(value, t)`.
pub fn min_vertex_gauge_on_slice(
    vertices: &[Vec<f64>],
    target: &[f64],
    dirs: &[Vec<f64>],
) -> Result<(f64, Vec<f64>)> {
    let d = target.len();
    let nv = vertices.len();
    let k = dirs.len();
    let n = nv + 2 * k;
    let mut a = Mat::zeros(d, n);
    for (j, v) in vertices.iter().enumerate() {
        if v.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: v.len() });
        }
        for r in 0..d {
            a[(r, j)] = v[r];
        }
    }
    for (kk, dir) in dirs.iter().enumerate() {
        for r in 0..d {
            a[(r, nv + kk)] = -dir[r];
            a[(r, nv + k + kk)] = dir[r];
        }
    }
    let mut c = vec![0.0; n];
    for j in 0..nv {
        c[j] = 1.0;
    }
    match solve_standard(&a, target, &c)? {
        LpOutcome::Optimal { x, value } => {
            let t: Vec<f64> = (0..k).map(|kk| x[nv + kk] - x[nv + k + kk]).collect();
            Ok((value, t))
        }
        LpOutcome::Unbounded => Err(Error::Unbounded),
        LpOutcome::Infeasible => Err(Error::Infeasible),
    }
}

/// Largest `s` such that the origin is a convex combination `Σ cⱼ vⱼ = 0`
/// with every weight `cⱼ ≥ s`. Positive iff the origin is strictly interior
/// to the convex hull.
pub fn simplex_interior_margin(vertices: &[Vec<f64>]) -> Result<f64> {
    let nv = vertices.len();
    if nv == 0 {
        return Err(Error::TooFewVertices { needed: 1, found: 0 });
    }
    let d = vertices[0].len();
    // Substituting c = s·1 + μ with μ ≥ 0, s free:
    //   Σ μⱼ vⱼ + s Σ vⱼ = 0,   Σ μⱼ + n·s = 1,   maximize s.
    let n = nv + 2;
    let mut a = Mat::zeros(d + 1, n);
    let mut sum_v = vec![0.0; d];
    for v in vertices {
        for r in 0..d {
            sum_v[r] += v[r];
        }
    }
    for (j, v) in vertices.iter().enumerate() {
        for r in 0..d {
            a[(r, j)] = v[r];
        }
        a[(d, j)] = 1.0;
    }
    for r in 0..d {
        a[(r, nv)] = sum_v[r];
        a[(r, nv + 1)] = -sum_v[r];
    }
    a[(d, nv)] = nv as f64;
    a[(d, nv + 1)] = -(nv as f64);
    let mut b = vec![0.0; d + 1];
    b[d] = 1.0;
    let mut c = vec![0.0; n];
    c[nv] = -1.0;
    c[nv + 1] = 1.0;
    match solve_standard(&a, &b, &c)? {
        LpOutcome::Optimal { value, .. } => Ok(-value),
        LpOutcome::Infeasible => Err(Error::Infeasible),
        LpOutcome::Unbounded => Err(Error::Numerical("interior-margin program unbounded")),
    }
}
