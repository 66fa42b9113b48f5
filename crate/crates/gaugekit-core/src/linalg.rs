//! Dense linear algebra for small dimensions (≤ 10): vectors as `&[f64]`,
//! row-major matrices, LU with partial pivoting, Cholesky, rank and null
//! spaces by Gaussian elimination.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::float::{fabs, sqrt};

// ---------------------------------------------------------------------------
// Vector helpers
// ---------------------------------------------------------------------------

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Euclidean norm.
pub fn norm(a: &[f64]) -> f64 {
    sqrt(dot(a, a))
}

pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `y += s·x` in place.
pub fn axpy(y: &mut [f64], s: f64, x: &[f64]) {
    debug_assert_eq!(y.len(), x.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += s * xi;
    }
}

pub fn neg(a: &[f64]) -> Vec<f64> {
    a.iter().map(|x| -x).collect()
}

pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    norm(&sub(a, b))
}

pub fn is_zero(a: &[f64], tol: f64) -> bool {
    a.iter().all(|x| fabs(*x) <= tol)
}

/// Unit vector in the direction of `a`.
pub fn normalize(a: &[f64]) -> Result<Vec<f64>> {
    let n = norm(a);
    if n <= 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(scale(a, 1.0 / n))
}

/// Unit vector with its first nonzero coordinate positive: a deterministic
/// representative of a direction that is only meaningful up to scale.
pub fn canonical_direction(a: &[f64]) -> Result<Vec<f64>> {
    let mut u = normalize(a)?;
    let lead = u.iter().find(|c| fabs(**c) > 1e-12).copied().unwrap_or(0.0);
    if lead < 0.0 {
        for c in u.iter_mut() {
            *c = -*c;
        }
    }
    Ok(u)
}

pub fn basis_vector(dim: usize, i: usize) -> Vec<f64> {
    let mut e = vec![0.0; dim];
    e[i] = 1.0;
    e
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::Numerical("empty matrix"));
        }
        let c = rows[0].len();
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(Mat { rows: r, cols: c, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<f64>]) -> Result<Self> {
        Mat::from_rows(cols).map(|m| m.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(self.cols, x.len());
        (0..self.rows).map(|i| dot(self.row(i), x)).collect()
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn scaled(&self, s: f64) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| if fabs(*x) > m { fabs(*x) } else { m })
    }

    /// `max |M - Mᵀ|`, as a symmetry defect measure.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = fabs(self[(i, j)] - self[(j, i)]);
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    /// Symmetrize in place: `(M + Mᵀ)/2`. Used to clean up products that are
    /// symmetric in exact arithmetic.
    pub fn symmetrized(&self) -> Mat {
        self.add(&self.transpose()).scaled(0.5)
    }

    /// LU factorization with partial pivoting.
    pub fn lu(&self) -> Result<Lu> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut lu = self.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        let mut min_pivot = f64::INFINITY;
        for k in 0..n {
            let mut p = k;
            let mut best = fabs(lu[(k, k)]);
            for i in k + 1..n {
                let v = fabs(lu[(i, k)]);
                if v > best {
                    best = v;
                    p = i;
                }
            }
            if p != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = tmp;
                }
                perm.swap(k, p);
                sign = -sign;
            }
            let pivot = lu[(k, k)];
            if fabs(pivot) < min_pivot {
                min_pivot = fabs(pivot);
            }
            if pivot == 0.0 {
                continue;
            }
            for i in k + 1..n {
                let factor = lu[(i, k)] / pivot;
                lu[(i, k)] = factor;
                for j in k + 1..n {
                    lu[(i, j)] -= factor * lu[(k, j)];
                }
            }
        }
        Ok(Lu { lu, perm, sign, min_pivot })
    }

    pub fn det(&self) -> Result<f64> {
        Ok(self.lu()?.det())
    }

    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        self.lu()?.solve(b)
    }

    pub fn inverse(&self) -> Result<Mat> {
        let lu = self.lu()?;
        if lu.is_singular(1e-12) {
            return Err(Error::SingularMap);
        }
        let n = self.rows;
        let mut inv = Mat::zeros(n, n);
        for j in 0..n {
            let col = lu.solve(&basis_vector(n, j))?;
            for i in 0..n {
                inv[(i, j)] = col[i];
            }
        }
        Ok(inv)
    }

    /// Cholesky factor `L` (lower triangular, `L·Lᵀ = M`) of a symmetric
    /// positive-definite matrix.
    pub fn cholesky(&self) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut l = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let mut s = self[(i, j)];
                for k in 0..j {
                    s -= l[(i, k)] * l[(j, k)];
                }
                if i == j {
                    if s <= 0.0 {
                        return Err(Error::NotPositiveDefinite);
                    }
                    l[(i, i)] = sqrt(s);
                } else {
                    l[(i, j)] = s / l[(j, j)];
                }
            }
        }
        Ok(l)
    }
}

/// LU factorization with the permutation, determinant sign, and the smallest
/// pivot magnitude (the degeneracy measure used by form validation).
#[derive(Debug, Clone)]
pub struct Lu {
    lu: Mat,
    perm: Vec<usize>,
    sign: f64,
    min_pivot: f64,
}

impl Lu {
    pub fn min_pivot(&self) -> f64 {
        self.min_pivot
    }

    pub fn is_singular(&self, tol: f64) -> bool {
        self.min_pivot <= tol
    }

    pub fn det(&self) -> f64 {
        let n = self.lu.rows();
        let mut d = self.sign;
        for i in 0..n {
            d *= self.lu[(i, i)];
        }
        d
    }

    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.lu.rows();
        if b.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: b.len() });
        }
        if self.is_singular(1e-14) {
            return Err(Error::SingularMap);
        }
        // Forward substitution on the permuted right-hand side.
        let mut y = vec![0.0; n];
        for i in 0..n {
            let mut s = b[self.perm[i]];
            for k in 0..i {
                s -= self.lu[(i, k)] * y[k];
            }
            y[i] = s;
        }
        // Back substitution.
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = y[i];
            for k in i + 1..n {
                s -= self.lu[(i, k)] * x[k];
            }
            x[i] = s / self.lu[(i, i)];
        }
        Ok(x)
    }
}

/// Forward/backward solve with a Cholesky factor `L` (`L·Lᵀ x = b`).
pub fn cholesky_solve(l: &Mat, b: &[f64]) -> Vec<f64> {
    let n = l.rows();
    debug_assert_eq!(b.len(), n);
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[(i, k)] * y[k];
        }
        y[i] = s / l[(i, i)];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in i + 1..n {
            s -= l[(k, i)] * x[k];
        }
        x[i] = s / l[(i, i)];
    }
    x
}

// ---------------------------------------------------------------------------
// Rank and null spaces
// ---------------------------------------------------------------------------

/// Row-echelon rank with partial pivoting; a pivot counts when its magnitude
/// exceeds `tol` times the largest entry of the matrix (or `tol` if the
/// matrix is zero).
pub fn rank(m: &Mat, tol: f64) -> usize {
    echelon(m, tol).1.len()
}

/// Rank of the affine hull of a point set: the rank of the differences to the
/// first point.
pub fn affine_rank(points: &[Vec<f64>], tol: f64) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let diffs: Vec<Vec<f64>> = points[1..].iter().map(|p| sub(p, &points[0])).collect();
    match Mat::from_rows(&diffs) {
        Ok(m) => rank(&m, tol),
        Err(_) => 0,
    }
}

/// Orthonormal basis of `{ x : Mx = 0 }`.
pub fn null_space(m: &Mat, tol: f64) -> Vec<Vec<f64>> {
    let (ech, pivots) = echelon(m, tol);
    let n = m.cols();
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::with_capacity(free_cols.len());
    for &fc in &free_cols {
        let mut x = vec![0.0; n];
        x[fc] = 1.0;
        // Back substitution over the pivot rows (echelon form, pivots
        // normalized to 1 with zeros above and below).
        for &(r, c) in pivots.iter().rev() {
            let mut s = 0.0;
            for j in c + 1..n {
                s += ech[(r, j)] * x[j];
            }
            x[c] = -s;
        }
        basis.push(x);
    }
    orthonormalize(&basis)
}

/// Reduced row echelon form; returns the echelon matrix and the (row, col)
/// pivot positions.
fn echelon(m: &Mat, tol: f64) -> (Mat, Vec<(usize, usize)>) {
    let mut a = m.clone();
    let scale_ref = if a.max_abs() > 0.0 { a.max_abs() } else { 1.0 };
    let threshold = tol * scale_ref;
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let mut p = r;
        let mut best = fabs(a[(r, c)]);
        for i in r + 1..rows {
            if fabs(a[(i, c)]) > best {
                best = fabs(a[(i, c)]);
                p = i;
            }
        }
        if best <= threshold {
            continue;
        }
        if p != r {
            for j in 0..cols {
                let tmp = a[(r, j)];
                a[(r, j)] = a[(p, j)];
                a[(p, j)] = tmp;
            }
        }
        let pivot = a[(r, c)];
        for j in 0..cols {
            a[(r, j)] /= pivot;
        }
        for i in 0..rows {
            if i != r && a[(i, c)] != 0.0 {
                let factor = a[(i, c)];
                for j in 0..cols {
                    a[(i, j)] -= factor * a[(r, j)];
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    (a, pivots)
}

/// Modified Gram–Schmidt, dropping vectors that collapse below 1e-12.
pub fn orthonormalize(vectors: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut w = v.clone();
        for b in &basis {
            let c = dot(&w, b);
            axpy(&mut w, -c, b);
        }
        let n = norm(&w);
        if n > 1e-12 {
            basis.push(scale(&w, 1.0 / n));
        }
    }
    basis
}
