//! Gauge isometries: every isometry of gauge spaces is affine, its linear
//! part maps unit ball onto unit ball, and linear equivalence of the balls
//! decides isometry of the gauges. Includes adjoint and dual isometries and
//! an exhaustive planar linear-equivalence search.

use alloc::vec;
use alloc::vec::Vec;

use crate::body::{convex_hull_2d, Body, VPolytope};
use crate::directions::equality_directions;
use crate::duality::support_gap;
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::symplectic::SymplecticForm;

/// Vertex-matching tolerance for representation-level isometry checks.
const VERTEX_MATCH_TOL: f64 = 1e-9;

/// An affine map `T(x) = T₀x + y₀`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMap {
    linear: Mat,
    translation: Vec<f64>,
}

impl AffineMap {
    pub fn new(linear: Mat, translation: Vec<f64>) -> Result<Self> {
        if linear.rows() != linear.cols() {
            return Err(Error::DimensionMismatch { expected: linear.rows(), found: linear.cols() });
        }
        if translation.len() != linear.rows() {
            return Err(Error::DimensionMismatch {
                expected: linear.rows(),
                found: translation.len(),
            });
        }
        Ok(AffineMap { linear, translation })
    }

    pub fn linear_map(linear: Mat) -> Result<Self> {
        let d = linear.rows();
        AffineMap::new(linear, vec![0.0; d])
    }

    pub fn identity(dim: usize) -> Self {
        AffineMap { linear: Mat::identity(dim), translation: vec![0.0; dim] }
    }

    pub fn translation_map(offset: Vec<f64>) -> Self {
        let d = offset.len();
        AffineMap { linear: Mat::identity(d), translation: offset }
    }

    pub fn dim(&self) -> usize {
        self.linear.rows()
    }

    /// The linear part `T₀` and translation `y₀` with `T = T₀ + y₀`.
    pub fn decompose(&self) -> (&Mat, &[f64]) {
        (&self.linear, &self.translation)
    }

    pub fn linear(&self) -> &Mat {
        &self.linear
    }

    pub fn translation(&self) -> &[f64] {
        &self.translation
    }

    pub fn is_linear(&self, tol: f64) -> bool {
        linalg::is_zero(&self.translation, tol)
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        linalg::add(&self.linear.matvec(x), &self.translation)
    }
}

/// Whether `T` is an isometry from the gauge of `K₁` to the gauge of `K₂`:
/// equivalent to the linear part mapping `K₁` onto `K₂` (translations are
/// always isometries and do not matter). Vertex polytopes are compared by
/// matching vertex sets; otherwise support functions are compared on the
/// deterministic direction set.
pub fn is_gauge_isometry(map: &AffineMap, k1: &Body, k2: &Body) -> Result<bool> {
    if k1.dim() != k2.dim() || map.dim() != k1.dim() {
        return Err(Error::DimensionMismatch { expected: k1.dim(), found: map.dim() });
    }
    let lu = map.linear().lu()?;
    if lu.is_singular(1e-12) {
        return Err(Error::SingularMap);
    }
    if let (Body::Vertices(p1), Body::Vertices(p2)) = (k1, k2) {
        let image: Vec<Vec<f64>> = p1.vertices().iter().map(|v| map.linear().matvec(v)).collect();
        return Ok(vertex_sets_match(&image, p2.vertices(), VERTEX_MATCH_TOL));
    }
    let image = k1.linear_image(map.linear())?;
    let gap = support_gap(&image, k2, &equality_directions(k1.dim()))?;
    Ok(gap <= 1e-9)
}

/// Mutual matching of two vertex sets up to `tol`, ignoring order and
/// multiplicity of interior duplicates.
fn vertex_sets_match(a: &[Vec<f64>], b: &[Vec<f64>], tol: f64) -> bool {
    let covered = |from: &[Vec<f64>], to: &[Vec<f64>]| {
        from.iter().all(|v| to.iter().any(|w| linalg::distance(v, w) <= tol))
    };
    covered(a, b) && covered(b, a)
}

/// The adjoint `T*` of a linear map, acting on covector coordinates:
/// `T*(f)(x) = f(T(x))`, i.e. the transpose matrix.
pub fn adjoint_map(map: &AffineMap) -> Result<Mat> {
    if !map.is_linear(0.0) {
        return Err(Error::NonzeroTranslation);
    }
    Ok(map.linear().transpose())
}

/// The induced isometry of dual gauges `T^ω = I_X ∘ T* ∘ I_Y⁻¹` for a
/// linear isometry `T : (X, γ_X) → (Y, γ_Y)`: it carries `K_Y^{ω_Y}` onto
/// `K_X^{ω_X}`. If `T` is additionally symplectic, `T` itself preserves the
/// dual gauges.
pub fn dual_isometry(
    linear: &Mat,
    form_x: &SymplecticForm,
    form_y: &SymplecticForm,
) -> Result<Mat> {
    if linear.rows() != form_x.dim() || linear.rows() != form_y.dim() {
        return Err(Error::DimensionMismatch { expected: form_x.dim(), found: linear.rows() });
    }
    let lu = linear.lu()?;
    if lu.is_singular(1e-12) {
        return Err(Error::SingularMap);
    }
    // I_X(f) solves Ω_Xᵀ x = f and I_Y⁻¹(y) = Ω_Yᵀ y.
    let ix = form_x.matrix().transpose().inverse()?;
    Ok(ix.matmul(&linear.transpose()).matmul(&form_y.matrix().transpose()))
}

/// Whether `ω_Y(Tx, Ty) = ω_X(x, y)`, i.e. `Tᵀ Ω_Y T = Ω_X` within `tol`.
pub fn is_symplectic_map(
    linear: &Mat,
    form_x: &SymplecticForm,
    form_y: &SymplecticForm,
    tol: f64,
) -> Result<bool> {
    if linear.rows() != form_x.dim() || linear.rows() != form_y.dim() {
        return Err(Error::DimensionMismatch { expected: form_x.dim(), found: linear.rows() });
    }
    let lhs = linear.transpose().matmul(form_y.matrix()).matmul(linear);
    Ok(lhs.add(&form_x.matrix().scaled(-1.0)).max_abs() <= tol)
}

/// Exhaustive search for a linear map with `T(K₁) = K₂` between planar
/// vertex polytopes. Vertices are hulled into cyclic order; every rotation
/// of the correspondence in both orientations is tried, the candidate map is
/// solved from two anchor vertices and verified on the full vertex sets.
/// Complete for polygons: a linear equivalence maps vertices to vertices
/// preserving cyclic adjacency up to reversal.
pub fn linear_equivalence_search_2d(
    k1: &VPolytope,
    k2: &VPolytope,
) -> Result<Option<AffineMap>> {
    if k1.dim() != 2 || k2.dim() != 2 {
        return Err(Error::PlanarOnly { dim: k1.dim().max(k2.dim()) });
    }
    let h1 = convex_hull_2d(k1.vertices());
    let h2 = convex_hull_2d(k2.vertices());
    let m = h1.len();
    if m != h2.len() {
        return Ok(None);
    }
    // Two adjacent hull vertices are linearly independent when the origin is
    // interior, so they anchor the candidate map.
    let anchors = Mat::from_cols(&[h1[0].clone(), h1[1].clone()])?;
    let anchors_inv = anchors.inverse()?;
    for orientation in [false, true] {
        let ordered: Vec<Vec<f64>> = if orientation {
            h2.iter().rev().cloned().collect()
        } else {
            h2.clone()
        };
        for offset in 0..m {
            let w0 = &ordered[offset];
            let w1 = &ordered[(offset + 1) % m];
            let targets = Mat::from_cols(&[w0.clone(), w1.clone()])?;
            let candidate = targets.matmul(&anchors_inv);
            if candidate.lu()?.is_singular(1e-12) {
                continue;
            }
            let verified = (0..m).all(|i| {
                let image = candidate.matvec(&h1[i]);
                linalg::distance(&image, &ordered[(offset + i) % m]) <= 1e-8
            });
            if verified {
                return Ok(Some(AffineMap::linear_map(candidate)?));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::float::fabs;
    use crate::gauge::Gauge;
    use crate::rng::SplitMix64;
    use crate::sampling;
    use crate::symplectic::Covector;
    use approx::assert_relative_eq;

    fn rotation(theta: f64) -> Mat {
        let (c, s) = (theta.cos(), theta.sin());
        Mat::from_rows(&[vec![c, -s], vec![s, c]]).unwrap()
    }

    fn triangle_body() -> Body {
        Body::Vertices(sampling::equilateral_triangle())
    }

    #[test]
    fn decompose_roundtrip() {
        let map = AffineMap::new(rotation(0.3), vec![1.0, 2.0]).unwrap();
        let (linear, shift) = map.decompose();
        let mut rng = SplitMix64::new(3);
        for _ in 0..100 {
            let x = rng.point(2, 4.0);
            let direct = map.apply(&x);
            let recomposed = linalg::add(&linear.matvec(&x), shift);
            assert!(linalg::distance(&direct, &recomposed) < 1e-12);
        }
        assert_eq!(shift, &[1.0, 2.0]);
        let linear_only = AffineMap::linear_map(rotation(0.3)).unwrap();
        assert!(linear_only.is_linear(0.0));
    }

    #[test]
    fn triangle_symmetry_rotation_is_isometry() {
        let rot = AffineMap::linear_map(rotation(2.0 * core::f64::consts::PI / 3.0)).unwrap();
        assert!(is_gauge_isometry(&rot, &triangle_body(), &triangle_body()).unwrap());
        // Pure translations are isometries: the linear part is the identity.
        let shift = AffineMap::translation_map(vec![3.0, -1.0]);
        assert!(is_gauge_isometry(&shift, &triangle_body(), &triangle_body()).unwrap());
        // A quarter turn is not a symmetry of the triangle.
        let quarter = AffineMap::linear_map(rotation(core::f64::consts::FRAC_PI_2)).unwrap();
        assert!(!is_gauge_isometry(&quarter, &triangle_body(), &triangle_body()).unwrap());
    }

    #[test]
    fn translated_ball_is_not_the_same_gauge() {
        let shifted: Vec<Vec<f64>> = sampling::equilateral_triangle()
            .vertices()
            .iter()
            .map(|v| vec![v[0] + 0.1, v[1]])
            .collect();
        let k2 = Body::Vertices(VPolytope::new(shifted).unwrap());
        let id = AffineMap::identity(2);
        assert!(!is_gauge_isometry(&id, &triangle_body(), &k2).unwrap());
    }

    #[test]
    fn singular_maps_are_rejected() {
        let singular = AffineMap::linear_map(
            Mat::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            is_gauge_isometry(&singular, &triangle_body(), &triangle_body()),
            Err(Error::SingularMap)
        ));
    }

    #[test]
    fn adjoint_of_diagonal_and_rotation() {
        let diag = AffineMap::linear_map(
            Mat::from_rows(&[vec![2.0, 0.0], vec![0.0, 3.0]]).unwrap(),
        )
        .unwrap();
        let adj = adjoint_map(&diag).unwrap();
        assert_relative_eq!(adj[(0, 0)], 2.0);
        assert_relative_eq!(adj[(1, 1)], 3.0);

        // Adjoint of a rotation by θ acts as the rotation by -θ.
        let rot = rotation(0.7);
        let adj = adjoint_map(&AffineMap::linear_map(rot.clone()).unwrap()).unwrap();
        let inv_rot = rotation(-0.7);
        assert!(adj.add(&inv_rot.scaled(-1.0)).max_abs() < 1e-12);

        // Defining identity and contravariance on random data.
        let mut rng = SplitMix64::new(7);
        let s = rotation(rng.in_range(0.0, 3.0));
        let t = rotation(rng.in_range(0.0, 3.0));
        let st = s.matmul(&t);
        let adj_st = adjoint_map(&AffineMap::linear_map(st).unwrap()).unwrap();
        let adj_s = adjoint_map(&AffineMap::linear_map(s.clone()).unwrap()).unwrap();
        let adj_t = adjoint_map(&AffineMap::linear_map(t.clone()).unwrap()).unwrap();
        assert!(adj_st.add(&adj_t.matmul(&adj_s).scaled(-1.0)).max_abs() < 1e-12);
        for _ in 0..50 {
            let f = rng.point(2, 2.0);
            let x = rng.point(2, 2.0);
            let lhs = linalg::dot(&adj_s.matvec(&f), &x);
            let rhs = linalg::dot(&f, &s.matvec(&x));
            assert_relative_eq!(lhs, rhs, epsilon = 1e-12);
        }

        let with_shift = AffineMap::new(rotation(0.1), vec![1.0, 0.0]).unwrap();
        assert!(matches!(adjoint_map(&with_shift), Err(Error::NonzeroTranslation)));
    }

    #[test]
    fn symplectic_rotation_preserves_dual_gauge() {
        // Planar rotations have determinant 1, hence are symplectic for the
        // determinant form; a rotation symmetry of the body then preserves
        // the dual gauge directly.
        let form = SymplecticForm::determinant();
        let rot = rotation(2.0 * core::f64::consts::PI / 3.0);
        assert!(is_symplectic_map(&rot, &form, &form, 1e-12).unwrap());
        let k = triangle_body();
        let mut rng = SplitMix64::new(11);
        for _ in 0..200 {
            let x = rng.point(2, 3.0);
            let a = crate::duality::dual_gauge_eval(&k, &form, &rot.matvec(&x)).unwrap();
            let b = crate::duality::dual_gauge_eval(&k, &form, &x).unwrap();
            assert_relative_eq!(a, b, epsilon = 1e-9, max_relative = 1e-9);
        }
    }

    #[test]
    fn identity_dual_isometry_is_the_form_change_map() {
        let mut rng = SplitMix64::new(13);
        let f1 = sampling::random_skew_form(&mut rng, 4).unwrap();
        let f2 = sampling::random_skew_form(&mut rng, 4).unwrap();
        let t_omega = dual_isometry(&Mat::identity(4), &f1, &f2).unwrap();
        let change = crate::duality::form_change_map(&f2, &f1).unwrap();
        assert!(t_omega.add(&change.scaled(-1.0)).max_abs() < 1e-10);
    }

    #[test]
    fn dual_isometry_maps_dual_bodies_backwards() {
        // T: (X, γ₁) → (Y, γ₂) isometry ⇒ T^ω maps K₂^{ω₂} onto K₁^{ω₁}.
        let mut rng = SplitMix64::new(17);
        let form_x = sampling::random_skew_form(&mut rng, 2).unwrap();
        let form_y = sampling::random_skew_form(&mut rng, 2).unwrap();
        let k1 = Body::Vertices(sampling::random_polygon(&mut rng, 4, 7).unwrap());
        let t = rotation(rng.in_range(0.0, 6.0));
        let k2 = k1.linear_image(&t).unwrap();
        assert!(is_gauge_isometry(&AffineMap::linear_map(t.clone()).unwrap(), &k1, &k2).unwrap());

        let t_omega = dual_isometry(&t, &form_x, &form_y).unwrap();
        let dual_k2 = crate::duality::dual_body(&k2, &form_y).unwrap();
        let dual_k1 = crate::duality::dual_body(&k1, &form_x).unwrap();
        let image = dual_k2.linear_image(&t_omega).unwrap();
        let gap = support_gap(&image, &dual_k1, &equality_directions(2)).unwrap();
        assert!(gap <= 1e-9, "dual isometry gap {gap:e}");
    }

    #[test]
    fn det_preserving_diagonal_preserves_dual_gauge_of_square() {
        let form = SymplecticForm::determinant();
        let t = Mat::from_rows(&[vec![2.0, 0.0], vec![0.0, 0.5]]).unwrap();
        assert!(is_symplectic_map(&t, &form, &form, 1e-12).unwrap());
        let square = Body::Vertices(sampling::unit_square());
        let image = square.linear_image(&t).unwrap();
        // T is an isometry (K → T(K)) and symplectic, so it maps the dual
        // gauge of the image back onto the dual gauge of the square.
        let mut rng = SplitMix64::new(19);
        for _ in 0..200 {
            let x = rng.point(2, 3.0);
            let a = crate::duality::dual_gauge_eval(&image, &form, &t.matvec(&x)).unwrap();
            let b = crate::duality::dual_gauge_eval(&square, &form, &x).unwrap();
            assert_relative_eq!(a, b, epsilon = 1e-9, max_relative = 1e-9);
        }
    }

    #[test]
    fn equivalence_search_finds_rotation_and_homothety() {
        let k = sampling::equilateral_triangle();
        let rot = rotation(2.0 * core::f64::consts::PI / 3.0);
        let rotated = VPolytope::new(k.vertices().iter().map(|v| rot.matvec(v)).collect()).unwrap();
        let found = linear_equivalence_search_2d(&k, &rotated).unwrap().unwrap();
        assert!(is_gauge_isometry(&found, &Body::Vertices(k.clone()), &Body::Vertices(rotated))
            .unwrap());

        let doubled =
            VPolytope::new(k.vertices().iter().map(|v| linalg::scale(v, 2.0)).collect()).unwrap();
        let found = linear_equivalence_search_2d(&k, &doubled).unwrap().unwrap();
        // A homothety is found; callers distinguish it from an isometry of
        // the same gauge by its scale.
        let image = found.linear().matvec(&k.vertices()[0]);
        assert_relative_eq!(
            linalg::norm(&image) / linalg::norm(&k.vertices()[0]),
            2.0,
            epsilon = 1e-9
        );
    }

    #[test]
    fn equivalence_search_refutes_translated_copy() {
        let k = sampling::equilateral_triangle();
        let shifted = VPolytope::new(
            k.vertices().iter().map(|v| vec![v[0] + 0.1, v[1]]).collect(),
        )
        .unwrap();
        assert!(linear_equivalence_search_2d(&k, &shifted).unwrap().is_none());
        // Different vertex counts refute immediately.
        let square = sampling::unit_square();
        assert!(linear_equivalence_search_2d(&k, &square).unwrap().is_none());
    }

    #[test]
    fn isometries_preserve_distances_polar_gauges_and_norms() {
        let mut rng = SplitMix64::new(23);
        let k1 = Body::Vertices(sampling::random_polygon(&mut rng, 3, 8).unwrap());
        let t = rotation(rng.in_range(0.0, 6.0)).matmul(
            &Mat::from_rows(&[vec![1.3, 0.4], vec![0.0, 0.9]]).unwrap(),
        );
        let k2 = k1.linear_image(&t).unwrap();
        let map = AffineMap::linear_map(t.clone()).unwrap();
        assert!(is_gauge_isometry(&map, &k1, &k2).unwrap());

        let g1 = Gauge::new(k1.clone());
        let g2 = Gauge::new(k2.clone());
        for _ in 0..300 {
            let x = rng.point(2, 3.0);
            let z = rng.point(2, 3.0);
            let d1 = g1.distance(&x, &z).unwrap();
            let d2 = g2.distance(&t.matvec(&x), &t.matvec(&z)).unwrap();
            assert_relative_eq!(d1, d2, epsilon = 1e-9, max_relative = 1e-9);
            // Symmetrized norms travel along the isometry as well.
            assert_relative_eq!(
                g1.symmetrized_norm(&x).unwrap(),
                g2.symmetrized_norm(&t.matvec(&x)).unwrap(),
                epsilon = 1e-9,
                max_relative = 1e-9
            );
        }
        // Polar gauges are isometric through the adjoint, backwards.
        let adj = adjoint_map(&map).unwrap();
        for _ in 0..300 {
            let f = rng.point(2, 2.0);
            if linalg::is_zero(&f, 1e-9) {
                continue;
            }
            let lhs = crate::duality::polar_gauge_eval(
                &k1,
                &Covector::new(adj.matvec(&f)).unwrap(),
            )
            .unwrap();
            let rhs =
                crate::duality::polar_gauge_eval(&k2, &Covector::new(f).unwrap()).unwrap();
            assert!(fabs(lhs - rhs) <= 1e-9 * (1.0 + rhs));
        }
    }
}
