//! Polar bodies and gauges, symplectic dual bodies and gauges, bi-duality,
//! and homothety detection.
//!
//! The polar body lives in the dual space; following the usual planar
//! convention it is rendered in primal coordinates through the standard
//! inner product, so `K° = { y : ⟨y, x⟩ ≤ 1 on K }`. The dual body `K^ω` is
//! the image of `K°` under the identification given by the form, and its
//! gauge satisfies `γ_ω(x) = max { ω(x, y) : y ∈ K }`.

use alloc::vec::Vec;

use crate::body::{Body, HPolytope, SmoothBody, VPolytope};
use crate::directions::equality_directions;
use crate::error::{Error, Result};
use crate::float::fabs;
use crate::linalg::Mat;
use crate::symplectic::{Covector, SymplecticForm};

/// The polar body `K° = { f : f(x) ≤ 1 for all x ∈ K }`, in dual
/// coordinates. Vertex form turns into halfspace form with the vertices as
/// normals and vice versa; an ellipsoid `Q` turns into the ellipsoid `Q⁻¹`.
pub fn polar_body(k: &Body) -> Result<Body> {
    Ok(match k {
        Body::Vertices(p) => Body::Halfspaces(HPolytope::new(p.vertices().to_vec())?),
        Body::Halfspaces(p) => Body::Vertices(VPolytope::new(p.normals().to_vec())?),
        Body::Smooth(s) => Body::Smooth(SmoothBody::from_quadratic(s.matrix_inverse().clone())?),
    })
}

/// The polar gauge `γ*(f) = max { f(x) : x ∈ K }`: the support value.
pub fn polar_gauge_eval(k: &Body, f: &Covector) -> Result<f64> {
    if f.is_zero(0.0) {
        return Ok(0.0);
    }
    Ok(k.support(f)?.value)
}

/// The dual body `K^ω = I(K°) = { x : ω(x, y) ≤ 1 for all y ∈ K }`.
///
/// Closed forms per representation: vertices `vⱼ` turn into normals `Ω vⱼ`;
/// normals `aᵢ` turn into vertices `I(aᵢ)`; an ellipsoid `Q` turns into the
/// ellipsoid `Ω Q⁻¹ Ωᵀ`.
pub fn dual_body(k: &Body, form: &SymplecticForm) -> Result<Body> {
    if k.dim() != form.dim() {
        return Err(Error::DimensionMismatch { expected: form.dim(), found: k.dim() });
    }
    Ok(match k {
        Body::Vertices(p) => {
            let normals: Vec<Vec<f64>> =
                p.vertices().iter().map(|v| form.matrix().matvec(v)).collect();
            Body::Halfspaces(HPolytope::new(normals)?)
        }
        Body::Halfspaces(p) => {
            let mut vertices = Vec::with_capacity(p.normals().len());
            for a in p.normals() {
                vertices.push(form.identify(&Covector::new(a.clone())?)?);
            }
            Body::Vertices(VPolytope::new(vertices)?)
        }
        Body::Smooth(s) => {
            let omega = form.matrix();
            let q = omega.matmul(s.matrix_inverse()).matmul(&omega.transpose()).symmetrized();
            Body::Smooth(SmoothBody::from_quadratic(q)?)
        }
    })
}

/// The dual gauge `γ_ω(x) = max { ω(x, y) : y ∈ K }`, evaluated as the
/// support of `K` at the covector `ω(x, ·)`.
pub fn dual_gauge_eval(k: &Body, form: &SymplecticForm, x: &[f64]) -> Result<f64> {
    if k.dim() != form.dim() {
        return Err(Error::DimensionMismatch { expected: form.dim(), found: k.dim() });
    }
    let f = form.contract(x)?;
    if f.is_zero(0.0) {
        return Ok(0.0);
    }
    Ok(k.support(&f)?.value)
}

/// The bi-dual `(K^ω)^ω`, which equals `-K`.
pub fn bidual_body(k: &Body, form: &SymplecticForm) -> Result<Body> {
    dual_body(&dual_body(k, form)?, form)
}

/// Detect a positive homothety `B = α·A` by estimating `α` from one support
/// direction and verifying it on the whole deterministic direction set
/// within `tol`.
pub fn homothety_detect(a: &Body, b: &Body, tol: f64) -> Result<Option<f64>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    let dirs = equality_directions(a.dim());
    let ha = a.support_value(&dirs[0])?;
    let hb = b.support_value(&dirs[0])?;
    // Support values of origin-interior bodies are strictly positive.
    let alpha = hb / ha;
    for dir in &dirs[1..] {
        if fabs(b.support_value(dir)? - alpha * a.support_value(dir)?) > tol {
            return Ok(None);
        }
    }
    Ok(Some(alpha))
}

/// Detect a homothety with either sign: `B = α·A`, `α ≠ 0`. Negative ratios
/// are found by comparing against the reflected body.
pub fn homothety_detect_signed(a: &Body, b: &Body, tol: f64) -> Result<Option<f64>> {
    if let Some(alpha) = homothety_detect(a, b, tol)? {
        return Ok(Some(alpha));
    }
    Ok(homothety_detect(&a.opposite(), b, tol)?.map(|alpha| -alpha))
}

/// Largest support-function gap `max |h_A(u) - h_B(u)|` over a direction
/// set.
pub fn support_gap(a: &Body, b: &Body, dirs: &[Vec<f64>]) -> Result<f64> {
    let mut worst = 0.0f64;
    for dir in dirs {
        let gap = fabs(a.support_value(dir)? - b.support_value(dir)?);
        if gap > worst {
            worst = gap;
        }
    }
    Ok(worst)
}

/// Body equality as a semi-decision: support functions agree within `tol`
/// on the deterministic direction set for the dimension.
pub fn bodies_equal(a: &Body, b: &Body, tol: f64) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    Ok(support_gap(a, b, &equality_directions(a.dim()))? <= tol)
}

/// The linear map `I₂ ∘ I₁⁻¹` that carries `K^{ω₁}` onto `K^{ω₂}` for any
/// body `K` — dual bodies under different forms are isometric through it.
pub fn form_change_map(form1: &SymplecticForm, form2: &SymplecticForm) -> Result<Mat> {
    if form1.dim() != form2.dim() {
        return Err(Error::DimensionMismatch { expected: form1.dim(), found: form2.dim() });
    }
    // I(f) solves Ωᵀ x = f, so I₂ ∘ I₁⁻¹ = (Ω₂ᵀ)⁻¹ Ω₁ᵀ.
    let o2t_inv = form2.matrix().transpose().inverse()?;
    Ok(o2t_inv.matmul(&form1.matrix().transpose()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::body::h_to_v_2d;
    use crate::linalg;
    use crate::gauge::Gauge;
    use crate::rng::SplitMix64;
    use crate::sampling;
    use approx::assert_relative_eq;

    fn triangle() -> Body {
        Body::Vertices(sampling::equilateral_triangle())
    }

    fn det() -> SymplecticForm {
        SymplecticForm::determinant()
    }

    fn match_vertex_set(actual: &[Vec<f64>], expected: &[Vec<f64>], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for e in expected {
            let closest = actual
                .iter()
                .map(|a| linalg::distance(a, e))
                .fold(f64::INFINITY, f64::min);
            assert!(closest <= tol, "no vertex near {e:?} (closest {closest:e})");
        }
    }

    #[test]
    fn triangle_polar_is_the_midpoint_triangle() {
        let polar = polar_body(&triangle()).unwrap();
        let Body::Halfspaces(h) = &polar else { panic!("polar of V-form is H-form") };
        let v = h_to_v_2d(h).unwrap();
        let r3 = 3.0f64.sqrt();
        match_vertex_set(
            v.vertices(),
            &[vec![0.0, -1.0], vec![r3 / 2.0, 0.5], vec![-r3 / 2.0, 0.5]],
            1e-12,
        );
    }

    #[test]
    fn square_polar_is_cross_polytope() {
        let polar = polar_body(&Body::Vertices(sampling::unit_square())).unwrap();
        let Body::Halfspaces(h) = &polar else { panic!() };
        let v = h_to_v_2d(h).unwrap();
        match_vertex_set(
            v.vertices(),
            &[vec![1.0, 0.0], vec![-1.0, 0.0], vec![0.0, 1.0], vec![0.0, -1.0]],
            1e-12,
        );
    }

    #[test]
    fn euclidean_ball_is_self_polar() {
        let ball = Body::Smooth(sampling::unit_disk());
        let polar = polar_body(&ball).unwrap();
        assert!(bodies_equal(&ball, &polar, 1e-12).unwrap());
    }

    #[test]
    fn polar_gauge_is_support() {
        let k = triangle();
        assert_relative_eq!(
            polar_gauge_eval(&k, &Covector::basis(2, 0)).unwrap(),
            3.0f64.sqrt(),
            epsilon = 1e-12
        );
        assert_relative_eq!(
            polar_gauge_eval(&k, &Covector::basis(2, 1)).unwrap(),
            2.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn polar_unit_ball_is_the_polar_body() {
        // γ*(f) ≤ 1 ⟺ f ∈ K°.
        let k = triangle();
        let polar = polar_body(&k).unwrap();
        let mut rng = SplitMix64::new(21);
        for _ in 0..500 {
            let f = rng.point(2, 1.5);
            if linalg::is_zero(&f, 1e-9) {
                continue;
            }
            let val = polar_gauge_eval(&k, &Covector::new(f.clone()).unwrap()).unwrap();
            if fabs(val - 1.0) < 1e-9 {
                continue;
            }
            assert_eq!(polar.contains(&f, 1e-9).unwrap(), val <= 1.0);
        }
    }

    #[test]
    fn membership_duality_lemma() {
        // x ∈ K ⟺ f(x) ≤ 1 for every f ∈ K°, i.e. the support of K° at x
        // (which is γ_K(x)) is at most 1.
        let mut rng = SplitMix64::new(31);
        let gauge = Gauge::new(triangle());
        let polar = polar_body(&triangle()).unwrap();
        let mut checked = 0;
        while checked < 200 {
            let x = rng.point(2, 2.5);
            if linalg::is_zero(&x, 1e-9) {
                continue;
            }
            let gv = gauge.eval(&x).unwrap();
            if fabs(gv - 1.0) < 1e-9 {
                continue;
            }
            let sup = polar.support_value(&x).unwrap();
            assert_eq!(gv <= 1.0, sup <= 1.0 + 1e-9);
            assert_relative_eq!(sup, gv, epsilon = 1e-9, max_relative = 1e-9);
            checked += 1;
        }
    }

    #[test]
    fn triangle_dual_is_rotated_polar() {
        let dual = dual_body(&triangle(), &det()).unwrap();
        let Body::Halfspaces(h) = &dual else { panic!() };
        let v = h_to_v_2d(h).unwrap();
        let r3 = 3.0f64.sqrt();
        match_vertex_set(
            v.vertices(),
            &[vec![-1.0, 0.0], vec![0.5, -r3 / 2.0], vec![0.5, r3 / 2.0]],
            1e-12,
        );
        // The clockwise π/2 rotation of the polar body is the dual body.
        let polar = polar_body(&triangle()).unwrap();
        let rot_cw = Mat::from_rows(&[alloc::vec![0.0, 1.0], alloc::vec![-1.0, 0.0]]).unwrap();
        let rotated = polar.linear_image(&rot_cw).unwrap();
        assert!(bodies_equal(&rotated, &dual, 1e-12).unwrap());
    }

    #[test]
    fn disk_dual_is_disk() {
        let disk = Body::Smooth(sampling::unit_disk());
        let dual = dual_body(&disk, &det()).unwrap();
        assert!(bodies_equal(&disk, &dual, 1e-12).unwrap());
    }

    #[test]
    fn ellipsoid_dual_inverts_radii() {
        let e = Body::Smooth(SmoothBody::ellipsoid(&[1.0, 2.0]).unwrap());
        let dual = dual_body(&e, &SymplecticForm::standard(2)).unwrap();
        let expected = Body::Smooth(SmoothBody::ellipsoid(&[1.0, 0.5]).unwrap());
        assert!(bodies_equal(&dual, &expected, 1e-12).unwrap());
    }

    #[test]
    fn dual_gauge_triangle_values() {
        let k = triangle();
        let form = det();
        assert_relative_eq!(dual_gauge_eval(&k, &form, &[1.0, 0.0]).unwrap(), 2.0, epsilon = 1e-12);
        assert_relative_eq!(
            dual_gauge_eval(&k, &form, &[0.0, 1.0]).unwrap(),
            3.0f64.sqrt(),
            epsilon = 1e-12
        );
        let disk = Body::Smooth(sampling::unit_disk());
        assert_relative_eq!(
            dual_gauge_eval(&disk, &form, &[0.6, 0.8]).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        assert_relative_eq!(dual_gauge_eval(&k, &form, &[0.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn dual_gauge_matches_gauge_of_dual_body() {
        let mut rng = SplitMix64::new(41);
        let form = det();
        let bodies = [
            triangle(),
            Body::Vertices(sampling::unit_square()),
            Body::Vertices(sampling::random_polygon(&mut rng, 3, 8).unwrap()),
        ];
        for k in &bodies {
            let dual = Gauge::new(dual_body(k, &form).unwrap());
            for _ in 0..200 {
                let x = rng.point(2, 3.0);
                assert_relative_eq!(
                    dual_gauge_eval(k, &form, &x).unwrap(),
                    dual.eval(&x).unwrap(),
                    epsilon = 1e-9,
                    max_relative = 1e-9
                );
            }
        }
        let e = Body::Smooth(SmoothBody::ellipsoid(&[1.0, 2.0]).unwrap());
        let f4 = SymplecticForm::standard(2);
        let dual = Gauge::new(dual_body(&e, &f4).unwrap());
        for _ in 0..200 {
            let x = rng.point(4, 3.0);
            assert_relative_eq!(
                dual_gauge_eval(&e, &f4, &x).unwrap(),
                dual.eval(&x).unwrap(),
                epsilon = 1e-9,
                max_relative = 1e-9
            );
        }
    }

    #[test]
    fn bidual_is_reflection() {
        let form = det();
        let bidual = bidual_body(&triangle(), &form).unwrap();
        let Body::Vertices(v) = &bidual else { panic!("bidual of V-form is V-form") };
        let r3 = 3.0f64.sqrt();
        match_vertex_set(
            v.vertices(),
            &[vec![0.0, -2.0], vec![-r3, 1.0], vec![r3, 1.0]],
            1e-12,
        );
        let ball = Body::Smooth(sampling::unit_disk());
        assert!(bodies_equal(&bidual_body(&ball, &form).unwrap(), &ball, 1e-12).unwrap());
    }

    #[test]
    fn bidual_matches_reflection_in_four_dimensions() {
        let mut rng = SplitMix64::new(51);
        for _ in 0..5 {
            let k = Body::Halfspaces(sampling::random_hpolytope(&mut rng, 4, 10).unwrap());
            let form = sampling::random_skew_form(&mut rng, 4).unwrap();
            let bidual = bidual_body(&k, &form).unwrap();
            let gap = support_gap(&bidual, &k.opposite(), &equality_directions(4)).unwrap();
            assert!(gap <= 1e-9, "support gap {gap:e}");
        }
    }

    #[test]
    fn homothety_detection() {
        let disk = Body::Smooth(sampling::unit_disk());
        let dual_disk = dual_body(&disk, &det()).unwrap();
        assert_relative_eq!(
            homothety_detect(&disk, &dual_disk, 1e-8).unwrap().unwrap(),
            1.0,
            epsilon = 1e-10
        );
        let k = triangle();
        let dual = dual_body(&k, &det()).unwrap();
        assert!(homothety_detect(&k, &dual, 1e-8).unwrap().is_none());
        let tripled = k.scaled(3.0).unwrap();
        assert_relative_eq!(
            homothety_detect(&k, &tripled, 1e-8).unwrap().unwrap(),
            3.0,
            epsilon = 1e-10
        );
        // Signed detection sees the reflected triangle as α = -1.
        let reflected = k.opposite();
        assert_relative_eq!(
            homothety_detect_signed(&k, &reflected, 1e-8).unwrap().unwrap(),
            -1.0,
            epsilon = 1e-10
        );
    }

    #[test]
    fn rescaling_law() {
        // With ω₂ = αω₁: K^{ω₁} = α·K^{ω₂}; for α < 0 the dual gauge flips
        // through the reflected body: γ_{ω₂} = (-α)·γ_{-ω₁}.
        let mut rng = SplitMix64::new(61);
        let dirs = equality_directions(2);
        for _ in 0..5 {
            let k = Body::Vertices(sampling::random_polygon(&mut rng, 3, 8).unwrap());
            let f1 = det();
            for alpha in [2.0, -1.0, 0.5] {
                let f2 = f1.scaled(alpha).unwrap();
                let d1 = dual_body(&k, &f1).unwrap();
                let d2 = dual_body(&k, &f2).unwrap();
                let mut worst = 0.0f64;
                for u in &dirs {
                    // h_{αA}(u) = α h_A(u) for α > 0, (-α) h_A(-u) for α < 0.
                    let lhs = d1.support_value(u).unwrap();
                    let rhs = if alpha > 0.0 {
                        alpha * d2.support_value(u).unwrap()
                    } else {
                        -alpha * d2.support_value(&linalg::neg(u)).unwrap()
                    };
                    worst = worst.max(fabs(lhs - rhs));
                }
                assert!(worst <= 1e-9, "rescaling gap {worst:e} at α = {alpha}");
                if alpha < 0.0 {
                    // γ_{ω₂} = (-α)·γ_{-ω₁}: unit ball of γ_{ω₂} is -K^{ω₁}/(-α).
                    let expected = d1.opposite().scaled(1.0 / -alpha).unwrap();
                    let gap = support_gap(&d2, &expected, &dirs).unwrap();
                    assert!(gap <= 1e-9, "sign-split gap {gap:e}");
                }
            }
        }
    }

    #[test]
    fn dual_bodies_under_different_forms_are_isometric() {
        let mut rng = SplitMix64::new(71);
        for _ in 0..5 {
            let k = Body::Halfspaces(sampling::random_hpolytope(&mut rng, 4, 8).unwrap());
            let f1 = sampling::random_skew_form(&mut rng, 4).unwrap();
            let f2 = sampling::random_skew_form(&mut rng, 4).unwrap();
            let t = form_change_map(&f1, &f2).unwrap();
            let image = dual_body(&k, &f1).unwrap().linear_image(&t).unwrap();
            let target = dual_body(&k, &f2).unwrap();
            let gap = support_gap(&image, &target, &equality_directions(4)).unwrap();
            assert!(gap <= 1e-9, "form-change gap {gap:e}");
        }
    }
}
