//! Seeded property-law suites. Each suite draws its fixtures from the
//! deterministic generator, evaluates a batch of named checks, and prints a
//! byte-stable JSON report (sorted by check name, 17-digit floats).

use clap::Subcommand;

use gaugekit_core::body::{Body, SmoothBody, VPolytope};
use gaugekit_core::characteristics::{
    capacity_estimate, integrate_characteristic, isoperimetric_report, jj_involution_check,
    planar_characteristic_check, section_duality_check, FlowOptions,
};
use gaugekit_core::directions::equality_directions;
use gaugekit_core::duality::{bidual_body, dual_body, dual_gauge_eval, support_gap};
use gaugekit_core::gauge::Gauge;
use gaugekit_core::isometry::{is_gauge_isometry, linear_equivalence_search_2d, AffineMap};
use gaugekit_core::linalg::{self, Mat};
use gaugekit_core::orthogonality::{dual_attainment_point, is_orthogonal};
use gaugekit_core::rng::SplitMix64;
use gaugekit_core::sampling;
use gaugekit_core::symplectic::{PlaneSubspace, SymplecticForm};

use crate::report::{Check, RunReport};
use crate::{emit, CliError, CliResult2, Ctx};

#[derive(Subcommand)]
pub enum LawsCmd {
    /// Run a named suite (or "all")
    Run {
        /// bidual | dual-gauge | inequality | reversal | rescaling |
        /// form-independence | mazur-ulam | involution | sections | flows | all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<String>,
    },
}

pub fn run(ctx: &Ctx, cmd: LawsCmd) -> CliResult2<i32> {
    match cmd {
        LawsCmd::Run { suite, seed, out } => {
            let checks = run_suite(ctx, &suite, seed)?;
            let report = RunReport::new(&suite, seed, ctx.eps, checks);
            let code = report.exit_code();
            emit(&report, out.as_deref(), &report.summarize())?;
            Ok(code)
        }
    }
}

fn run_suite(ctx: &Ctx, suite: &str, seed: u64) -> CliResult2<Vec<Check>> {
    let all = [
        "bidual",
        "dual-gauge",
        "inequality",
        "reversal",
        "rescaling",
        "form-independence",
        "mazur-ulam",
        "involution",
        "sections",
        "flows",
    ];
    let selected: Vec<&str> = if suite == "all" {
        all.to_vec()
    } else if all.contains(&suite) {
        vec![suite]
    } else {
        return Err(CliError::Input(anyhow::anyhow!(
            "unknown suite {suite:?}; choose one of {all:?} or \"all\""
        )));
    };
    let mut checks = Vec::new();
    for name in selected {
        let mut rng = SplitMix64::new(seed ^ hash_name(name));
        let batch = match name {
            "bidual" => bidual_suite(ctx, &mut rng),
            "dual-gauge" => dual_gauge_suite(ctx, &mut rng),
            "inequality" => inequality_suite(&mut rng),
            "reversal" => reversal_suite(&mut rng),
            "rescaling" => rescaling_suite(ctx, &mut rng),
            "form-independence" => form_independence_suite(ctx, &mut rng),
            "mazur-ulam" => mazur_ulam_suite(&mut rng),
            "involution" => involution_suite(&mut rng),
            "sections" => sections_suite(&mut rng),
            "flows" => flows_suite(),
            _ => unreachable!(),
        }
        .map_err(CliError::Numeric)?;
        checks.extend(batch);
    }
    Ok(checks)
}

fn hash_name(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x1000_0000_01b3)
    })
}

fn triangle() -> Body {
    Body::Vertices(sampling::equilateral_triangle())
}

fn det() -> SymplecticForm {
    SymplecticForm::determinant()
}

fn std4() -> SymplecticForm {
    SymplecticForm::standard(2)
}

fn bidual_suite(ctx: &Ctx, rng: &mut SplitMix64) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    let dirs2 = equality_directions(2);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let k = Body::Vertices(sampling::random_polygon(rng, 3, 10)?);
        let form = sampling::random_skew_form(rng, 2)?;
        worst = worst.max(support_gap(&bidual_body(&k, &form)?, &k.opposite(), &dirs2)?);
    }
    checks.push(Check::bounded("bidual.planar-max-gap", worst, ctx.eps));
    let dirs4 = equality_directions(4);
    let mut worst = 0.0f64;
    for _ in 0..8 {
        let k = Body::Halfspaces(sampling::random_hpolytope(rng, 4, 10)?);
        let form = sampling::random_skew_form(rng, 4)?;
        worst = worst.max(support_gap(&bidual_body(&k, &form)?, &k.opposite(), &dirs4)?);
    }
    checks.push(Check::bounded("bidual.4d-max-gap", worst, ctx.eps));
    Ok(checks)
}

fn dual_gauge_suite(ctx: &Ctx, rng: &mut SplitMix64) -> anyhow::Result<Vec<Check>> {
    let fixtures: Vec<(&str, Body, SymplecticForm)> = vec![
        ("triangle", triangle(), det()),
        ("square", Body::Vertices(sampling::unit_square()), det()),
        ("disk", Body::Smooth(sampling::unit_disk()), det()),
        ("ellipsoid", Body::Smooth(SmoothBody::ellipsoid(&[1.0, 2.0])?), std4()),
        ("hpolytope", Body::Halfspaces(sampling::random_hpolytope(rng, 4, 10)?), std4()),
    ];
    let mut checks = Vec::new();
    for (name, k, form) in &fixtures {
        let dual = Gauge::new(dual_body(k, form)?);
        let mut worst = 0.0f64;
        for _ in 0..200 {
            let x = rng.point(k.dim(), 3.0);
            let a = dual_gauge_eval(k, form, &x)?;
            let b = dual.eval(&x)?;
            worst = worst.max((a - b).abs());
        }
        checks.push(Check::bounded(format!("dual-gauge.{name}"), worst, ctx.eps));
    }
    Ok(checks)
}

fn inequality_suite(rng: &mut SplitMix64) -> anyhow::Result<Vec<Check>> {
    let fixtures: Vec<(&str, Body, SymplecticForm)> = vec![
        ("triangle", triangle(), det()),
        ("polygon", Body::Vertices(sampling::random_polygon(rng, 3, 9)?), det()),
        ("ellipsoid", Body::Smooth(SmoothBody::ellipsoid(&[1.0, 2.0])?), std4()),
    ];
    let mut checks = Vec::new();
    for (name, k, form) in &fixtures {
        let gauge = Gauge::new(k.clone());
        let mut worst_violation = 0.0f64;
        for _ in 0..500 {
            let x = rng.point(k.dim(), 3.0);
            let y = rng.point(k.dim(), 3.0);
            let lhs = form.eval(&x, &y)?;
            let rhs = dual_gauge_eval(k, form, &x)? * gauge.eval(&y)?;
            worst_violation = worst_violation.max(lhs - rhs);
        }
        checks.push(Check::bounded(format!("inequality.{name}.violation"), worst_violation, 1e-10));
        let mut worst_equality = 0.0f64;
        for _ in 0..50 {
            let x = rng.unit_vector(k.dim());
            let y0 = dual_attainment_point(k, form, &x)?;
            let lhs = form.eval(&x, &y0)?;
            let rhs = dual_gauge_eval(k, form, &x)? * gauge.eval(&y0)?;
            worst_equality = worst_equality.max((lhs - rhs).abs());
        }
        checks.push(Check::bounded(format!("inequality.{name}.equality-gap"), worst_equality, 1e-8));
    }
    Ok(checks)
}

fn reversal_suite(rng: &mut SplitMix64) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    let k = triangle();
    let form = det();
    let gauge = Gauge::new(k.clone());
    let dual = dual_body(&k, &form)?;
    let dual_gauge = Gauge::new(dual.clone());
    let mut theorem_ok = true;
    let mut corollary_ok = true;
    for _ in 0..100 {
        let z = rng.unit_vector(2);
        let x0 = dual_attainment_point(&dual, &form, &z)?;
        theorem_ok &= is_orthogonal(&gauge, &linalg::neg(&z), &x0, 1e-8)?.orthogonal;
        let y0 = dual_attainment_point(&k, &form, &z)?;
        corollary_ok &= is_orthogonal(&dual_gauge, &z, &y0, 1e-8)?.orthogonal;
    }
    checks.push(Check::flag("reversal.planar-theorem", theorem_ok));
    checks.push(Check::flag("reversal.planar-corollary", corollary_ok));

    let f4 = std4();
    let e = Body::Smooth(SmoothBody::ellipsoid(&[1.0, 2.0])?);
    let gauge = Gauge::new(e.clone());
    let dual = dual_body(&e, &f4)?;
    let dual_gauge = Gauge::new(dual.clone());
    let mut ok = true;
    for _ in 0..20 {
        let x = rng.unit_vector(4);
        let y = dual_attainment_point(&dual, &f4, &x)?;
        let y_perp = f4.complement(&[y.clone()])?;
        ok &= gaugekit_core::orthogonality::is_orthogonal_to_hyperplane(
            &gauge,
            &linalg::neg(&x),
            &y_perp,
            1e-8,
        )?;
        let z = rng.unit_vector(4);
        let w = dual_attainment_point(&e, &f4, &z)?;
        let w_perp = f4.complement(&[w.clone()])?;
        ok &= gaugekit_core::orthogonality::is_orthogonal_to_hyperplane(
            &dual_gauge,
            &z,
            &w_perp,
            1e-8,
        )?;
    }
    checks.push(Check::flag("reversal.4d-ellipsoid", ok));
    Ok(checks)
}

fn rescaling_suite(ctx: &Ctx, rng: &mut SplitMix64) -> anyhow::Result<Vec<Check>> {
    let dirs = equality_directions(2);
    let mut worst = 0.0f64;
    for _ in 0..5 {
        let k = Body::Vertices(sampling::random_polygon(rng, 3, 8)?);
        let f1 = det();
        for alpha in [2.0, -1.0, 0.5] {
            let f2 = f1.scaled(alpha)?;
            let d1 = dual_body(&k, &f1)?;
            let d2 = dual_body(&k, &f2)?;
            for u in &dirs {
                let lhs = d1.support_value(u)?;
                let rhs = if alpha > 0.0 {
                    alpha * d2.support_value(u)?
                } else {
                    -alpha * d2.support_value(&linalg::neg(u))?
                };
                worst = worst.max((lhs - rhs).abs());
            }
        }
    }
    Ok(vec![Check::bounded("rescaling.max-gap", worst, ctx.eps)])
}

fn form_independence_suite(ctx: &Ctx, rng: &mut SplitMix64) -> anyhow::Result<Vec<Check>> {
    let dirs = equality_directions(4);
    let mut worst = 0.0f64;
    for _ in 0..3 {
        let k = Body::Halfspaces(sampling::random_hpolytope(rng, 4, 8)?);
        let f1 = sampling::random_skew_form(rng, 4)?;
        let f2 = sampling::random_skew_form(rng, 4)?;
        let t = gaugekit_core::duality::form_change_map(&f1, &f2)?;
        let image = dual_body(&k, &f1)?.linear_image(&t)?;
        worst = worst.max(support_gap(&image, &dual_body(&k, &f2)?, &dirs)?);
    }
    Ok(vec![Check::bounded("form-independence.max-gap", worst, ctx.eps)])
}

fn mazur_ulam_suite(rng: &mut SplitMix64) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    let gauge = Gauge::new(triangle());
    let mut axioms_ok = true;
    for _ in 0..100 {
        let x = rng.point(2, 3.0);
        let y = rng.point(2, 3.0);
        let nx = gauge.symmetrized_norm(&x)?;
        axioms_ok &= (gauge.symmetrized_norm(&linalg::neg(&x))? - nx).abs() <= 1e-10;
        axioms_ok &=
            gauge.symmetrized_norm(&linalg::add(&x, &y))? <= nx + gauge.symmetrized_norm(&y)? + 1e-10;
    }
    checks.push(Check::flag("mazur-ulam.norm-axioms", axioms_ok));

    let theta = 2.0 * std::f64::consts::PI / 3.0;
    let rot = Mat::from_rows(&[
        vec![theta.cos(), -theta.sin()],
        vec![theta.sin(), theta.cos()],
    ])?;
    let accepted =
        is_gauge_isometry(&AffineMap::linear_map(rot)?, &triangle(), &triangle())?;
    checks.push(Check::flag("mazur-ulam.rotation-accepted", accepted));

    let shifted = VPolytope::new(
        sampling::equilateral_triangle()
            .vertices()
            .iter()
            .map(|v| vec![v[0] + 0.1, v[1]])
            .collect(),
    )?;
    let rejected = !is_gauge_isometry(
        &AffineMap::identity(2),
        &triangle(),
        &Body::Vertices(shifted.clone()),
    )?;
    checks.push(Check::flag("mazur-ulam.translation-rejected", rejected));
    let refuted =
        linear_equivalence_search_2d(&sampling::equilateral_triangle(), &shifted)?.is_none();
    checks.push(Check::flag("mazur-ulam.equivalence-refuted", refuted));
    Ok(checks)
}

fn involution_suite(rng: &mut SplitMix64) -> anyhow::Result<Vec<Check>> {
    let disk = sampling::unit_disk();
    let e = SmoothBody::ellipsoid(&[1.0, 2.0])?;
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let x = sampling::random_boundary_point(rng, &disk);
        worst = worst.max(jj_involution_check(&disk, &det(), &x)?);
        let y = sampling::random_boundary_point(rng, &e);
        worst = worst.max(jj_involution_check(&e, &std4(), &y)?);
    }
    Ok(vec![Check::bounded("involution.max-residual", worst, 1e-8)])
}

fn sections_suite(rng: &mut SplitMix64) -> anyhow::Result<Vec<Check>> {
    let form = std4();
    let mut worst = 0.0f64;
    let ball = Body::Smooth(SmoothBody::unit_ball(4));
    let e = Body::Smooth(SmoothBody::ellipsoid(&[1.0, 2.0])?);
    let plane1 = PlaneSubspace::new(linalg::basis_vector(4, 0), linalg::basis_vector(4, 1))?;
    let plane2 = PlaneSubspace::new(linalg::basis_vector(4, 2), linalg::basis_vector(4, 3))?;
    for k in [&ball, &e] {
        for plane in [&plane1, &plane2] {
            worst = worst.max(section_duality_check(k, &form, plane)?.hausdorff);
        }
    }
    for _ in 0..5 {
        let k = Body::Halfspaces(sampling::random_hpolytope(rng, 4, 8)?);
        let plane = sampling::random_symplectic_plane(rng, &form)?;
        worst = worst.max(section_duality_check(&k, &form, &plane)?.hausdorff);
    }
    let mut checks = vec![Check::bounded("sections.duality-max-hausdorff", worst, 1e-8)];

    let smooth = SmoothBody::ellipsoid(&[1.0, 2.0])?;
    let mut coordinate_true = true;
    for plane in [&plane1, &plane2] {
        coordinate_true &= planar_characteristic_check(&smooth, &form, plane, 1e-8)?;
    }
    let mut random_false = true;
    for _ in 0..4 {
        let plane = sampling::random_symplectic_plane(rng, &form)?;
        random_false &= !planar_characteristic_check(&smooth, &form, &plane, 1e-8)?;
    }
    checks.push(Check::flag("sections.characteristic-on-coordinate-planes", coordinate_true));
    checks.push(Check::flag("sections.no-characteristic-on-random-planes", random_false));
    Ok(checks)
}

fn flows_suite() -> anyhow::Result<Vec<Check>> {
    let tau = std::f64::consts::TAU;
    let pi = std::f64::consts::PI;
    let mut checks = Vec::new();
    let opts = FlowOptions::with_step(2e-3);

    let disk = sampling::unit_disk();
    let flow = integrate_characteristic(&disk, &det(), &[1.0, 0.0], &opts)?;
    checks.push(Check::flag("flows.disk-closed", flow.closed));
    checks.push(Check::bounded(
        "flows.disk-period-relerr",
        (flow.period.unwrap_or(f64::NAN) - tau).abs() / tau,
        1e-4,
    ));

    let e = SmoothBody::ellipsoid(&[1.0, 2.0])?;
    let form = std4();
    let flow = integrate_characteristic(&e, &form, &[1.0, 0.0, 0.0, 0.0], &opts)?;
    checks.push(Check::bounded(
        "flows.ellipsoid-area-relerr",
        (flow.area - pi).abs() / pi,
        1e-4,
    ));
    let report = isoperimetric_report(&Body::Smooth(e.clone()), &form, &flow.curve)?;
    checks.push(Check::bounded("flows.iso-ratio-deficit", (report.ratio - 1.0).abs(), 1e-4));

    let starts = vec![vec![1.0, 0.0, 0.0, 0.0], vec![0.0, 0.0, 2.0, 0.0]];
    let cap = capacity_estimate(&e, &form, &starts, &opts)?;
    checks.push(Check::bounded(
        "flows.capacity-relerr",
        (cap.capacity - pi).abs() / pi,
        1e-3,
    ));
    checks.push(Check::bounded(
        "flows.capacity-vs-half-length",
        (cap.capacity - cap.half_min_dual_length).abs() / cap.capacity,
        1e-4,
    ));
    Ok(checks)
}
