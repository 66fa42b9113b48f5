//! End-to-end tests of the `gaugekit` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_gaugekit")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(bin()).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn workspace() -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().expect("tempdir");
    let triangle = dir.path().join("triangle.json");
    std::fs::write(
        &triangle,
        r#"{"body":{"type":"vpolytope","vertices":[[0.0,2.0],[1.7320508075688772,-1.0],[-1.7320508075688772,-1.0]]}}"#,
    )
    .unwrap();
    std::fs::write(
        dir.path().join("ellipsoid.json"),
        r#"{"body":{"type":"ellipsoid","radii":[1.0,2.0]}}"#,
    )
    .unwrap();
    std::fs::write(dir.path().join("disk.json"), r#"{"body":{"type":"ellipsoid","radii":[1.0]}}"#)
        .unwrap();
    let path = dir.path().to_path_buf();
    (dir, path)
}

#[test]
fn gauge_eval_matches_fixture_values() {
    let (_guard, dir) = workspace();
    let out = run_in(&dir, &["gauge", "eval", "--body", "triangle.json", "--point", "0,-2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!((v["value"].as_f64().unwrap() - 2.0).abs() < 1e-10);

    let out = run_in(
        &dir,
        &["gauge", "distance", "--body", "triangle.json", "--from", "0,2", "--to", "0,0"],
    );
    let v = stdout_json(&out);
    assert!((v["value"].as_f64().unwrap() - 2.0).abs() < 1e-10);

    let out = run_in(
        &dir,
        &[
            "gauge",
            "pointline",
            "--body",
            "triangle.json",
            "--point",
            "0,0",
            "--line-point",
            "2,0",
            "--line-dir",
            "0,1",
        ],
    );
    let v = stdout_json(&out);
    assert!((v["distance"].as_f64().unwrap() - 2.0 / 3.0f64.sqrt()).abs() < 1e-8);
}

#[test]
fn polar_and_dual_bodies_have_expected_shapes() {
    let (_guard, dir) = workspace();
    let out = run_in(&dir, &["polar", "--body", "triangle.json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["body"]["type"], "hpolytope");
    assert_eq!(v["provenance"]["operation"], "polar");

    let out =
        run_in(&dir, &["dual", "body", "--body", "triangle.json", "--form", "det", "--homothety"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    // Dual normals are Ωvⱼ: (2,0), (-1,∓√3).
    let normals = v["body"]["normals"].as_array().unwrap();
    assert_eq!(normals.len(), 3);
    let r3 = 3.0f64.sqrt();
    let expected = [[2.0, 0.0], [-1.0, -r3], [-1.0, r3]];
    for e in &expected {
        let found = normals.iter().any(|n| {
            let n0 = n[0].as_f64().unwrap();
            let n1 = n[1].as_f64().unwrap();
            (n0 - e[0]).abs() < 1e-10 && (n1 - e[1]).abs() < 1e-10
        });
        assert!(found, "missing dual normal {e:?}");
    }
    assert_eq!(v["is_norm"], false);

    let out = run_in(
        &dir,
        &["dual", "gauge", "--body", "triangle.json", "--form", "det", "--point", "1,0"],
    );
    let v = stdout_json(&out);
    assert!((v["value"].as_f64().unwrap() - 2.0).abs() < 1e-10);
}

#[test]
fn ortho_check_uses_exit_codes() {
    let (_guard, dir) = workspace();
    let out =
        run_in(&dir, &["ortho", "check", "--body", "triangle.json", "--x", "0,-1", "--y", "1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["orthogonal"], true);

    let out =
        run_in(&dir, &["ortho", "check", "--body", "triangle.json", "--x", "1,0", "--y", "0,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn isometry_check_and_search() {
    let (_guard, dir) = workspace();
    // Identity against a translated copy: genuinely different gauge.
    std::fs::write(
        dir.join("shifted.json"),
        r#"{"body":{"type":"vpolytope","vertices":[[0.1,2.0],[1.8320508075688772,-1.0],[-1.6320508075688772,-1.0]]}}"#,
    )
    .unwrap();
    std::fs::write(dir.join("id.json"), r#"{"linear":[[1.0,0.0],[0.0,1.0]]}"#).unwrap();
    let out = run_in(
        &dir,
        &[
            "isometry", "check", "--map", "id.json", "--body1", "triangle.json", "--body2",
            "shifted.json",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["isometry"], false);

    let out = run_in(
        &dir,
        &["isometry", "search", "--body1", "triangle.json", "--body2", "shifted.json"],
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["found"], false);

    // The triangle rotated by 2π/3 is linearly equivalent to itself.
    let out = run_in(
        &dir,
        &["isometry", "search", "--body1", "triangle.json", "--body2", "triangle.json"],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["found"], true);
    assert!(v["linear"].is_array());
}

#[test]
fn characteristic_flow_and_iso_report() {
    let (_guard, dir) = workspace();
    let out = run_in(
        &dir,
        &[
            "char",
            "flow",
            "--body",
            "disk.json",
            "--form",
            "det",
            "--start",
            "1,0",
            "--step",
            "0.001",
            "--max-time",
            "10",
            "--csv",
            "flow.csv",
        ],
    );
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["closed"], true);
    assert!((v["period"].as_f64().unwrap() - std::f64::consts::TAU).abs() < 1e-5);
    assert!((v["iso_ratio"].as_f64().unwrap() - 1.0).abs() < 1e-6);

    // Feed the sampled flow back through the isoperimetric report.
    let out = run_in(
        &dir,
        &["char", "iso", "--body", "disk.json", "--form", "det", "--curve", "flow.csv"],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!((v["ratio"].as_f64().unwrap() - 1.0).abs() < 1e-5);
    assert_eq!(v["is_characteristic"], true);
}

#[test]
fn capacity_of_the_ellipsoid() {
    let (_guard, dir) = workspace();
    let out = run_in(
        &dir,
        &[
            "char",
            "capacity",
            "--body",
            "ellipsoid.json",
            "--form",
            "std:2",
            "--starts",
            "1,0,0,0;0,0,2,0",
            "--step",
            "0.002",
        ],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert!((v["capacity"].as_f64().unwrap() - std::f64::consts::PI).abs() < 1e-3);
    assert_eq!(v["all_closed"], true);
}

#[test]
fn section_commands() {
    let (_guard, dir) = workspace();
    let out = run_in(
        &dir,
        &[
            "section", "check", "--body", "ellipsoid.json", "--form", "std:2", "--plane",
            "1,0,0,0;0,1,0,0",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!(v["hausdorff"].as_f64().unwrap() <= 1e-10);

    let out = run_in(
        &dir,
        &[
            "section", "planar", "--body", "ellipsoid.json", "--form", "std:2", "--plane",
            "1,0,0,0;0,1,0,0",
        ],
    );
    assert_eq!(out.status.code(), Some(0));

    let tilted = "1,0,0,0;0,0.7071067811865476,0,0.7071067811865476";
    let out = run_in(
        &dir,
        &["section", "planar", "--body", "ellipsoid.json", "--form", "std:2", "--plane", tilted],
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["planar_characteristic"], false);
}

#[test]
fn laws_reports_are_byte_stable() {
    let out1 = run(&["laws", "run", "--suite", "bidual", "--seed", "7"]);
    assert_eq!(out1.status.code(), Some(0));
    let out2 = run(&["laws", "run", "--suite", "bidual", "--seed", "7"]);
    assert_eq!(out1.stdout, out2.stdout, "reports differ between runs");
    let v = stdout_json(&out1);
    assert_eq!(v["failed"], 0);
    // Checks are sorted by name.
    let names: Vec<&str> =
        v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);

    let out = run(&["laws", "run", "--suite", "definitely-not-a-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_eps_overrides_default_tolerance() {
    let (_guard, dir) = workspace();
    let out = Command::new(bin())
        .current_dir(&dir)
        .env("GAUGEKIT_EPS", "0.5")
        .args([
            "section", "check", "--body", "ellipsoid.json", "--form", "std:2", "--plane",
            "1,0,0,0;0,1,0,0",
        ])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert!((v["tolerance"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}

#[test]
fn malformed_input_exits_two() {
    let (_guard, dir) = workspace();
    std::fs::write(dir.join("bad.json"), "{\"nope\": 1}").unwrap();
    let out = run_in(&dir, &["gauge", "eval", "--body", "bad.json", "--point", "0,0"]);
    assert_eq!(out.status.code(), Some(2));

    // A body failing validation is also an input error.
    std::fs::write(
        dir.join("shifted-far.json"),
        r#"{"body":{"type":"vpolytope","vertices":[[5.0,2.0],[7.0,3.0],[6.0,4.0]]}}"#,
    )
    .unwrap();
    let out = run_in(&dir, &["gauge", "eval", "--body", "shifted-far.json", "--point", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

/// Minimal well-formedness scan: tags balance and nest properly.
fn assert_well_formed_xml(text: &str) {
    let mut stack: Vec<String> = Vec::new();
    let mut rest = text;
    while let Some(open) = rest.find('<') {
        let close = rest[open..].find('>').map(|i| open + i).expect("unclosed tag");
        let tag = &rest[open + 1..close];
        rest = &rest[close + 1..];
        if tag.starts_with('?') || tag.starts_with('!') || tag.ends_with('/') {
            continue;
        }
        if let Some(name) = tag.strip_prefix('/') {
            let top = stack.pop().unwrap_or_else(|| panic!("unbalanced </{name}>"));
            assert_eq!(top, name, "mismatched closing tag");
        } else {
            let name = tag.split_whitespace().next().unwrap().to_string();
            stack.push(name);
        }
    }
    assert!(stack.is_empty(), "unclosed tags: {stack:?}");
}

#[test]
fn render_emits_valid_svg_with_six_decimal_coordinates() {
    let (_guard, dir) = workspace();
    // Reproduce the nested-triangles figure: K, its polar, its dual.
    let out = run_in(&dir, &["polar", "--body", "triangle.json", "--out", "polar.json"]);
    assert!(out.status.success());
    let out = run_in(
        &dir,
        &["dual", "body", "--body", "triangle.json", "--form", "det", "--out", "dual.json"],
    );
    assert!(out.status.success());
    let out = run_in(
        &dir,
        &[
            "render", "--body", "triangle.json", "--body", "polar.json", "--body", "dual.json",
            "--out", "figure.svg",
        ],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let svg = std::fs::read_to_string(dir.join("figure.svg")).unwrap();
    assert_well_formed_xml(&svg);
    assert_eq!(svg.matches("<polygon").count(), 3);
    // Coordinates carry six decimal places.
    let coord_re = svg
        .split("points=\"")
        .nth(1)
        .and_then(|s| s.split('"').next())
        .expect("polygon points");
    for pair in coord_re.split(' ') {
        for coord in pair.split(',') {
            let (_, frac) = coord.split_once('.').expect("decimal point");
            assert_eq!(frac.len(), 6, "coordinate {coord} not 6 decimals");
        }
    }
}
