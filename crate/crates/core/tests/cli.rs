use std::fs;
use std::path::Path;

use serde_json::Value;
use xpol::cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

fn xpol(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("xpol").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).expect("valid JSON output")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_text_and_json() {
    let (code, out, _) = xpol(&["build", "--i", "1", "--d", "4", "--target", "boundary", "--format", "text"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out.lines().count(), 16);

    let (code, out, _) = xpol(&["build", "--i", "2", "--d", "5"]);
    assert_eq!(code, EXIT_PASS);
    let v = json(&out);
    assert_eq!(v["d"], 5);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["facets"].as_array().unwrap().len(), 22);

    let (_, out, _) = xpol(&["build", "--i", "1", "--d", "4", "--target", "complement", "--format", "text"]);
    assert_eq!(out.lines().count(), 8);
}

#[test]
fn build_minus_one_is_void() {
    let (code, out, _) = xpol(&["build", "--i", "-1", "--d", "3"]);
    assert_eq!(code, EXIT_PASS);
    assert!(json(&out)["facets"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["build", "--i", "3", "--d", "4", "--target", "boundary"][..],
        &["build", "--i", "5", "--d", "4"],
        &["sweep", "--d-max", "0"],
        &["check", "sparla", "--r", "2", "--i", "1"],
        &["verify", "--i", "1", "--d", "4", "--suite", "nonsense"],
        &["frobnicate"],
    ] {
        let (code, _, err) = xpol(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?} printed no error");
    }
}

#[test]
fn verify_passes_with_anchors() {
    let (code, out, _) = xpol(&["verify", "--i", "2", "--d", "5"]);
    assert_eq!(code, EXIT_PASS);
    let v = json(&out);
    assert_eq!(v["passed"], true);
    for suite in v["suites"].as_array().unwrap() {
        for check in suite["checks"].as_array().unwrap() {
            assert!(!check["anchor"].as_str().unwrap().is_empty());
        }
    }
}

#[test]
fn torus_homology() {
    let (code, out, _) = xpol(&["verify", "--i", "1", "--d", "4", "--suite", "homology"]);
    assert_eq!(code, EXIT_PASS);
    let v = json(&out);
    let checks = v["suites"][0]["checks"].as_array().unwrap();
    let b = checks.iter().find(|c| c["name"] == "boundary_homology").unwrap();
    assert_eq!(b["detail"]["betti"], serde_json::json!([1, 2, 1]));
}

#[test]
fn corrupted_boundary_file_fails() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("torus.txt");
    let (_, text, _) = xpol(&["build", "--i", "1", "--d", "4", "--target", "boundary", "--format", "text"]);
    fs::write(&file, &text).unwrap();
    let (code, _, _) = xpol(&["verify", "--input", path(&file), "--target", "boundary", "--suite", "manifold"]);
    assert_eq!(code, EXIT_PASS);

    let removed = text.lines().next().unwrap().to_string();
    let rest: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
    fs::write(&file, rest).unwrap();
    let (code, out, _) = xpol(&["verify", "--input", path(&file), "--target", "boundary", "--suite", "manifold"]);
    assert_eq!(code, EXIT_FAIL);
    let v = json(&out);
    let check = &v["suites"][0]["checks"][0];
    assert_eq!(check["passed"], false);
    let ridge: xpol::Face = check["detail"]["offending_ridge"].as_str().unwrap().parse().unwrap();
    let facet: xpol::Face = removed.parse().unwrap();
    assert!(ridge.is_subset(facet));
}

#[test]
fn shelling_order_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("star.txt");
    let (_, text, _) = xpol(&["build", "--i", "2", "--d", "4", "--target", "star", "--format", "text"]);
    let lines: Vec<&str> = text.lines().collect();
    // the facets in the order of the worked example
    let order = ["x1 x2 x3 x4", "y1 x2 x3 x4", "y1 y2 x3 x4", "y1 y2 y3 x4", "x1 y2 x3 x4", "x1 y2 y3 x4", "x1 x2 y3 x4"];
    assert_eq!(lines.len(), order.len());
    fs::write(&file, order.join("\n")).unwrap();
    let (code, out, _) = xpol(&["verify", "--input", path(&file), "--suite", "shelling"]);
    assert_eq!(code, EXIT_PASS, "{out}");

    // a facet whose new faces have two minimal elements
    let bad = ["x1 x2 x3 x4", "y1 y2 y3 x4", "y1 x2 x3 x4", "y1 y2 x3 x4", "x1 y2 x3 x4", "x1 y2 y3 x4", "x1 x2 y3 x4"];
    fs::write(&file, bad.join("\n")).unwrap();
    let (code, _, _) = xpol(&["verify", "--input", path(&file), "--suite", "shelling"]);
    assert_eq!(code, EXIT_FAIL);
}

#[test]
fn json_input_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b.json");
    let (code, _, _) = xpol(&["build", "--i", "1", "--d", "5", "--out", path(&file)]);
    assert_eq!(code, EXIT_PASS);
    let (code, out, _) = xpol(&["report", "homology", "--input", path(&file)]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("\"degree\""));
}

#[test]
fn sparla_equality_case() {
    let (code, out, _) = xpol(&["check", "sparla", "--r", "2", "--i", "0"]);
    assert_eq!(code, EXIT_PASS);
    let v = json(&out);
    assert_eq!(v["sparla"]["lhs"], "20");
    assert_eq!(v["sparla"]["rhs"], "20");
    assert_eq!(v["sparla"]["skeleton_present"], false);

    let (code, out, _) = xpol(&["check", "sparla", "--r", "2", "--chi", "2", "--k", "6"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(json(&out)["holds"], true);
}

#[test]
fn reports() {
    let (code, out, _) = xpol(&["report", "vectors", "--i", "1", "--d", "4", "--format", "text"]);
    assert_eq!(code, EXIT_PASS);
    assert!(!out.is_empty());
    let (code, out, _) = xpol(&["report", "vectors", "--i", "1", "--d", "4"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(json(&out)["h"], serde_json::json!([1, 4, 6, -4, 1]));
    let (code, out, _) = xpol(&["report", "symmetry", "--i", "1", "--d", "4"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(json(&out)["complex"], "B(1,4)");
}

#[test]
fn sweep_small() {
    let (code, out, _) = xpol(&["sweep", "--d-max", "4"]);
    assert_eq!(code, EXIT_PASS);
    let v = json(&out);
    assert_eq!(v["failed"], 0);
    assert!(v["total"].as_u64().unwrap() > 0);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("v.json");
    let (_, stdout, _) = xpol(&["verify", "--i", "1", "--d", "5", "--suite", "complement"]);
    xpol(&["verify", "--i", "1", "--d", "5", "--suite", "complement", "--out", path(&file)]);
    assert_eq!(fs::read_to_string(&file).unwrap(), stdout);
}
