use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn maxcomm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxcomm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = maxcomm(&full);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn projector_of_the_irreducible_example() {
    let r = report(&["projector", &data("irr_a1.mpx")]);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["command"], "projector");
    assert_eq!(
        r["results"]["projector"],
        json!([["0", "1", "-1"], ["-1", "0", "-2"], ["-1", "0", "-2"]])
    );
    let text = maxcomm(&["projector", &data("irr_a2.mpx")]);
    let stdout = String::from_utf8(text.stdout).unwrap();
    assert!(stdout.contains("projector: [[0, -1, -1], [-7, 0, -4], [-3, -4, 0]]"), "{stdout}");
}

#[test]
fn projector_limit_matches() {
    let r = report(&["projector", "--limit", "100", &data("irr_a2.mpx")]);
    assert_eq!(r["verdicts"]["limit_matches_closed_form"], true);
}

#[test]
fn eigennode_and_intersection() {
    let pair = [data("irr_a1.mpx"), data("irr_a2.mpx")];
    let r = report(&["eigennode", &pair[0], &pair[1]]);
    assert_eq!(r["results"]["common"], json!([1, 2]));
    assert_eq!(r["results"]["critical_b"], json!([1, 2, 3]));
    let r = report(&["intersect-principal", &pair[0], &pair[1]]);
    assert_eq!(r["results"]["generators"], json!([["0", "-1", "-1"]]));
    let r = report(&["common-eig", &pair[0], &pair[1]]);
    assert_eq!(r["verdicts"]["eigenpairs"], true);
}

#[test]
fn distroots_of_the_reducible_example() {
    let r = report(&["distroots", &data("red_a1.mpx"), &data("red_a2.mpx"), "--poly", "x1*x2"]);
    assert_eq!(r["verdicts"]["closures_coincide"], true);
    assert_eq!(r["verdicts"]["classes_coincide"], true);
    assert_eq!(r["verdicts"]["polynomial_eigenvalues"], true);
    assert_eq!(r["results"]["spectral_classes"], json!([[2, 4], [2, 4]]));
    let s = report(&["spectrum", &data("red_a2.mpx")]);
    let values: Vec<&str> = s["results"]["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["eigenvalue"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["8", "7"]);
}

#[test]
fn float_mode_agrees_on_the_example() {
    let r = report(&["--mode", "float", "critical", &data("irr_a1.mpx")]);
    assert_eq!(r["mode"], json!({"kind": "float", "epsilon": 1e-9}));
    assert_eq!(r["results"]["perron_root"], "0");
    assert_eq!(r["results"]["nodes"], json!([1, 2]));
}

#[test]
fn classical_example() {
    let (a, b) = (data("cl_a.mpx"), data("cl_b.mpx"));
    let r = report(&["classical-decompose", &a]);
    assert_eq!(r["results"]["premier_spectral_classes"], json!([1, 3]));
    assert_eq!(r["results"]["distinguished_eigenvalues"], json!([10.0, 3.0]));
    let r = report(&["classical-common-eig", &a, &b, "--value", "3"]);
    assert_eq!(r["verdicts"]["eigenpairs"], true);
    let v: Vec<f64> = serde_json::from_value(r["results"]["vector"].clone()).unwrap();
    assert!(v[0].abs() < 1e-9 && v[1].abs() < 1e-9 && (v[2] - 1.0).abs() < 1e-9);
    let r = report(&["classical-distroots", &a, &b, "--poly", "x1^2*x2 - x1*x2"]);
    assert!(r["verdicts"].as_object().unwrap().values().all(|v| v == true));
    assert_eq!(r["results"]["polynomial_actual"], json!([270.0, 12.0]));
}

#[test]
fn exit_codes() {
    let precondition = maxcomm(&["eigennode", &data("equal_roots_a.mpx"), &data("zeros.mpx")]);
    assert_eq!(precondition.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&precondition.stderr).contains("matrix 1 is not irreducible"));
    let parse = maxcomm(&["classical-decompose", &data("bad_inf.mpx")]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("bad_inf.mpx:3:3"));
    assert_eq!(maxcomm(&["spectrum", &data("times.mpx")]).status.code(), Some(2));
    assert_eq!(maxcomm(&["--mode", "float", "spectrum", &data("times.mpx")]).status.code(), Some(0));
    assert_eq!(maxcomm(&["spectrum", &data("cl_a.mpx")]).status.code(), Some(2));
    assert_eq!(maxcomm(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(maxcomm(&["--eps", "-1", "star", &data("irr_a1.mpx")]).status.code(), Some(2));
    let not_commuting = maxcomm(&["common-eig", &data("irr_a1.mpx"), &data("equal_roots_a.mpx")]);
    assert_eq!(not_commuting.status.code(), Some(1));
}

#[test]
fn commute_reports_a_verdict() {
    let r = report(&["commute", &data("equal_roots_a.mpx"), &data("zeros.mpx")]);
    assert_eq!(r["verdicts"]["commute"], true);
    let r = report(&["commute", &data("irr_a1.mpx"), &data("equal_roots_a.mpx")]);
    assert_eq!(r["verdicts"]["commute"], false);
    assert_eq!(r["results"]["non_commuting_pairs"], json!([[1, 2]]));
}

#[test]
fn generated_pairs_are_reproducible_and_valid() {
    for kind in ["poly", "scaled-poly", "distinct-roots-block", "classical-poly"] {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().display().to_string();
        let args = ["--json", "--seed", "42", "gen-commuting", "--n", "5", "--kind", kind];
        let first = maxcomm(&args);
        let second = maxcomm(&args);
        assert!(first.status.success(), "{kind}");
        assert_eq!(first.stdout, second.stdout, "{kind} is not deterministic");
        let mut with_out = args.to_vec();
        with_out.extend(["--out", &out]);
        let r = report(&with_out[1..]);
        assert_eq!(r["verdicts"]["commute"], true);
        let a = dir.path().join("A.mpx").display().to_string();
        let b = dir.path().join("B.mpx").display().to_string();
        match kind {
            "classical-poly" => {
                report(&["classical-decompose", &a]);
            }
            "distinct-roots-block" => {
                let r = report(&["distroots", &a, &b]);
                assert!(r["verdicts"].as_object().unwrap().values().all(|v| v == true));
            }
            _ => {
                let r = report(&["commute", &a, &b]);
                assert_eq!(r["verdicts"]["commute"], true);
            }
        }
    }
    let scalar = report(&["gen-commuting", "--n", "1", "--kind", "poly"]);
    assert_eq!(scalar["verdicts"]["commute"], true);
}

#[test]
fn json_reports_are_byte_identical() {
    let args = ["--json", "spectrum", &data("red_a1.mpx")];
    assert_eq!(maxcomm(&args).stdout, maxcomm(&args).stdout);
}
