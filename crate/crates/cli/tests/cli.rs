use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;
use zeon::{ZeonElement, ZeonMatrix, ZeonPolynomial};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn zeon(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zeon"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn matrix_inverse_and_determinant() {
    let path = fixture("determinant_matrix.json");
    let (status, out) = zeon(&["matinv", &path], "");
    assert_eq!(status, 0);
    let inv: ZeonMatrix = serde_json::from_str(&out).unwrap();
    let a: ZeonMatrix = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let id = ZeonMatrix::identity(3, 3);
    assert!(a.try_mul(&inv).unwrap().distance(&id) < 1e-9);

    let (status, out) = zeon(
        &["det", "--pretty"],
        &std::fs::read_to_string(&path).unwrap(),
    );
    assert_eq!(status, 0);
    assert_eq!(out.trim(), "4 + 6*z[1] - 2*z[2] - 3*z[1,2] - 4*z[1,2,3]");
}

#[test]
fn elimination_report() {
    let (status, out) = zeon(
        &[
            "eliminate",
            "--unit-pivots",
            &fixture("determinant_matrix.json"),
        ],
        "",
    );
    assert_eq!(status, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pivot_count"], 3);
    assert!(v["ops"]
        .as_array()
        .unwrap()
        .iter()
        .any(|op| op["op"] == "scale"));
    let upper: ZeonMatrix = serde_json::from_value(v["upper"].clone()).unwrap();
    assert_eq!(upper.get(0, 0), &ZeonElement::one(3));
}

#[test]
fn charpoly_and_eigen() {
    let path = fixture("spectral_matrix.json");
    let (status, out) = zeon(&["charpoly", &path], "");
    assert_eq!(status, 0);
    let chi: ZeonPolynomial = serde_json::from_str(&out).unwrap();
    assert_eq!(chi.degree(), Some(3));
    let (status, out) = zeon(&["eigen", &path], "");
    assert_eq!(status, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["spectrally_simple"], true);
    assert_eq!(v["eigenvectors"].as_array().unwrap().len(), 3);
}

#[test]
fn polynomial_division() {
    let (status, out) = zeon(&["polydiv", &fixture("polydiv.json")], "");
    assert_eq!(status, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let r: ZeonPolynomial = serde_json::from_value(v["remainder"].clone()).unwrap();
    assert!(r.is_zero());
    let q: ZeonPolynomial = serde_json::from_value(v["quotient"].clone()).unwrap();
    assert_eq!(q.degree(), Some(3));
}

#[test]
fn roots_and_output_file() {
    let dir = std::env::temp_dir().join(format!("zeon-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("root.json");
    let (status, out) = zeon(
        &[
            "root",
            "-k",
            "2",
            "-o",
            target.to_str().unwrap(),
            &fixture("element.json"),
        ],
        "",
    );
    assert_eq!((status, out.as_str()), (0, ""));
    let r: ZeonElement = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    let u: ZeonElement =
        serde_json::from_str(&std::fs::read_to_string(fixture("element.json")).unwrap()).unwrap();
    assert!((&r * &r).distance(&u) < 1e-12);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_statuses() {
    let nilpotent = r#"{"n": 2, "terms": [{"I": [1], "re": 1.0, "im": 0.0}]}"#;
    let (status, out) = zeon(&["inv"], nilpotent);
    assert_eq!(status, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"], "singular");

    let (status, out) = zeon(
        &["polyzero", "--lambda0", "1", &fixture("quartic.json")],
        "",
    );
    assert_eq!(status, 2);
    assert!(out.contains("not_spectrally_simple"));

    let (status, _) = zeon(&["det"], "[1, 2]");
    assert_eq!(status, 1);
    let (status, _) = zeon(&["det", "/nonexistent/matrix.json"], "");
    assert_eq!(status, 1);
    let (status, _) = zeon(&["root", "-k", "0"], nilpotent);
    assert_eq!(status, 1);
    let (status, _) = zeon(&["--help"], "");
    assert_eq!(status, 0);

    let skewed = r#"{"rows": 2, "cols": 2, "n": 0, "entries": [
        [{"n": 0, "terms": [{"I": [], "re": 1.0}]}, {"n": 0, "terms": [{"I": [], "re": 2.0}]}],
        [{"n": 0, "terms": []}, {"n": 0, "terms": [{"I": [], "re": 3.0}]}]]}"#;
    let (status, out) = zeon(&["spectral"], skewed);
    assert_eq!(status, 2);
    assert!(out.contains("not_self_adjoint"));
}

#[test]
fn tolerance_flags_are_applied() {
    // With a large scalar-zero tolerance the element counts as nilpotent.
    let small = r#"{"n": 1, "terms": [{"I": [], "re": 0.001}, {"I": [1], "re": 1.0}]}"#;
    assert_eq!(zeon(&["inv"], small).0, 0);
    assert_eq!(
        zeon(
            &["inv", "--tol-scalar", "0.01", "--tol-compare", "0.1"],
            small
        )
        .0,
        2
    );
    assert_eq!(
        zeon(&["inv", "--tol-prune", "1", "--tol-compare", "0.1"], small).0,
        1
    );
}
