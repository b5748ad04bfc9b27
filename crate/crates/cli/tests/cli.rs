//! End-to-end behavior of the `scarf` binary.

use std::process::{Command, Output};

use serde_json::Value;

const GENEX: &str = "x1^3, x1^2*x2, x1*x2^2*x3^2, x2^4, x2^3*x3, x3^3";

fn fixture(name: &str) -> String {
    format!("{}/../core/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn scarf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scarf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn info_reports_corners_and_witness() {
    let out = scarf(&["info", "x1^2, x1*x2, x1*x3, x2^2, x3^2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["generic"], false);
    assert_eq!(v["genericity_witness"]["variable"], 1);
    assert_eq!(v["colength"], 5);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(scarf(&["info", "x1^0"]).status.code(), Some(2));
    assert_eq!(scarf(&["dphi", "x1*x2"]).status.code(), Some(2));
    assert_eq!(
        scarf(&["dphi", "x1^2, x1*x3, x2*x3, x2^2, x3^2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        scarf(&["partition", GENEX, "--sigma", "1,2"]).status.code(),
        Some(2)
    );
    let out = scarf(&["render", GENEX]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("two variables"));
}

#[test]
fn dphi_genex_all_sigma() {
    let out = scarf(&["dphi", GENEX, "--sigma", "all", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let sigmas = v["sigmas"].as_array().unwrap();
    assert_eq!(sigmas.len(), 6);
    for s in sigmas {
        assert_eq!(s["pairing"], 22);
        assert_eq!(s["theorem_holds"], true);
    }
    assert_eq!(v["factorization"]["pairing_sum"], 132);
}

#[test]
fn dphi_motex_flags_mismatch_but_succeeds() {
    let out = scarf(&["dphi", &fixture("motex-hull.json"), "--sigma", "3,1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("MISMATCH"));
    assert!(text.contains("pairing 9 = colength 9"));
}

#[test]
fn json_is_byte_deterministic() {
    let a = scarf(&["verify", GENEX, "--format", "json", "--seed", "5"]);
    let b = scarf(&["verify", GENEX, "--format", "json", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn resolve_emits_triplets() {
    let out = scarf(&["resolve", "x1^2, x2^3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        v["differentials"][1]["entries"],
        serde_json::json!([[1, 0, 1, [0, 3]], [0, 0, -1, [2, 0]]])
    );
    assert_eq!(v["checks"]["minimal"], true);
}

#[test]
fn render_slices_both_ways() {
    let dir = std::env::temp_dir().join(format!("scarf-render-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.svg");
    let ideal = "x1^4, x1^2*x2, x1*x2^3, x2^5";
    let out = scarf(&[
        "render",
        ideal,
        "--sigma",
        "1,2",
        "--sigma",
        "2,1",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("id=\"sigma-1-2\"") && svg.contains("id=\"sigma-2-1\""));
    let again = scarf(&[
        "render", ideal, "--sigma", "1,2", "--sigma", "2,1", "--format", "svg",
    ]);
    assert_eq!(again.stdout, svg.as_bytes());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_complex_file() {
    for name in [
        "amsterdam-hull.json",
        "motex-hull.json",
        "motex-minimal.json",
    ] {
        let out = scarf(&["verify", &fixture(name)]);
        assert_eq!(out.status.code(), Some(0), "{name}");
    }
}

#[test]
fn verify_corrupted_complex_exits_2() {
    let text = std::fs::read_to_string(fixture("motex-minimal.json")).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    let sign = v["cells"][2][0]["boundary"][0][1].as_i64().unwrap();
    v["cells"][2][0]["boundary"][0][1] = (-sign).into();
    let path = std::env::temp_dir().join(format!("scarf-bad-{}.json", std::process::id()));
    std::fs::write(&path, v.to_string()).unwrap();
    let out = scarf(&["verify", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.status.code(), Some(2));
}
