use std::process::{Command, Output};

use serde_json::Value;

fn xcyclic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xcyclic"))
        .args(args)
        .env_remove("XCYCLIC_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = xcyclic(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&a)).unwrap()
}

#[test]
fn field_lists_classes() {
    let v = json(&["field", "-p", "2", "-n", "4"]);
    assert_eq!(v["schema"], 1);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 5);
    let sizes: Vec<usize> = classes.iter().map(|c| c["members"].as_array().unwrap().len()).collect();
    assert_eq!(sizes, vec![1, 4, 4, 2, 4]);
    assert_eq!(classes[1]["minimal_polynomial"], "x^4+x+1");

    // over GF(4): 1, α^5, α^10 are fixed, the other 12 pair up
    let v = json(&["field", "-p", "2", "-n", "4", "-q", "4"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 9);

    let v = json(&["field", "-p", "2", "-n", "1"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 1);
}

#[test]
fn code_and_expansion_shapes() {
    let v = json(&["code", "-n", "4", "--roots", "1..4", "--verify"]);
    let g = v["G"].as_array().unwrap();
    assert_eq!((g.len(), g[0].as_str().unwrap().split(',').count()), (11, 15));
    assert_eq!(v["orthogonal"], true);
    assert!(stdout(&["code", "-n", "4", "--roots", "1..4", "--verify"]).contains("orthogonality OK"));

    let v = json(&["expand", "-n", "4", "--roots", "1..4", "--verify"]);
    let ge = v["G_e"].as_array().unwrap();
    assert_eq!((ge.len(), ge[0].as_str().unwrap().len()), (44, 60));
    assert_eq!(v["rank"], 44);
    assert_eq!(v["orthogonal"], true);

    let bare = stdout(&["expand", "-n", "4", "--roots", "1..4", "--only", "g"]);
    assert_eq!(bare.lines().count(), 44);
    assert!(bare.lines().all(|l| l.len() == 60 && l.chars().all(|c| c == '0' || c == '1')));
}

#[test]
fn constant_weight_reports() {
    for (p, n, gamma, weight) in [("2", "4", "a^-1", 8), ("2", "6", "a^-9", 36), ("3", "2", "a", 6)] {
        let v = json(&["cw", "-p", p, "-n", n, "--gamma", gamma]);
        let hist = v["weight_histogram"].as_array().unwrap();
        assert_eq!(hist.len(), 1, "{p}^{n} {gamma}");
        assert_eq!(hist[0]["weight"], weight);
        assert_eq!(v["ok"], true);
    }
    let text = stdout(&["cw", "-n", "4"]);
    assert!(text.contains("class-code") && text.contains("MATCH"));
    // 16 codewords of length 15 in the listing
    let v = json(&["cw", "-n", "4", "--list"]);
    assert_eq!(v["codebook"].as_array().unwrap().len(), 16);
}

#[test]
fn subspace_dimensions_of_the_gf256_trio() {
    let basis = "1,a^17,a^85,a^102,a^1,a^18,a^86,a^103";
    for (sel, want) in [("1,4", 8), ("17", 4), ("85", 6)] {
        let v = json(&["subdim", "-n", "8", "--basis", basis, "--subbasis", "1,2,3,4,5,7", "--gammas", sel]);
        assert_eq!((v["dim_gamma"].clone(), v["dim_theta"].clone(), v["dim_oracle"].clone()), (want.into(), want.into(), want.into()));
    }
    // the full basis gives mk
    let v = json(&["subdim", "-n", "8", "--gammas", "1,4", "--subbasis", "1,2,3,4,5,6,7,8"]);
    assert_eq!(v["dim_gamma"], 16);
    let v = json(&["subdim", "-n", "4", "--random", "40", "--seed", "3"]);
    assert_eq!(v["random"]["agree"], 40);
}

#[test]
fn distance_bounds_for_gf32() {
    let v = json(&["dmin", "-n", "5", "--gammas", "21,22;21,22,23;18..22"]);
    let bounds: Vec<u64> = v["selections"].as_array().unwrap().iter().map(|s| s["bound"].as_u64().unwrap()).collect();
    assert_eq!(bounds, vec![64, 60, 40]);
    let refs: Vec<u64> = v["selections"].as_array().unwrap().iter().map(|s| s["reference"].as_u64().unwrap()).collect();
    assert_eq!(refs, vec![48, 48, 36]);

    let v = json(&["dmin", "--witness", "8", "0.5", "1"]);
    let w = &v["witness"];
    assert!(w["weight"].as_u64().unwrap() <= 256);
}

#[test]
fn errors_exit_nonzero() {
    let out = xcyclic(&["dmin", "-n", "5", "--gammas", ""]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension zero"));

    let out = xcyclic(&["dmin", "-n", "5", "--gammas", "1", "--cap", "99999999999"]);
    assert_eq!(out.status.code(), Some(1));
    let out = xcyclic(&["field", "-n", "5", "--cap", "99999999999", "--allow-large"]);
    assert!(out.status.success());

    let out = xcyclic(&["dmin", "-n", "5", "--gammas", "18..22", "--cap", "256", "--require-exact"]);
    assert_eq!(out.status.code(), Some(1));
    let out = xcyclic(&["field", "-p", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let args = ["subdim", "-n", "4", "--random", "20", "--seed", "9", "--format", "json", "--out", path.to_str().unwrap()];
        assert!(xcyclic(&args).status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let csv = stdout(&["expand", "-n", "4", "--roots", "1..4", "--format", "csv"]);
    assert_eq!(csv.lines().next().unwrap().split(',').count(), 60);
}

#[test]
fn repro_suite_matches_golden_files() {
    let out = stdout(&["repro"]);
    assert!(out.lines().all(|l| !l.starts_with("FAIL")), "{out}");
    assert!(out.contains("14/14 cases"));

    // a tampered golden file is reported and fails the run
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert!(xcyclic(&["repro", "--dir", d, "--bless", "--only", "field"]).status.success());
    std::fs::write(dir.path().join("field-gf16.json"), "{}").unwrap();
    let out = xcyclic(&["repro", "--dir", d, "--only", "field"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL field-gf16 (DIFF)"));
}
