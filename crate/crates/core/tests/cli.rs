use std::process::{Command, Output};

fn pddo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pddo")).args(args).output().unwrap()
}

#[test]
fn exit_codes() {
    let ok = pddo(&["verify", "--n", "4", "--family", "case2", "--params", "1,2,3,6", "--lines", "l1,l4,l2"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = pddo(&["verify", "--n", "4", "--family", "case1", "--params", "1,1,1,0,1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(pddo(&["verify", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(pddo(&["table", "--n", "7", "--family", "preset:demazure"]).status.code(), Some(2));
}

#[test]
fn verification_failure_is_one() {
    let dem = r#"{"family":"preset","n":4,"name":"demazure"}"#;
    let out = pddo(&["commute", "--config", dem, "--config2", dem]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("consecutive (1, 2): fail"));
}

#[test]
fn random_trials_reproducible() {
    for family in ["case1", "case2", "degen-t", "vanq0", "zeta-pair"] {
        let args = ["verify", "--n", "4", "--family", family, "--random-trials", "5", "--rng-seed", "11", "--output", "json"];
        let a = pddo(&args);
        let b = pddo(&args);
        assert_eq!(a.status.code(), Some(0), "{}: {}", family, String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn hecke_text() {
    let out = pddo(&["hecke", "--n", "3", "--family", "preset:grothendieck", "--params", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn seed_poly_from_file() {
    let dir = std::env::temp_dir().join(format!("pddo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seed.json");
    std::fs::write(&path, r#"[{"e":[2,1,0],"c":"1"}]"#).unwrap();
    let out = pddo(&["table", "--n", "3", "--family", "preset:pure_ddiff", "--params", "1", "--seed-poly", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("x1^2*x2"));
    std::fs::remove_dir_all(&dir).unwrap();
}
