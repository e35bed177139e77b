use std::process::{Command, Output};

fn lltlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lltlab"))
        .args(args)
        .env("LLTLAB_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const NU: &str = r#"{"shapes":[{"outer":[2,2],"inner":[1]},[2],[1,1]],"colors":[1,2,1]}"#;

#[test]
fn two_colored_cumulant_table() {
    let o = lltlab(&["compute", "llt-cumulant", NU, "--normalization", "cospin", "--basis", "schur"]);
    assert_eq!(o.status.code(), Some(0));
    let expected = "\
(4,2,1): q + 1
(4,1,1,1): q^2 + q
(3,3,1): q + 1
(3,2,2): 2*q + 1
(3,2,1,1): 2*q^2 + 2*q
(3,1,1,1,1): q^3 + q^2
(2,2,2,1): q^2 + q
(2,2,1,1,1): q^3 + q^2
";
    assert_eq!(stdout(&o), expected);
}

#[test]
fn small_outputs() {
    let o = lltlab(&["compute", "macdonald", "[2]", "--basis", "schur"]);
    assert_eq!(stdout(&o), "(2): 1\n(1,1): q\n");
    let o = lltlab(&["compute", "tutte", r#"{"n":3,"edges":[[1,2],[2,3],[1,3]]}"#, "--at", "1,q"]);
    assert_eq!(stdout(&o), "q + 2\n");
    let o = lltlab(&["compute", "llt", "[[1],[1]]", "--basis", "schur"]);
    assert_eq!(stdout(&o), "(2): 1\n(1,1): q\n");
    let o = lltlab(&["compute", "invpoly", r#"{"n":3,"edges":[[1,2],[2,3],[1,3]]}"#, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"], "q + 2");
}

#[test]
fn exit_codes() {
    assert_eq!(lltlab(&["compute", "llt", "[[1],[1]"]).status.code(), Some(2));
    assert_eq!(lltlab(&["compute", "parking", "[3,3,3]"]).status.code(), Some(2));
    assert_eq!(lltlab(&["verify", "no-such-identity"]).status.code(), Some(2));
    assert_eq!(lltlab(&["compute", "llt", "[[2,2]]", "--normalization", "mac"]).status.code(), Some(3));
    assert_eq!(lltlab(&["verify", "singcell", "--max-size", "3"]).status.code(), Some(0));
    let o = lltlab(&["verify", "lollipop", "--max-size", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first failing instance"));
}

#[test]
fn verify_text_is_deterministic() {
    let a = lltlab(&["verify", "tutte-triple", "--max-size", "3", "--seed", "7"]);
    let b = lltlab(&["verify", "tutte-triple", "--max-size", "3", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().last().unwrap().starts_with("tutte-triple: "));
}

#[test]
fn verify_json_reports() {
    let o = lltlab(&["verify", "hhl-decomp", "--max-size", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert!(!reports.is_empty());
    for r in reports {
        assert_eq!(r["identity"], "hhl-decomp");
        assert_eq!(r["pass"], true);
        assert!(r["elapsed_ms"].is_number());
    }
}

#[test]
fn scan_report() {
    let o = lltlab(&["scan", "mac-schur-pos", "--max-size", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["conjecture"], "mac-schur-pos");
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}
