//! The binary against a fixed corpus: exit codes, golden reports and
//! determinism across worker counts. Set `ZINBIEL_BLESS=1` to rewrite goldens.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn dir(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(name)
}

fn corpus(file: &str) -> String {
    dir("corpus").join(file).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zinbiel")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

fn golden(name: &str, actual: &str) {
    let path = dir("golden").join(name);
    if std::env::var_os("ZINBIEL_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {name}; rerun with ZINBIEL_BLESS=1"));
    assert_eq!(actual, expected, "golden {name} differs");
}

const MODELS: [&str; 3] = ["trunc-int:right:5", "trunc-int:left:3", "zero:3"];

fn golden_name(model: &str, ext: &str) -> String {
    format!("audit_{}.{ext}", model.replace(':', "_"))
}

#[test]
fn audit_goldens() {
    for m in MODELS {
        golden(&golden_name(m, "txt"), &stdout(&["audit", "--model", m]));
        golden(&golden_name(m, "json"), &stdout(&["--format", "json", "audit", "--model", m]));
    }
    golden("audit_t3_dual.txt", &stdout(&["audit", &corpus("t3_dual.json")]));
    golden("audit_candidate.txt", &stdout(&["audit", &corpus("candidate.json")]));
}

#[test]
fn golden_reports_carry_the_refutations() {
    let r5 = std::fs::read_to_string(dir("golden").join("audit_trunc-int_right_5.txt")).unwrap();
    assert!(r5.contains("(e0,e1,e2): residual -(1/30)e5"));
    assert!(r5.contains("(e0,e0,e1): (1/2)e3 vs (1/3)e3"));
    let l3 = std::fs::read_to_string(dir("golden").join("audit_trunc-int_left_3.txt")).unwrap();
    assert!(l3.contains("(e1,e0,e2): (1/3)e3 vs (2/3)e3"));
}

#[test]
fn exit_codes() {
    let t3 = corpus("t3.json");
    assert_eq!(code(&["check", &t3, "right_zinbiel"]), 0);
    assert_eq!(code(&["check", &t3, "left_relation"]), 0);
    assert_eq!(code(&["check", &t3, "(x (y z)) = (y (x z))"]), 0);
    assert_eq!(code(&["check", &t3, "associative"]), 1);
    assert_eq!(code(&["check", &corpus("t3_bumped.json"), "right_zinbiel"]), 1);
    assert_eq!(code(&["check", &corpus("l3.json"), "left_zinbiel"]), 1);
    assert_eq!(code(&["check", &corpus("t3_sym.json"), "commutative"]), 0);
    assert_eq!(code(&["check", &corpus("t3_sym.json"), "associative"]), 0);
    assert_eq!(code(&["check", &corpus("t3_dual.json"), "co_right"]), 0);
    assert_eq!(code(&["check", &corpus("t3_dual.json"), "co_left"]), 1);
    assert_eq!(code(&["check", &corpus("t3_regular.json")]), 0);
    assert_eq!(code(&["check", &corpus("t3_regular.json"), "semidirect"]), 0);
    assert_eq!(code(&["check", &corpus("t3_dual_reps.json")]), 1);
    assert_eq!(code(&["check", &corpus("candidate_zero.json")]), 0);
    assert_eq!(code(&["check", &corpus("candidate.json")]), 1);
    assert_eq!(code(&["audit", &corpus("t3_bumped.json")]), 0);

    for bad in ["bad_syntax.json", "bad_duplicate.json", "bad_scalar.json", "bad_index.json"] {
        assert_eq!(code(&["check", &corpus(bad), "right_zinbiel"]), 2, "{bad}");
        assert_eq!(code(&["audit", &corpus(bad)]), 2, "{bad}");
    }
    assert_eq!(code(&["check", &corpus("missing.json"), "right_zinbiel"]), 2);
    assert_eq!(code(&["check", &t3, "no_such_law"]), 2);
    assert_eq!(code(&["check", &t3, "(x y = z"]), 2);
    assert_eq!(code(&["check", &t3]), 2);
    assert_eq!(code(&["check", &corpus("t3_dual.json"), "right_zinbiel"]), 2);
    assert_eq!(code(&["audit", "--model", "trunc-int:sideways:3"]), 2);
    assert_eq!(code(&["audit"]), 2);
    assert_eq!(code(&["--parallel", "0", "audit", "--model", "zero:2"]), 2);
    assert_eq!(code(&["construct", "double", &corpus("t3.json")]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn reports_do_not_depend_on_parallelism() {
    let cases: [&[&str]; 4] = [
        &["audit", "--model", "trunc-int:right:5"],
        &["audit", "--model", "trunc-int:left:3"],
        &["audit", "CORPUS:t3_dual.json"],
        &["audit", "CORPUS:candidate.json"],
    ];
    for case in cases {
        let args: Vec<String> = case.iter().map(|a| a.strip_prefix("CORPUS:").map(corpus).unwrap_or_else(|| a.to_string())).collect();
        let outs: Vec<String> = ["1", "2", "8"]
            .iter()
            .map(|n| {
                let mut full = vec!["--format", "json", "--parallel", n];
                full.extend(args.iter().map(String::as_str));
                stdout(&full)
            })
            .collect();
        assert!(outs.windows(2).all(|w| w[0] == w[1]), "{case:?}");
    }
}

#[test]
fn constructions_round_trip_through_files() {
    let tmp = tempfile::tempdir().unwrap();
    let p = |n: &str| tmp.path().join(n).display().to_string();
    let t3 = corpus("t3.json");
    stdout(&["construct", "opposite", &t3, "--out", &p("op.json")]);
    stdout(&["construct", "opposite", &p("op.json"), "--out", &p("opop.json")]);
    assert_eq!(std::fs::read(p("opop.json")).unwrap(), std::fs::read(&t3).unwrap());
    assert_eq!(code(&["check", &p("op.json"), "left_zinbiel"]), 0);

    stdout(&["construct", "dual", &t3, "--out", &p("dual.json")]);
    stdout(&["construct", "dual", &p("dual.json"), "--out", &p("back.json")]);
    let back: serde_json::Value = serde_json::from_slice(&std::fs::read(p("back.json")).unwrap()).unwrap();
    let orig: serde_json::Value = serde_json::from_slice(&std::fs::read(&t3).unwrap()).unwrap();
    assert_eq!(back["structure"], orig["structure"]);

    let semi = stdout(&["construct", "semidirect", &corpus("t3_regular.json")]);
    assert_eq!(semi, stdout(&["construct", "semidirect", &t3]));
    let v: serde_json::Value = serde_json::from_str(&semi).unwrap();
    assert_eq!(v["dim"], 8);
    std::fs::write(p("semi.json"), &semi).unwrap();
    assert_eq!(code(&["check", &p("semi.json"), "right_zinbiel"]), 0);

    let model = stdout(&["model", "trunc-int:right:3"]);
    assert_eq!(model.as_bytes(), std::fs::read(&t3).unwrap());
}
