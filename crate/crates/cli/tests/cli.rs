use std::process::Command;

use serde_json::Value;
use twchev::{enumerate, run_suite, Case, RepChoice, Report, Status, SuiteConfig, TypeSpec};

fn twchev(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twchev"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8"),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, s) = twchev(args);
    assert_eq!(code, 0, "{args:?}");
    serde_json::from_str(&s).expect("json output")
}

#[test]
fn describe_documents() {
    let roots = json(&["describe", "roots", "A", "3"]);
    assert_eq!(roots["roots"].as_array().unwrap().len(), 12);
    let tw = json(&["describe", "twist", "2A4"]);
    assert_eq!(tw["twisted_type"], "B2");
    let kinds: Vec<&str> = tw["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds.len(), 8);
    assert!(kinds.contains(&"A2") && kinds.contains(&"A1^2"));
    let n = json(&["describe", "constants", "D", "4"]);
    assert_eq!(n["eps"].as_object().unwrap().len(), 24);
    assert!(n["n"]
        .as_object()
        .unwrap()
        .values()
        .all(|v| v.as_i64().unwrap().abs() == 1));
    assert_eq!(json(&["describe", "constants", "D4"]), n);
}

#[test]
fn exit_codes() {
    assert_eq!(twchev(&["verify", "nosuch", "2A3"]).0, 2);
    assert_eq!(twchev(&["describe", "weights", "A", "3"]).0, 2);
    assert_eq!(twchev(&["verify", "tangent", "2Q3"]).0, 2);
    assert_eq!(twchev(&["frobnicate"]).0, 2);
    assert_eq!(
        twchev(&["enumerate", "2A3", "--ring", "gf4", "--budget", "10"]).0,
        3
    );
    assert_eq!(
        twchev(&["verify", "all", "2A3", "--ring", "gf9", "--seed", "7"]).0,
        0
    );
}

#[test]
fn enumerate_orders() {
    let e = json(&["enumerate", "2A2", "--ring", "gf4", "--json"]);
    assert_eq!(e["order"], 216);
    assert_eq!(e["rep"], "natural");
    let a = json(&[
        "enumerate",
        "2A2",
        "--ring",
        "gf4",
        "--rep",
        "adjoint",
        "--json",
    ]);
    assert_eq!(a["order"], 72);
    let e = enumerate(&SuiteConfig::new("2A3", "gf4").unwrap()).unwrap();
    assert_eq!(e.order, 25920);
    // The hash does not depend on the enumeration order, only on the set.
    assert_eq!(
        e,
        enumerate(&SuiteConfig::new("2A3", "gf4").unwrap()).unwrap()
    );
    let u = enumerate(&SuiteConfig::new("A2", "z2").unwrap()).unwrap();
    assert_eq!(u.order, 168);
}

#[test]
fn bruhat_cell_table() {
    let rep = json(&["verify", "bruhat", "2A3", "--ring", "gf4", "--json"]);
    let cells: Vec<&Value> = rep["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["id"].as_str().unwrap().starts_with("cell ["))
        .collect();
    // The twisted Weyl group of 2A3 is of type B2.
    assert_eq!(cells.len(), 8);
    let sum = rep["cases"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "cell-sum")
        .unwrap();
    assert_eq!(sum["detail"]["group"], 25920);
    assert_eq!(rep["summary"]["failed"], 0);
}

#[test]
fn reports_are_reproducible() {
    let cfg = SuiteConfig::new("2A4", "gf9")
        .unwrap()
        .with_seed(21)
        .with_samples(3);
    let a = run_suite("twisted-commutators", &cfg).unwrap();
    let b = run_suite("twisted-commutators", &cfg).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.cases.iter().all(|c| c.branch.is_some()));
    let other = run_suite("twisted-commutators", &cfg.clone().with_seed(22)).unwrap();
    assert_ne!(a.to_json(), other.to_json());

    let dir = std::env::temp_dir().join(format!("twchev-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    // The output path is part of the config, so both runs write to the same place.
    let p = dir.join("report.json");
    let args = [
        "verify",
        "conjugation",
        "2A3",
        "--ring",
        "gf9",
        "--seed",
        "3",
        "--out",
        p.to_str().unwrap(),
    ];
    let mut runs = Vec::new();
    for _ in 0..2 {
        assert_eq!(twchev(&args).0, 0);
        runs.push(std::fs::read(&p).unwrap());
    }
    assert_eq!(runs[0], runs[1]);
    let doc: Value = serde_json::from_slice(&runs[0]).unwrap();
    for key in ["suite", "config", "cases", "summary"] {
        assert!(doc.get(key).is_some(), "{key}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn report_schema_and_status() {
    let cfg = SuiteConfig::new("2A3", "gf9").unwrap();
    let rep = Report::new(
        "x",
        &cfg,
        vec![
            Case::check("a", true),
            Case::check("b", false),
            Case::skip("c", "why"),
        ],
    );
    assert!(!rep.passed());
    assert_eq!(
        (rep.summary.passed, rep.summary.failed, rep.summary.skipped),
        (1, 1, 1)
    );
    let back: Report = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(back, rep);
    assert_eq!(back.case("c").unwrap().status, Status::Skip);
    let v: Value = serde_json::from_str(&rep.to_json()).unwrap();
    assert!(v["cases"][0].get("branch").is_none());
    assert_eq!(v["cases"][1]["status"], "fail");
}

#[test]
fn type_labels() {
    let t: TypeSpec = "3D4".parse().unwrap();
    assert_eq!((t.order, t.rank, t.to_string()), (3, 4, "3D4".to_string()));
    assert!(!"E6".parse::<TypeSpec>().unwrap().is_twisted());
    for bad in ["", "2", "X3", "2A", "4A3", "A0"] {
        assert!(bad.parse::<TypeSpec>().is_err(), "{bad}");
    }
    let cfg = SuiteConfig::new("2D4", "gf9").unwrap();
    assert_eq!(cfg.effective_rep(), RepChoice::Adjoint);
    assert_eq!(
        SuiteConfig::new("2A3", "gf9").unwrap().effective_rep(),
        RepChoice::Natural
    );
}

#[test]
fn suites_reject_inapplicable_inputs() {
    let untwisted = SuiteConfig::new("A3", "gf9").unwrap();
    assert!(run_suite("twisted-commutators", &untwisted).is_err());
    let field = SuiteConfig::new("2A3", "gf9").unwrap();
    assert!(run_suite("congruence-uhv", &field).is_err());
    let no_half = SuiteConfig::new("2A3", "gf4").unwrap();
    assert!(run_suite("key-lemma", &no_half).is_err());
    let all = run_suite("all", &field).unwrap();
    assert!(all.passed());
    assert!(all
        .case("bruhat/")
        .is_some_and(|c| c.status == Status::Skip));
}
