use std::process::{Command, Output};

use baerlab::document::ReportDocument;
use baerlab_core::baer::Verdict;
use baerlab_core::corpus::SweepSummary;

fn baerlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_baerlab")).args(args).env_remove("BAERLAB_CAP").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> ReportDocument {
    ReportDocument::from_json_lines(&String::from_utf8_lossy(&o.stdout)).unwrap()
}

#[test]
fn check_s3_times_d10() {
    let o = baerlab(&[
        "check",
        "product(symmetric(3), dihedral(10))",
        "--factorisation",
        "factor(0)",
        "factor(1)",
        "--prime",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(doc.unique_primes[0].resolved(), (3, 5));
    assert_eq!(doc.exit_code, 0);
}

#[test]
fn check_not_baer_lists_witnesses() {
    let o = baerlab(&["check", "semilinear(2,3)", "--trivial-factorisation", "--all-primes", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let doc = json(&o);
    let s = &doc.statuses[0];
    assert!(!s.is_baer);
    assert!(s.witnesses.iter().any(|w| w.class_index == 28));
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(code(&baerlab(&["check", "/no/such/file"])), 2);
    let o = baerlab(&["check", "cyclic(3"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at byte"));
    assert_eq!(code(&baerlab(&["check", "cyclic(6)", "--factorisation", "g0^2", "g0^2"])), 2);
    assert_eq!(code(&baerlab(&["report", "F3"])), 2);
    assert_eq!(code(&baerlab(&["frobnicate"])), 2);
    assert_eq!(code(&baerlab(&["sweep", "/no/such/config"])), 2);
}

#[test]
fn spec_files_and_word_factors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "# the affine semilinear group of order 168\nsemilinear(2,3)\n").unwrap();
    let o = baerlab(&[
        "check",
        path.to_str().unwrap(),
        "--factorisation",
        "g0, g1^-1*g0*g1, g2",
        "g1",
        "--prime",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o).input.factor_orders, Some((24, 7)));
}

#[test]
fn report_b_on_s3_times_d10() {
    let o = baerlab(&["report", "E3.8", "--theorem", "b", "--prime", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    let b = &doc.reports[0];
    assert!(b.passed);
    assert!(b.get("unique-primes").unwrap().detail.contains("q = 3, r = 5"));
}

#[test]
fn report_f_on_order_168_factorisation() {
    let o = baerlab(&["report", "F1", "--theorem", "f", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    let eq = doc.reports[0].get("equivalence").unwrap();
    assert_eq!(eq.verdict, Verdict::Pass);
    assert!(eq.witnesses.iter().any(|w| w == "p = 2: |G:C_G(A_2)| = 21"));
}

#[test]
fn report_on_trivial_group_is_vacuous() {
    let o = baerlab(&["report", "cyclic(1)", "--theorem", "all", "--format", "json"]);
    assert_eq!(code(&o), 0);
    for r in json(&o).reports {
        assert!(r.clauses.iter().all(|c| c.verdict == Verdict::Pass || c.verdict == Verdict::NotApplicable));
    }
}

#[test]
fn cap_events_and_strict() {
    let args = ["report", "F3", "--trivial-factorisation", "--theorem", "c", "--format", "json"];
    let o = baerlab(&args);
    assert_eq!(code(&o), 0);
    assert!(!json(&o).cap_events.is_empty());
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(code(&baerlab(&strict)), 1);
    let o = baerlab(&["check", "symmetric(5)", "--trivial-factorisation", "--cap", "50"]);
    assert_eq!(code(&o), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_baerlab"))
        .args(["check", "symmetric(5)", "--trivial-factorisation"])
        .env("BAERLAB_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn text_and_json_outputs_agree_on_exit() {
    let t = baerlab(&["check", "E4.3ii"]);
    assert_eq!(code(&t), 0);
    assert!(String::from_utf8_lossy(&t.stdout).contains("Baer          yes"));
    let o = baerlab(&["check", "E4.3ii", "--trivial-factorisation"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn sweep_writes_deterministic_summaries() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.txt");
    std::fs::write(&cfg, "symmetric(3)\ndihedral(10)\nfrobenius(7,3)\n").unwrap();
    let out1 = dir.path().join("a.jsonl");
    let out2 = dir.path().join("b.jsonl");
    for out in [&out1, &out2] {
        let o = baerlab(&["sweep", cfg.to_str().unwrap(), "--format", "json", "--out", out.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    let a = std::fs::read_to_string(&out1).unwrap();
    assert_eq!(a, std::fs::read_to_string(&out2).unwrap());
    let s = SweepSummary::from_json_lines(&a).unwrap();
    assert_eq!(s.totals.groups, 3);
    assert_eq!(s.totals.failures, 0);

    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "# nothing\n").unwrap();
    assert_eq!(code(&baerlab(&["sweep", empty.to_str().unwrap()])), 0);

    let s4 = dir.path().join("s4.txt");
    std::fs::write(&s4, "max_order = 24\npredicates = [wielandt, camina-camina]\nsymmetric(4)\n").unwrap();
    let o = baerlab(&["sweep", s4.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&o), 0);
    let s = SweepSummary::from_json_lines(&String::from_utf8_lossy(&o.stdout)).unwrap();
    assert!(s.totals.clauses.keys().any(|k| k.starts_with("wielandt")));
    assert_eq!(s.totals.clauses["camina-camina:f2"].pass, 1);
}
