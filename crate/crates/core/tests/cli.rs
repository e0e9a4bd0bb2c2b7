use std::process::{Command, Output};

use serde_json::Value;
use symmpol::Polynomial;

fn symmpol(args: &[&str]) -> Output {
    symmpol_with_threads(args, None)
}

fn symmpol_with_threads(args: &[&str], threads: Option<usize>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_symmpol"));
    cmd.args(args);
    if let Some(n) = threads {
        cmd.env("RAYON_NUM_THREADS", n.to_string());
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let cases: [(&[&str], &str); 3] = [
        (
            &["schur", "3,2,1"],
            "t1**6/45 - t1**3*t3/3 + t1*t5 - t3**2\n",
        ),
        (&["draw", "3,2,1", "--symbol", "4"], "#\n# #\n# # #\n"),
        (&["character", "1,1", "--cycles", "2:1"], "-1\n"),
    ];
    for (args, expected) in cases {
        let o = symmpol(args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o), expected, "{args:?}");
    }
}

#[test]
fn verify_scopes_pass() {
    for args in [
        &["verify", "degenerations", "--max-boxes", "4"][..],
        &["verify", "oracles", "--max-boxes", "6"],
        &["verify", "characters", "--max-boxes", "0"],
        &["verify", "all", "--max-boxes", "6"],
    ] {
        let o = symmpol(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).contains("checks passed"), "{args:?}");
    }
}

#[test]
fn bench_reports_counts() {
    let o = symmpol(&["bench", "partitions", "60"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("966467 partitions"));
    let o = symmpol(&["bench", "partitions", "1"]);
    assert!(stdout(&o).contains(" 1 partitions"));
    let o = symmpol(&["bench", "hall-littlewood", "6", "--csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("hall-littlewood,6,720,"), "{row}");
}

#[test]
fn json_agrees_with_text() {
    let commands: &[&[&str]] = &[
        &["homogeneous", "4"],
        &["elementary", "5"],
        &["schur", "3,2,1"],
        &["schur", "3,2,1", "--skew", "2,1"],
        &["schur", "2", "--skew", "3"],
        &["monomial", "2,1", "--vars", "3"],
        &["hall-littlewood", "3,2,1", "--vars", "3"],
        &["hall-littlewood", "2,2", "--vars", "4"],
    ];
    for args in commands {
        let plain = stdout(&symmpol(args));
        let mut with_json = args.to_vec();
        with_json.push("--json");
        let o = symmpol(&with_json);
        assert!(o.status.success(), "{args:?}");
        let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
        let keys: Vec<&str> = report
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        for k in ["family", "lambda", "mu", "vars", "terms"] {
            assert!(keys.contains(&k), "{args:?} missing {k}");
        }
        let poly: Polynomial = serde_json::from_value(report["terms"].clone()).unwrap();
        assert_eq!(format!("{poly}\n"), plain, "{args:?}");
    }
}

#[test]
fn deterministic_across_runs_and_workers() {
    let commands: &[&[&str]] = &[
        &["hall-littlewood", "3,2,1", "--vars", "4"],
        &["hall-littlewood", "2,2,1", "--vars", "5", "--json"],
        &["schur", "4,3,1"],
        &["verify", "all", "--max-boxes", "5"],
        &["list", "7"],
        &["partition", "5,3,3,1"],
    ];
    for args in commands {
        let reference = symmpol_with_threads(args, Some(1));
        assert!(reference.status.success(), "{args:?}");
        for threads in [None, Some(1), Some(2), Some(4)] {
            let o = symmpol_with_threads(args, threads);
            assert_eq!(o.stdout, reference.stdout, "{args:?} threads={threads:?}");
        }
    }
}

#[test]
fn error_paths_are_silent_on_stdout() {
    let cases: &[(&[&str], i32)] = &[
        (&[], 1),
        (&["frobnicate"], 1),
        (&["schur", "3,x,1"], 1),
        (&["schur", "1,2"], 2),
        (&["draw", "2,1", "--symbol", "5"], 2),
        (&["character", "2,1", "--cycles", "2:1"], 2),
        (&["character", "2,1", "--cycles", "0:3"], 2),
        (&["hall-littlewood", "1,1,1,1", "--vars", "3"], 2),
        (&["monomial", "2", "--vars", "0"], 2),
        (&["verify", "all", "--max-boxes", "9"], 2),
        (&["bench", "partitions", "81"], 2),
        (&["bench", "hall-littlewood", "9"], 2),
    ];
    for &(args, code) in cases {
        let o = symmpol(args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn help_goes_to_stdout() {
    let o = symmpol(&["--help"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("hall-littlewood"));
}

#[test]
fn list_in_generator_order() {
    let o = symmpol(&["list", "4"]);
    assert_eq!(stdout(&o), "(1,1,1,1)\n(2,1,1)\n(3,1)\n(2,2)\n(4)\n");
}
