use std::process::{Command, Output};

use symreal::ffcensus::CensusTable;
use symreal::jordan::DirectSum;
use symreal::verify::VerificationReport;

fn symreal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symreal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn census_table_and_json() {
    let o = symreal(&["census", "--q", "3", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("q = 3\n"));

    let o = symreal(&["--format", "json", "census", "--q", "2", "--max-degree", "6"]);
    let text = stdout(&o);
    let t: CensusTable = serde_json::from_str(&text).unwrap();
    // t+1, t^2+t+1, t^4+t^3+t^2+t+1, and t^6+t^3+1 (roots of order 9)
    let n_star: Vec<u64> = (1..=6).map(|d| t.n_star(d).unwrap()).collect();
    assert_eq!(n_star, vec![1, 1, 0, 1, 0, 1]);
    assert_eq!(serde_json::to_string_pretty(&t).unwrap() + "\n", text);
}

#[test]
fn verify_reports_round_trip() {
    let o = symreal(&["--format", "json", "verify-all", "--profile", "quick"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let reports: Vec<VerificationReport> = serde_json::from_str(&text).unwrap();
    assert!(reports.len() > 20);
    assert!(reports.iter().all(|r| r.equal));
    assert_eq!(serde_json::to_string_pretty(&reports).unwrap() + "\n", text);
}

#[test]
fn degree_sum_json_has_subtotals() {
    let o = symreal(&["--format", "json", "degree-sum", "--q", "3", "--n", "1"]);
    let d: DirectSum = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(d.total, 10.into());
    assert_eq!(d.labels.len(), 3);
    let text = stdout(&o);
    assert_eq!(serde_json::to_string_pretty(&d).unwrap() + "\n", text);
}

#[test]
fn verify_examples() {
    let o = symreal(&["verify", "main2", "--q", "2", "--n", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Vec<VerificationReport> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r[0].lhs.as_str(), r[0].rhs.as_str()), ("4/1", "4/1"));

    let o = symreal(&["verify", "schurid-2", "--vars", "3", "--order", "6"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn involution_methods_agree() {
    for (group, n, q) in [("sp", "2", "2"), ("so", "1", "3"), ("sp", "1", "4")] {
        let brute = symreal(&["involutions", "--group", group, "--n", n, "--q", q]);
        let series = symreal(&["involutions", "--group", group, "--n", n, "--q", q, "--method", "series"]);
        assert_eq!(brute.status.code(), Some(0));
        assert_eq!(stdout(&brute), stdout(&series));
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify-all", "--profile", ""][..],
        &["verify", "main1"],
        &["verify", "main2", "--q", "3", "--n", "1"],
        &["degree-sum", "--q", "2", "--n", "9"],
        &["census", "--q", "6", "--max-degree", "2"],
        &["unipotent-sum", "--family", "so", "--q", "2", "--n", "1"],
        &["--format", "xml", "census", "--q", "2", "--max-degree", "2"],
        &["involutions", "--group", "sp", "--n", "3", "--q", "2", "--max-elements", "1000"],
    ] {
        let o = symreal(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}
