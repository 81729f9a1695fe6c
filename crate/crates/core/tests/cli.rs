use std::process::{Command, Output};

use serde_json::Value;
use veronese_core::report::Report;

fn veronese(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_veronese"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn json_report_has_the_versioned_schema() {
    let o = veronese(&["5;3,2,1", "--all", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["input"], serde_json::json!({"d": 5, "a": [3, 2, 1]}));
    assert_eq!(v["radical"], serde_json::json!([[1, 2]]));
    assert_eq!(v["m"], 2);
    assert_eq!(v["b"], 2);
    assert_eq!(v["equidimensional"]["verdict"], true);
    assert_eq!(v["equidimensional"]["cover_cardinality"], 1);
    assert_eq!(v["unmixed"]["verdict"], false);
    assert_eq!(v["class"], "NotCohenMacaulay");
    assert_eq!(
        v["associated_primes"][0],
        serde_json::json!({"indices": [1], "witness_exponents": [1, 2, 1]})
    );
    assert!(v.get("oracle").is_none());
}

#[test]
fn json_round_trips_through_the_report_type() {
    let o = veronese(&["9;7,3,3,2,1", "--all", "--oracle", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let report = Report::from_json(&text).unwrap();
    let again: Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(again, serde_json::from_str::<Value>(&text).unwrap());
}

#[test]
fn text_and_json_agree() {
    for params in [
        "5;3,2,1",
        "7;4,3,2,1,1",
        "2;1,1,1,1",
        "4;2,2,2",
        "6;2,4,0,3",
    ] {
        let json = veronese(&[params, "--all", "--json"]);
        let text = veronese(&[params, "--all"]);
        let report = Report::from_json(&stdout(&json)).unwrap();
        assert_eq!(stdout(&text), report.to_text(), "{params}");
        let text = stdout(&text);
        let primes = report.associated_primes.as_ref().unwrap().len();
        assert!(
            text.contains(&format!("associated primes ({primes}):")),
            "{params}"
        );
        let verdict = report.equidimensional.as_ref().unwrap().verdict;
        assert!(
            text.contains(&format!("equidimensional: {verdict}")),
            "{params}"
        );
        assert!(
            text.contains(&format!("{:?}", report.class.unwrap())),
            "{params}"
        );
    }
}

#[test]
fn text_uses_exponent_notation() {
    let o = veronese(&["5;3,2,1", "--assoc"]);
    let text = stdout(&o);
    assert!(text.contains("(x1) = I : x1·x2^2·x3"), "{text}");
    assert!(text.contains("(x2) = I : x1^3·x3"), "{text}");
}

#[test]
fn equidim_failure_with_evidence() {
    let o = veronese(&["7; 4, 3, 2, 1, 1", "--equidim", "--mb"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("equidimensional: false"), "{text}");
    assert!(text.contains("m = 5, b = 4"), "{text}");
    assert!(text.contains("x1·x3·x5"), "{text}");
}

#[test]
fn squarefree_veronese_class() {
    let o = veronese(&["2;1,1,1,1", "--classify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("class: SquarefreeVeronese"));
}

#[test]
fn infeasible_input_exits_one() {
    let o = veronese(&["3;1,1", "--classify"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("zero ideal"), "{}", stderr(&o));
}

#[test]
fn malformed_input_reports_a_column() {
    let o = veronese(&["5;3;1", "--all"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("column 4"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(veronese(&["5;3,2,1"]).status.code(), Some(1));
    assert_eq!(
        veronese(&["5;3,2,1", "--frobnicate"]).status.code(),
        Some(1)
    );
    assert_eq!(veronese(&["--help"]).status.code(), Some(0));
}

#[test]
fn oracle_budget_overflow_exits_one() {
    // 2^24 subsets is over the default cover budget
    let caps = vec!["1"; 24].join(",");
    let o = veronese(&[&format!("2;{caps}"), "--equidim", "--oracle"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("budget"), "{}", stderr(&o));
}

#[test]
fn injected_fault_exits_two() {
    let o = veronese(&["5;3,2,1", "--assoc", "--oracle", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("oracle discrepancy"), "{}", stderr(&o));
    assert!(stdout(&o).contains("DISAGREED"));
}

#[test]
fn base_set_file() {
    let dir = std::env::temp_dir().join(format!("veronese-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let strong = dir.join("strong.txt");
    std::fs::write(&strong, "2 1 1\n1 2 1\n1 1 2\n").unwrap();
    let o = veronese(&[
        "--bases",
        strong.to_str().unwrap(),
        "--all",
        "--oracle",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["polymatroid"]["strong_exchange"], true);
    assert_eq!(v["polymatroid"]["offset"], serde_json::json!([1, 1, 1]));
    assert_eq!(
        v["polymatroid"]["radical_via_rank"],
        serde_json::json!([[1, 2, 3]])
    );

    let square = dir.join("square.txt");
    std::fs::write(&square, "1,0,1,0\n0,1,1,0\n0,1,0,1\n1,0,0,1\n").unwrap();
    let o = veronese(&["--bases", square.to_str().unwrap(), "--radical"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("strong exchange false"));
    std::fs::remove_dir_all(&dir).unwrap();
}
