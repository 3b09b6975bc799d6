use std::process::{Command, Output};

use regionum::{Certificate, TorusLinkSpec};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regionum")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn proper_verdicts() {
    for (p, q, line) in [("2", "2", "not proper"), ("3", "6", "proper"), ("5", "7", "proper (knot)")] {
        let o = run(&["proper", p, q]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).lines().last(), Some(line));
    }
}

#[test]
fn bound_minimum_and_refusal() {
    let o = run(&["bound", "3", "4"]);
    assert!(stdout(&o).contains("minimum: 1"));
    let o = run(&["bound", "2", "7"]);
    assert!(stdout(&o).contains("minimum: 2 (exact)"));
    let o = run(&["bound", "2", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["bound", "9", "15"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no construction covers"));
}

#[test]
fn verify_json_round_trip() {
    for (p, q, regions, d) in [(3, 4, 1, 1), (4, 8, 4, 4), (6, 9, 7, 3)] {
        let o = run(&["verify", &p.to_string(), &q.to_string(), "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let cert: Certificate = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!((cert.regions.len(), cert.d), (regions, d));
        assert!(cert.is_certified());
        let direct = regionum::verify_bound(&TorusLinkSpec::new(p, q).unwrap()).unwrap();
        assert_eq!(cert, direct);
        let again: Certificate = serde_json::from_value(cert.to_json()).unwrap();
        assert_eq!(again, cert);
    }
}

#[test]
fn verify_refuted_exits_one() {
    // the np+4 constants do not trivialize for p = 8
    let o = run(&["verify", "8", "20", "--case", "np_plus_four_even_p_even_n", "-f", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let cert: Certificate = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(cert.verdict, regionum::Verdict::Refuted);
}

#[test]
fn case_mismatch_and_unknown_case() {
    assert_eq!(run(&["verify", "3", "4", "--case", "two_strand"]).status.code(), Some(1));
    assert_eq!(run(&["schedule", "3", "4", "--case", "nonsense"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["bound", "3"]).status.code(), Some(1));
    assert_eq!(run(&["--budget", "0", "bound", "3", "4"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn schedule_json() {
    let o = run(&["schedule", "5", "5", "-f", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["regions"], serde_json::json!([8, 16, 14]));
    assert_eq!(v["reproduces_target"], true);
}

#[test]
fn brute_exact_value() {
    let o = run(&["brute", "2", "7", "--max-k", "3", "-f", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["exact"], true);
}

#[test]
fn jones_text_and_json() {
    let o = run(&["jones", "1", "1", "1"]);
    assert!(stdout(&o).contains("jones: t + t^3 - t^4"));
    let o = run(&["jones", "-1", "-1", "-1", "--unlink"]);
    assert!(stdout(&o).contains("unlink: refuted"));
    let o = run(&["jones", "1", "-1", "--strands", "3", "-f", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["components"], 3);
    assert_eq!(v["jones_t_half"], serde_json::json!([[-2, 1], [0, 2], [2, 1]]));
    assert_eq!(run(&["jones", "1", "x"]).status.code(), Some(1));
}

#[test]
fn word_families() {
    assert_eq!(stdout(&run(&["word", "unknot", "3"])).trim(), "1 2 1 -2 -1 -2");
    assert_eq!(stdout(&run(&["word", "mu", "5", "3"])).trim(), "1 2 -3 -4");
    assert_eq!(stdout(&run(&["word", "toric", "2", "3"])).trim(), "1 1 1");
    let target = stdout(&run(&["word", "target", "3", "4"]));
    assert_eq!(target.trim(), "1 2 1 -2 -1 -2 1 2");
}

#[test]
fn table_rows_match_bound() {
    let o = run(&["table", "--p", "2..4", "--q", "3..9", "-f", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "p,q,d,status,bound,case,formula");
    assert_eq!(rows.len(), 1 + 3 * 7);
    for (p, q) in [("3", "4"), ("4", "9"), ("2", "7")] {
        let row = rows.iter().find(|r| r.starts_with(&format!("{p},{q},"))).unwrap();
        let min = stdout(&run(&["bound", p, q]));
        let min = min.lines().last().unwrap().trim_start_matches("minimum: ").split(' ').next().unwrap().to_string();
        assert_eq!(row.split(',').nth(4), Some(min.as_str()));
    }
    assert!(text.contains("2,4,2,covered"));
    assert!(text.contains("4,4,4,not_proper"));
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_regionum"))
        .args(["verify", "3", "4"])
        .env("REGIONUM_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_regionum"))
        .args(["verify", "3", "4"])
        .env("REGIONUM_BUDGET", "500000")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}
