use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eliahou")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn sorted(v: Value) -> String {
    // serde_json's default map is ordered by key
    serde_json::to_string(&v).unwrap()
}

#[test]
fn search_row_counts() {
    for (cmax, n) in [("72", 5), ("56", 1), ("40", 0)] {
        let text = stdout(&["search", "--cmax", cmax]);
        assert_eq!(text.lines().count(), n, "cmax {cmax}");
    }
    let text = stdout(&["search", "--cmax", "72"]);
    let lits: Vec<String> = text
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["literal"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(lits, ["14,22,23;56", "16,25,26;64", "17,26,28;68", "17,27,28;68", "18,28,29;72"]);
}

#[test]
fn search_reports_completeness() {
    let out = run(&["search", "--cmax", "56"]);
    let meta: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(meta["completeness"], "conditional");
    let out = run(&["search", "--cmax", "56", "--safe-bound", "--workers", "1"]);
    let meta: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(meta["completeness"], "unconditional");
    assert_eq!(meta["count"], 1);
}

#[test]
fn search_writes_file_and_table_reads_it() {
    let dir = std::env::temp_dir().join(format!("eliahou-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("rows.jsonl");
    let f = file.to_str().unwrap();
    assert!(stdout(&["search", "--cmax", "72", "--out", f]).is_empty());
    let table = stdout(&["table", f]);
    assert!(table.contains("split, collision-free"));
    assert!(table.contains("total: 5"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn classify_round_trips_search_rows() {
    for line in stdout(&["search", "--cmax", "72"]).lines() {
        let row: Value = serde_json::from_str(line).unwrap();
        let lit = row["literal"].as_str().unwrap().to_string();
        let again = stdout(&["classify", &lit, "--json"]);
        assert_eq!(sorted(serde_json::from_str(again.trim()).unwrap()), sorted(row), "{lit}");
    }
}

#[test]
fn classify_reports() {
    let text = stdout(&["classify", "14,22,23;56"]);
    let row: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!((row["h"].as_i64(), row["E"].as_i64(), row["W"].as_i64()), (Some(3), Some(-1), Some(35)));
    assert_eq!(row["classification"]["split"], true);
    assert!(text.contains("S(3, 5/3, {0,1}, 0, 14)"));

    let row: Value = serde_json::from_str(stdout(&["classify", "62,82,90,91;304", "--json"]).trim()).unwrap();
    assert_eq!((row["E"].as_i64(), row["classification"]["long_elements"].as_i64()), (Some(-1), Some(3)));

    let row: Value = serde_json::from_str(stdout(&["classify", "58,84,91,95,96;232", "--json"]).trim()).unwrap();
    assert_eq!(row["classification"]["primitive_collisions"].as_i64(), Some(1));
    assert_eq!(row["classification"]["long_elements"].as_i64(), Some(1));
}

#[test]
fn classify_rejects_bad_literal() {
    let out = run(&["classify", "14,22;x"]);
    assert!(!out.status.success());
}

#[test]
fn construct_members() {
    let text = stdout(&["construct", "--h", "4", "--frac", "5/3", "--delta", "0,1", "--tau", "1", "--m", "19"]);
    let row: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(row["literal"], "19,30,31;106");
    assert_eq!(row["E"], -1);
    assert!(text.contains("short true split true"));

    let text = stdout(&["construct", "--h", "5", "--frac", "7/4", "--delta", "0,1,6", "--hat"]);
    let row: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!((row["literal"].as_str(), row["E"].as_i64()), (Some("145,246,251,252;1116"), Some(0)));

    assert!(!run(&["construct", "--h", "4", "--frac", "6/5", "--delta", "0,1", "--tau", "1", "--m", "19"]).status.success());
}

#[test]
fn render_formats() {
    let ascii = stdout(&["render", "14,22,23;56", "--ascii"]);
    assert!(ascii.contains("0.222...113333"));
    let svg = stdout(&["render", "14,22,23;56", "--svg"]);
    assert!(svg.starts_with("<svg") && svg.contains(r#"class="rho""#));
}

#[test]
fn verify_passes() {
    let text = stdout(&["verify", "--seed", "3"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 6, "{text}");
}
