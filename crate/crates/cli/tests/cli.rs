use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn domgame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domgame"))
        .args(args)
        .env_remove("DOMGAME_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("domgame-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn solve_prints_verdicts() {
    for (graph, want) in [
        ("family:path:5", "N, winning move 2\n"),
        ("family:kneser:5:2", "P\n"),
        ("family:cycle:4", "P\n"),
        ("family:path:2", "N, winning move 0\n"),
    ] {
        let o = domgame(&["solve", "--graph", graph]);
        assert_eq!(o.status.code(), Some(0), "{graph}");
        assert_eq!(stdout(&o), want, "{graph}");
    }
}

#[test]
fn solve_json_record() {
    let o = domgame(&["solve", "--graph", "family:path:5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["graph"], "P5");
    assert_eq!(v["outcome"], "N");
    assert_eq!(v["winning_move"], 2);
    assert!(v["nodes"].is_u64() && v["millis"].is_u64());
}

#[test]
fn parallel_solve_matches() {
    let a = domgame(&["solve", "--graph", "cycle:11"]);
    let b = domgame(&["solve", "--graph", "cycle:11", "--threads", "3"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn classify_reports_engine() {
    for (pos, want) in [
        ("P6^2", "P (closed-form)\n"),
        ("P1^1 + P4^2 + P3^2", "P (closed-form)\n"),
        ("P7^0", "N (search), winning move vertex 3 of P7^0\n"),
        ("p5 ^ 1", "P (search)\n"),
        ("0", "P (search)\n"),
    ] {
        let o = domgame(&["classify", "--position", pos]);
        assert_eq!(o.status.code(), Some(0), "{pos}");
        assert_eq!(stdout(&o), want, "{pos}");
    }
}

#[test]
fn classify_syntax_error_has_caret() {
    let o = domgame(&["classify", "--position", "P3 + Q2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("P3 + Q2\n     ^"), "{err}");
}

#[test]
fn exit_codes() {
    assert_eq!(domgame(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(domgame(&["solve"]).status.code(), Some(1));
    assert_eq!(domgame(&["solve", "--graph", "family:cycle:2"]).status.code(), Some(1));
    assert_eq!(domgame(&["solve", "--graph", "nowhere.txt"]).status.code(), Some(1));
    let o = domgame(&["solve", "--graph", "cycle:16", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(domgame(&["--help"]).status.code(), Some(0));
}

#[test]
fn budget_from_environment() {
    let run = |budget: &str| {
        Command::new(env!("CARGO_BIN_EXE_domgame"))
            .args(["solve", "--graph", "cycle:16"])
            .env("DOMGAME_BUDGET", budget)
            .output()
            .unwrap()
    };
    assert_eq!(run("5").status.code(), Some(3));
    assert_eq!(run("1000000").status.code(), Some(0));
    assert_eq!(run("lots").status.code(), Some(1));
}

#[test]
fn involution_certificates() {
    let o = domgame(&["involution", "--graph", "family:cycle:6", "--d", "3"]);
    assert_eq!(stdout(&o), "(0 3)(1 4)(2 5)\n");
    let o = domgame(&["involution", "--graph", "family:path:3", "--d", "3"]);
    assert_eq!(stdout(&o), "none\n");
    let o = domgame(&["involution", "--graph", "family:hypercube:3"]);
    assert_eq!(stdout(&o), "(0 7)(1 6)(2 5)(3 4)\n");
}

#[test]
fn construct_round_trip() {
    for family in ["sunlet:5", "family:torus:6:3", "caterpillar:3:6", "petersen"] {
        let file = scratch(&format!("{}.txt", family.replace(':', "_")));
        let f = file.to_str().unwrap();
        let o = domgame(&["construct", "--family", family, "--out", f]);
        assert_eq!(o.status.code(), Some(0), "{family}");
        let spec = if family.starts_with("family:") {
            family.to_string()
        } else {
            format!("family:{family}")
        };
        let from_file = domgame(&["solve", "--graph", f]);
        let in_memory = domgame(&["solve", "--graph", &spec]);
        assert_eq!(stdout(&from_file), stdout(&in_memory), "{family}");
    }
}

#[test]
fn verify_small_cap() {
    let json = scratch("report.json");
    let o = domgame(&["verify", "--cap", "12", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("0 disagree"));
    assert!(text.contains("exploratory"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["agree"] == true));
    let paths = rows.iter().filter(|r| r["family"] == "path").count();
    assert_eq!(paths, 11);
    assert_eq!(text, stdout(&domgame(&["verify", "--cap", "12"])));
}

fn play(graph: &str, human_first: bool, input: &str) -> Output {
    let mut args = vec!["play", "--graph", graph];
    if human_first {
        args.push("--human-first");
    }
    let mut child = Command::new(env!("CARGO_BIN_EXE_domgame"))
        .args(&args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn human_loses_p4_when_moving_first() {
    let script = "x\n".to_string() + &"0\n1\n2\n3\n".repeat(4);
    let o = play("family:path:4", true, &script);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("expected a vertex number"));
    assert!(text.contains("S = "));
    assert!(text.trim_end().ends_with("solver wins"), "{text}");
}

#[test]
fn play_survives_closed_input() {
    let o = play("family:cycle:6", false, "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("solver plays"));
    assert!(stdout(&o).contains("input closed"));
}
