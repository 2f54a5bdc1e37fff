use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const ALARM: &str = include_str!("data/alarm.kb");

fn pabr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pabr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn arg(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn query_json(kb: &Path, extra: &[&str]) -> Value {
    let mut args = vec!["query", arg(kb)];
    args.extend_from_slice(extra);
    let out = pabr(&args);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn burglary_query() {
    let dir = TempDir::new().unwrap();
    let kb = write(&dir, "alarm.kb", ALARM);
    let out = pabr(&["query", arg(&kb), "-q", "burglary"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"hypothesis\":\"burglary\",\"mqs\":[[\"-a2\"]],\"mc\":[],\"qs_prob\":0.99,\
\"contradiction_prob\":0.0,\"support\":0.99,\"method\":\"incexc\"}\n"
    );
}

#[test]
fn tautology_is_supported_by_the_empty_term() {
    let dir = TempDir::new().unwrap();
    let kb = write(&dir, "alarm.kb", ALARM);
    let v = query_json(&kb, &["-q", "burglary | !burglary"]);
    assert_eq!(v["mqs"], serde_json::json!([[]]));
    assert_eq!(v["support"], 1.0);
}

#[test]
fn every_method_gives_the_same_support() {
    let dir = TempDir::new().unwrap();
    let kb = write(&dir, "alarm.kb", ALARM);
    for h in [
        "burglary",
        "!burglary",
        "alarm & burglary",
        "a1 -> burglary",
    ] {
        let auto = query_json(&kb, &["-q", h]);
        for method in ["incexc", "sdp", "oracle"] {
            let other = query_json(&kb, &["-q", h, "--method", method]);
            assert_eq!(other["method"], method);
            for field in ["qs_prob", "contradiction_prob", "support"] {
                assert_eq!(auto[field], other[field], "{h} {method} {field}");
            }
        }
    }
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let kb = write(&dir, "alarm.kb", ALARM);
    let runs: Vec<Vec<u8>> = (0..3)
        .map(|_| pabr(&["query", arg(&kb), "-q", "burglary | a2", "--method", "sdp"]).stdout)
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn facts_answer_like_knowledge() {
    let dir = TempDir::new().unwrap();
    let as_fact = write(&dir, "fact.kb", ALARM);
    let as_clause = write(
        &dir,
        "clause.kb",
        &ALARM.replace("fact alarm", "clause alarm"),
    );
    let repeated = write(&dir, "repeated.kb", &format!("{ALARM}fact alarm\n"));
    for h in ["burglary", "!a2", "burglary | a1"] {
        let a = pabr(&["query", arg(&as_fact), "-q", h]).stdout;
        assert_eq!(a, pabr(&["query", arg(&as_clause), "-q", h]).stdout, "{h}");
        assert_eq!(a, pabr(&["query", arg(&repeated), "-q", h]).stdout, "{h}");
    }
}

#[test]
fn compile_writes_a_reusable_snapshot() {
    let dir = TempDir::new().unwrap();
    let kb = write(&dir, "alarm.kb", ALARM);
    let out = pabr(&["compile", arg(&kb)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let snap = dir.path().join("alarm.kb.snap");
    let text = std::fs::read_to_string(&snap).unwrap();
    let carc: Vec<&str> = text
        .lines()
        .skip_while(|l| *l != "[carc]")
        .skip(1)
        .take_while(|l| !l.starts_with('['))
        .collect();
    assert_eq!(carc, ["a1 | -a1", "a2 | -a2"]);

    let direct = pabr(&["query", arg(&kb), "-q", "burglary"]).stdout;
    let cached = pabr(&[
        "query",
        arg(&kb),
        "-q",
        "burglary",
        "--snapshot",
        arg(&snap),
    ]);
    assert_eq!(cached.status.code(), Some(0), "{}", stderr(&cached));
    assert_eq!(direct, cached.stdout);

    let with_pi = dir.path().join("pi.snap");
    let out = pabr(&["compile", arg(&kb), "-o", arg(&with_pi), "--pi"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(&with_pi).unwrap().contains("[pi]"));
    let cached = pabr(&[
        "query",
        arg(&kb),
        "-q",
        "burglary",
        "--snapshot",
        arg(&with_pi),
    ]);
    assert_eq!(direct, cached.stdout);
}

#[test]
fn stale_snapshot_is_rejected() {
    let dir = TempDir::new().unwrap();
    let kb = write(&dir, "alarm.kb", ALARM);
    let snap = dir.path().join("alarm.snap");
    pabr(&["compile", arg(&kb), "-o", arg(&snap)]);
    let edited = write(
        &dir,
        "edited.kb",
        &ALARM.replace("clause -a2 | -a1 | alarm\n", ""),
    );
    let out = pabr(&[
        "query",
        arg(&edited),
        "-q",
        "burglary",
        "--snapshot",
        arg(&snap),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("snapshot"));
}

#[test]
fn compile_keeps_contradictions() {
    let dir = TempDir::new().unwrap();
    let kb = write(
        &dir,
        "c.kb",
        "assumption a1 0.5\nprop p\nclause -a1 | p\nclause -p\n",
    );
    let snap = dir.path().join("c.snap");
    assert_eq!(
        pabr(&["compile", arg(&kb), "-o", arg(&snap)]).status.code(),
        Some(0)
    );
    let text = std::fs::read_to_string(&snap).unwrap();
    assert!(text.lines().any(|l| l == "-a1"), "{text}");
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = TempDir::new().unwrap();
    let kb = write(&dir, "bad.kb", "prop p\nassumption a1 1.5\n");
    for args in [vec!["compile", arg(&kb)], vec!["check", arg(&kb)]] {
        let out = pabr(&args);
        assert_eq!(out.status.code(), Some(2));
        assert!(stderr(&out).contains("bad.kb:2:"), "{}", stderr(&out));
    }
    let good = write(&dir, "alarm.kb", ALARM);
    let out = pabr(&["query", arg(&good), "-q", "burglary &"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pabr(&["query", arg(&good), "-q", "earthquake"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("earthquake"));
    let missing = dir.path().join("missing.kb");
    assert_eq!(pabr(&["check", arg(&missing)]).status.code(), Some(2));
}

#[test]
fn check_reports_contradictions() {
    let dir = TempDir::new().unwrap();
    let alarm = write(&dir, "alarm.kb", ALARM);
    let out = pabr(&["check", arg(&alarm)]);
    assert_eq!(
        (out.status.code(), stdout(&out).as_str()),
        (Some(0), "consistent\n")
    );

    let kb = write(
        &dir,
        "c.kb",
        "assumption a1 0.5\nprop p\nclause -a1 | p\nclause -p\n",
    );
    let out = pabr(&["check", arg(&kb)]);
    assert_eq!(
        (out.status.code(), stdout(&out).as_str()),
        (Some(1), "mc = [[\"a1\"]]\n")
    );

    let kb = write(&dir, "i.kb", "prop p\nclause p\nclause -p\n");
    assert_eq!(pabr(&["check", arg(&kb)]).status.code(), Some(3));
    assert_eq!(pabr(&["compile", arg(&kb)]).status.code(), Some(3));
}

#[test]
fn query_exit_codes() {
    let dir = TempDir::new().unwrap();
    let inconsistent = write(
        &dir,
        "i.kb",
        "assumption a1 0.5\nprop p\nclause p\nfact -p\n",
    );
    assert_eq!(
        pabr(&["query", arg(&inconsistent), "-q", "p"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        pabr(&["query", arg(&inconsistent), "-q", "p", "--method", "oracle"])
            .status
            .code(),
        Some(3)
    );

    let alarm = write(&dir, "alarm.kb", ALARM);
    let out = pabr(&["query", arg(&alarm), "-q", "burglary", "--method", "bounds"]);
    assert_eq!(out.status.code(), Some(4));
    let out = pabr(&[
        "query",
        arg(&alarm),
        "-q",
        "burglary",
        "--method",
        "oracle",
        "--enumeration-limit",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn bounds_for_three_independent_causes() {
    let dir = TempDir::new().unwrap();
    let kb = write(
        &dir,
        "causes.kb",
        "assumption a1 0.5\nassumption a2 0.5\nassumption a3 0.5\nprop h\n\
clause -a1 | h\nclause -a2 | h\nclause -a3 | h\n",
    );
    let v = query_json(&kb, &["-q", "h", "--method", "bounds", "--l", "1"]);
    assert_eq!(v["method"], "bounds");
    assert_eq!(v["bounds"], serde_json::json!([0.75, 0.875]));
    assert_eq!(v["support"], 0.875);
    assert_eq!(
        pabr(&[
            "query",
            arg(&kb),
            "-q",
            "h",
            "--method",
            "bounds",
            "--l",
            "2"
        ])
        .status
        .code(),
        Some(4)
    );
}

#[test]
fn oracle_cross_check_on_contradictory_knowledge() {
    let dir = TempDir::new().unwrap();
    let kb = write(
        &dir,
        "mixed.kb",
        "assumption a1 0.3\nassumption a2 0.6\nassumption a3 0.8\nprop p q r\n\
clause -a1 | p\nclause -a2 | q | r\nclause -p | -q\nclause -a3 | -r\nfact -a1 | -a3 | q\n",
    );
    for h in ["p", "q", "r | p", "!q & !r", "p -> q"] {
        let engine = query_json(&kb, &["-q", h]);
        let oracle = query_json(&kb, &["-q", h, "--method", "oracle"]);
        for field in ["qs_prob", "contradiction_prob", "support"] {
            let (a, b) = (
                engine[field].as_f64().unwrap(),
                oracle[field].as_f64().unwrap(),
            );
            assert!((a - b).abs() < 1e-9, "{h} {field}: {a} vs {b}");
        }
        assert_eq!(engine["mqs"], oracle["mqs"]);
    }
}
