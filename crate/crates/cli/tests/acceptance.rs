//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to
//! see the lines; the test fails if any criterion fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use abcross::verify::{run_suite, Check};
use serde_json::Value;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn suite(name: &str) -> Outcome {
    match run_suite(name) {
        Ok(checks) => {
            let failed: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
            let detail = match failed.first() {
                Some(c) => format!(
                    "{} of {} checks failed; first: {c}",
                    failed.len(),
                    checks.len()
                ),
                None => format!("{} checks", checks.len()),
            };
            for c in &checks {
                println!("    {c}");
            }
            Outcome {
                pass: failed.is_empty() && !checks.is_empty(),
                detail,
            }
        }
        Err(e) => Outcome {
            pass: false,
            detail: format!("suite error: {e}"),
        },
    }
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn run_corpus() -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_abcross"))
        .arg("--file")
        .arg(corpus_dir().join("corpus.json"))
        .args(["--format", "machine"])
        .output()
        .expect("binary runs");
    (out.status.code(), out.stdout)
}

fn cli_determinism() -> Outcome {
    let fail = |detail: String| Outcome {
        pass: false,
        detail,
    };
    let seeded = Command::new(env!("CARGO_BIN_EXE_abcross"))
        .arg("--seed-corpus")
        .output()
        .expect("binary runs")
        .stdout;
    let shipped = std::fs::read(corpus_dir().join("corpus.json")).expect("shipped corpus");
    if seeded != shipped {
        return fail("shipped corpus differs from --seed-corpus output".into());
    }
    let (c1, first) = run_corpus();
    let (c2, second) = run_corpus();
    if c1 != Some(0) || c2 != Some(0) {
        return fail(format!("exit codes {c1:?}, {c2:?}"));
    }
    if first != second {
        return fail("two runs differ".into());
    }
    let expected =
        std::fs::read(corpus_dir().join("expected_report.json")).expect("expected report");
    if first != expected {
        return fail("report differs from the committed expected output".into());
    }
    let report: Value = serde_json::from_slice(&first).expect("machine report is JSON");
    let tasks = report["tasks"].as_array().expect("task list");
    let verify: Vec<&Value> = tasks
        .iter()
        .filter(|t| t["kind"] == "verify" && t["result"]["suite"] == "examples")
        .collect();
    let Some(v) = verify.first() else {
        return fail("no examples verify task".into());
    };
    let checks = v["result"]["checks"].as_array().map_or(0, Vec::len);
    if v["status"] != "ok" || v["result"]["failed"] != 0 || checks == 0 {
        return fail(format!("examples verify task: {}", v["result"]));
    }
    let errors = tasks.iter().filter(|t| t["status"] != "ok").count();
    if errors > 0 {
        return fail(format!("{errors} tasks did not succeed"));
    }
    Outcome {
        pass: true,
        detail: format!(
            "{} tasks, {} bytes, byte-identical twice and equal to the committed report; {checks} example checks pass",
            tasks.len(),
            first.len()
        ),
    }
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let criteria: [Criterion; 8] = [
        ("cohomology cross-validation", || suite("cohomology-cross")),
        ("differential closure", || suite("differential-closure")),
        ("classification equivalence", || suite("classification")),
        ("reduction soundness", || suite("reduction")),
        ("Schreier bijection", || suite("schreier")),
        ("benchmark instances", || suite("benchmark")),
        ("obstruction realizability", || suite("obstruction")),
        ("CLI determinism", cli_determinism),
    ];
    let mut lines = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        let line = format!(
            "{} criterion {}: {name} ({:.2}s): {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            t.elapsed().as_secs_f64(),
            o.detail
        );
        println!("{line}");
        lines.push((o.pass, line));
    }
    println!("total {:.2}s", start.elapsed().as_secs_f64());
    for (_, line) in &lines {
        println!("{line}");
    }
    let failed: Vec<&String> = lines.iter().filter(|(p, _)| !p).map(|(_, l)| l).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:#?}");
}
