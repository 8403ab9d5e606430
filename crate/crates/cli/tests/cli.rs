use std::process::Command;

use abcross::{picard_of, reduce, AbCrossedModule, FinAbGroup, GroupHom};
use abcross_cli::model::NamedCochain;
use abcross_cli::{parse_model, parse_model_value, run_model, run_text, Format, RunOptions};
use serde_json::{json, Value};

fn machine(model: &Value) -> Value {
    let m = parse_model_value(model.clone()).unwrap();
    let text = abcross_cli::emit_report(&run_model(&m, RunOptions::default()), Format::Machine);
    serde_json::from_str(&text).unwrap()
}

fn small_model() -> Value {
    json!({
        "groups": { "Q": [2], "N": [2], "Z2": [2], "Z4": [4] },
        "homs": {
            "zero": { "dom": "Z2", "cod": "Z2", "matrix": [[0]] },
            "twice": { "dom": "Z2", "cod": "Z4", "matrix": [[2]] },
            "psi1": { "dom": "Q", "cod": "Z2", "matrix": [[1]] },
        },
        "crossed_modules": {
            "M1": { "B": "Z2", "D": "Z2", "d": "zero" },
            "M2": { "B": "Z2", "D": "Z4", "d": "twice" },
        },
        "tasks": [
            { "kind": "cohomology", "degree": 2, "M": "Q", "N": "N" },
            { "kind": "classify", "module": "M1", "Q": "Q", "psi": "psi1" },
            { "kind": "reduce", "module": "M2" },
        ],
    })
}

#[test]
fn task_examples() {
    let r = machine(&small_model());
    let tasks = r["tasks"].as_array().unwrap();
    assert_eq!(tasks[0]["result"]["group"], json!([2]));

    let c = &tasks[1]["result"];
    assert_eq!(c["status"], "classes");
    assert_eq!(c["count"], 2);
    let mut totals: Vec<Value> = c["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["total_group"].clone())
        .collect();
    totals.sort_by_key(|v| v.to_string());
    assert_eq!(totals, vec![json!([2, 2]), json!([4])]);

    let red = &tasks[2]["result"];
    assert_eq!(red["k_is_zero"], true);
    assert_eq!(red["k"], json!({ "xi": [], "eta": [] }));
    assert_eq!(red["pi0"], json!([2]));
    assert_eq!(red["pi1"], json!([]));
    assert!(tasks.iter().all(|t| t["status"] == "ok"));
}

#[test]
fn empty_report() {
    let (text, code) = run_text("{}", Format::Machine, RunOptions::default()).unwrap();
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["tasks"], json!([]));
    assert_eq!(v["tool"], "abcross");
    let (human, _) = run_text("{\"tasks\": []}", Format::Human, RunOptions::default()).unwrap();
    assert!(human.starts_with("abcross "));
    assert!(human.contains("no tasks"));
}

#[test]
fn human_classify_table() {
    let text = serde_json::to_string(&small_model()).unwrap();
    let (human, code) = run_text(&text, Format::Human, RunOptions::default()).unwrap();
    assert_eq!(code, 0);
    assert!(human.contains("total group"));
    assert!(human.contains("[2,2]"));
    assert!(human.contains("[4]"));
}

/// Reduced data printed by `reduce` parses back into the same objects.
#[test]
fn machine_declarations_round_trip() {
    let b = FinAbGroup::new(&[2, 4]).unwrap();
    let d = FinAbGroup::new(&[2, 8]).unwrap();
    let hom = GroupHom::new(&b, &d, vec![vec![0, 0], vec![0, 2]]).unwrap();
    let m = AbCrossedModule::new(hom.clone());
    let model = json!({
        "groups": { "B": b.factors(), "D": d.factors() },
        "homs": { "d": { "dom": "B", "cod": "D", "matrix": hom.matrix() } },
        "crossed_modules": { "M": { "B": "B", "D": "D", "d": "d" } },
        "tasks": [{ "kind": "reduce", "module": "M" }],
    });
    let r = &machine(&model)["tasks"][0]["result"];
    let expected = reduce(&picard_of(&m)).unwrap();

    let back = json!({
        "groups": { "P0": r["pi0"], "P1": r["pi1"], "B": b.factors(), "D": d.factors() },
        "homs": { "proj": { "dom": "D", "cod": "P0", "matrix": r["pi0_projection"] } },
        "cochains": {
            "b": { "degree": 2, "M": "P0", "N": "B", "entries": r["b"] },
            "k": { "degree": 3, "M": "P0", "N": "P1", "xi": r["k"]["xi"], "eta": r["k"]["eta"] },
        },
    });
    let parsed = parse_model_value(back).unwrap();
    assert_eq!(&parsed.groups["P0"], m.pi0());
    assert_eq!(&parsed.groups["P1"], m.pi1());
    assert_eq!(&parsed.homs["proj"], m.pi0_proj());
    assert_eq!(parsed.cochains["b"], NamedCochain::Two(expected.b.clone()));
    assert_eq!(
        parsed.cochains["k"],
        NamedCochain::Three(expected.reduced.k().clone())
    );
}

#[test]
fn reports_are_deterministic() {
    let text = serde_json::to_string(&small_model()).unwrap();
    let a = run_text(&text, Format::Machine, RunOptions::default()).unwrap();
    let b = run_text(&text, Format::Machine, RunOptions::default()).unwrap();
    assert_eq!(a, b);
    assert!(parse_model(&text).is_ok());
}

fn abcross(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_abcross"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn subcommands() {
    let (code, out, _) = abcross(&[
        "cohomology",
        "--degree",
        "2",
        "--m",
        "2",
        "--n",
        "2",
        "--format",
        "machine",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["tasks"][0]["result"]["group"], json!([2]));

    let (code, out, _) = abcross(&[
        "classify",
        "--b",
        "2",
        "--d-group",
        "2",
        "--map",
        "0",
        "--q",
        "2",
        "--psi",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("2 classes"));

    let (code, out, _) = abcross(&[
        "reduce",
        "--b",
        "2",
        "--d-group",
        "4",
        "--map",
        "2",
        "--format",
        "machine",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["tasks"][0]["result"]["pi1"], json!([]));

    let (code, out, _) = abcross(&[
        "show-extension",
        "--b",
        "2",
        "--d-group",
        "2",
        "--map",
        "0",
        "--q",
        "2",
        "--cocycle",
        "1/1/1",
        "--fmap",
        "0;1",
        "--format",
        "machine",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["tasks"][0]["result"]["total_group"], json!([4]));

    let (code, out, _) = abcross(&[
        "functor-classes",
        "--source-b",
        "",
        "--source-d",
        "2",
        "--target-b",
        "2",
        "--target-d",
        "2",
        "--target-map",
        "0",
        "--phi0",
        "1",
        "--format",
        "machine",
    ]);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["tasks"][0]["result"]["realizable"], true);
}

#[test]
fn exit_codes() {
    let (code, _, err) = abcross(&[
        "cohomology",
        "--degree",
        "2",
        "--m",
        "4",
        "--n",
        "2",
        "--max-order",
        "3",
    ]);
    assert_eq!(code, 2, "{err}");

    let (code, _, err) = abcross(&["reduce", "--b", "2", "--d-group", "4", "--map", "1"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());

    let dir = std::env::temp_dir().join(format!("abcross-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"groups\": {\"B\": [4],}}").unwrap();
    let (code, _, err) = abcross(&["--file", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 1"), "{err}");

    let guarded = dir.join("guarded.json");
    std::fs::write(
        &guarded,
        r#"{"groups": {"A": [2], "B": [8]}, "tasks": [
            {"kind": "cohomology", "degree": 2, "M": "A", "N": "A"},
            {"kind": "cohomology", "degree": 2, "M": "B", "N": "A"}]}"#,
    )
    .unwrap();
    let (code, out, _) = abcross(&[
        "--file",
        guarded.to_str().unwrap(),
        "--max-order",
        "4",
        "--format",
        "machine",
    ]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["tasks"][0]["status"], "ok");
    assert_eq!(v["tasks"][1]["error"]["code"], "size-exceeded");

    // Larger values clamp to the built-in limit.
    let (code, _, _) = abcross(&[
        "--file",
        guarded.to_str().unwrap(),
        "--max-order",
        "100000000",
    ]);
    assert_eq!(code, 0);
    std::fs::remove_dir_all(&dir).unwrap();
}
