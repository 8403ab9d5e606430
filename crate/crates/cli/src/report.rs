//! Report emission. Machine output is JSON with sorted keys; human output
//! is a plain-text rendering of the same values.

use serde_json::{json, Value};

use crate::run::{Failure, Fragment, Report};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Machine,
}

fn fragment_value(f: &Fragment) -> Value {
    let mut v = json!({ "index": f.index, "kind": f.kind });
    match &f.outcome {
        Ok(result) => {
            v["status"] = json!(if f.failed_checks > 0 { "failed" } else { "ok" });
            v["result"] = result.clone();
        }
        Err(e) => {
            let (code, message) = match e {
                Failure::Size(m) => ("size-exceeded", m),
                Failure::Invalid(m) => ("invalid", m),
            };
            v["status"] = json!("error");
            v["error"] = json!({ "code": code, "message": message });
        }
    }
    v
}

pub fn report_value(report: &Report) -> Value {
    json!({
        "tool": "abcross",
        "version": VERSION,
        "tasks": report.fragments.iter().map(fragment_value).collect::<Vec<_>>(),
    })
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Machine => {
            let mut s =
                serde_json::to_string_pretty(&report_value(report)).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Human => human(report),
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

fn human(report: &Report) -> String {
    let mut out = format!("abcross {VERSION}\n");
    if report.fragments.is_empty() {
        out.push_str("no tasks\n");
    }
    for f in &report.fragments {
        let status = match (&f.outcome, f.failed_checks) {
            (Err(_), _) => "error",
            (Ok(_), 0) => "ok",
            (Ok(_), _) => "failed",
        };
        out.push_str(&format!("\n[{}] {} ({status})\n", f.index, f.kind));
        match &f.outcome {
            Err(Failure::Size(m)) => out.push_str(&format!("  size guard exceeded: {m}\n")),
            Err(Failure::Invalid(m)) => out.push_str(&format!("  {m}\n")),
            Ok(v) => match f.kind {
                "verify" => verify_lines(v, &mut out),
                "classify" => classify_lines(v, &mut out),
                _ => {
                    if let Value::Object(map) = v {
                        for (k, x) in map {
                            out.push_str(&format!("  {k}: {}\n", compact(x)));
                        }
                    }
                }
            },
        }
    }
    out
}

fn verify_lines(v: &Value, out: &mut String) {
    for c in v["checks"].as_array().into_iter().flatten() {
        let tag = if c["pass"].as_bool() == Some(true) {
            "PASS"
        } else {
            "FAIL"
        };
        out.push_str(&format!(
            "  {tag} [{}] {}: {}\n",
            c["suite"].as_str().unwrap_or_default(),
            c["property"].as_str().unwrap_or_default(),
            c["detail"].as_str().unwrap_or_default()
        ));
    }
    out.push_str(&format!(
        "  {} passed, {} failed\n",
        v["passed"], v["failed"]
    ));
}

fn classify_lines(v: &Value, out: &mut String) {
    if v["status"] == "obstructed" {
        out.push_str(&format!(
            "  obstructed: class {} in H3 = {}\n",
            compact(&v["class"]),
            compact(&v["h3"])
        ));
        return;
    }
    out.push_str(&format!(
        "  H2 = {}, {} classes\n",
        compact(&v["h2"]),
        v["count"]
    ));
    out.push_str(&format!(
        "  {:<10} {:<14} {}\n",
        "label", "total group", "cocycle f (nonzero entries)"
    ));
    for c in v["classes"].as_array().into_iter().flatten() {
        out.push_str(&format!(
            "  {:<10} {:<14} {}\n",
            compact(&c["label"]),
            compact(&c["total_group"]),
            compact(&c["cocycle"])
        ));
    }
}
