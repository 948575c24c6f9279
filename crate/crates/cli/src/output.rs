use curvelab::geometry::CertificateReport;
use curvelab::groebner::{dimension_and_degree, Ideal};
use curvelab::homology::{genus, BettiTable};
use curvelab::Result;
use serde_json::{json, Map, Value};
use std::fmt::Write;

pub type Payload = Map<String, Value>;

/// `char`, `vars`, `generators`, `betti`, `degree`, `dim` (Krull dimension of
/// the coordinate ring) and `genus` (arithmetic genus, curves only).
pub fn describe(ideal: &Ideal, betti: Option<&BettiTable>) -> Result<Payload> {
    let ring = ideal.ring();
    let (pd, deg) = dimension_and_degree(ideal)?;
    let mut p = Payload::new();
    p.insert("char".into(), json!(ring.field().p()));
    p.insert("vars".into(), json!(ring.nvars()));
    let gens: Vec<String> = ideal.gens().iter().map(ToString::to_string).collect();
    p.insert("generators".into(), json!(gens));
    p.insert("betti".into(), betti.map_or(Value::Null, BettiTable::to_json));
    p.insert("degree".into(), json!(deg));
    p.insert("dim".into(), json!(pd + 1));
    let g = if pd == 1 { json!(genus(ideal)?) } else { Value::Null };
    p.insert("genus".into(), g);
    Ok(p)
}

/// Adds `certificate` (the list of checks), `certified` and the provenance
/// of the winning draw.
pub fn with_report(mut p: Payload, report: &CertificateReport) -> Payload {
    let r = report.to_json();
    p.insert("certificate".into(), r["checks"].clone());
    p.insert("certified".into(), r["overall"].clone());
    p.insert("attempts".into(), r["attempts"].clone());
    if !r["stream"].is_null() {
        p.insert("stream".into(), r["stream"].clone());
    }
    p
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Human-readable rendering of a payload.
pub fn render_text(p: &Payload) -> String {
    let mut out = String::new();
    let head = ["char", "vars", "dim", "degree", "genus"];
    let line: Vec<String> = head
        .iter()
        .filter_map(|k| p.get(*k).map(|v| format!("{k} {}", scalar(v))))
        .collect();
    if !line.is_empty() {
        let _ = writeln!(out, "{}", line.join("  "));
    }
    if let Some(Value::Array(gens)) = p.get("generators") {
        let _ = writeln!(out, "generators:");
        for g in gens {
            let _ = writeln!(out, "  {}", scalar(g));
        }
    }
    if let Some(b) = p.get("betti").filter(|b| !b.is_null()) {
        if let Ok(t) = BettiTable::from_json(b) {
            let _ = writeln!(out, "betti:");
            for l in t.render().lines() {
                let _ = writeln!(out, "  {l}");
            }
        }
    }
    if let Some(Value::Array(checks)) = p.get("certificate") {
        let verdict = match p.get("certified") {
            Some(Value::Bool(true)) => "PASS",
            _ => "FAIL",
        };
        let _ = writeln!(out, "certificate: {verdict}");
        for c in checks {
            let mark = if c["pass"] == Value::Bool(true) { "ok  " } else { "FAIL" };
            let _ = writeln!(
                out,
                "  {mark} {}: expected {}, observed {}",
                scalar(&c["check"]),
                c["expected"],
                c["observed"]
            );
        }
    }
    let skip = [&head[..], &["generators", "betti", "certificate", "certified", "seed", "stream", "attempts"]].concat();
    for (k, v) in p {
        if !skip.contains(&k.as_str()) {
            let _ = writeln!(out, "{k}: {}", scalar(v));
        }
    }
    let tail: Vec<String> = ["seed", "stream", "attempts"]
        .iter()
        .filter_map(|k| p.get(*k).map(|v| format!("{k} {}", scalar(v))))
        .collect();
    if !tail.is_empty() {
        let _ = writeln!(out, "{}", tail.join("  "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use curvelab::homology::same_layout;

    #[test]
    fn text_betti_round_trips_through_json() {
        let t = BettiTable::from_entries([(0, 0, 1), (1, 2, 5), (1, 3, 8), (2, 4, 45), (3, 5, 56), (4, 6, 25), (5, 8, 2)]);
        let back = BettiTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert_eq!(BettiTable::parse(&t.render()).unwrap(), t);
        assert!(same_layout(&back.render(), &t.render()));
    }
}
