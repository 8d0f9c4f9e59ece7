//! Report serialization and plain-text tables.

use gradlab_core::report::{PropertyReport, WitnessValue};
use serde_json::{json, Map, Value};

pub fn witness_to_value(w: &WitnessValue) -> Value {
    match w {
        WitnessValue::Degree { label, .. } => json!(label),
        WitnessValue::Element { coords, text } => json!({"element": text, "coords": coords}),
        WitnessValue::Subgroup { generators, text, order } => {
            json!({"submodule": text, "order": order.to_string(), "generators": generators})
        }
        WitnessValue::Number(n) => json!(n.to_string()),
        WitnessValue::Text(t) => json!(t),
    }
}

/// `{name, verdict, value?, witness, stats, notes?}` in that order.
pub fn report_to_value(r: &PropertyReport) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(r.name));
    m.insert("verdict".into(), json!(r.verdict.label()));
    if let Some(v) = &r.value {
        m.insert("value".into(), json!(v));
    }
    let mut w = Map::new();
    for (k, v) in &r.witness {
        w.insert(k.clone(), witness_to_value(v));
    }
    m.insert("witness".into(), Value::Object(w));
    let mut stats = Map::new();
    stats.insert("elements_enumerated".into(), json!(r.stats.elements_enumerated));
    if let Some(c) = r.stats.cap {
        stats.insert("cap".into(), json!(c));
    }
    m.insert("stats".into(), Value::Object(stats));
    if !r.notes.is_empty() {
        m.insert("notes".into(), json!(r.notes));
    }
    Value::Object(m)
}

/// The exact text the CLI prints for a `--format json` document.
pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

pub fn witness_text(r: &PropertyReport) -> String {
    r.witness.iter().map(|(k, v)| format!("{k}={}", v.render())).collect::<Vec<_>>().join(" ")
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            if i < width.len() {
                width[i] = width[i].max(c.chars().count());
            }
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(c);
                s.push_str(&" ".repeat(width[i] - c.chars().count() + 2));
            }
        }
        s.trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

pub fn reports_table(reports: &[PropertyReport]) -> String {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let mut notes = r.notes.join("; ");
            if notes.len() > 80 {
                notes.truncate(77);
                notes.push_str("...");
            }
            vec![r.name.clone(), r.verdict.label().into(), r.value.clone().unwrap_or_default(), witness_text(r), notes]
        })
        .collect();
    table(&["predicate", "verdict", "value", "witness", "notes"], &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gradlab_core::report::Verdict;

    #[test]
    fn report_fields_keep_their_order() {
        let r = PropertyReport::new("weak", Verdict::Fails).with("g", WitnessValue::text("-1"));
        let s = serde_json::to_string(&report_to_value(&r)).unwrap();
        assert_eq!(s, r#"{"name":"weak","verdict":"fails","witness":{"g":"-1"},"stats":{"elements_enumerated":0}}"#);
    }

    #[test]
    fn table_pads_columns() {
        let t = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\n");
    }
}
