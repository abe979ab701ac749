use qbary::exactnum::rational::{approx, parse_rational};
use qbary::io::ResultDocument;
use serde_json::Value;

fn exact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("({})", xs.iter().map(exact).collect::<Vec<_>>().join(", ")),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn decimal(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => parse_rational(s).ok().map(|r| format!("{:.6}", approx(&r))),
        Value::Array(xs) => {
            let parts: Option<Vec<String>> = xs.iter().map(decimal).collect();
            parts.map(|p| format!("({})", p.join(", ")))
        }
        _ => None,
    }
}

fn flatten(key: String, v: &Value, rows: &mut Vec<(String, Value)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(format!("{key}.{k}"), x, rows);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_array() || x.is_object()) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(format!("{key}[{i}]"), x, rows);
            }
        }
        _ => rows.push((key, v.clone())),
    }
}

pub fn render(doc: &ResultDocument, with_approx: bool) -> String {
    let mut rows = Vec::new();
    for (k, v) in &doc.outputs {
        flatten(k.clone(), v, &mut rows);
    }
    let mut cells: Vec<Vec<String>> = vec![{
        let mut h = vec!["key".to_string(), "value".to_string()];
        if with_approx {
            h.push("approx (display only)".into());
        }
        h
    }];
    for (k, v) in &rows {
        let mut r = vec![k.clone(), exact(v)];
        if with_approx {
            r.push(decimal(v).unwrap_or_default());
        }
        cells.push(r);
    }
    let widths: Vec<usize> =
        (0..cells[0].len()).map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();

    let mut out = format!("{}  {}\n", doc.command, doc.input.as_deref().unwrap_or(""));
    for r in &cells {
        let line: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    for d in &doc.diagnostics {
        let mark = if d.passed { "ok" } else { "FAILED" };
        match &d.detail {
            Some(x) => out.push_str(&format!("[{mark}] {}: {x}\n", d.check)),
            None => out.push_str(&format!("[{mark}] {}\n", d.check)),
        }
    }
    out
}
