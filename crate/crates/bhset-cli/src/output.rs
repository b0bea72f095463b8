//! Rendering of command results into the three output formats.
//!
//! Sum-domain values (set elements, sums, representation parts) are
//! serialized as decimal strings in JSON so consumers never push them
//! through 53-bit floats; small parameters like h stay plain numbers.
//! JSON objects keep a fixed field order and compact spacing, so
//! parsing a record and re-serializing it is byte-identical. CSV is a
//! header row plus one record per line, with commas inside free-text
//! fields replaced so no quoting is ever needed.

use bhset::{BhVerdict, ClaimRecord, IntegerSet, VerificationReport};
use serde_json::{json, Map, Value};

fn strings(values: impl IntoIterator<Item = u128>) -> Value {
    Value::Array(
        values
            .into_iter()
            .map(|v| Value::String(v.to_string()))
            .collect(),
    )
}

fn joined(values: &[u128], separator: &str) -> String {
    values
        .iter()
        .map(u128::to_string)
        .collect::<Vec<_>>()
        .join(separator)
}

pub fn greedy_text(elements: &IntegerSet) -> String {
    joined(elements.elements(), " ")
}

pub fn greedy_csv(elements: &IntegerSet) -> String {
    let mut out = String::from("k,a\n");
    for (k, e) in elements.iter().enumerate() {
        out.push_str(&format!("{k},{e}\n"));
    }
    out.pop();
    out
}

pub fn greedy_json(h: u32, elements: &IntegerSet) -> String {
    let mut record = Map::new();
    record.insert("h".into(), json!(h));
    record.insert("elements".into(), strings(elements.iter()));
    Value::Object(record).to_string()
}

pub fn check_text(verdict: &BhVerdict) -> String {
    match verdict {
        BhVerdict::Certified => "certified".to_string(),
        BhVerdict::Refuted(w) => w.to_string(),
    }
}

pub fn check_csv(verdict: &BhVerdict) -> String {
    let row = match verdict {
        BhVerdict::Certified => "true,,,".to_string(),
        BhVerdict::Refuted(w) => format!(
            "false,{},{},{}",
            w.n(),
            joined(w.first().parts(), "+"),
            joined(w.second().parts(), "+")
        ),
    };
    format!("certified,n,first,second\n{row}")
}

pub fn check_json(h: u32, set: &IntegerSet, verdict: &BhVerdict) -> String {
    let mut record = Map::new();
    record.insert("h".into(), json!(h));
    record.insert("set".into(), strings(set.iter()));
    record.insert("certified".into(), json!(verdict.is_certified()));
    if let BhVerdict::Refuted(w) = verdict {
        let mut witness = Map::new();
        witness.insert("n".into(), Value::String(w.n().to_string()));
        witness.insert("first".into(), strings(w.first().parts().iter().copied()));
        witness.insert("second".into(), strings(w.second().parts().iter().copied()));
        record.insert("witness".into(), Value::Object(witness));
    }
    Value::Object(record).to_string()
}

pub fn table_text(rows: &[(u32, IntegerSet)]) -> String {
    rows.iter()
        // Greedy prefixes start at the fixed element 0; table rows list
        // the computed terms after it.
        .map(|(_, prefix)| joined(&prefix.elements()[1..], " "))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn table_csv(rows: &[(u32, IntegerSet)], k: u32) -> String {
    let mut out = String::from("h");
    for j in 1..=k {
        out.push_str(&format!(",a{j}"));
    }
    for (h, prefix) in rows {
        out.push('\n');
        out.push_str(&h.to_string());
        for e in &prefix.elements()[1..] {
            out.push_str(&format!(",{e}"));
        }
    }
    out
}

pub fn table_json(rows: &[(u32, IntegerSet)]) -> String {
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|(h, prefix)| {
            let mut row = Map::new();
            row.insert("h".into(), json!(h));
            row.insert("a".into(), strings(prefix.iter().skip(1)));
            Value::Object(row)
        })
        .collect();
    let mut record = Map::new();
    record.insert("rows".into(), Value::Array(json_rows));
    Value::Object(record).to_string()
}

pub fn verify_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    for claim in &report.claims {
        let status = if claim.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status} {} ({}): {}\n",
            claim.id, claim.range, claim.details
        ));
    }
    let failed = report.claims.iter().filter(|c| !c.pass).count();
    if failed == 0 {
        out.push_str(&format!("all {} claims pass", report.claims.len()));
    } else {
        out.push_str(&format!("{failed} of {} claims fail", report.claims.len()));
    }
    out
}

/// Free-text CSV fields drop commas so records never need quoting.
fn csv_safe(text: &str) -> String {
    text.replace(',', ";")
}

pub fn verify_csv(report: &VerificationReport) -> String {
    let mut out = String::from("id,range,pass,details");
    for claim in &report.claims {
        out.push_str(&format!(
            "\n{},{},{},{}",
            csv_safe(&claim.id),
            csv_safe(&claim.range),
            claim.pass,
            csv_safe(&claim.details)
        ));
    }
    out
}

pub fn verify_json(report: &VerificationReport) -> String {
    let claims: Vec<Value> = report.claims.iter().map(claim_json).collect();
    let mut record = Map::new();
    record.insert("claims".into(), Value::Array(claims));
    record.insert("pass".into(), json!(report.pass));
    Value::Object(record).to_string()
}

fn claim_json(claim: &ClaimRecord) -> Value {
    let mut record = Map::new();
    record.insert("id".into(), Value::String(claim.id.clone()));
    record.insert("range".into(), Value::String(claim.range.clone()));
    record.insert("pass".into(), json!(claim.pass));
    record.insert("details".into(), Value::String(claim.details.clone()));
    Value::Object(record)
}
