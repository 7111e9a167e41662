//! Byte-deterministic md/csv/json rendering for tables and suite reports.

use std::collections::BTreeMap;

use rough_core::PropertyReport;
use serde::{Serialize, Serializer};

use crate::fixtures::FixtureOutcome;
use crate::Format;

/// A rendered table: a notation note, ordered metadata lines, a header row,
/// and data rows (first column = row label where applicable).
#[derive(Serialize)]
pub(crate) struct Sheet {
    pub note: String,
    #[serde(serialize_with = "meta_as_object")]
    pub meta: Vec<(String, String)>,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Serializes the ordered metadata pairs as a JSON object.
fn meta_as_object<S: Serializer>(meta: &[(String, String)], ser: S) -> Result<S::Ok, S::Error> {
    let map: BTreeMap<&str, &str> = meta.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
    map.serialize(ser)
}

impl Sheet {
    pub(crate) fn render(&self, format: Format) -> String {
        match format {
            Format::Md => self.md(),
            Format::Csv => self.csv(),
            Format::Json => to_pretty_json(self),
        }
    }

    fn md(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("Note: {}\n", self.note));
        for (k, v) in &self.meta {
            s.push_str(&format!("{k}: {v}\n"));
        }
        s.push('\n');
        s.push_str(&format!("| {} |\n", self.headers.join(" | ")));
        s.push_str(&format!("|{}\n", " --- |".repeat(self.headers.len())));
        for row in &self.rows {
            s.push_str(&format!("| {} |\n", row.join(" | ")));
        }
        s
    }

    fn csv(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("# note: {}\n", self.note));
        for (k, v) in &self.meta {
            s.push_str(&format!("# {k}: {v}\n"));
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory csv write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory csv write");
        }
        let bytes = w.into_inner().expect("in-memory csv flush");
        s.push_str(&String::from_utf8(bytes).expect("csv output is utf-8"));
        s
    }
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct SuiteSummary<'a> {
    suite: &'a str,
    diagnostic: bool,
    total_checked: u64,
    total_failures: usize,
    reports: &'a [PropertyReport],
}

/// Renders one or more property reports. With `diagnostic` set, failures are
/// labelled as violations (reported, never fatal).
pub(crate) fn suite_reports(
    format: Format,
    suite: &str,
    reports: &[PropertyReport],
    diagnostic: bool,
) -> String {
    let total_checked: u64 = reports.iter().map(|r| r.checked).sum();
    let total_failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    match format {
        Format::Md => {
            let label = if diagnostic { "VIOLATION" } else { "FAIL" };
            let mut s = String::new();
            for r in reports {
                s.push_str(&format!(
                    "suite: {}\nspace: {}\nchecked: {}\nfailures: {}\n",
                    r.suite,
                    r.space,
                    r.checked,
                    r.failures.len()
                ));
                for f in &r.failures {
                    s.push_str(&format!(
                        "{label} [{}] expected: {} ; actual: {}\n",
                        f.inputs.join(", "),
                        f.expected,
                        f.actual
                    ));
                }
                s.push('\n');
            }
            s.push_str(&format!(
                "total: suites={} checked={} failures={}{}\n",
                reports.len(),
                total_checked,
                total_failures,
                if diagnostic {
                    " (diagnostic: violations are reported, not fatal)"
                } else {
                    ""
                }
            ));
            s
        }
        Format::Csv => {
            let mut s = String::new();
            s.push_str(&format!("# suite: {suite}\n"));
            s.push_str(&format!(
                "# total: suites={} checked={} failures={}\n",
                reports.len(),
                total_checked,
                total_failures
            ));
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["space", "inputs", "expected", "actual"])
                .expect("in-memory csv write");
            for r in reports {
                for f in &r.failures {
                    w.write_record([
                        r.space.as_str(),
                        &f.inputs.join("; "),
                        f.expected.as_str(),
                        f.actual.as_str(),
                    ])
                    .expect("in-memory csv write");
                }
            }
            let bytes = w.into_inner().expect("in-memory csv flush");
            s.push_str(&String::from_utf8(bytes).expect("csv output is utf-8"));
            s
        }
        Format::Json => to_pretty_json(&SuiteSummary {
            suite,
            diagnostic,
            total_checked,
            total_failures,
            reports,
        }),
    }
}

/// Renders the digitized-reference-table comparison.
pub(crate) fn fixture_report(format: Format, outcome: &FixtureOutcome) -> String {
    match format {
        Format::Md => {
            let mut s = String::new();
            s.push_str(&format!(
                "suite: fixtures\nspace: {}\ntables: {}\ncells: {}\nmismatches: {}\n",
                outcome.space,
                outcome.tables.join(" "),
                outcome.cells,
                outcome.mismatches.len()
            ));
            for m in &outcome.mismatches {
                s.push_str(&format!(
                    "MISMATCH table={} row={} col={} fixture={} computed={} oracle={} verdict={}\n",
                    m.table,
                    m.row,
                    m.col.as_deref().unwrap_or("-"),
                    m.fixture,
                    m.computed,
                    m.oracle,
                    m.verdict
                ));
            }
            s
        }
        Format::Csv => {
            let mut s = String::new();
            s.push_str(&format!(
                "# suite: fixtures\n# space: {}\n# tables: {}\n# cells: {}\n# mismatches: {}\n",
                outcome.space,
                outcome.tables.join(" "),
                outcome.cells,
                outcome.mismatches.len()
            ));
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["table", "row", "col", "fixture", "computed", "oracle", "verdict"])
                .expect("in-memory csv write");
            for m in &outcome.mismatches {
                w.write_record([
                    m.table.as_str(),
                    m.row.as_str(),
                    m.col.as_deref().unwrap_or(""),
                    m.fixture.as_str(),
                    m.computed.as_str(),
                    m.oracle.as_str(),
                    m.verdict,
                ])
                .expect("in-memory csv write");
            }
            let bytes = w.into_inner().expect("in-memory csv flush");
            s.push_str(&String::from_utf8(bytes).expect("csv output is utf-8"));
            s
        }
        Format::Json => to_pretty_json(outcome),
    }
}
