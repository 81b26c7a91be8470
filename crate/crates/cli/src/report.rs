//! Audit report assembly and serialization.
//!
//! The JSON body is deterministic for a given set of flags; wall-clock data
//! lives in the `meta` header field, which consumers exclude when comparing
//! or hashing reports. CSV carries exactly the verdict rows (header row
//! mandatory, RFC-style quoting via the `csv` crate).

use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use eulerian_core::gen_eulerian::{all_identities, IdentityInfo, IdentityVerdict};
use serde::Serialize;

#[derive(Serialize)]
pub struct Report {
    pub version: String,
    /// Timing header; excluded from determinism comparisons.
    pub meta: Meta,
    pub registry: Vec<RegistryEntry>,
    pub verdicts: Vec<VerdictRow>,
    pub summary: Summary,
}

#[derive(Serialize)]
pub struct Meta {
    pub started_unix_ms: u128,
    pub elapsed_ms: u128,
}

#[derive(Serialize)]
pub struct RegistryEntry {
    pub id: &'static str,
    pub locus: &'static str,
    pub quote: &'static str,
    pub forms: Vec<&'static str>,
    pub n_default: usize,
    pub expected: Vec<ExpectedEntry>,
    pub notes: &'static str,
}

#[derive(Serialize)]
pub struct ExpectedEntry {
    pub form: &'static str,
    pub expected: &'static str,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct VerdictRow {
    pub id: String,
    pub form: String,
    pub n: usize,
    pub status: String,
    pub lhs: String,
    pub rhs: String,
    pub diff: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grade_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeff_match: Option<bool>,
}

#[derive(Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    /// Rows whose status differs from the registry's recorded expectation.
    pub deviations: usize,
}

fn registry_entry(info: &IdentityInfo) -> RegistryEntry {
    RegistryEntry {
        id: info.id,
        locus: info.locus,
        quote: info.quote,
        forms: info.forms.iter().map(|f| f.as_str()).collect(),
        n_default: info.n_default,
        expected: info
            .expected
            .iter()
            .map(|(form, expectation)| ExpectedEntry {
                form: form.as_str(),
                expected: expectation.as_str(),
            })
            .collect(),
        notes: info.notes,
    }
}

/// Flattens verdicts into report rows and counts deviations against the
/// registry's expectations. Rows are ordered by (id, form, n).
pub fn assemble(verdicts: &[IdentityVerdict], started_unix_ms: u128, elapsed_ms: u128) -> Report {
    let mut rows = Vec::new();
    let mut deviations = 0usize;
    for verdict in verdicts {
        let info = all_identities()
            .iter()
            .find(|i| i.id == verdict.identity_id)
            .expect("verdicts only come from registered identities");
        let expectation = info
            .expected
            .iter()
            .find(|(f, _)| *f == verdict.form)
            .map(|(_, e)| e)
            .expect("expectation recorded for every form");
        for row in &verdict.rows {
            if row.status != expectation.expected_status(row.n) {
                deviations += 1;
            }
            rows.push(VerdictRow {
                id: verdict.identity_id.to_string(),
                form: verdict.form.as_str().to_string(),
                n: row.n,
                status: row.status.to_string(),
                lhs: row.lhs.to_string(),
                rhs: row.rhs.to_string(),
                diff: row.diff.to_string(),
                grade_match: row.grade_match,
                coeff_match: row.coeff_match,
            });
        }
    }
    rows.sort_by(|a, b| {
        (a.id.as_str(), a.form.as_str(), a.n).cmp(&(b.id.as_str(), b.form.as_str(), b.n))
    });
    let pass = rows.iter().filter(|r| r.status == "PASS").count();
    let fail = rows.len() - pass;
    Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        meta: Meta {
            started_unix_ms,
            elapsed_ms,
        },
        registry: all_identities().iter().map(registry_entry).collect(),
        verdicts: rows,
        summary: Summary {
            pass,
            fail,
            deviations,
        },
    }
}

pub fn now_unix_ms() -> u128 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis())
        .unwrap_or(0)
}

pub fn to_json(report: &Report) -> Result<String> {
    let mut text = serde_json::to_string_pretty(report).context("serialize report as JSON")?;
    text.push('\n');
    Ok(text)
}

/// One verdict per row; registry and summary are JSON-only.
pub fn to_csv(report: &Report) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in &report.verdicts {
        writer.serialize(row).context("serialize verdict row")?;
    }
    let bytes = writer.into_inner().context("flush CSV writer")?;
    String::from_utf8(bytes).context("CSV output is UTF-8")
}

/// Exit status per the report contract: 0 when every verdict matches its
/// recorded expectation, 2 otherwise.
pub fn exit_code(report: &Report) -> u8 {
    if report.summary.deviations == 0 {
        0
    } else {
        2
    }
}
