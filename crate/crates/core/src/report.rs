//! Report rows and their plain, CSV and Markdown renderings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Md,
}

/// One measured quantity next to the value it is checked against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub experiment: String,
    pub parameters: String,
    pub measured: String,
    pub expected: String,
    /// where `expected` comes from: "known", "closed-form", "oracle", "derived", "asymptotic"
    pub provenance: String,
    /// "pass", "fail" or "info"
    pub verdict: String,
}

impl ReportRow {
    pub fn check(
        experiment: &str,
        parameters: impl Into<String>,
        measured: impl Into<String>,
        expected: impl Into<String>,
        provenance: &str,
        pass: bool,
    ) -> Self {
        ReportRow {
            experiment: experiment.into(),
            parameters: parameters.into(),
            measured: measured.into(),
            expected: expected.into(),
            provenance: provenance.into(),
            verdict: if pass { "pass" } else { "fail" }.into(),
        }
    }

    pub fn info(
        experiment: &str,
        parameters: impl Into<String>,
        measured: impl Into<String>,
        expected: impl Into<String>,
        provenance: &str,
    ) -> Self {
        ReportRow {
            experiment: experiment.into(),
            parameters: parameters.into(),
            measured: measured.into(),
            expected: expected.into(),
            provenance: provenance.into(),
            verdict: "info".into(),
        }
    }

    pub fn failed(&self) -> bool {
        self.verdict == "fail"
    }
}

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::Parse {
        line: 0,
        message: e.to_string(),
    }
}

/// Any serializable records as CSV with a header row.
pub fn records_to_csv<T: Serialize>(records: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r).map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(csv_error)?;
    String::from_utf8(bytes).map_err(csv_error)
}

pub fn to_csv(rows: &[ReportRow]) -> Result<String> {
    if rows.is_empty() {
        return Ok("experiment,parameters,measured,expected,provenance,verdict\n".into());
    }
    records_to_csv(rows)
}

pub fn from_csv(text: &str) -> Result<Vec<ReportRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize().map(|row| row.map_err(csv_error)).collect()
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', "<br>")
}

pub fn to_markdown(rows: &[ReportRow]) -> String {
    let mut out = String::from(
        "| experiment | parameters | measured | expected | provenance | verdict |\n\
         |---|---|---|---|---|---|\n",
    );
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} |\n",
            md_cell(&r.experiment),
            md_cell(&r.parameters),
            md_cell(&r.measured),
            md_cell(&r.expected),
            md_cell(&r.provenance),
            md_cell(&r.verdict)
        ));
    }
    out
}

pub fn to_plain(rows: &[ReportRow]) -> String {
    rows.iter()
        .map(|r| {
            format!(
                "{} [{}] {}: measured {} expected {} ({})\n",
                r.verdict.to_uppercase(),
                r.experiment,
                r.parameters,
                r.measured,
                r.expected,
                r.provenance
            )
        })
        .collect()
}

pub fn render(rows: &[ReportRow], format: Format) -> Result<String> {
    match format {
        Format::Plain => Ok(to_plain(rows)),
        Format::Csv => to_csv(rows),
        Format::Md => Ok(to_markdown(rows)),
    }
}
