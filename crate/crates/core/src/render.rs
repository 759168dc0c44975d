//! Text, CSV and JSON rendering. Integers are always written in full decimal.

use serde::{Deserialize, Serialize, Serializer};

use crate::exact::ExactInt;
use crate::flexdeg::FlexReport;

pub fn as_decimal<S: Serializer>(v: &ExactInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

pub const TABLE_HEADER: [&str; 8] = [
    "d",
    "n_closed",
    "n_factorial",
    "n_sum_raw",
    "n_sum_resolved",
    "n_chern_monomial",
    "n_chern_schubert",
    "agree",
];

/// Wire form of a [`FlexReport`]: integers as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub d: u32,
    pub n_closed: String,
    pub n_factorial: String,
    pub n_sum_raw: String,
    pub n_sum_resolved: String,
    pub n_chern_monomial: String,
    pub n_chern_schubert: String,
    pub agree: bool,
}

impl From<&FlexReport> for TableRow {
    fn from(r: &FlexReport) -> Self {
        TableRow {
            d: r.d,
            n_closed: r.n_closed.to_string(),
            n_factorial: r.n_factorial.to_string(),
            n_sum_raw: r.n_sum_raw.to_string(),
            n_sum_resolved: r.n_sum_resolved.to_string(),
            n_chern_monomial: r.n_chern_monomial.to_string(),
            n_chern_schubert: r.n_chern_schubert.to_string(),
            agree: r.agree,
        }
    }
}

impl TableRow {
    /// Parses the decimal fields back; `None` if any is malformed.
    pub fn to_report(&self) -> Option<FlexReport> {
        let p = |s: &str| s.parse::<ExactInt>().ok();
        Some(FlexReport {
            d: self.d,
            n_closed: p(&self.n_closed)?,
            n_factorial: p(&self.n_factorial)?,
            n_sum_raw: p(&self.n_sum_raw)?,
            n_sum_resolved: p(&self.n_sum_resolved)?,
            n_chern_monomial: p(&self.n_chern_monomial)?,
            n_chern_schubert: p(&self.n_chern_schubert)?,
            agree: self.agree,
        })
    }

    fn fields(&self) -> [String; 8] {
        [
            self.d.to_string(),
            self.n_closed.clone(),
            self.n_factorial.clone(),
            self.n_sum_raw.clone(),
            self.n_sum_resolved.clone(),
            self.n_chern_monomial.clone(),
            self.n_chern_schubert.clone(),
            self.agree.to_string(),
        ]
    }
}

/// Right-aligned columns separated by two spaces.
pub fn aligned<S: AsRef<str>>(header: &[&str], rows: &[Vec<S>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.as_ref().len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(AsRef::as_ref).collect());
    }
    out
}

pub fn csv_string<S: AsRef<str>>(header: &[&str], rows: &[Vec<S>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row.iter().map(AsRef::as_ref))
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn json_string<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn render_table(reports: &[FlexReport], format: OutputFormat) -> String {
    let rows: Vec<TableRow> = reports.iter().map(TableRow::from).collect();
    match format {
        OutputFormat::Json => json_string(&rows),
        OutputFormat::Csv => {
            let cells: Vec<Vec<String>> = rows.iter().map(|r| r.fields().to_vec()).collect();
            csv_string(&TABLE_HEADER, &cells)
        }
        OutputFormat::Text => {
            let cells: Vec<Vec<String>> = rows.iter().map(|r| r.fields().to_vec()).collect();
            aligned(&TABLE_HEADER, &cells)
        }
    }
}

/// Parses CSV produced by [`render_table`].
pub fn parse_table_csv(input: &str) -> Option<Vec<TableRow>> {
    let mut reader = csv::Reader::from_reader(input.as_bytes());
    reader
        .deserialize()
        .collect::<Result<Vec<TableRow>, _>>()
        .ok()
}

/// Fixed nine-decimal rendering for logarithms.
pub fn log9(x: f64) -> String {
    format!("{x:.9}")
}
