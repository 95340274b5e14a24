//! Comparison tables of the exact maximum against the spectral and Turán
//! bounds, rendered as plain text, markdown, CSV or JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::bound_report;
use crate::error::{Error, Result};
use crate::graph::GraphSpec;

/// Marker printed where the Turán bound does not apply (`k <= ω`).
pub const NOT_APPLICABLE: &str = "NA";

pub const CSV_HEADER: [&str; 5] = ["k", "s", "exact", "spectral", "turan"];

const DISPLAY_HEADER: [&str; 5] = ["k", "s", "Exact maximum", "Spectral bound", "Turán bound"];

/// The ten `(k, s)` pairs of the reference comparison at `n = 1000`.
pub const TABLE1_PAIRS: [(usize, usize); 10] = [
    (54, 37),
    (118, 53),
    (359, 16),
    (210, 115),
    (243, 175),
    (313, 295),
    (433, 196),
    (404, 372),
    (439, 384),
    (473, 462),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub n: usize,
    pub rows: Vec<(usize, usize)>,
}

impl TableSpec {
    pub fn new(n: usize, rows: Vec<(usize, usize)>) -> Result<Self> {
        if n < 3 {
            return Err(Error::TableSpec(format!("n = {n} must be at least 3")));
        }
        for &(k, s) in &rows {
            if k < 1 || k > n || s < 1 || s >= n {
                return Err(Error::TableSpec(format!(
                    "row (k={k}, s={s}) needs 1 <= k <= n and 1 <= s < n (n = {n})"
                )));
            }
        }
        Ok(Self { n, rows })
    }

    /// Parses `n` on the first line followed by one `k,s` pair per line.
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut records = reader.records();

        let parse_field = |rec: &csv::StringRecord, i: usize| -> Result<usize> {
            let field = rec.get(i).unwrap_or("");
            field.parse().map_err(|_| {
                let line = rec.position().map_or(0, |p| p.line());
                Error::TableSpec(format!("line {line}: `{field}` is not a non-negative integer"))
            })
        };

        let first = records
            .next()
            .ok_or_else(|| Error::TableSpec("empty file".into()))?
            .map_err(|e| Error::TableSpec(e.to_string()))?;
        if first.len() != 1 {
            return Err(Error::TableSpec("first line must hold n alone".into()));
        }
        let n = parse_field(&first, 0)?;

        let mut rows = Vec::new();
        for rec in records {
            let rec = rec.map_err(|e| Error::TableSpec(e.to_string()))?;
            if rec.len() != 2 {
                let line = rec.position().map_or(0, |p| p.line());
                return Err(Error::TableSpec(format!("line {line}: expected `k,s`")));
            }
            rows.push((parse_field(&rec, 0)?, parse_field(&rec, 1)?));
        }
        Self::new(n, rows)
    }
}

pub fn builtin_table1() -> TableSpec {
    TableSpec {
        n: 1000,
        rows: TABLE1_PAIRS.to_vec(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub k: usize,
    pub s: usize,
    pub exact: u64,
    pub spectral: i64,
    pub spectral_raw: f64,
    pub turan: Option<u64>,
}

impl TableRow {
    /// `exact <= spectral` and, when defined, `exact <= turan`.
    pub fn sandwiched(&self) -> bool {
        self.exact as i64 <= self.spectral && self.turan.is_none_or(|t| self.exact <= t)
    }
}

pub fn build_table(ts: &TableSpec) -> Result<Vec<TableRow>> {
    ts.rows
        .par_iter()
        .map(|&(k, s)| {
            let spec = GraphSpec::new(ts.n, s)?;
            let r = bound_report(&spec, k)?;
            Ok(TableRow {
                k,
                s,
                exact: r.exact,
                spectral: r.spectral_int,
                spectral_raw: r.spectral_raw,
                turan: r.turan,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Markdown,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "plain" | "text" => Ok(Format::Plain),
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

fn cells(row: &TableRow) -> [String; 5] {
    [
        row.k.to_string(),
        row.s.to_string(),
        row.exact.to_string(),
        row.spectral.to_string(),
        row.turan
            .map_or_else(|| NOT_APPLICABLE.to_string(), |t| t.to_string()),
    ]
}

pub fn render(rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Plain => render_plain(rows),
        Format::Markdown => render_markdown(rows),
        Format::Csv => render_csv(rows),
        Format::Json => {
            let mut out = serde_json::to_string_pretty(rows).expect("rows serialise");
            out.push('\n');
            out
        }
    }
}

fn widths(rows: &[TableRow]) -> [usize; 5] {
    let mut w = DISPLAY_HEADER.map(|h| h.chars().count());
    for row in rows {
        for (i, c) in cells(row).iter().enumerate() {
            w[i] = w[i].max(c.len());
        }
    }
    w
}

fn render_plain(rows: &[TableRow]) -> String {
    let w = widths(rows);
    let mut out = String::new();
    let line = |cols: &[String]| {
        cols.iter()
            .zip(w)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let header: Vec<String> = DISPLAY_HEADER.iter().map(|h| h.to_string()).collect();
    writeln!(out, "{}", line(&header)).unwrap();
    for row in rows {
        writeln!(out, "{}", line(&cells(row))).unwrap();
    }
    out
}

fn render_markdown(rows: &[TableRow]) -> String {
    let w = widths(rows);
    let mut out = String::new();
    let header: Vec<String> = DISPLAY_HEADER
        .iter()
        .zip(w)
        .map(|(h, w)| format!("{h:>w$}"))
        .collect();
    writeln!(out, "| {} |", header.join(" | ")).unwrap();
    let rule: Vec<String> = w.iter().map(|&w| format!("{}:", "-".repeat(w + 1))).collect();
    writeln!(out, "|{}|", rule.join("|")).unwrap();
    for row in rows {
        let c: Vec<String> = cells(row)
            .iter()
            .zip(w)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        writeln!(out, "| {} |", c.join(" | ")).unwrap();
    }
    out
}

fn render_csv(rows: &[TableRow]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    writer.write_record(CSV_HEADER).unwrap();
    for row in rows {
        writer.write_record(cells(row)).unwrap();
    }
    String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("ascii")
}

/// Reads rows back from [`render`]'s CSV output. `spectral_raw` is not part
/// of the CSV and comes back as the floored value.
pub fn parse_csv(text: &str) -> Result<Vec<TableRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let bad = |e: &dyn std::fmt::Display| Error::TableSpec(format!("csv: {e}"));
    let headers = reader.headers().map_err(|e| bad(&e))?.clone();
    if headers.iter().ne(CSV_HEADER) {
        return Err(Error::TableSpec(format!("csv: unexpected header {headers:?}")));
    }
    reader
        .records()
        .map(|rec| {
            let rec = rec.map_err(|e| bad(&e))?;
            let int = |i: usize| -> Result<i64> { rec[i].parse().map_err(|e| bad(&e)) };
            let spectral = int(3)?;
            let turan = match &rec[4] {
                NOT_APPLICABLE => None,
                _ => Some(int(4)? as u64),
            };
            Ok(TableRow {
                k: int(0)? as usize,
                s: int(1)? as usize,
                exact: int(2)? as u64,
                spectral,
                spectral_raw: spectral as f64,
                turan,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_pairs() {
        let t = builtin_table1();
        assert_eq!(t.n, 1000);
        assert_eq!(t.rows.len(), 10);
        assert_eq!(t.rows[0], (54, 37));
        assert_eq!(t.rows[9], (473, 462));
        assert!(t.rows.iter().all(|&(k, s)| k + s < 1000 && s < k));
    }

    #[test]
    fn build_rows() {
        let rows = build_table(&builtin_table1()).unwrap();
        assert_eq!((rows[0].exact, rows[0].spectral, rows[0].turan), (1295, 1980, Some(1431)));
        assert_eq!((rows[7].exact, rows[7].spectral, rows[7].turan), (80910, 88116, Some(81406)));
        assert!(rows.iter().all(TableRow::sandwiched));
    }

    #[test]
    fn complete_row_has_no_turan() {
        let rows = build_table(&TableSpec::new(5, vec![(5, 2)]).unwrap()).unwrap();
        assert_eq!(rows[0].exact, 10);
        assert_eq!(rows[0].turan, None);
        assert!(render(&rows, Format::Csv).ends_with(",NA\n"));
    }

    #[test]
    fn csv_output() {
        let rows = build_table(&builtin_table1()).unwrap();
        let csv = render(&rows, Format::Csv);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("k,s,exact,spectral,turan"));
        assert_eq!(lines.next(), Some("54,37,1295,1980,1431"));
        assert_eq!(csv.lines().count(), 11);
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn markdown_output() {
        let rows = build_table(&builtin_table1()).unwrap();
        let md = render(&rows, Format::Markdown);
        let lines: Vec<&str> = md.lines().collect();
        assert_eq!(lines.len(), 12);
        assert!(lines[0].contains("Exact maximum"));
        assert!(lines[1].starts_with("|-"));
        assert!(lines[2].contains("1295"));
    }

    #[test]
    fn json_output() {
        let rows = build_table(&TableSpec::new(20, vec![(6, 2)]).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&render(&rows, Format::Json)).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 1);
        let obj = arr[0].as_object().unwrap();
        for key in ["k", "s", "exact", "spectral", "turan", "spectral_raw"] {
            assert!(obj.contains_key(key), "{key}");
        }
    }

    #[test]
    fn plain_is_aligned() {
        let rows = build_table(&builtin_table1()).unwrap();
        let plain = render(&rows, Format::Plain);
        let widths: Vec<usize> = plain.lines().map(|l| l.chars().count()).collect();
        assert!(widths.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn formats() {
        assert_eq!("CSV".parse::<Format>().unwrap(), Format::Csv);
        assert_eq!("md".parse::<Format>().unwrap(), Format::Markdown);
        assert_eq!(
            "xml".parse::<Format>(),
            Err(Error::UnknownFormat("xml".into()))
        );
    }

    #[test]
    fn table_spec_files() {
        let t = TableSpec::parse("1000\n54,37\n# comment\n\n118, 53\n").unwrap();
        assert_eq!(t, TableSpec { n: 1000, rows: vec![(54, 37), (118, 53)] });
        assert!(TableSpec::parse("").is_err());
        assert!(TableSpec::parse("10\n11,2\n").is_err());
        assert!(TableSpec::parse("10\n3\n").is_err());
        assert!(TableSpec::parse("10,2\n3,1\n").is_err());
        assert!(TableSpec::parse("x\n").is_err());
    }
}
