//! CSV and JSON emission (and parsing) for census tables, comparison
//! reports, series and integer sequences.
//!
//! CSV output always carries a header line and uses bare `\n` line endings.
//! A report in CSV form is the comparison table, one blank line, then the
//! prime table.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::census::{CensusRow, CensusTable};
use crate::error::{Error, Result};
use crate::paperlab::{BoundVerdict, ComparisonReport, ComparisonRow, PrimeRow, Summary};
use crate::series::TruncatedSeries;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const CENSUS_HEADER: &str = "h,count,max_abs_disc,complete";
pub const COMPARISON_HEADER: &str = "h,predicted,empirical,delta,dold_pred,dold_emp";
pub const PRIMES_HEADER: &str = "p,count,bound,verdict";
pub const SERIES_HEADER: &str = "m,numerator,denominator";
pub const SEQUENCE_HEADER: &str = "m,value";

/// Provenance attached to every JSON document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub bound: Option<u64>,
    pub order: Option<usize>,
    pub source: String,
    pub version: String,
}

impl Meta {
    pub fn new(source: impl Into<String>, bound: Option<u64>, order: Option<usize>) -> Self {
        Meta { bound, order, source: source.into(), version: VERSION.to_string() }
    }
}

fn write_csv<T: Serialize>(header: &str, records: impl IntoIterator<Item = T>) -> Result<String> {
    let mut out = Vec::new();
    {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(&mut out);
        for r in records {
            w.serialize(r).map_err(|e| Error::Invariant(format!("csv write: {e}")))?;
        }
        w.flush().map_err(|e| Error::Invariant(format!("csv write: {e}")))?;
    }
    let body = String::from_utf8(out).expect("csv output is UTF-8");
    Ok(format!("{header}\n{body}"))
}

fn read_csv<T: DeserializeOwned>(header: &str, text: &str) -> Result<Vec<T>> {
    let mut lines = text.splitn(2, '\n');
    let first = lines.next().unwrap_or_default().trim_end_matches('\r');
    if first != header {
        return Err(Error::Parse(format!("expected header {header:?}, found {first:?}")));
    }
    let body = lines.next().unwrap_or_default();
    csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(body.as_bytes())
        .deserialize()
        .map(|r| r.map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
struct CensusRecord {
    h: u32,
    count: u64,
    max_abs_disc: u64,
    complete: bool,
}

pub fn census_csv(table: &CensusTable) -> Result<String> {
    write_csv(
        CENSUS_HEADER,
        table.rows.iter().map(|(&h, r)| CensusRecord {
            h,
            count: r.count,
            max_abs_disc: r.max_abs_disc,
            complete: table.is_complete(h),
        }),
    )
}

/// Parses census CSV. The bound is not part of the CSV and must be supplied.
pub fn parse_census_csv(text: &str, bound: u64) -> Result<CensusTable> {
    let records: Vec<CensusRecord> = read_csv(CENSUS_HEADER, text)?;
    let mut rows = BTreeMap::new();
    let mut complete_through = BTreeSet::new();
    for r in records {
        rows.insert(r.h, CensusRow { count: r.count, max_abs_disc: r.max_abs_disc });
        if r.complete {
            complete_through.insert(r.h);
        }
    }
    Ok(CensusTable { bound, rows, complete_through })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDocument {
    pub meta: Meta,
    pub table: CensusTable,
}

pub fn census_json(table: &CensusTable) -> Result<String> {
    let doc = CensusDocument { meta: Meta::new("census", Some(table.bound), None), table: table.clone() };
    to_json(&doc)
}

pub fn parse_census_json(text: &str) -> Result<CensusDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Debug, Serialize, Deserialize)]
struct ComparisonRecord {
    h: u32,
    predicted: i64,
    empirical: Option<u64>,
    delta: Option<i64>,
    dold_pred: u64,
    dold_emp: Option<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PrimeRecord {
    p: u32,
    count: u64,
    bound: u64,
    verdict: BoundVerdict,
}

pub fn comparison_csv(rows: &[ComparisonRow]) -> Result<String> {
    write_csv(
        COMPARISON_HEADER,
        rows.iter().map(|r| ComparisonRecord {
            h: r.h,
            predicted: r.predicted,
            empirical: r.empirical,
            delta: r.delta,
            dold_pred: r.dold_pred,
            dold_emp: r.dold_emp,
        }),
    )
}

pub fn primes_csv(rows: &[PrimeRow]) -> Result<String> {
    write_csv(
        PRIMES_HEADER,
        rows.iter().map(|r| PrimeRecord { p: r.p, count: r.count, bound: r.bound, verdict: r.verdict }),
    )
}

pub fn parse_comparison_csv(text: &str) -> Result<Vec<ComparisonRow>> {
    let records: Vec<ComparisonRecord> = read_csv(COMPARISON_HEADER, text)?;
    records
        .into_iter()
        .map(|r| {
            let row = ComparisonRow::new(r.h, r.predicted, r.empirical);
            if row.delta != r.delta || row.dold_pred != r.dold_pred || row.dold_emp != r.dold_emp {
                return Err(Error::Parse(format!("row h={} has inconsistent derived columns", r.h)));
            }
            Ok(row)
        })
        .collect()
}

pub fn parse_primes_csv(text: &str) -> Result<Vec<PrimeRow>> {
    let records: Vec<PrimeRecord> = read_csv(PRIMES_HEADER, text)?;
    Ok(records
        .into_iter()
        .map(|r| PrimeRow { p: r.p, count: r.count, bound: r.bound, verdict: r.verdict })
        .collect())
}

pub fn report_csv(report: &ComparisonReport) -> Result<String> {
    Ok(format!("{}\n{}", comparison_csv(&report.rows)?, primes_csv(&report.primes)?))
}

pub fn parse_report_csv(text: &str) -> Result<ComparisonReport> {
    let (rows, primes) = text
        .split_once("\n\n")
        .ok_or_else(|| Error::Parse("report CSV needs a blank line between tables".into()))?;
    Ok(ComparisonReport::from_parts(parse_comparison_csv(&format!("{rows}\n"))?, parse_primes_csv(primes)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub meta: Meta,
    pub rows: Vec<ComparisonRow>,
    pub primes: Vec<PrimeRow>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(meta: Meta, report: ComparisonReport) -> Self {
        ReportDocument { meta, rows: report.rows, primes: report.primes, summary: report.summary }
    }

    pub fn into_report(self) -> ComparisonReport {
        ComparisonReport { rows: self.rows, primes: self.primes, summary: self.summary }
    }
}

pub fn report_json(meta: Meta, report: &ComparisonReport) -> Result<String> {
    to_json(&ReportDocument::new(meta, report.clone()))
}

pub fn parse_report_json(text: &str) -> Result<ReportDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Invariant(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn series_csv(series: &TruncatedSeries) -> String {
    let mut out = format!("{SERIES_HEADER}\n");
    for (m, c) in series.coeffs().iter().enumerate() {
        out.push_str(&format!("{m},{},{}\n", c.numer(), c.denom()));
    }
    out
}

pub fn parse_series_csv(text: &str) -> Result<TruncatedSeries> {
    let records: Vec<(usize, String, String)> = read_csv(SERIES_HEADER, text)?;
    let mut coeffs = Vec::with_capacity(records.len());
    for (i, (m, num, den)) in records.into_iter().enumerate() {
        if m != i {
            return Err(Error::Parse(format!("expected m = {i}, found {m}")));
        }
        let bad = |s: &str| Error::Parse(format!("bad integer {s:?} at m = {m}"));
        let num: BigInt = num.parse().map_err(|_| bad(&num))?;
        let den: BigInt = den.parse().map_err(|_| bad(&den))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator at m = {m}")));
        }
        coeffs.push(BigRational::new(num, den));
    }
    if coeffs.is_empty() {
        return Err(Error::Parse("series has no coefficients".into()));
    }
    Ok(TruncatedSeries::from_coeffs(coeffs.len() - 1, coeffs))
}

/// `m,value` lines for a sequence indexed from `first`.
pub fn sequence_csv(values: &[i64], first: usize) -> String {
    let mut out = format!("{SEQUENCE_HEADER}\n");
    for (i, v) in values.iter().enumerate() {
        out.push_str(&format!("{},{v}\n", i + first));
    }
    out
}

pub fn parse_sequence_csv(text: &str) -> Result<Vec<(usize, i64)>> {
    read_csv(SEQUENCE_HEADER, text)
}
