//! Many knots from a headered `name,p,q` CSV, one output row per input row.

use std::fmt::Write as _;
use std::path::Path;

use concordance_core::obstruct::verdict;
use concordance_core::report::{Report, ReportRow};
use concordance_core::TwoBridgeKnot;
use log::info;
use rayon::prelude::*;
use serde::Deserialize;

use crate::{run_knot, CliError, Format, KnotSpec, Options, Query, Result};

#[derive(Debug, Deserialize)]
struct InputRow {
    name: String,
    p: String,
    q: String,
}

/// One entry per data row: the name and either a spec or why it is invalid.
pub fn read_input(path: &Path) -> Result<Vec<(String, Result<KnotSpec>)>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for record in reader.deserialize::<InputRow>() {
        let row = record.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let num = |s: &str| s.parse::<i64>().map_err(|_| CliError::Input(format!("{s:?} is not an integer")));
        let spec = num(&row.p).and_then(|p| {
            let spec = KnotSpec { p, q: num(&row.q)?, name: Some(row.name.clone()).filter(|n| !n.is_empty()) };
            spec.knot()?;
            Ok(spec)
        });
        out.push((row.name, spec));
    }
    Ok(out)
}

/// Runs every row, at most `jobs` at a time, keeping input order. Row
/// failures become rows with an error message.
pub fn run_batch(input: &Path, opts: &Options, jobs: Option<usize>) -> Result<Vec<ReportRow>> {
    let rows = read_input(input)?;
    info!("batch of {} knots from {}", rows.len(), input.display());
    let work = || {
        rows.par_iter()
            .map(|(name, spec)| {
                let result = spec.as_ref().map_err(|e| e.to_string()).and_then(|spec| {
                    let report = run_knot(spec, Query::Obstruct, opts).map_err(|e| e.to_string())?;
                    row_from_report(name, &report).map_err(|e| e.to_string())
                });
                result.unwrap_or_else(|e| {
                    let (p, q) = spec.as_ref().map_or((0, 0), |s| (s.p, s.q));
                    let clamp = |v: i64| u32::try_from(v).unwrap_or(0);
                    ReportRow::failed(name, clamp(p), clamp(q), e)
                })
            })
            .collect()
    };
    match jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Input(format!("cannot start {n} workers: {e}")))?;
            Ok(pool.install(work))
        }
        None => Ok(work()),
    }
}

/// Batch row from a full report, with the tests recomputed from its tables.
pub fn row_from_report(name: &str, report: &Report) -> Result<ReportRow> {
    let knot = TwoBridgeKnot::new(report.p.into(), report.q.into())?;
    let tau = report.tau.as_ref().ok_or_else(|| CliError::Internal("report lacks the tau table".into()))?;
    let d = report.d.as_ref().ok_or_else(|| CliError::Internal("report lacks the d table".into()))?;
    Ok(ReportRow::from_obstruction(name, &verdict(&knot, &tau.0, &d.0)?))
}

pub fn render_rows(rows: &[ReportRow], format: Format) -> Result<String> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r).map_err(|e| CliError::Internal(format!("csv: {e}")))?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Internal(format!("csv: {e}")))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        Format::Json => Ok(serde_json::to_string_pretty(rows).expect("rows serialize") + "\n"),
        Format::Table => {
            let mut out = String::new();
            if rows.is_empty() {
                return Ok(out);
            }
            let _ = writeln!(out, "{:<10}  {:<8}  {:<15}  tests fired", "name", "p/q", "verdict");
            for r in rows {
                let detail = if r.error.is_empty() { r.tests_fired.as_str() } else { r.error.as_str() };
                let _ = writeln!(out, "{:<10}  {:<8}  {:<15}  {detail}", r.name, format!("{}/{}", r.p, r.q), r.verdict);
            }
            Ok(out)
        }
    }
}
