//! Library side of the `concordance` command: knot parsing, single-knot
//! runs, rendering, the result cache and batch processing.

pub mod batch;
pub mod cache;
pub mod twist;

use std::fmt::Write as _;

use clap::ValueEnum;
use concordance_core::homology::BiGrading;
use concordance_core::lens_d::d_branched_cover_multiset;
use concordance_core::obstruct::verdict;
use concordance_core::rational::{fmt_q, sorted};
use concordance_core::report::{HfkEntry, LabelMap, Report};
use concordance_core::{compute, Engine, TwoBridgeKnot};
use thiserror::Error;

pub use cache::Cache;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 2,
            CliError::Input(_) | CliError::Io { .. } => 1,
        }
    }

    pub(crate) fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io { context: context.into(), source }
    }
}

impl From<concordance_core::Error> for CliError {
    fn from(e: concordance_core::Error) -> Self {
        match e {
            concordance_core::Error::Inconsistency { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// A knot as typed by the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotSpec {
    pub p: i64,
    pub q: i64,
    pub name: Option<String>,
}

impl KnotSpec {
    pub fn knot(&self) -> Result<TwoBridgeKnot> {
        let k = TwoBridgeKnot::new(self.p, self.q)?;
        Ok(match &self.name {
            Some(n) => k.named(n.clone()),
            None => k,
        })
    }
}

/// Parses `p/q` or `p,q`, optionally followed by `name=…`, and validates it.
pub fn parse_knot(text: &str) -> Result<KnotSpec> {
    let mut pq = None;
    let mut name = None;
    for word in text.split_whitespace() {
        if let Some(n) = word.strip_prefix("name=") {
            if n.is_empty() || name.replace(n.to_string()).is_some() {
                return Err(CliError::Input(format!("bad name in {text:?}")));
            }
        } else if pq.is_none() {
            let (p, q) = word
                .split_once(['/', ','])
                .ok_or_else(|| CliError::Input(format!("expected p/q or p,q, got {word:?}")))?;
            let num = |s: &str| {
                s.trim().parse::<i64>().map_err(|_| CliError::Input(format!("{s:?} is not an integer")))
            };
            pq = Some((num(p)?, num(q)?));
        } else {
            return Err(CliError::Input(format!("unexpected {word:?} in {text:?}")));
        }
    }
    let (p, q) = pq.ok_or_else(|| CliError::Input(format!("no knot in {text:?}")))?;
    let spec = KnotSpec { p, q, name };
    spec.knot()?;
    Ok(spec)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Query {
    Tau,
    D,
    Hfk,
    Obstruct,
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub engine: Engine,
    pub cache: Option<Cache>,
}

/// Runs the pipeline for one knot and keeps the parts `query` asks for.
pub fn run_knot(spec: &KnotSpec, query: Query, opts: &Options) -> Result<Report> {
    let knot = spec.knot()?;
    let mut full = if query == Query::Hfk {
        None
    } else {
        opts.cache.as_ref().filter(|_| opts.engine != Engine::Oracle).and_then(|c| c.load(&knot))
    };
    let mut hfk = None;
    if full.is_none() || query == Query::Hfk {
        let kf = compute(&knot, opts.engine)?;
        let survivors = &kf.survivors;
        let (tau, d) = (survivors.tau(), survivors.d());
        if sorted(d.iter().copied()) != d_branched_cover_multiset(&knot) {
            return Err(CliError::Internal("survivor gradings differ from the correction terms".into()));
        }
        if query == Query::Hfk {
            hfk = Some(kf.hfk()?.into_iter().map(|c| hfk_entry(c.label, c.grading)).collect());
        }
        let r = Report::from_obstruction(&verdict(&knot, &tau, &d)?);
        if let Some(c) = opts.cache.as_ref() {
            c.store(&knot, &r)?;
        }
        full = Some(r);
    }
    let full = full.expect("report computed or loaded");
    let base = Report::new(&knot);
    Ok(match query {
        Query::Tau => Report { tau: full.tau, ..base },
        Query::D => Report { d: full.d, ..base },
        Query::Hfk => Report { hfk, ..base },
        Query::Obstruct => Report { name: base.name, ..full },
    })
}

fn hfk_entry(label: u32, g: BiGrading) -> HfkEntry {
    HfkEntry { label, a: fmt_q(&g.a), m: fmt_q(&g.m) }
}

fn knot_title(r: &Report) -> String {
    match &r.name {
        Some(n) => format!("{n} (K_{{{},{}}})", r.p, r.q),
        None => format!("K_{{{},{}}}", r.p, r.q),
    }
}

/// Renders a single-knot report.
pub fn render(report: &Report, query: Query, format: Format) -> Result<String> {
    if format == Format::Json {
        return Ok(report.to_json());
    }
    let table = |header: &str, values: &LabelMap| {
        let mut out = String::new();
        if format == Format::Table {
            let _ = writeln!(out, "{}", knot_title(report));
            let _ = writeln!(out, "{:>6}  {header}", "label");
            for (l, v) in values.0.iter().enumerate() {
                let _ = writeln!(out, "{l:>6}  {}", fmt_q(v));
            }
        } else {
            let _ = writeln!(out, "label,{header}");
            for (l, v) in values.0.iter().enumerate() {
                let _ = writeln!(out, "{l},{}", fmt_q(v));
            }
        }
        out
    };
    let missing = || CliError::Internal("report lacks the requested table".into());
    Ok(match query {
        Query::Tau => table("tau", report.tau.as_ref().ok_or_else(missing)?),
        Query::D => table("d", report.d.as_ref().ok_or_else(missing)?),
        Query::Hfk => {
            let classes = report.hfk.as_ref().ok_or_else(missing)?;
            let mut out = String::new();
            if format == Format::Table {
                let _ = writeln!(out, "{}", knot_title(report));
                let _ = writeln!(out, "{:>6}  {:>8}  {:>8}", "label", "A", "M");
                for c in classes {
                    let _ = writeln!(out, "{:>6}  {:>8}  {:>8}", c.label, c.a, c.m);
                }
            } else {
                let _ = writeln!(out, "label,A,M");
                for c in classes {
                    let _ = writeln!(out, "{},{},{}", c.label, c.a, c.m);
                }
            }
            out
        }
        Query::Obstruct => {
            let tests = report.tests.as_ref().ok_or_else(missing)?;
            let verdict = report.verdict.as_deref().ok_or_else(missing)?;
            if format == Format::Csv {
                let row = batch::row_from_report(report.name.as_deref().unwrap_or(""), report)?;
                return batch::render_rows(&[row], Format::Csv);
            }
            let mut out = String::new();
            let _ = writeln!(out, "{}", knot_title(report));
            let _ = writeln!(out, "verdict: {verdict}");
            let _ = writeln!(out, "{:<14}  {:>10}  fired", "test", "value");
            for t in tests {
                let name = match (t.kind.as_str(), t.invariant.as_deref()) {
                    ("minmax", Some("tau")) => format!("minmax(T)_{}", t.p),
                    ("minmax", _) => format!("minmax(D)_{}", t.p),
                    (kind, _) => format!("{kind}_{}", t.p.pow(t.k)),
                };
                let _ = writeln!(out, "{name:<14}  {:>10}  {}", t.value, if t.fired { "yes" } else { "no" });
            }
            out
        }
    })
}
