//! Per-knot JSON results on disk, keyed by `(p, q)`.

use std::fs;
use std::path::{Path, PathBuf};

use concordance_core::lens_d::d_branched_cover_multiset;
use concordance_core::obstruct::verdict;
use concordance_core::rational::sorted;
use concordance_core::report::Report;
use concordance_core::TwoBridgeKnot;
use log::{debug, warn};

use crate::{CliError, Result};

pub const CACHE_ENV: &str = "CONCORDANCE_CACHE";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// The directory from `CONCORDANCE_CACHE` if set, else `flag`.
    pub fn resolve(flag: Option<PathBuf>) -> Option<Self> {
        std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from).or(flag).map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, knot: &TwoBridgeKnot) -> PathBuf {
        self.dir.join(format!("{}_{}.json", knot.p(), knot.q()))
    }

    /// A cached full report, if present and consistent with the correction
    /// terms of the branched cover. Stale or corrupt entries are ignored.
    pub fn load(&self, knot: &TwoBridgeKnot) -> Option<Report> {
        let path = self.path(knot);
        let text = fs::read_to_string(&path).ok()?;
        match self.validate(knot, &text) {
            Ok(r) => {
                debug!("cache hit for {knot}");
                Some(r)
            }
            Err(e) => {
                warn!("ignoring cache entry {}: {e}", path.display());
                None
            }
        }
    }

    fn validate(&self, knot: &TwoBridgeKnot, text: &str) -> Result<Report> {
        let stored = Report::from_json(text)?;
        if (stored.p, stored.q) != (knot.p(), knot.q()) {
            return Err(CliError::Input("entry is for another knot".into()));
        }
        let (Some(tau), Some(d)) = (&stored.tau, &stored.d) else {
            return Err(CliError::Input("entry lacks the tau or d table".into()));
        };
        if tau.0.len() != knot.p() as usize || sorted(d.0.iter().copied()) != d_branched_cover_multiset(knot) {
            return Err(CliError::Input("entry disagrees with the correction terms".into()));
        }
        let bare = TwoBridgeKnot::new(knot.p().into(), knot.q().into())?;
        let fresh = Report::from_obstruction(&verdict(&bare, &tau.0, &d.0)?);
        if fresh != stored {
            return Err(CliError::Input("entry's tests disagree with its tables".into()));
        }
        Ok(fresh)
    }

    pub fn store(&self, knot: &TwoBridgeKnot, report: &Report) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(|e| CliError::io(format!("creating {}", self.dir.display()), e))?;
        let path = self.path(knot);
        let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
        let bare = Report { name: None, ..report.clone() };
        fs::write(&tmp, bare.to_json()).map_err(|e| CliError::io(format!("writing {}", tmp.display()), e))?;
        fs::rename(&tmp, &path).map_err(|e| CliError::io(format!("writing {}", path.display()), e))
    }
}
