use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The 2-bridge knot `K_{p,q}`: `p` odd, `0 < q < p`, `gcd(p, q) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoBridgeKnot {
    p: u32,
    q: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

impl TwoBridgeKnot {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidKnot(format!("p = {p} must be at least 3")));
        }
        if p.is_even() {
            return Err(Error::InvalidKnot(format!("p = {p} must be odd")));
        }
        if q <= 0 || q >= p {
            return Err(Error::InvalidKnot(format!("q = {q} must satisfy 0 < q < p = {p}")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidKnot(format!("gcd({p}, {q}) must be 1")));
        }
        let p = u32::try_from(p).map_err(|_| Error::InvalidKnot(format!("p = {p} is too large")))?;
        Ok(TwoBridgeKnot { p, q: q as u32, name: None })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Order of the first homology of the branched double cover.
    pub fn determinant(&self) -> u32 {
        self.p
    }

    /// `K_{p,p-q}`, the mirror image.
    pub fn mirror(&self) -> Self {
        TwoBridgeKnot { p: self.p, q: self.p - self.q, name: None }
    }
}

impl fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "{n} (K_{{{},{}}})", self.p, self.q),
            None => write!(f, "K_{{{},{}}}", self.p, self.q),
        }
    }
}
