//! Correction terms of lens spaces and of the branched double covers of
//! 2-bridge knots, `Σ(K_{p,q}) = −L(p,q)`.
//!
//! ```text
//! d(L(1,0), 0) = 0
//! d(L(p,q), i) = ((2i + 1 − p − q)² / (pq) − 1) / 4 − d(L(q, r), j)
//! ```
//!
//! with `r = p mod q`, `j = i mod q` and `0 ≤ i < p`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::knot::TwoBridgeKnot;
use crate::rational::{int, q as rq, sorted, Q};

pub fn d_lens(p: i64, q: i64, i: i64) -> Result<Q> {
    if p < 1 || q < 0 || (p > 1 && q == 0) || q >= p.max(2) || p.gcd(&q) != 1 {
        return Err(Error::InvalidArgument(format!("L({p},{q}) is not a lens space in normal form")));
    }
    if !(0..p).contains(&i) {
        return Err(Error::InvalidArgument(format!("spin^c index {i} is outside 0..{p}")));
    }
    Ok(d_rec(p, q, i))
}

fn d_rec(p: i64, q: i64, i: i64) -> Q {
    if p == 1 {
        return int(0);
    }
    let a = 2 * i + 1 - p - q;
    (rq(a * a, p * q) - 1) / 4 - d_rec(q, p % q, i % q)
}

/// `d(L(p,q), i)` for `i = 0, …, p − 1`.
pub fn d_lens_table(p: i64, q: i64) -> Result<Vec<Q>> {
    (0..p).map(|i| d_lens(p, q, i)).collect()
}

/// Correction terms of `Σ(K_{p,q})`, sorted.
pub fn d_branched_cover_multiset(knot: &TwoBridgeKnot) -> Vec<Q> {
    sorted(DCorrectionTable::branched_cover(knot).values)
}

/// Correction terms of `−L(p,q)` in the recursion's own indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DCorrectionTable {
    pub p: i64,
    pub q: i64,
    /// Value at recursion index `i`.
    pub values: Vec<Q>,
}

impl DCorrectionTable {
    pub fn branched_cover(knot: &TwoBridgeKnot) -> Self {
        let (p, q) = (knot.p() as i64, knot.q() as i64);
        let values = (0..p).map(|i| -d_rec(p, q, i)).collect();
        DCorrectionTable { p, q, values }
    }

    /// Recursion index of the spin structure, the fixed point of
    /// conjugation `i ↦ q − 1 − i`.
    pub fn spin_index(&self) -> i64 {
        let half = (self.p + 1) / 2;
        ((self.q - 1) * half).rem_euclid(self.p)
    }

    /// Values re-indexed by `k ∈ Z_p`, with the spin structure at `k = 0`.
    ///
    /// Consecutive recursion indices differ by a fixed generator, so this is
    /// an affine identification with the group; it agrees with the grid
    /// labels up to an automorphism of `Z_p`.
    pub fn centered(&self) -> Vec<Q> {
        let i0 = self.spin_index();
        (0..self.p).map(|k| self.values[((i0 + k) % self.p) as usize]).collect()
    }
}

/// `d(k)` of `Σ(K_{p,2})` for `|k| ≤ (p−1)/2`, spin structure at `k = 0`.
/// Any representative of `k` mod `p` is accepted.
pub fn d_twist_closed(p: i64, k: i64) -> Result<Q> {
    if p < 3 || p.is_even() {
        return Err(Error::InvalidArgument(format!("twist knot parameter p = {p} must be odd and at least 3")));
    }
    let mut k = k.rem_euclid(p);
    if k > (p - 1) / 2 {
        k -= p;
    }
    let parity = if ((p + 1) / 2 + k).is_even() { rq(1, 4) } else { rq(-1, 4) };
    Ok(rq(1, 4) - rq(k * k, 2 * p) + parity)
}

/// Closed form of `D_q(K_{qs,2})` up to sign, for `qs ≡ 1 mod 4`.
pub fn d_twist_obstruction_closed(q: i64, s: i64) -> Result<Q> {
    if q < 3 || !is_prime(q as u64) {
        return Err(Error::InvalidArgument(format!("q = {q} must be an odd prime")));
    }
    if s < 1 || (q * s).rem_euclid(4) != 1 {
        return Err(Error::InvalidArgument(format!("p = {q}·{s} must be congruent to 1 mod 4")));
    }
    let half = if ((q - 1) / 2).is_odd() { rq(1, 2) } else { int(0) };
    Ok(rq(q - 1, 4) * (int(1) - rq(s * (q + 1), 6)) + half)
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| n % k != 0)
}
