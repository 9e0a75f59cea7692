//! Obstructions to finite concordance order from functions on `H²(Σ(K))`.
//!
//! For a function `f` on a finite abelian group `A` and a subgroup `H`,
//! `S_H(f)` is the sum of `f` over `H`. The test values `T_{p^k}` and
//! `D_{p^k}` take the minimum of `|Σ n_H S_H|` over nonnegative integer
//! combinations, not all zero, of the cyclic subgroups of order `p^k`. A knot
//! of finite order has all admissible test values zero and passes the min/max
//! test at every prime dividing `|A|` exactly once.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::TwoBridgeKnot;
use crate::lens_d::{d_twist_closed, is_prime};
use crate::rational::Q;

/// `Z_{n_1} ⊕ … ⊕ Z_{n_r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::InvalidArgument("cyclic factors must be finite".into()));
        }
        Ok(AbelianGroup { factors })
    }

    pub fn cyclic(n: u64) -> Self {
        AbelianGroup { factors: vec![n.max(1)] }
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Mixed-radix coordinates of a flat index.
    pub fn element(&self, mut idx: u64) -> Vec<u64> {
        let mut e = vec![0; self.factors.len()];
        for (c, &n) in e.iter_mut().zip(&self.factors).rev() {
            *c = idx % n;
            idx /= n;
        }
        e
    }

    pub fn index(&self, e: &[u64]) -> u64 {
        e.iter().zip(&self.factors).fold(0, |acc, (&c, &n)| acc * n + c % n)
    }

    fn element_order(&self, e: &[u64]) -> u64 {
        e.iter().zip(&self.factors).fold(1, |acc, (&c, &n)| acc.lcm(&(n / n.gcd(&c))))
    }

    fn multiple(&self, e: &[u64], m: u64) -> Vec<u64> {
        e.iter().zip(&self.factors).map(|(&c, &n)| (c * m) % n).collect()
    }
}

/// A rational function on a finite abelian group, indexed by flat index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpincFunction {
    group: AbelianGroup,
    values: Vec<Q>,
}

impl SpincFunction {
    pub fn new(group: AbelianGroup, values: Vec<Q>) -> Result<Self> {
        if values.len() as u64 != group.order() {
            return Err(Error::InvalidArgument(format!(
                "{} values for a group of order {}",
                values.len(),
                group.order()
            )));
        }
        Ok(SpincFunction { group, values })
    }

    /// A function on `Z_N` given by its values at `0, …, N − 1`.
    pub fn cyclic(values: Vec<Q>) -> Self {
        SpincFunction { group: AbelianGroup::cyclic(values.len() as u64), values }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn at(&self, idx: u64) -> Q {
        self.values[idx as usize]
    }

    pub fn negated(&self) -> Self {
        SpincFunction { group: self.group.clone(), values: self.values.iter().map(|v| -v).collect() }
    }
}

/// The unique subgroup of order `m` of `Z_N`.
pub fn subgroup_elements_cyclic(n: u64, m: u64) -> Result<Vec<u64>> {
    if m == 0 || n % m != 0 {
        return Err(Error::InvalidArgument(format!("{m} does not divide {n}")));
    }
    Ok((0..m).map(|k| k * (n / m)).collect())
}

/// All cyclic subgroups of order `p^k`, each as a sorted list of flat indices.
pub fn order_pk_subgroups(group: &AbelianGroup, p: u64, k: u32) -> Vec<Vec<u64>> {
    let target = p.pow(k);
    if group.order() % target != 0 {
        return Vec::new();
    }
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    for idx in 0..group.order() {
        let e = group.element(idx);
        if group.element_order(&e) != target {
            continue;
        }
        let mut h: Vec<u64> = (0..target).map(|m| group.index(&group.multiple(&e, m))).collect();
        h.sort_unstable();
        seen.insert(h);
    }
    seen.into_iter().collect()
}

pub fn s_h(f: &SpincFunction, h: &[u64]) -> Q {
    h.iter().map(|&i| f.at(i)).sum()
}

/// `T_{p^k}` or `D_{p^k}` for the function `f`.
pub fn obstruction_value(f: &SpincFunction, p: u64, k: u32) -> Q {
    if p == 1 {
        return f.at(0).abs();
    }
    let sums: Vec<Q> = order_pk_subgroups(f.group(), p, k).iter().map(|h| s_h(f, h)).collect();
    if sums.is_empty() || sums.iter().any(Zero::is_zero) {
        return Q::zero();
    }
    let positive = sums.iter().filter(|s| s.is_positive()).count();
    if positive != 0 && positive != sums.len() {
        return Q::zero();
    }
    sums.iter().map(Signed::abs).min().expect("nonempty")
}

/// Largest `k` with `T_{p^k}`, `D_{p^k}` valid obstructions when the
/// `p`-part of `Z_N` is cyclic.
pub fn admissible_k(p: u64, n: u64) -> u32 {
    (p_valuation(p, n) + 1) / 2
}

pub(crate) fn p_valuation(p: u64, mut n: u64) -> u32 {
    if p < 2 || n == 0 {
        return 0;
    }
    let mut m = 0;
    while n % p == 0 {
        n /= p;
        m += 1;
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinMaxOutcome {
    Consistent,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinMax {
    pub outcome: MinMaxOutcome,
    pub max: Q,
    pub min: Q,
}

/// The min/max test on the subgroup of order `p`, which must be the whole
/// `p`-part of the group.
///
/// The test is run on `f` and on `−f`; it fails if either does.
pub fn minmax_test(f: &SpincFunction, p: u64) -> Result<MinMax> {
    if !is_prime(p) || p_valuation(p, f.group().order()) != 1 {
        return Err(Error::InvalidArgument(format!(
            "the {p}-part of a group of order {} is not Z_{p}",
            f.group().order()
        )));
    }
    let h = order_pk_subgroups(f.group(), p, 1);
    let gen = f.group().element(h[0][1]);
    let vals: Vec<Q> = (0..p).map(|t| f.at(f.group().index(&f.group().multiple(&gen, t)))).collect();
    let neg: Vec<Q> = vals.iter().map(|v| -v).collect();
    let max = *vals.iter().max().expect("p > 1");
    let min = *vals.iter().min().expect("p > 1");
    let outcome = if minmax_fails(&vals, p) || minmax_fails(&neg, p) {
        MinMaxOutcome::Fails
    } else {
        MinMaxOutcome::Consistent
    };
    Ok(MinMax { outcome, max, min })
}

fn minmax_fails(v: &[Q], p: u64) -> bool {
    let max = *v.iter().max().expect("nonempty");
    let min = *v.iter().min().expect("nonempty");
    if min != -max {
        return true;
    }
    if !max.is_positive() {
        return false;
    }
    let deltas = |level: Q| -> BTreeSet<u64> {
        (1..p)
            .filter(|&d| (0..p).any(|a| v[a as usize] == level && v[((a + d) % p) as usize] == level))
            .collect()
    };
    let (up, down) = (deltas(max), deltas(-max));
    if up.is_empty() {
        return false;
    }
    let mut common: Option<BTreeSet<u64>> = None;
    for d in up {
        let inv = mod_inverse(d, p);
        let scaled: BTreeSet<u64> = down.iter().map(|e| e * inv % p).collect();
        common = Some(match common {
            None => scaled,
            Some(c) => c.intersection(&scaled).copied().collect(),
        });
    }
    common.is_some_and(|c| c.is_empty())
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let e = i64::extended_gcd(&(a as i64), &(p as i64));
    e.x.rem_euclid(p as i64) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Invariant {
    #[serde(rename = "tau")]
    Tau,
    #[serde(rename = "d")]
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TestKind {
    /// `T_{p^k}` or `D_{p^k}`.
    SubgroupSum,
    MinMax,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestOutcome {
    pub kind: TestKind,
    pub invariant: Invariant,
    pub p: u64,
    pub k: u32,
    /// The test value; for the min/max test, `max + min`.
    pub value: Q,
    pub fired: bool,
}

impl fmt::Display for TestOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.invariant {
            Invariant::Tau => "T",
            Invariant::D => "D",
        };
        match self.kind {
            TestKind::SubgroupSum => write!(f, "{letter}_{}", self.p.pow(self.k)),
            TestKind::MinMax => write!(f, "minmax({letter})_{}", self.p),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "infinite-order")]
    InfiniteOrder,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::InfiniteOrder => "infinite-order",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub knot: TwoBridgeKnot,
    pub tau_table: Vec<Q>,
    pub d_table: Vec<Q>,
    pub tests: Vec<TestOutcome>,
    pub verdict: Verdict,
}

impl ObstructionReport {
    pub fn fired(&self) -> impl Iterator<Item = &TestOutcome> {
        self.tests.iter().filter(|t| t.fired)
    }

    pub fn find(&self, kind: TestKind, invariant: Invariant, p: u64, k: u32) -> Option<&TestOutcome> {
        self.tests.iter().find(|t| t.kind == kind && t.invariant == invariant && t.p == p && t.k == k)
    }

    /// Value of `T_{p^k}` (or `D_{p^k}`), if it was computed.
    pub fn value(&self, invariant: Invariant, p: u64, k: u32) -> Option<Q> {
        self.find(TestKind::SubgroupSum, invariant, p, k).map(|t| t.value)
    }
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Runs every applicable test on the label-indexed tables (spin at 0).
pub fn verdict(knot: &TwoBridgeKnot, tau_table: &[Q], d_table: &[Q]) -> Result<ObstructionReport> {
    let n = knot.determinant() as u64;
    if tau_table.len() as u64 != n || d_table.len() as u64 != n {
        return Err(Error::InvalidArgument(format!("tables must have {n} entries")));
    }
    let fns = [
        (Invariant::Tau, SpincFunction::cyclic(tau_table.to_vec())),
        (Invariant::D, SpincFunction::cyclic(d_table.to_vec())),
    ];
    let mut tests = Vec::new();
    let sum_test = |inv, f: &SpincFunction, p, k| {
        let value = obstruction_value(f, p, k);
        TestOutcome { kind: TestKind::SubgroupSum, invariant: inv, p, k, value, fired: !value.is_zero() }
    };
    for (inv, f) in &fns {
        tests.push(sum_test(*inv, f, 1, 1));
    }
    for p in prime_factors(n) {
        for (inv, f) in &fns {
            for k in 1..=admissible_k(p, n) {
                tests.push(sum_test(*inv, f, p, k));
            }
        }
        if p_valuation(p, n) == 1 {
            for (inv, f) in &fns {
                let mm = minmax_test(f, p)?;
                tests.push(TestOutcome {
                    kind: TestKind::MinMax,
                    invariant: *inv,
                    p,
                    k: 1,
                    value: mm.max + mm.min,
                    fired: mm.outcome == MinMaxOutcome::Fails,
                });
            }
        }
    }
    let verdict = if tests.iter().any(|t| t.fired) { Verdict::InfiniteOrder } else { Verdict::Inconclusive };
    Ok(ObstructionReport {
        knot: knot.clone(),
        tau_table: tau_table.to_vec(),
        d_table: d_table.to_vec(),
        tests,
        verdict,
    })
}

/// `D_q(K_{p,2})` from the closed-form correction terms.
pub fn twist_d_value(p: u64, q: u64) -> Result<Q> {
    let values = (0..p as i64).map(|k| d_twist_closed(p as i64, k)).collect::<Result<Vec<_>>>()?;
    Ok(obstruction_value(&SpincFunction::cyclic(values), q, 1))
}

/// Whether the twist knots `K_{p_i,2}` are linearly independent by the
/// separating-prime argument: each `p_i` needs a prime dividing it and no
/// other `p_j` at which the closed-form `D` value is nonzero.
pub fn twist_family_independent(ps: &[u64]) -> Result<bool> {
    for &p in ps {
        if p < 3 || p % 2 == 0 {
            return Err(Error::InvalidArgument(format!("twist parameter {p} must be odd and at least 3")));
        }
    }
    // K_{5,2} and K_{9,2} have finite order; no prime can witness them.
    if ps.iter().any(|&p| p == 5 || p == 9) {
        return Ok(false);
    }
    for (i, &p) in ps.iter().enumerate() {
        let mut witnessed = false;
        for q in prime_factors(p) {
            let separates = ps.iter().enumerate().all(|(j, &pj)| j == i || pj % q != 0);
            if separates && !twist_d_value(p, q)?.is_zero() {
                witnessed = true;
                break;
            }
        }
        if !witnessed {
            return Ok(false);
        }
    }
    Ok(true)
}
