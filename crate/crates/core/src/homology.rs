//! Filtered cancellation.
//!
//! Arrows are cancelled in increasing order of Alexander drop. Cancelling
//! `a → b` removes both and adds `c → d` (mod 2) for every `c → b` and
//! `a → d`. Drops never decrease, so the complex left after all drop-zero
//! arrows are gone computes the associated graded homology and the final
//! survivors carry the filtered homology.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gradings::is_integer;
use crate::rational::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiGrading {
    pub a: Q,
    pub m: Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CancellationOrder {
    /// Within one drop, smallest `(source, target)` first.
    #[default]
    Lexicographic,
    /// Within one drop, largest `(source, target)` first.
    Reversed,
}

/// The part of the complex in one spin^c label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredComplex {
    pub label: u32,
    /// Global generator index of each local generator.
    pub ids: Vec<usize>,
    pub gradings: Vec<BiGrading>,
    /// `(source, target)` in local indices, sorted.
    pub arrows: Vec<(usize, usize)>,
}

impl FilteredComplex {
    /// Checks that arrows drop `M` by one and do not raise `A`.
    pub fn new(label: u32, ids: Vec<usize>, gradings: Vec<BiGrading>, mut arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(x, y) in &arrows {
            let (gx, gy) = (gradings[x], gradings[y]);
            if gx.m - gy.m != Q::from_integer(1) {
                return Err(Error::inconsistency(
                    "maslov-drop",
                    format!("arrow {} -> {} changes M by {}", ids[x], ids[y], gx.m - gy.m),
                ));
            }
            let drop = gx.a - gy.a;
            if drop < Q::zero() || !is_integer(&drop) {
                return Err(Error::inconsistency(
                    "alexander-filtration",
                    format!("arrow {} -> {} changes A by {}", ids[x], ids[y], -drop),
                ));
            }
        }
        arrows.sort_unstable();
        Ok(FilteredComplex { label, ids, gradings, arrows })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    fn drop_of(&self, x: usize, y: usize) -> i64 {
        (self.gradings[x].a - self.gradings[y].a).to_integer()
    }

    /// Cancels every arrow; the result has no differential.
    pub fn reduce(&self) -> FilteredComplex {
        self.reduce_through(None, CancellationOrder::Lexicographic)
    }

    /// Cancels arrows of drop at most `max_drop` (all arrows if `None`).
    pub fn reduce_through(&self, max_drop: Option<i64>, order: CancellationOrder) -> FilteredComplex {
        let n = self.len();
        let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        let mut pred: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        let key = |drop: i64, x: usize, y: usize| match order {
            CancellationOrder::Lexicographic => (drop, x as i64, y as i64),
            CancellationOrder::Reversed => (drop, -(x as i64), -(y as i64)),
        };
        let eligible = |drop: i64| max_drop.is_none_or(|m| drop <= m);
        let mut queue: BTreeSet<(i64, i64, i64)> = BTreeSet::new();
        for &(x, y) in &self.arrows {
            succ[x].insert(y);
            pred[y].insert(x);
            let dr = self.drop_of(x, y);
            if eligible(dr) {
                queue.insert(key(dr, x, y));
            }
        }
        let unkey = |k: (i64, i64, i64)| (k.1.unsigned_abs() as usize, k.2.unsigned_abs() as usize);
        let mut alive = vec![true; n];

        while let Some(&k) = queue.iter().next() {
            let (a, b) = unkey(k);
            let sources: Vec<usize> = pred[b].iter().copied().filter(|&c| c != a).collect();
            let targets: Vec<usize> = succ[a].iter().copied().filter(|&d| d != b).collect();
            for &c in &sources {
                for &d in &targets {
                    let dr = self.drop_of(c, d);
                    if succ[c].remove(&d) {
                        pred[d].remove(&c);
                        queue.remove(&key(dr, c, d));
                    } else {
                        succ[c].insert(d);
                        pred[d].insert(c);
                        if eligible(dr) {
                            queue.insert(key(dr, c, d));
                        }
                    }
                }
            }
            for v in [a, b] {
                for d in std::mem::take(&mut succ[v]) {
                    pred[d].remove(&v);
                    queue.remove(&key(self.drop_of(v, d), v, d));
                }
                for c in std::mem::take(&mut pred[v]) {
                    succ[c].remove(&v);
                    queue.remove(&key(self.drop_of(c, v), c, v));
                }
                alive[v] = false;
            }
        }

        let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let mut local = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let arrows = keep
            .iter()
            .flat_map(|&x| succ[x].iter().map(move |&y| (x, y)))
            .map(|(x, y)| (local[x], local[y]))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        FilteredComplex {
            label: self.label,
            ids: keep.iter().map(|&v| self.ids[v]).collect(),
            gradings: keep.iter().map(|&v| self.gradings[v]).collect(),
            arrows,
        }
    }

    /// Bigradings of the associated graded homology with one copy of
    /// `V = F_(0,0) ⊕ F_(−1,−1)` divided out.
    pub fn hfk(&self) -> Result<Vec<BiGrading>> {
        let graded = self.reduce_through(Some(0), CancellationOrder::Lexicographic);
        peel_v(graded.gradings)
    }
}

/// Splits a multiset `B ⊗ V` into `B`, taking the lexicographically largest
/// remaining class as a top copy each time.
pub fn peel_v(mut classes: Vec<BiGrading>) -> Result<Vec<BiGrading>> {
    classes.sort_by_key(|&c| Reverse(c));
    let mut out = Vec::new();
    while let Some(top) = classes.first().copied() {
        classes.remove(0);
        let one = Q::from_integer(1);
        let partner = BiGrading { a: top.a - one, m: top.m - one };
        match classes.iter().position(|&c| c == partner) {
            Some(i) => {
                classes.remove(i);
            }
            None => {
                return Err(Error::inconsistency(
                    "hfk-tensor-v",
                    format!("class at (A, M) = ({}, {}) has no partner one level down", top.a, top.m),
                ))
            }
        }
        out.push(top);
    }
    out.sort();
    Ok(out)
}

/// The two classes surviving in one label, `top = bottom + (1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelSurvivors {
    pub label: u32,
    pub top: BiGrading,
    pub bottom: BiGrading,
}

impl LabelSurvivors {
    pub fn tau(&self) -> Q {
        self.top.a
    }

    pub fn d(&self) -> Q {
        self.top.m
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurvivorTable {
    /// Indexed by label.
    pub labels: Vec<LabelSurvivors>,
}

impl SurvivorTable {
    pub fn from_reduced(complexes: &[FilteredComplex]) -> Result<Self> {
        let mut labels = Vec::with_capacity(complexes.len());
        for c in complexes {
            if c.len() != 2 || !c.arrows.is_empty() {
                return Err(Error::inconsistency(
                    "two-survivors",
                    format!("label {} keeps {} generators", c.label, c.len()),
                ));
            }
            let (mut top, mut bottom) = (c.gradings[0], c.gradings[1]);
            if bottom > top {
                std::mem::swap(&mut top, &mut bottom);
            }
            let one = Q::from_integer(1);
            if top.a - bottom.a != one || top.m - bottom.m != one {
                return Err(Error::inconsistency(
                    "two-survivors",
                    format!("label {} survivors differ by ({}, {})", c.label, top.a - bottom.a, top.m - bottom.m),
                ));
            }
            labels.push(LabelSurvivors { label: c.label, top, bottom });
        }
        labels.sort_by_key(|l| l.label);
        Ok(SurvivorTable { labels })
    }

    pub fn tau(&self) -> Vec<Q> {
        self.labels.iter().map(LabelSurvivors::tau).collect()
    }

    pub fn d(&self) -> Vec<Q> {
        self.labels.iter().map(LabelSurvivors::d).collect()
    }
}
