//! The differential counting index one domains that avoid one pair of
//! basepoints.
//!
//! In the cover every such domain lifts to an embedded rectangle with the
//! source at its lower-left and upper-right corners. For a source generator
//! there are two choices of lower-left corner and `p` odd heights, and the
//! height fixes the rectangle. A candidate counts when it contains no lifted
//! basepoint and drops `M̃` by exactly `p`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::domain::{connecting_domains, OracleSolver};
use super::generator::{generators, lookup_table, spinc_label};
use super::{GridDiagram, Role};
use crate::error::{Error, Result};
use crate::gradings::cover_maslov_all;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Differential {
    pub role: Role,
    /// Number of generators.
    pub size: usize,
    /// Arrows `(source, target)` by generator index, sorted, each with odd count.
    pub arrows: Vec<(usize, usize)>,
}

impl Differential {
    fn from_counts(role: Role, size: usize, counts: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut tally: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for a in counts {
            *tally.entry(a).or_default() += 1;
        }
        let arrows = tally.into_iter().filter(|(_, c)| c % 2 == 1).map(|(a, _)| a).collect();
        Differential { role, size, arrows }
    }

    pub fn targets(&self, source: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.arrows.partition_point(|&(s, _)| s < source);
        self.arrows[start..].iter().take_while(move |&&(s, _)| s == source).map(|&(_, t)| t)
    }

    /// Checks `∂∘∂ = 0` over `F_2`.
    pub fn check_square_zero(&self) -> Result<()> {
        let mut two_step: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for &(a, b) in &self.arrows {
            for c in self.targets(b) {
                *two_step.entry((a, c)).or_default() += 1;
            }
        }
        match two_step.into_iter().find(|(_, c)| c % 2 == 1) {
            Some(((a, c), _)) => Err(Error::inconsistency(
                "differential-squares-to-zero",
                format!("odd number of two-step paths from generator {a} to {c}"),
            )),
            None => Ok(()),
        }
    }
}

/// Differential by the rectangle count, checked to square to zero.
pub fn differential(d: &GridDiagram, role: Role) -> Result<Differential> {
    let m = cover_maslov_all(d, role);
    let diff = rectangle_differential(d, role, &m);
    diff.check_square_zero()?;
    Ok(diff)
}

pub(crate) fn rectangle_differential(d: &GridDiagram, role: Role, maslov: &[i64]) -> Differential {
    let n = d.width();
    let nu = n as usize;
    let q = d.q();
    let table = lookup_table(d);

    // Prefix sums of lifted basepoints over the doubled cover [0, 4p)².
    let mut marks = vec![0u32; nu * nu];
    for &c in &d.basepoint_cells(role) {
        let g = d.cells()[c].grid;
        for t in (g.t..n).step_by(2) {
            marks[t as usize * nu + (g.s + q * (t - g.t)).rem_euclid(n) as usize] = 1;
        }
    }
    let w2 = 2 * nu + 1;
    let mut prefix = vec![0u32; w2 * w2];
    for t in 0..2 * nu {
        for s in 0..2 * nu {
            prefix[(t + 1) * w2 + s + 1] = marks[(t % nu) * nu + s % nu] + prefix[t * w2 + s + 1]
                + prefix[(t + 1) * w2 + s]
                - prefix[t * w2 + s];
        }
    }
    let count = |s0: usize, t0: usize, w: usize, h: usize| {
        let (s1, t1) = (s0 + w, t0 + h);
        prefix[t1 * w2 + s1] + prefix[t0 * w2 + s0] - prefix[t0 * w2 + s1] - prefix[t1 * w2 + s0]
    };

    let gens = generators(d);
    let arrows: Vec<(usize, usize)> = gens
        .par_iter()
        .enumerate()
        .flat_map_iter(|(x, g)| {
            let [a, b] = g.points(d);
            let mut out = Vec::new();
            // (lower-left corner, its row, the other component)
            for (bl, row, other) in [(a.s, 0i64, b), (b.s, 1i64, a)] {
                for h in (1..n).step_by(2) {
                    let top = row + h;
                    let c = (other.s + q * (top - other.t)).rem_euclid(n);
                    let w = (c - bl).rem_euclid(n);
                    if count(bl as usize, row as usize, w as usize, h as usize) != 0 {
                        continue;
                    }
                    let tl = d.reduce(bl, top);
                    let (ya, yb) = if row == 0 { (c, tl.s) } else { (tl.s, c) };
                    let y = table[ya as usize * nu + yb as usize].expect("rectangle corners form a generator");
                    if maslov[x] - maslov[y] == d.p() {
                        out.push((x, y));
                    }
                }
            }
            out
        })
        .collect();
    Differential::from_counts(role, gens.len(), arrows)
}

/// Differential from [`connecting_domains`] over every pair in a label.
pub fn differential_from_domains(d: &GridDiagram, role: Role) -> Differential {
    let gens = generators(d);
    let arrows: Vec<(usize, usize)> = pairs_by_label(d)
        .into_par_iter()
        .flat_map_iter(|(x, y)| {
            let k = connecting_domains(d, &gens[x], &gens[y], role).len();
            std::iter::repeat_n((x, y), k)
        })
        .collect();
    Differential::from_counts(role, gens.len(), arrows)
}

/// Differential from the exhaustive integer solver over every pair.
///
/// Pairs whose boundary equations are inconsistent are discarded by comparing
/// the solver's consistency residues, which is exact and covers all pairs.
pub fn differential_from_oracle(d: &GridDiagram, role: Role) -> Result<Differential> {
    let solver = OracleSolver::new(d)?;
    let gens = generators(d);
    let mut classes: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (i, g) in gens.iter().enumerate() {
        classes.entry(solver.residue(d, g)).or_default().push(i);
    }
    let mut arrows = Vec::new();
    for ids in classes.values() {
        // Solutions from each member to the first; a pair's solution is a difference.
        let reference = &gens[ids[0]];
        let parts: Vec<Vec<i64>> = ids
            .iter()
            .map(|&x| {
                solver.particular(d, &gens[x], reference).ok_or_else(|| {
                    Error::inconsistency("oracle-residues", format!("generator {x} has no domain to its class"))
                })
            })
            .collect::<Result<_>>()?;
        let projected: Vec<_> = parts.iter().map(|p| solver.project(role, p)).collect();
        let found: Vec<(usize, usize)> = (0..ids.len())
            .into_par_iter()
            .flat_map_iter(|a| {
                let (parts, projected, gens, solver) = (&parts, &projected, &gens, &solver);
                ids.iter().enumerate().flat_map(move |(b, &y)| {
                    let (x, gx, gy) = (ids[a], &gens[ids[a]], &gens[y]);
                    let k = solver.free_range(role, &projected[a], &projected[b]).map_or(0, |range| {
                        solver.domains_in(d, gx, gy, (&parts[a], &parts[b]), role, range).len()
                    });
                    std::iter::repeat_n((x, y), k)
                })
            })
            .collect();
        arrows.extend(found);
    }
    Ok(Differential::from_counts(role, gens.len(), arrows))
}

fn pairs_by_label(d: &GridDiagram) -> Vec<(usize, usize)> {
    let p = d.p();
    let gens = generators(d);
    let mut by_label = vec![Vec::new(); p as usize];
    for (i, g) in gens.iter().enumerate() {
        by_label[spinc_label(g, p) as usize].push(i);
    }
    by_label
        .iter()
        .flat_map(|ids| ids.iter().flat_map(move |&x| ids.iter().map(move |&y| (x, y))))
        .collect()
}
