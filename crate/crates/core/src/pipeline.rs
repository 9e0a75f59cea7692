use log::debug;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gradings::{alexander_gradings, cover_maslov_all, pinning_constant, GradingTable};
use crate::grid::differential::{differential_from_domains, differential_from_oracle, rectangle_differential};
use crate::grid::generator::{generators, spinc_label};
use crate::grid::{Differential, GridDiagram, Role};
use crate::homology::{BiGrading, CancellationOrder, FilteredComplex, SurvivorTable};
use crate::knot::TwoBridgeKnot;
use crate::lens_d::d_branched_cover_multiset;
use crate::rational::{q as rq, Q};

/// How the differential is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Rectangle enumeration in the cover.
    #[default]
    Rectangles,
    /// [`crate::grid::connecting_domains`] over all pairs in a label.
    Domains,
    /// Exhaustive integer solver; only for `2pq ≤ 200`.
    Oracle,
}

/// Largest `2pq` accepted by [`Engine::Oracle`].
pub const ORACLE_LIMIT: u64 = 200;

#[derive(Debug, Clone)]
pub struct HfkClass {
    pub label: u32,
    pub grading: BiGrading,
}

/// Everything computed for one knot.
#[derive(Debug, Clone)]
pub struct KnotFloer {
    pub knot: TwoBridgeKnot,
    pub diagram: GridDiagram,
    pub gradings: GradingTable,
    pub labels: Vec<u32>,
    pub differentials: [Differential; 2],
    /// Filtered complex of each label, ignoring the `w` basepoints.
    pub complexes: Vec<FilteredComplex>,
    pub survivors: SurvivorTable,
}

impl KnotFloer {
    pub fn differential(&self, role: Role) -> &Differential {
        &self.differentials[role as usize]
    }

    /// Knot Floer homology of the lift, one entry per generator of
    /// `HFK ⊗ V` after dividing out `V`, sorted by label then grading.
    pub fn hfk(&self) -> Result<Vec<HfkClass>> {
        let mut out = Vec::new();
        for c in &self.complexes {
            for grading in c.hfk()? {
                out.push(HfkClass { label: c.label, grading });
            }
        }
        Ok(out)
    }

    /// Bigradings of the associated graded homology, `V` included.
    pub fn associated_graded(&self, order: CancellationOrder) -> Vec<(u32, BiGrading)> {
        self.complexes
            .iter()
            .flat_map(|c| {
                let r = c.reduce_through(Some(0), order);
                r.gradings.into_iter().map(move |g| (c.label, g))
            })
            .collect()
    }
}

pub fn compute(knot: &TwoBridgeKnot, engine: Engine) -> Result<KnotFloer> {
    let d = GridDiagram::new(knot);
    let p = d.p();
    if engine == Engine::Oracle && 2 * p as u64 * d.q() as u64 > ORACLE_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "the exhaustive engine is limited to 2pq <= {ORACLE_LIMIT}, got {}",
            2 * p * d.q()
        )));
    }
    let gens = generators(&d);
    let labels: Vec<u32> = gens.iter().map(|g| spinc_label(g, p)).collect();
    let recursion = d_branched_cover_multiset(knot);

    let mut maslov = Vec::new();
    let mut diffs = Vec::new();
    for role in [Role::W, Role::Z] {
        let cover = cover_maslov_all(&d, role);
        let diff = match engine {
            Engine::Rectangles => rectangle_differential(&d, role, &cover),
            Engine::Domains => differential_from_domains(&d, role),
            Engine::Oracle => differential_from_oracle(&d, role)?,
        };
        diff.check_square_zero()?;
        let relative: Vec<Q> = cover.iter().map(|&m| rq(m, p)).collect();
        let flat = split(&labels, p, &relative, &vec![Q::zero(); relative.len()], &diff)?;
        let tops: Vec<Q> = flat
            .iter()
            .map(|c| {
                let r = c.reduce();
                if r.len() != 2 {
                    return Err(Error::inconsistency(
                        "two-survivors",
                        format!("label {} of the {role:?} complex keeps {} generators", c.label, r.len()),
                    ));
                }
                Ok(r.gradings.iter().map(|g| g.m).max().expect("two survivors"))
            })
            .collect::<Result<_>>()?;
        let c = pinning_constant(&tops, &recursion)?;
        debug!("{knot}: {role:?} gradings pinned by {c}, {} arrows", diff.arrows.len());
        maslov.push(relative.iter().map(|m| m + c).collect::<Vec<Q>>());
        diffs.push(diff);
    }
    let m_z = maslov.pop().expect("two roles");
    let m_w = maslov.pop().expect("two roles");
    let alexander = alexander_gradings(&m_w, &m_z);
    let diff_z = diffs.pop().expect("two roles");
    let diff_w = diffs.pop().expect("two roles");

    let complexes = split(&labels, p, &m_w, &alexander, &diff_w)?;
    let reduced: Vec<FilteredComplex> = complexes.iter().map(FilteredComplex::reduce).collect();
    let survivors = SurvivorTable::from_reduced(&reduced)?;
    Ok(KnotFloer {
        knot: knot.clone(),
        diagram: d,
        gradings: GradingTable { maslov_w: m_w, maslov_z: m_z, alexander },
        labels,
        differentials: [diff_w, diff_z],
        complexes,
        survivors,
    })
}

fn split(labels: &[u32], p: i64, m: &[Q], a: &[Q], diff: &Differential) -> Result<Vec<FilteredComplex>> {
    let mut ids: Vec<Vec<usize>> = vec![Vec::new(); p as usize];
    let mut local = vec![0usize; labels.len()];
    for (g, &l) in labels.iter().enumerate() {
        local[g] = ids[l as usize].len();
        ids[l as usize].push(g);
    }
    let mut arrows: Vec<Vec<(usize, usize)>> = vec![Vec::new(); p as usize];
    for &(x, y) in &diff.arrows {
        if labels[x] != labels[y] {
            return Err(Error::inconsistency("label-preserving", format!("arrow {x} -> {y} changes label")));
        }
        arrows[labels[x] as usize].push((local[x], local[y]));
    }
    ids.into_iter()
        .zip(arrows)
        .enumerate()
        .map(|(l, (ids, arrows))| {
            let gradings = ids.iter().map(|&g| BiGrading { a: a[g], m: m[g] }).collect();
            FilteredComplex::new(l as u32, ids, gradings, arrows)
        })
        .collect()
}

/// `τ` and `d` per label with the default engine.
pub fn tau_and_d(knot: &TwoBridgeKnot) -> Result<SurvivorTable> {
    Ok(compute(knot, Engine::default())?.survivors)
}

/// `HFK` of the lift with `V` divided out, pooled over labels.
pub fn hfk(knot: &TwoBridgeKnot) -> Result<Vec<HfkClass>> {
    compute(knot, Engine::default())?.hfk()
}
