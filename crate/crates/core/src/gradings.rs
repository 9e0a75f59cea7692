//! Maslov and Alexander gradings.
//!
//! The relative Maslov grading is read off the `p`-fold cyclic cover of the
//! torus in which `α`, `Jα` lift to `2p` horizontal circles and `β`, `Jβ` to
//! `2p` vertical ones, giving an ordinary grid of size `2p`. A generator lifts
//! to `2p` points forming a permutation and the basepoints of one role lift to
//! `2p` marked squares. With
//!
//! ```text
//! I(A, B) = #{(a, b) ∈ A × B : a strictly south-west of b}
//! M̃(x)   = I(X, X) + I(O, O) − I(X, O) − I(O, X) + 1
//! ```
//!
//! the relative grading on the torus is `(M̃(x) − M̃(y)) / p`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::generator::{generators, Generator};
use crate::grid::{GridDiagram, GridPoint, Role};
use crate::rational::{int, q as rq, sorted, Q};

/// Preimages in the cover fundamental domain `[s0, s0+2p) × [t0, t0+2p)`,
/// in grid coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverLift {
    pub points: Vec<(Q, Q)>,
    pub basepoints: Vec<(Q, Q)>,
}

fn lift_point(d: &GridDiagram, pt: (Q, Q), origin: (i64, i64)) -> Vec<(Q, Q)> {
    let n = d.width();
    let (s0, t0) = origin;
    let (s, t) = pt;
    let sheet = t.floor().to_integer();
    (t0..t0 + n)
        .filter(|r| (r - sheet).rem_euclid(2) == 0)
        .map(|r| {
            let shifted = s + int(d.q() * (r - sheet));
            let k = ((shifted - int(s0)) / n).floor();
            (shifted - k * n, t + int(r - sheet))
        })
        .collect()
}

pub fn lift_generator(d: &GridDiagram, g: &Generator, role: Role) -> CoverLift {
    lift_generator_at(d, g, role, (0, 0))
}

pub fn lift_generator_at(d: &GridDiagram, g: &Generator, role: Role, origin: (i64, i64)) -> CoverLift {
    let points = g
        .points(d)
        .into_iter()
        .flat_map(|p| lift_point(d, (int(p.s), int(p.t)), origin))
        .collect();
    let basepoints = d
        .basepoints(role)
        .iter()
        .flat_map(|b| lift_point(d, d.to_grid(b.xy.0, b.xy.1), origin))
        .collect();
    CoverLift { points, basepoints }
}

/// Number of pairs `(a, b)` with `a` strictly below and to the left of `b`.
pub fn grading_i<T: PartialOrd>(a: &[(T, T)], b: &[(T, T)]) -> u64 {
    a.iter()
        .map(|x| b.iter().filter(|y| x.0 < y.0 && x.1 < y.1).count() as u64)
        .sum()
}

/// `M̃` of a generator by direct counting in the cover.
pub fn cover_maslov(d: &GridDiagram, g: &Generator, role: Role) -> i64 {
    cover_maslov_at(d, g, role, (0, 0))
}

pub fn cover_maslov_at(d: &GridDiagram, g: &Generator, role: Role, origin: (i64, i64)) -> i64 {
    let l = lift_generator_at(d, g, role, origin);
    let (x, o) = (&l.points, &l.basepoints);
    grading_i(x, x) as i64 + grading_i(o, o) as i64 - grading_i(x, o) as i64 - grading_i(o, x) as i64 + 1
}

/// `M̃` of every generator, indexed like [`generators`].
///
/// Uses that the lifted generator is a permutation, so `I(X, X)` counts the
/// non-inversions, and that the mixed terms split over the two components.
pub fn cover_maslov_all(d: &GridDiagram, role: Role) -> Vec<i64> {
    let n = d.width();
    let nu = n as usize;
    // Doubled coordinates: lattice points even, marked squares odd.
    let marks: Vec<(i64, i64)> = d
        .basepoint_cells(role)
        .iter()
        .flat_map(|&c| {
            let g = d.cells()[c].grid;
            lifts(d, g).map(|(s, t)| (2 * s + 1, 2 * t + 1)).collect::<Vec<_>>()
        })
        .collect();
    let ioo = grading_i(&marks, &marks) as i64;
    let mixed: Vec<i64> = (0..2 * n)
        .map(|k| {
            let pts: Vec<(i64, i64)> =
                lifts(d, GridPoint { s: k % n, t: k / n }).map(|(s, t)| (2 * s, 2 * t)).collect();
            (grading_i(&pts, &marks) + grading_i(&marks, &pts)) as i64
        })
        .collect();

    generators(d)
        .par_iter()
        .map_init(
            || (vec![0usize; nu], vec![0u32; nu + 1]),
            |(perm, tree), g| {
                let [a, b] = g.points(d);
                for (s, t) in lifts(d, a).chain(lifts(d, b)) {
                    perm[t as usize] = s as usize;
                }
                tree.iter_mut().for_each(|v| *v = 0);
                let mut ixx = 0i64;
                for &col in perm.iter() {
                    let mut i = col;
                    while i > 0 {
                        ixx += tree[i] as i64;
                        i &= i - 1;
                    }
                    let mut i = col + 1;
                    while i <= nu {
                        tree[i] += 1;
                        i += i & i.wrapping_neg();
                    }
                }
                ixx + ioo - mixed[(a.t * n + a.s) as usize] - mixed[(b.t * n + b.s) as usize] + 1
            },
        )
        .collect()
}

/// Lattice lifts of a canonical grid point (or lower-left cell corner) into
/// `[0, 2p)²`.
fn lifts(d: &GridDiagram, g: GridPoint) -> impl Iterator<Item = (i64, i64)> + '_ {
    let n = d.width();
    (g.t..n).step_by(2).map(move |t| ((g.s + d.q() * (t - g.t)).rem_euclid(n), t))
}

/// `gr(g1) − gr(g2)` for the basepoints of `role`.
pub fn relative_maslov(d: &GridDiagram, g1: &Generator, g2: &Generator, role: Role) -> Q {
    rq(cover_maslov(d, g1, role) - cover_maslov(d, g2, role), d.p())
}

/// Relative gradings `M̃ / p`, defined up to one global constant.
pub fn relative_gradings(d: &GridDiagram, role: Role) -> Vec<Q> {
    let p = d.p();
    cover_maslov_all(d, role).into_iter().map(|m| rq(m, p)).collect()
}

/// Shifts `relative` so that the top gradings `tops` (one per label) match
/// the correction terms `recursion` as multisets.
pub fn pin_gradings(relative: &[Q], tops: &[Q], recursion: &[Q]) -> Result<Vec<Q>> {
    let c = pinning_constant(tops, recursion)?;
    Ok(relative.iter().map(|m| m + c).collect())
}

pub fn pinning_constant(tops: &[Q], recursion: &[Q]) -> Result<Q> {
    let t = sorted(tops.iter().copied());
    let r = sorted(recursion.iter().copied());
    if t.len() != r.len() || t.is_empty() {
        return Err(Error::inconsistency(
            "grading-pinning",
            format!("{} top gradings against {} correction terms", t.len(), r.len()),
        ));
    }
    let c = r[r.len() - 1] - t[t.len() - 1];
    if t.iter().zip(&r).any(|(a, b)| a + c != *b) {
        return Err(Error::inconsistency(
            "grading-pinning",
            "top gradings are not a translate of the correction terms",
        ));
    }
    Ok(c)
}

/// `A = (M_w − M_z)/2 − 1/2`.
pub fn alexander_gradings(m_w: &[Q], m_z: &[Q]) -> Vec<Q> {
    m_w.iter().zip(m_z).map(|(w, z)| (w - z) / 2 - rq(1, 2)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingTable {
    pub maslov_w: Vec<Q>,
    pub maslov_z: Vec<Q>,
    pub alexander: Vec<Q>,
}

impl GradingTable {
    pub fn new(maslov_w: Vec<Q>, maslov_z: Vec<Q>) -> Self {
        let alexander = alexander_gradings(&maslov_w, &maslov_z);
        GradingTable { maslov_w, maslov_z, alexander }
    }

    pub fn maslov(&self, role: Role) -> &[Q] {
        match role {
            Role::W => &self.maslov_w,
            Role::Z => &self.maslov_z,
        }
    }
}

pub(crate) fn is_integer(x: &Q) -> bool {
    (x - x.floor()).is_zero()
}
