use std::fmt;

use serde::{Deserialize, Serialize};

use super::{GridDiagram, GridPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorKind {
    /// `(x_i, y_j)`
    Unprimed,
    /// `(x_i', y_j')`
    Primed,
}

/// A pair of intersection points, one on each alpha curve, using each beta
/// curve exactly once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub i: u32,
    pub j: u32,
}

impl Generator {
    /// Position in [`generators`].
    pub fn index(&self, p: i64) -> usize {
        let k = match self.kind {
            GeneratorKind::Unprimed => 0,
            GeneratorKind::Primed => 1,
        };
        (k * p * p + self.i as i64 * p + self.j as i64) as usize
    }

    pub fn from_index(idx: usize, p: i64) -> Generator {
        let p = p as usize;
        let kind = if idx < p * p { GeneratorKind::Unprimed } else { GeneratorKind::Primed };
        let r = idx % (p * p);
        Generator { kind, i: (r / p) as u32, j: (r % p) as u32 }
    }

    /// Component on `α` (row `t = 0`).
    pub fn alpha_point(&self, d: &GridDiagram) -> GridPoint {
        let i = self.i as i64;
        match self.kind {
            GeneratorKind::Unprimed => d.reduce(-2 * i, 0),
            GeneratorKind::Primed => d.reduce(-2 * i - 1, 0),
        }
    }

    /// Component on `Jα` (row `t = 1`).
    pub fn jalpha_point(&self, d: &GridDiagram) -> GridPoint {
        let j = self.j as i64;
        match self.kind {
            GeneratorKind::Unprimed => d.reduce(2 * d.q() - 2 * j - 1, 1),
            GeneratorKind::Primed => d.reduce(2 * d.q() - 2 * j, 1),
        }
    }

    pub fn points(&self, d: &GridDiagram) -> [GridPoint; 2] {
        [self.alpha_point(d), self.jalpha_point(d)]
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GeneratorKind::Unprimed => write!(f, "(x{}, y{})", self.i, self.j),
            GeneratorKind::Primed => write!(f, "(x{}', y{}')", self.i, self.j),
        }
    }
}

/// All `2p²` generators, unprimed first, each block ordered by `(i, j)`.
pub fn generators(d: &GridDiagram) -> Vec<Generator> {
    let p = d.p() as u32;
    [GeneratorKind::Unprimed, GeneratorKind::Primed]
        .into_iter()
        .flat_map(|kind| (0..p).flat_map(move |i| (0..p).map(move |j| Generator { kind, i, j })))
        .collect()
}

/// Spin^c label in `Z_p`, normalised so that label 0 is the spin structure
/// and conjugation acts as `s ↦ −s`.
pub fn spinc_label(g: &Generator, p: i64) -> u32 {
    ((g.i as i64 + g.j as i64) % p) as u32
}

/// Generator with the given canonical columns on `α` and `Jα`, if any.
pub(crate) fn lookup_table(d: &GridDiagram) -> Vec<Option<usize>> {
    let n = d.width() as usize;
    let mut table = vec![None; n * n];
    for (idx, g) in generators(d).iter().enumerate() {
        let [a, b] = g.points(d);
        table[a.s as usize * n + b.s as usize] = Some(idx);
    }
    table
}
