//! The twisted toroidal grid diagram of the lift of `K_{p,q}`.
//!
//! The torus is `R²/Z²` with coordinates `(x, y)`. The alpha curves are the
//! horizontal circles `y = 0` and `y = 1/2`; the beta curves are the lines of
//! slope `p/q` through `(0, 0)` and `(1/2, 0)`.
//!
//! Most computations use *grid coordinates*
//!
//! ```text
//! s = 2q·y − 2p·x,    t = 2y
//! ```
//!
//! in which the alpha curves are the lines `t ∈ Z` and the beta curves the
//! lines `s ∈ Z`, so the torus becomes the standard square grid modulo the
//! lattice spanned by `(2p, 0)` and `(2q, 2)`. The torus is oriented so that
//! grid coordinates are positively oriented; with this orientation the diagram
//! presents the lift inside `−L(p,q)`. Every grid point reduces to a canonical
//! representative with `0 ≤ s < 2p` and `t ∈ {0, 1}`; row `t = 0` is `α`,
//! row `t = 1` is `Jα`, even columns are `β` and odd columns `Jβ`.

pub mod differential;
pub mod domain;
pub mod generator;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::knot::TwoBridgeKnot;
use crate::rational::{int, q as rq, Q};

pub use differential::{differential, Differential};
pub use domain::{
    connecting_domains, maslov_index, oracle_connecting_domains, periodic_domain, Domain,
    OracleSolver,
};
pub use generator::{generators, spinc_label, Generator, GeneratorKind};

/// Which pair of basepoints a computation ignores.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    W,
    Z,
}

impl Role {
    pub fn other(self) -> Role {
        match self {
            Role::W => Role::Z,
            Role::Z => Role::W,
        }
    }
}

/// A point of the torus in canonical grid coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub s: i64,
    pub t: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointLabel {
    X(u32),
    XPrime(u32),
    Y(u32),
    YPrime(u32),
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::X(k) => write!(f, "x{k}"),
            PointLabel::XPrime(k) => write!(f, "x{k}'"),
            PointLabel::Y(k) => write!(f, "y{k}"),
            PointLabel::YPrime(k) => write!(f, "y{k}'"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPoint {
    pub label: PointLabel,
    pub grid: GridPoint,
    /// Position in `[0,1)²`.
    pub xy: (Q, Q),
}

/// A component of `Σ − α − β`, a parallelogram in the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    /// Lower-left corner in grid coordinates.
    pub grid: GridPoint,
    /// Lowest, then leftmost, corner in the plane, reduced into `[0,1)²`.
    pub corner: (Q, Q),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basepoint {
    pub xy: (Q, Q),
    pub cell: usize,
}

#[derive(Debug, Clone)]
pub struct GridDiagram {
    knot: TwoBridgeKnot,
    p: i64,
    q: i64,
    epsilon: Q,
    x_points: Vec<IntersectionPoint>,
    y_points: Vec<IntersectionPoint>,
    cells: Vec<Cell>,
    /// `cell_at[t·2p + s]` for canonical `(s, t)`.
    cell_at: Vec<usize>,
    w: [Basepoint; 2],
    z: [Basepoint; 2],
}

pub fn build_diagram(knot: &TwoBridgeKnot) -> GridDiagram {
    GridDiagram::new(knot)
}

impl GridDiagram {
    pub fn new(knot: &TwoBridgeKnot) -> Self {
        let p = knot.p() as i64;
        let q = knot.q() as i64;
        let n = 2 * p;
        let mut diagram = GridDiagram {
            knot: knot.clone(),
            p,
            q,
            epsilon: rq(1, 2 * (p + q + 1)),
            x_points: Vec::with_capacity(n as usize),
            y_points: Vec::with_capacity(n as usize),
            cells: Vec::new(),
            cell_at: vec![0; 2 * n as usize],
            w: [Basepoint { xy: (int(0), int(0)), cell: 0 }, Basepoint { xy: (int(0), int(0)), cell: 0 }],
            z: [Basepoint { xy: (int(0), int(0)), cell: 0 }, Basepoint { xy: (int(0), int(0)), cell: 0 }],
        };

        for k in 0..p {
            for (label, s) in [(PointLabel::X(k as u32), -2 * k), (PointLabel::XPrime(k as u32), -2 * k - 1)] {
                let grid = diagram.reduce(s, 0);
                let xy = diagram.plane_of(grid);
                diagram.x_points.push(IntersectionPoint { label, grid, xy });
            }
        }
        for k in 0..p {
            for (label, s) in
                [(PointLabel::YPrime(k as u32), 2 * q - 2 * k), (PointLabel::Y(k as u32), 2 * q - 2 * k - 1)]
            {
                let grid = diagram.reduce(s, 1);
                let xy = diagram.plane_of(grid);
                diagram.y_points.push(IntersectionPoint { label, grid, xy });
            }
        }

        let mut cells: Vec<Cell> = (0..2)
            .flat_map(|t| (0..n).map(move |s| GridPoint { s, t }))
            .map(|grid| {
                let corner = [(0, 0), (1, 0), (0, 1), (1, 1)]
                    .into_iter()
                    .map(|(ds, dt)| diagram.to_plane(int(grid.s + ds), int(grid.t + dt)))
                    .min_by(|a, b| (a.1, a.0).cmp(&(b.1, b.0)))
                    .expect("four corners");
                Cell { grid, corner: reduce_unit(corner) }
            })
            .collect();
        cells.sort_by_key(|c| c.corner);
        for (idx, c) in cells.iter().enumerate() {
            diagram.cell_at[(c.grid.t * n + c.grid.s) as usize] = idx;
        }
        diagram.cells = cells;

        let e = diagram.epsilon;
        let half = rq(1, 2);
        let one = int(1);
        let place = |d: &GridDiagram, xy: (Q, Q)| {
            let (s, t) = d.to_grid(xy.0, xy.1);
            Basepoint { xy, cell: d.cell_id(s.floor().to_integer(), t.floor().to_integer()) }
        };
        let p1 = place(&diagram, (e, one - e));
        let p2 = place(&diagram, (half + e, one - e));
        let p3 = place(&diagram, (e, half - e));
        let p4 = place(&diagram, (half + e, half - e));
        let class = |d: &GridDiagram, b: &Basepoint| {
            let g = d.cells[b.cell].grid;
            (g.t, g.s.rem_euclid(2))
        };
        let c1 = class(&diagram, &p1);
        let c3 = class(&diagram, &p3);
        let (w2, z2) = if c3.0 != c1.0 && c3.1 != c1.1 { (p3, p4) } else { (p4, p3) };
        diagram.w = [p1, w2];
        diagram.z = [p2, z2];
        diagram
    }

    pub fn from_pq(p: i64, q: i64) -> Result<Self> {
        Ok(GridDiagram::new(&TwoBridgeKnot::new(p, q)?))
    }

    pub fn knot(&self) -> &TwoBridgeKnot {
        &self.knot
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Grid number of the cover, `2p`.
    pub fn width(&self) -> i64 {
        2 * self.p
    }

    pub fn epsilon(&self) -> Q {
        self.epsilon
    }

    /// `x_0, x_0', x_1, x_1', …` along `α`.
    pub fn x_points(&self) -> &[IntersectionPoint] {
        &self.x_points
    }

    /// `y_0', y_0, y_1', y_1, …` along `Jα`.
    pub fn y_points(&self) -> &[IntersectionPoint] {
        &self.y_points
    }

    pub fn intersection_points(&self) -> impl Iterator<Item = &IntersectionPoint> {
        self.x_points.iter().chain(&self.y_points)
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn basepoints(&self, role: Role) -> &[Basepoint; 2] {
        match role {
            Role::W => &self.w,
            Role::Z => &self.z,
        }
    }

    pub fn basepoint_cells(&self, role: Role) -> [usize; 2] {
        let b = self.basepoints(role);
        [b[0].cell, b[1].cell]
    }

    /// Canonical representative of a grid point.
    pub fn reduce(&self, s: i64, t: i64) -> GridPoint {
        let m = t.div_euclid(2);
        GridPoint { s: (s - 2 * self.q * m).rem_euclid(2 * self.p), t: t - 2 * m }
    }

    /// Index of the cell whose lower-left grid corner is `(s, t)`.
    pub fn cell_id(&self, s: i64, t: i64) -> usize {
        let g = self.reduce(s, t);
        self.cell_at[(g.t * 2 * self.p + g.s) as usize]
    }

    /// Cells around a grid vertex, in the order NE, NW, SE, SW.
    pub fn vertex_cells(&self, s: i64, t: i64) -> [usize; 4] {
        [self.cell_id(s, t), self.cell_id(s - 1, t), self.cell_id(s, t - 1), self.cell_id(s - 1, t - 1)]
    }

    pub fn to_plane(&self, s: Q, t: Q) -> (Q, Q) {
        let y = t / 2;
        let x = (int(self.q) * t - s) / (2 * self.p);
        (x, y)
    }

    pub fn to_grid(&self, x: Q, y: Q) -> (Q, Q) {
        (int(2 * self.q) * y - int(2 * self.p) * x, y * 2)
    }

    fn plane_of(&self, g: GridPoint) -> (Q, Q) {
        reduce_unit(self.to_plane(int(g.s), int(g.t)))
    }

    /// Number of intersection points of each alpha curve with each beta curve.
    pub fn points_per_curve_pair(&self) -> usize {
        self.p as usize
    }
}

fn reduce_unit((x, y): (Q, Q)) -> (Q, Q) {
    (x - x.floor(), y - y.floor())
}
