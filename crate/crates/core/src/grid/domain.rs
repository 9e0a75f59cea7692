//! Two-chains connecting pairs of generators.
//!
//! A domain is an integer combination of cells. It connects `x` to `y` when
//! at every intersection point `v`
//!
//! ```text
//! D(NE) + D(SW) − D(NW) − D(SE) = [v ∈ x] − [v ∈ y]
//! ```
//!
//! where the four cells are the quadrants around `v` in grid coordinates.
//! The periodic domains (zero boundary) are spanned by the whole torus, the
//! annulus between `α` and `Jα` and the annulus between `β` and `Jβ`.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

use super::generator::{spinc_label, Generator};
use super::{GridDiagram, Role};
use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domain {
    pub from: Generator,
    pub to: Generator,
    /// Multiplicity of each cell, indexed like [`GridDiagram::cells`].
    pub multiplicities: Vec<i64>,
}

impl Domain {
    pub fn is_positive(&self) -> bool {
        self.multiplicities.iter().all(|&m| m >= 0)
    }

    pub fn multiplicity_at(&self, cell: usize) -> i64 {
        self.multiplicities[cell]
    }

    pub fn basepoint_count(&self, d: &GridDiagram, role: Role) -> i64 {
        d.basepoint_cells(role).iter().map(|&c| self.multiplicities[c]).sum()
    }
}

/// Right-hand side of the boundary equations, indexed by `t·2p + s`.
fn corner_sources(d: &GridDiagram, from: &Generator, to: &Generator) -> Vec<i64> {
    let n = d.width();
    let mut f = vec![0i64; 2 * n as usize];
    for pt in from.points(d) {
        f[(pt.t * n + pt.s) as usize] += 1;
    }
    for pt in to.points(d) {
        f[(pt.t * n + pt.s) as usize] -= 1;
    }
    f
}

/// Whether `mult` has boundary `to − from` in the sense above.
pub fn has_boundary(d: &GridDiagram, mult: &[i64], from: &Generator, to: &Generator) -> bool {
    let n = d.width();
    let f = corner_sources(d, from, to);
    (0..2).all(|t| {
        (0..n).all(|s| {
            let [ne, nw, se, sw] = d.vertex_cells(s, t);
            mult[ne] + mult[sw] - mult[nw] - mult[se] == f[(t * n + s) as usize]
        })
    })
}

/// Maslov index by the point-measure formula: the sum over the corners of
/// both generators of the average multiplicity of the four adjacent cells.
pub fn maslov_index(d: &GridDiagram, domain: &Domain) -> Q {
    index_of(d, &domain.multiplicities, &domain.from, &domain.to)
}

fn index_of(d: &GridDiagram, mult: &[i64], from: &Generator, to: &Generator) -> Q {
    let total: i64 = from
        .points(d)
        .into_iter()
        .chain(to.points(d))
        .map(|pt| d.vertex_cells(pt.s, pt.t).iter().map(|&c| mult[c]).sum::<i64>())
        .sum();
    Q::new(total, 4)
}

/// The periodic domain avoiding both basepoints of `role`: the alpha annulus
/// containing the first basepoint minus the beta annulus containing it.
pub fn periodic_domain(d: &GridDiagram, role: Role) -> Vec<i64> {
    let b = d.cells()[d.basepoint_cells(role)[0]].grid;
    d.cells()
        .iter()
        .map(|c| (c.grid.t == b.t) as i64 - (c.grid.s.rem_euclid(2) == b.s.rem_euclid(2)) as i64)
        .collect()
}

/// The connecting domains with vanishing basepoint multiplicities form the
/// line `base + k·periodic`; positivity cuts out `k_lo ..= k_hi`.
#[derive(Debug, Clone)]
pub(crate) struct Family {
    pub base: Vec<i64>,
    pub periodic: Vec<i64>,
    pub k_lo: i64,
    pub k_hi: i64,
}

impl Family {
    fn member(&self, k: i64) -> Vec<i64> {
        self.base.iter().zip(&self.periodic).map(|(b, p)| b + k * p).collect()
    }
}

pub(crate) fn family(d: &GridDiagram, from: &Generator, to: &Generator, role: Role) -> Option<Family> {
    let p = d.p();
    if spinc_label(from, p) != spinc_label(to, p) {
        return None;
    }
    let n = d.width();
    let nu = n as usize;
    let f = corner_sources(d, from, to);
    let (f0, f1) = f.split_at(nu);

    // Column differences g(s) = D(s,0) − D(s−1,0) satisfy
    // g(s + 2q) = g(s) − f0(s) − f1(s + 2q) along the two orbits of s ↦ s + 2q.
    let step = 2 * d.q();
    let mut g = vec![0i64; nu];
    for start in 0..2 {
        let mut s = start;
        for _ in 0..p {
            let next = (s + step).rem_euclid(n);
            let val = g[s as usize] - f0[s as usize] - f1[next as usize];
            if next == start {
                if val != 0 {
                    return None;
                }
            } else {
                g[next as usize] = val;
            }
            s = next;
        }
    }
    let total: i64 = g.iter().sum();
    if total % p != 0 {
        return None;
    }
    for v in g.iter_mut().step_by(2) {
        *v -= total / p;
    }

    let mut mult = vec![0i64; d.num_cells()];
    let (mut r0, mut r1) = (0i64, 0i64);
    for s in 0..n {
        if s > 0 {
            r0 += g[s as usize];
            r1 += g[s as usize] + f1[s as usize];
        }
        mult[d.cell_id(s, 0)] = r0;
        mult[d.cell_id(s, 1)] = r1;
    }

    let [c1, c2] = d.basepoint_cells(role);
    let (t1, t2) = (d.cells()[c1].grid.t, d.cells()[c2].grid.t);
    let (n1, n2) = (mult[c1], mult[c2]);
    let b = (n2 - n1) / (t1 - t2);
    let a = -n1 - b * t1;
    for (m, c) in mult.iter_mut().zip(d.cells()) {
        *m += a + b * c.grid.t;
    }

    let periodic = periodic_domain(d, role);
    let (mut k_lo, mut k_hi) = (i64::MIN, i64::MAX);
    for (&m, &pd) in mult.iter().zip(&periodic) {
        match pd {
            1 => k_lo = k_lo.max(-m),
            -1 => k_hi = k_hi.min(m),
            _ if m < 0 => return Some(Family { base: mult, periodic, k_lo: 1, k_hi: 0 }),
            _ => {}
        }
    }
    Some(Family { base: mult, periodic, k_lo, k_hi })
}

/// Positive domains from `from` to `to` of Maslov index one avoiding the
/// basepoints of `role`, in lexicographic order of multiplicities.
pub fn connecting_domains(d: &GridDiagram, from: &Generator, to: &Generator, role: Role) -> Vec<Domain> {
    let Some(fam) = family(d, from, to, role) else {
        return Vec::new();
    };
    if fam.k_lo > fam.k_hi || index_of(d, &fam.base, from, to) != Q::from_integer(1) {
        return Vec::new();
    }
    let mut out: Vec<Domain> = (fam.k_lo..=fam.k_hi)
        .map(|k| Domain { from: *from, to: *to, multiplicities: fam.member(k) })
        .collect();
    out.sort();
    out
}

/// Independent enumeration of connecting domains for cross-checking.
///
/// The boundary equations are solved by exact integer elimination over all
/// cell multiplicities. The multiplicities of the two basepoint cells are set
/// to zero and a third cell ranges over `0 ..= cap`; each choice fixes one
/// integer solution, which is kept when positive and of index one.
#[derive(Debug, Clone)]
pub struct OracleSolver {
    n: usize,
    pivots: Vec<usize>,
    free: Vec<usize>,
    /// Pivot rows restricted to the free columns.
    reduced: Vec<Vec<i64>>,
    /// Row operations applied to the original equations, stored by column.
    transform: Vec<Vec<i64>>,
    rank: usize,
    smith: Smith,
    kernel: Vec<Vec<i64>>,
    /// The kernel basis read cell by cell.
    by_cell: Vec<[i64; 3]>,
    roles: [RoleBox; 2],
}

#[derive(Debug, Clone, Default)]
struct RoleBox {
    cells: [usize; 3],
    /// `denom ·` the inverse of the kernel restricted to `cells`.
    scaled: [[i64; 3]; 3],
    denom: i64,
    /// Cells with rising, then falling, then constant multiplicity as the
    /// free cell grows.
    order: Vec<usize>,
    positive: usize,
    negative: usize,
    /// `lcm / |slope|` per cell of `order`, 1 on constant cells.
    weight: Vec<i64>,
    lcm: i64,
}

impl OracleSolver {
    pub fn new(d: &GridDiagram) -> Result<Self> {
        let n = d.num_cells();
        let w = d.width();
        let mut a = vec![vec![0i64; n]; n];
        for t in 0..2 {
            for s in 0..w {
                let row = &mut a[(t * w + s) as usize];
                let [ne, nw, se, sw] = d.vertex_cells(s, t);
                row[ne] += 1;
                row[sw] += 1;
                row[nw] -= 1;
                row[se] -= 1;
            }
        }
        let mut tr: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        let mut used = vec![false; n];
        while let Some((r, col)) =
            (rank..n).find_map(|r| (0..n).find(|&c| !used[c] && a[r][c].abs() == 1).map(|c| (r, c)))
        {
            a.swap(rank, r);
            tr.swap(rank, r);
            if a[rank][col] < 0 {
                a[rank].iter_mut().for_each(|v| *v = -*v);
                tr[rank].iter_mut().for_each(|v| *v = -*v);
            }
            let (prow, ptr) = (a[rank].clone(), tr[rank].clone());
            for i in (0..n).filter(|&i| i != rank) {
                let f = a[i][col];
                if f == 0 {
                    continue;
                }
                for (x, y) in a[i].iter_mut().zip(&prow) {
                    *x = x.checked_sub(f.checked_mul(*y).ok_or_else(overflow)?).ok_or_else(overflow)?;
                }
                for (x, y) in tr[i].iter_mut().zip(&ptr) {
                    *x = x.checked_sub(f.checked_mul(*y).ok_or_else(overflow)?).ok_or_else(overflow)?;
                }
            }
            used[col] = true;
            pivots.push(col);
            rank += 1;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !used[c]).collect();
        let reduced: Vec<Vec<i64>> = a[..rank].iter().map(|row| free.iter().map(|&f| row[f]).collect()).collect();
        // What is left has no unit entries: the torsion of the cokernel.
        let block: Vec<Vec<i64>> = a[rank..].iter().map(|row| free.iter().map(|&f| row[f]).collect()).collect();
        let smith = Smith::new(block, free.len())?;
        let mut solver = OracleSolver {
            n,
            pivots,
            free,
            reduced,
            transform: (0..n).map(|c| tr.iter().map(|row| row[c]).collect()).collect(),
            rank,
            smith,
            kernel: Vec::new(),
            by_cell: Vec::new(),
            roles: Default::default(),
        };
        let k = solver.free.len();
        solver.kernel = (0..k)
            .filter(|&i| solver.smith.diag(i) == 0)
            .map(|i| solver.expand(&(0..k).map(|j| solver.smith.v[j][i]).collect::<Vec<_>>(), &vec![0; n]))
            .collect();
        if solver.kernel.len() != 3 {
            return Err(Error::inconsistency(
                "periodic-domains",
                format!("expected a rank 3 space of periodic domains, found {}", solver.kernel.len()),
            ));
        }
        solver.by_cell = (0..n).map(|c| [0, 1, 2].map(|i| solver.kernel[i][c])).collect();
        solver.roles = [role_box(d, &solver.kernel, Role::W)?, role_box(d, &solver.kernel, Role::Z)?];
        Ok(solver)
    }

    pub fn kernel(&self) -> &[Vec<i64>] {
        &self.kernel
    }

    /// Full solution from the free coordinates and the transformed right-hand side.
    fn expand(&self, xf: &[i64], y: &[i64]) -> Vec<i64> {
        let mut x = vec![0i64; self.n];
        for (&f, &v) in self.free.iter().zip(xf) {
            x[f] = v;
        }
        for (r, &pc) in self.pivots.iter().enumerate() {
            x[pc] = y[r] - self.reduced[r].iter().zip(xf).map(|(a, b)| a * b).sum::<i64>();
        }
        x
    }

    fn transformed(&self, f: &[i64]) -> Vec<i64> {
        let mut y = vec![0i64; self.n];
        for (col, &v) in self.transform.iter().zip(f).filter(|(_, v)| **v != 0) {
            for (acc, &t) in y.iter_mut().zip(col) {
                *acc += t * v;
            }
        }
        y
    }

    fn torsion_part(&self, y: &[i64]) -> Vec<i64> {
        self.smith.u.iter().map(|row| row.iter().zip(&y[self.rank..]).map(|(a, b)| a * b).sum()).collect()
    }

    /// Consistency residues of a single generator. Two generators are joined
    /// by some integer two-chain exactly when their residues agree.
    pub fn residue(&self, d: &GridDiagram, g: &Generator) -> Vec<i64> {
        let n = d.width();
        let mut f = vec![0i64; self.n];
        for pt in g.points(d) {
            f[(pt.t * n + pt.s) as usize] = 1;
        }
        self.torsion_part(&self.transformed(&f))
            .into_iter()
            .enumerate()
            .map(|(i, v)| match self.smith.diag(i) {
                0 => v,
                s => v.rem_euclid(s),
            })
            .collect()
    }

    /// Some integer solution of the boundary equations, if any exists.
    pub fn particular(&self, d: &GridDiagram, from: &Generator, to: &Generator) -> Option<Vec<i64>> {
        let y = self.transformed(&corner_sources(d, from, to));
        let k = self.free.len();
        let mut z = vec![0i64; k];
        for (i, v) in self.torsion_part(&y).into_iter().enumerate() {
            match self.smith.diag(i) {
                0 if v != 0 => return None,
                0 => {}
                s if v % s != 0 => return None,
                s => z[i] = v / s,
            }
        }
        let xf: Vec<i64> = (0..k).map(|j| (0..k).map(|i| self.smith.v[j][i] * z[i]).sum()).collect();
        Some(self.expand(&xf, &y))
    }

    /// All positive index one domains with zero multiplicity at the
    /// basepoints of `role`, by a box search on the free cell.
    pub fn domains(&self, d: &GridDiagram, from: &Generator, to: &Generator, role: Role) -> Vec<Domain> {
        let Some(part) = self.particular(d, from, to) else {
            return Vec::new();
        };
        let zero = vec![0; self.n];
        let (x, y) = (self.project(role, &part), self.project(role, &zero));
        match self.free_range(role, &x, &y) {
            Some(range) => self.domains_in(d, from, to, (&part, &zero), role, range),
            None => Vec::new(),
        }
    }

    /// The constraints contributed by one particular solution `part`; those of
    /// a difference of solutions are the differences.
    pub(crate) fn project(&self, role: Role, part: &[i64]) -> Projection {
        let rb = &self.roles[role as usize];
        let base: [i64; 3] = std::array::from_fn(|i| -(0..3).map(|j| rb.scaled[i][j] * part[rb.cells[j]]).sum::<i64>());
        let values = rb
            .order
            .iter()
            .zip(&rb.weight)
            .map(|(&c, &w)| {
                let k = self.by_cell[c];
                (part[c] * rb.denom + base[0] * k[0] + base[1] * k[1] + base[2] * k[2]) * w
            })
            .collect();
        Projection { values }
    }

    /// Values `v ≥ 0` of the free cell keeping the solution `x − y`
    /// nonnegative, as an interval. Every multiplicity is affine in `v`.
    pub(crate) fn free_range(&self, role: Role, x: &Projection, y: &Projection) -> Option<(i64, i64)> {
        let rb = &self.roles[role as usize];
        let (xs, ys) = (&x.values, &y.values);
        let (pos, neg) = (rb.positive, rb.positive + rb.negative);
        // Scaled by lcm: v·lcm ≥ y − x on rising cells, ≤ x − y on falling ones.
        let lo = (0..pos).map(|i| ys[i] - xs[i]).max().unwrap_or(i64::MIN);
        let hi = (pos..neg).map(|i| xs[i] - ys[i]).min().unwrap_or(i64::MAX);
        if (neg..self.n).any(|i| xs[i] < ys[i]) {
            return None;
        }
        let lo = if lo == i64::MIN { 0 } else { Integer::div_ceil(&lo, &rb.lcm).max(0) };
        let hi = if hi == i64::MAX { i64::MAX } else { Integer::div_floor(&hi, &rb.lcm) };
        (lo <= hi).then_some((lo, hi))
    }

    /// Tests each integral free value up to the multiplicity cap for the
    /// solution `parts.0 − parts.1`. The cap is the largest multiplicity at
    /// the ends of the positive range plus a slack of two.
    pub(crate) fn domains_in(
        &self,
        d: &GridDiagram,
        from: &Generator,
        to: &Generator,
        (px, py): (&[i64], &[i64]),
        role: Role,
        (lo, hi): (i64, i64),
    ) -> Vec<Domain> {
        let rb = &self.roles[role as usize];
        let den = rb.denom;
        let rhs = rb.cells.map(|c| py[c] - px[c]);
        // den · coefficient of kernel vector i at v is base[i] + v · step[i]
        let base: [i64; 3] = std::array::from_fn(|i| (0..3).map(|j| rb.scaled[i][j] * rhs[j]).sum());
        let step: [i64; 3] = std::array::from_fn(|i| rb.scaled[i][2]);
        let scaled_at = |c: usize, v: i64| {
            let k = self.by_cell[c];
            (px[c] - py[c]) * den + (0..3).map(|i| (base[i] + v * step[i]) * k[i]).sum::<i64>()
        };
        // The free cell has multiplicity v, so only an unbounded range is cut.
        let cap = if hi == i64::MAX {
            (0..self.n).map(|c| Integer::div_floor(&scaled_at(c, lo), &den)).max().unwrap_or(0) + 2
        } else {
            hi
        };
        let corners: Vec<usize> = from
            .points(d)
            .into_iter()
            .chain(to.points(d))
            .flat_map(|pt| d.vertex_cells(pt.s, pt.t))
            .collect();
        let mut out = Vec::new();
        for v in lo..=hi.min(cap) {
            let scaled: [i64; 3] = std::array::from_fn(|i| base[i] + v * step[i]);
            if scaled.iter().any(|c| c % den != 0) {
                continue;
            }
            // Index one means the corner multiplicities add up to 4.
            if corners.iter().map(|&c| scaled_at(c, v)).sum::<i64>() != 4 * den {
                continue;
            }
            let coef = scaled.map(|c| c / den);
            let mult: Vec<i64> = self
                .by_cell
                .iter()
                .enumerate()
                .map(|(c, k)| px[c] - py[c] + coef[0] * k[0] + coef[1] * k[1] + coef[2] * k[2])
                .collect();
            if mult.iter().all(|&m| m >= 0) && index_of(d, &mult, from, to) == Q::from_integer(1) {
                out.push(Domain { from: *from, to: *to, multiplicities: mult });
            }
        }
        out.sort();
        out
    }
}

/// Positivity constraints of one particular solution, cells grouped by the
/// sign of their slope in the free cell.
#[derive(Debug, Clone)]
pub(crate) struct Projection {
    values: Vec<i64>,
}

/// `U·B·V = diag`, with `U`, `V` unimodular.
#[derive(Debug, Clone)]
struct Smith {
    u: Vec<Vec<i64>>,
    diag: Vec<i64>,
    v: Vec<Vec<i64>>,
}

impl Smith {
    fn new(mut b: Vec<Vec<i64>>, cols: usize) -> Result<Self> {
        let m = b.len();
        let identity = |n: usize| -> Vec<Vec<i64>> { (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect() };
        let (mut u, mut v) = (identity(m), identity(cols));
        let mut diag = Vec::new();
        for t in 0..m.min(cols) {
            loop {
                let Some((i, j)) = (t..m)
                    .flat_map(|i| (t..cols).map(move |j| (i, j)))
                    .filter(|&(i, j)| b[i][j] != 0)
                    .min_by_key(|&(i, j)| b[i][j].abs())
                else {
                    return Ok(Smith { u, diag, v });
                };
                b.swap(t, i);
                u.swap(t, i);
                for row in b.iter_mut() {
                    row.swap(t, j);
                }
                for row in v.iter_mut() {
                    row.swap(t, j);
                }
                let piv = b[t][t];
                let mut clean = true;
                for i in t + 1..m {
                    let f = b[i][t] / piv;
                    if f != 0 {
                        let (bt, ut) = (b[t].clone(), u[t].clone());
                        for (x, y) in b[i].iter_mut().zip(&bt) {
                            *x = x.checked_sub(f.checked_mul(*y).ok_or_else(overflow)?).ok_or_else(overflow)?;
                        }
                        for (x, y) in u[i].iter_mut().zip(&ut) {
                            *x = x.checked_sub(f.checked_mul(*y).ok_or_else(overflow)?).ok_or_else(overflow)?;
                        }
                    }
                    clean &= b[i][t] == 0;
                }
                for j in t + 1..cols {
                    let f = b[t][j] / piv;
                    if f != 0 {
                        for row in b.iter_mut().chain(v.iter_mut()) {
                            row[j] = row[j].checked_sub(f.checked_mul(row[t]).ok_or_else(overflow)?).ok_or_else(overflow)?;
                        }
                    }
                    clean &= b[t][j] == 0;
                }
                if clean {
                    break;
                }
            }
            diag.push(b[t][t]);
        }
        Ok(Smith { u, diag, v })
    }

    fn diag(&self, i: usize) -> i64 {
        self.diag.get(i).copied().unwrap_or(0)
    }
}

fn overflow() -> Error {
    Error::inconsistency("oracle-elimination", "integer overflow")
}

fn role_box(d: &GridDiagram, kernel: &[Vec<i64>], role: Role) -> Result<RoleBox> {
    let [c1, c2] = d.basepoint_cells(role);
    for c3 in 0..d.num_cells() {
        let m: [[Ratio<i64>; 3]; 3] =
            [c1, c2, c3].map(|c| [0, 1, 2].map(|i| Ratio::from_integer(kernel[i][c])));
        if let Some(inverse) = invert3(&m) {
            let denom = inverse.iter().flatten().fold(1i64, |acc, x| acc.lcm(x.denom()));
            let scaled = inverse.map(|row| row.map(|x| (x * denom).to_integer()));
            let slope: Vec<i64> =
                (0..d.num_cells()).map(|c| (0..3).map(|i| scaled[i][2] * kernel[i][c]).sum()).collect();
            let mut order: Vec<usize> = (0..slope.len()).collect();
            order.sort_by_key(|&c| match slope[c].signum() {
                1 => 0,
                -1 => 1,
                _ => 2,
            });
            let positive = slope.iter().filter(|&&s| s > 0).count();
            let negative = slope.iter().filter(|&&s| s < 0).count();
            let lcm = slope.iter().filter(|&&s| s != 0).fold(1i64, |acc, s| acc.lcm(s));
            let weight = order.iter().map(|&c| if slope[c] == 0 { 1 } else { lcm / slope[c].abs() }).collect();
            return Ok(RoleBox { cells: [c1, c2, c3], scaled, denom, order, positive, negative, weight, lcm });
        }
    }
    Err(Error::inconsistency("periodic-domains", "no cell completes the basepoint cells"))
}

/// `m[row = cell][col = kernel vector]`; returns its inverse.
fn invert3(m: &[[Ratio<i64>; 3]; 3]) -> Option<[[Ratio<i64>; 3]; 3]> {
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if det.is_zero() {
        return None;
    }
    let mut inv = [[Ratio::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
            let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
            inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
        }
    }
    Some(inv)
}

/// [`OracleSolver::domains`] for a single pair.
pub fn oracle_connecting_domains(d: &GridDiagram, from: &Generator, to: &Generator, role: Role) -> Result<Vec<Domain>> {
    Ok(OracleSolver::new(d)?.domains(d, from, to, role))
}
