//! Region colorings of dual graph diagrams by biquasile elements.
//!
//! A coloring assigns an element to every region so that each crossing
//! record satisfies `y = x ∗ (a · b)`. Enumeration is a backtracking search
//! over regions with forward propagation: once three roles of a record are
//! colored the fourth is forced (directly for y, via the division tables
//! for the others), which keeps even 10-region/order-7 instances fast.

use num_bigint::BigUint;

use crate::biquasile::{AlexanderParams, Biquasile};
use crate::diagram::DualGraphDiagram;
use crate::modalg::ModMatrix;

/// One satisfying assignment: colors[r] is the element at region r.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColoringAssignment {
    pub colors: Vec<u8>,
}

/// All colorings, sorted lexicographically by color vector.
pub fn enumerate_colorings(g: &DualGraphDiagram, bq: &Biquasile) -> Vec<ColoringAssignment> {
    let regions = g.regions;
    let n = bq.order() as u8;
    if regions == 0 {
        return vec![ColoringAssignment { colors: Vec::new() }];
    }
    // Variable order: descending incidence with crossing records, ties by
    // region index.
    let mut incidence = vec![0usize; regions];
    for rec in &g.crossings {
        for r in [rec.x, rec.a, rec.b, rec.y] {
            incidence[r] += 1;
        }
    }
    let mut order: Vec<usize> = (0..regions).collect();
    order.sort_by_key(|&r| (usize::MAX - incidence[r], r));
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); regions];
    for (ci, rec) in g.crossings.iter().enumerate() {
        for r in [rec.x, rec.a, rec.b, rec.y] {
            if !touching[r].contains(&ci) {
                touching[r].push(ci);
            }
        }
    }

    let mut colors = vec![0u8; regions];
    let mut out: Vec<ColoringAssignment> = Vec::new();
    let mut trail: Vec<usize> = Vec::new();

    // Assign colors[region]=color, propagate consequences; returns false on
    // contradiction. Assigned regions are pushed onto the trail.
    fn assign_and_propagate(
        g: &DualGraphDiagram,
        bq: &Biquasile,
        touching: &[Vec<usize>],
        colors: &mut [u8],
        trail: &mut Vec<usize>,
        region: usize,
        color: u8,
    ) -> bool {
        let mark = trail.len();
        colors[region] = color;
        trail.push(region);
        let mut queue: Vec<usize> = touching[region].clone();
        while let Some(ci) = queue.pop() {
            let rec = &g.crossings[ci];
            let roles = [rec.x, rec.a, rec.b, rec.y];
            let vals = roles.map(|r| colors[r]);
            let unassigned: Vec<usize> = {
                let mut u: Vec<usize> = roles
                    .iter()
                    .copied()
                    .filter(|&r| colors[r] == 0)
                    .collect();
                u.dedup();
                u.sort_unstable();
                u.dedup();
                u
            };
            match unassigned.len() {
                0 => {
                    let m = bq.dot(vals[1], vals[2]);
                    if bq.star(vals[0], m) != vals[3] {
                        undo(colors, trail, mark);
                        return false;
                    }
                }
                1 => {
                    let r = unassigned[0];
                    let slots: Vec<usize> = (0..4).filter(|&k| roles[k] == r).collect();
                    let forced = if slots.len() == 1 {
                        Some(match slots[0] {
                            0 => bq.rdiv_star(vals[3], bq.dot(vals[1], vals[2])),
                            1 => bq.rdiv_dot(bq.ldiv_star(vals[0], vals[3]), vals[2]),
                            2 => bq.ldiv_dot(vals[1], bq.ldiv_star(vals[0], vals[3])),
                            _ => bq.star(vals[0], bq.dot(vals[1], vals[2])),
                        })
                    } else {
                        // The region appears in several roles (kinked
                        // crossings); scan the candidates.
                        let mut solutions = (1..=bq.order() as u8).filter(|&c| {
                            let v = roles.map(|rr| if rr == r { c } else { colors[rr] });
                            bq.star(v[0], bq.dot(v[1], v[2])) == v[3]
                        });
                        match (solutions.next(), solutions.next()) {
                            (Some(c), None) => Some(c),
                            (Some(_), Some(_)) => None, // several fit; leave to search
                            (None, _) => {
                                undo(colors, trail, mark);
                                return false;
                            }
                        }
                    };
                    if let Some(c) = forced {
                        colors[r] = c;
                        trail.push(r);
                        for &cj in &touching[r] {
                            if cj != ci {
                                queue.push(cj);
                            }
                        }
                        // Re-check this record now that r is set.
                        queue.push(ci);
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn undo(colors: &mut [u8], trail: &mut Vec<usize>, mark: usize) {
        while trail.len() > mark {
            let r = trail.pop().unwrap();
            colors[r] = 0;
        }
    }

    fn dfs(
        g: &DualGraphDiagram,
        bq: &Biquasile,
        order: &[usize],
        touching: &[Vec<usize>],
        colors: &mut [u8],
        trail: &mut Vec<usize>,
        mut pos: usize,
        n: u8,
        out: &mut Vec<ColoringAssignment>,
    ) {
        while pos < order.len() && colors[order[pos]] != 0 {
            pos += 1;
        }
        if pos == order.len() {
            out.push(ColoringAssignment { colors: colors.to_vec() });
            return;
        }
        let region = order[pos];
        for color in 1..=n {
            let mark = trail.len();
            if assign_and_propagate(g, bq, touching, colors, trail, region, color) {
                dfs(g, bq, order, touching, colors, trail, pos + 1, n, out);
                undo(colors, trail, mark);
            }
        }
    }

    dfs(g, bq, &order, &touching, &mut colors, &mut trail, 0, n, &mut out);
    out.sort();
    out
}

/// Number of colorings; the counting invariant of the underlying link.
pub fn count_colorings(g: &DualGraphDiagram, bq: &Biquasile) -> u64 {
    enumerate_colorings(g, bq).len() as u64
}

/// Coefficient matrix of the coloring conditions for an affine biquasile:
/// one row per crossing, columns in region order, from
/// `y + dsn²·x - nd·a - ns·b = 0 (mod modulus)`. Coefficients accumulate
/// when a region fills several roles.
pub fn alexander_matrix(g: &DualGraphDiagram, p: AlexanderParams) -> ModMatrix {
    let m = p.modulus;
    let dsn2 = (p.d * p.s % m) * (p.n_param * p.n_param % m) % m;
    let nd = p.n_param * p.d % m;
    let ns = p.n_param * p.s % m;
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(g.crossings.len());
    for rec in &g.crossings {
        let mut row = vec![0i64; g.regions];
        row[rec.y] += 1;
        row[rec.x] += dsn2 as i64;
        row[rec.a] -= nd as i64;
        row[rec.b] -= ns as i64;
        rows.push(row);
    }
    if rows.is_empty() {
        rows.push(vec![0i64; g.regions]);
    }
    ModMatrix::from_rows(m, &rows).expect("valid coefficient matrix")
}

/// Counting invariant via the homogeneous linear system over Z/modulus.
/// Agrees with `count_colorings` on the table-built affine biquasile.
pub fn count_colorings_alexander(g: &DualGraphDiagram, p: AlexanderParams) -> BigUint {
    if g.crossings.is_empty() {
        return BigUint::from(p.modulus).pow(g.regions as u32);
    }
    alexander_matrix(g, p).solve_count()
}

/// Generators-and-relations presentation read off a dual graph diagram:
/// one generator per region, one relation `y = x ∗ (a · b)` per crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generator_count: usize,
    pub relations: Vec<crate::diagram::CrossingRecord>,
}

pub fn presentation(g: &DualGraphDiagram) -> Presentation {
    Presentation { generator_count: g.regions, relations: g.crossings.clone() }
}

impl Presentation {
    /// Text form; `ascii` swaps the angle brackets and operation symbols
    /// for plain ASCII.
    pub fn render(&self, ascii: bool) -> String {
        let (open, close, star, dot) = if ascii { ("<", ">", "*", ".") } else { ("⟨", "⟩", "∗", "·") };
        let gens: Vec<String> = (1..=self.generator_count).map(|i| format!("g{i}")).collect();
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| {
                format!(
                    "g{} = g{} {} (g{} {} g{})",
                    r.y + 1,
                    r.x + 1,
                    star,
                    r.a + 1,
                    dot,
                    r.b + 1
                )
            })
            .collect();
        format!("{}{} | {}{}", open, gens.join(","), rels.join(", "), close)
    }
}
