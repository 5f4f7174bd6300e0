//! Finite biquasiles: a carrier {1..n} with two Latin-square operations
//! (written `∗` and `·`) whose left/right divisions exist and which satisfy
//! two exchange identities making region colorings of link diagrams move
//! invariant.
//!
//! Carrier elements are 1-indexed, with n standing for the zero residue in
//! the modular (Alexander) construction, so printed tables match the usual
//! block-matrix presentation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BiquasileError {
    #[error("malformed table: {0}")]
    Malformed(#[from] TableError),
    #[error("axiom failure: {0}")]
    Axiom(Violation),
    #[error("parameter {name}={value} is not a unit mod {modulus}")]
    NonUnit { name: &'static str, value: u64, modulus: u64 },
    #[error("modulus {0} out of supported range 2..=255")]
    BadModulus(u64),
    #[error("enumeration supports orders 1..=4, got {0}")]
    OrderOutOfRange(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("{table} table is {got} rows, expected {want}")]
    BadRowCount { table: &'static str, got: usize, want: usize },
    #[error("{table} table row {row} has {got} entries, expected {want}")]
    BadRowLen { table: &'static str, row: usize, got: usize, want: usize },
    #[error("{table} table entry at ({row},{col}) is {got}, outside 1..={order}")]
    EntryOutOfRange { table: &'static str, row: usize, col: usize, got: u8, order: usize },
    #[error("order must be >= 1")]
    EmptyTable,
}

/// Which identity failed, with a witness. Latin failures are reported by
/// table and line; exchange failures carry the (a, b, x, y) tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotLatinRow { table: &'static str, row: u8 },
    NotLatinCol { table: &'static str, col: u8 },
    ExchangeI { witness: (u8, u8, u8, u8) },
    ExchangeII { witness: (u8, u8, u8, u8) },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotLatinRow { table, row } => {
                write!(f, "{table} table row {row} is not a permutation")
            }
            Violation::NotLatinCol { table, col } => {
                write!(f, "{table} table column {col} is not a permutation")
            }
            Violation::ExchangeI { witness: (a, b, x, y) } => {
                write!(f, "exchange axiom (i) fails at (a,b,x,y)=({a},{b},{x},{y})")
            }
            Violation::ExchangeII { witness: (a, b, x, y) } => {
                write!(f, "exchange axiom (ii) fails at (a,b,x,y)=({a},{b},{x},{y})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

/// Finite biquasile with precomputed division tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biquasile {
    order: usize,
    star: Vec<u8>,
    dot: Vec<u8>,
    ldiv_star: Vec<u8>,
    rdiv_star: Vec<u8>,
    ldiv_dot: Vec<u8>,
    rdiv_dot: Vec<u8>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BiquasileJson {
    pub order: usize,
    pub star: Vec<Vec<u8>>,
    pub dot: Vec<Vec<u8>>,
}

/// Parameters of the modular affine biquasile `x·y = dx+sy`,
/// `x∗y = -dsn²x + ny` on Z/modulus; d, s and the twist parameter must be
/// units. The twist is called `n_param` because `n` is the modulus in the
/// usual notation for these structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlexanderParams {
    pub modulus: u64,
    pub d: u64,
    pub s: u64,
    pub n_param: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

impl AlexanderParams {
    pub fn new(modulus: u64, d: u64, s: u64, n_param: u64) -> Result<Self, BiquasileError> {
        if !(2..=255).contains(&modulus) {
            return Err(BiquasileError::BadModulus(modulus));
        }
        for (name, value) in [("d", d), ("s", s), ("n_param", n_param)] {
            if value % modulus == 0 || gcd(value % modulus, modulus) != 1 {
                return Err(BiquasileError::NonUnit { name, value, modulus });
            }
        }
        Ok(AlexanderParams { modulus, d: d % modulus, s: s % modulus, n_param: n_param % modulus })
    }

    /// All unit triples (d, s, n_param) for a modulus, in lexicographic order.
    pub fn all_unit_triples(modulus: u64) -> Vec<AlexanderParams> {
        let units: Vec<u64> = (1..modulus).filter(|&u| gcd(u, modulus) == 1).collect();
        let mut out = Vec::new();
        for &d in &units {
            for &s in &units {
                for &n in &units {
                    out.push(AlexanderParams { modulus, d, s, n_param: n });
                }
            }
        }
        out
    }
}

fn validate_table(table: &'static str, rows: &[Vec<u8>], order: usize) -> Result<(), TableError> {
    if order == 0 {
        return Err(TableError::EmptyTable);
    }
    if rows.len() != order {
        return Err(TableError::BadRowCount { table, got: rows.len(), want: order });
    }
    for (i, r) in rows.iter().enumerate() {
        if r.len() != order {
            return Err(TableError::BadRowLen { table, row: i + 1, got: r.len(), want: order });
        }
        for (j, &e) in r.iter().enumerate() {
            if e == 0 || e as usize > order {
                return Err(TableError::EntryOutOfRange {
                    table,
                    row: i + 1,
                    col: j + 1,
                    got: e,
                    order,
                });
            }
        }
    }
    Ok(())
}

fn latin_violation(table: &'static str, flat: &[u8], order: usize) -> Option<Violation> {
    let n = order;
    for i in 0..n {
        let mut seen = vec![false; n + 1];
        for j in 0..n {
            let e = flat[i * n + j] as usize;
            if seen[e] {
                return Some(Violation::NotLatinRow { table, row: (i + 1) as u8 });
            }
            seen[e] = true;
        }
    }
    for j in 0..n {
        let mut seen = vec![false; n + 1];
        for i in 0..n {
            let e = flat[i * n + j] as usize;
            if seen[e] {
                return Some(Violation::NotLatinCol { table, col: (j + 1) as u8 });
            }
            seen[e] = true;
        }
    }
    None
}

/// Raw table view used by the axiom checker before a `Biquasile` exists.
struct Ops<'a> {
    n: usize,
    star: &'a [u8],
    dot: &'a [u8],
}

impl Ops<'_> {
    #[inline]
    fn star(&self, x: u8, y: u8) -> u8 {
        self.star[(x as usize - 1) * self.n + (y as usize - 1)]
    }
    #[inline]
    fn dot(&self, x: u8, y: u8) -> u8 {
        self.dot[(x as usize - 1) * self.n + (y as usize - 1)]
    }
}

/// First failing exchange tuple, if any, scanning (a, b, x, y)
/// lexicographically.
fn exchange_violation(ops: &Ops) -> Option<Violation> {
    let n = ops.n as u8;
    for a in 1..=n {
        for b in 1..=n {
            for x in 1..=n {
                for y in 1..=n {
                    // (i)  a∗(x·[y∗(a·b)]) = (a∗[x·y]) ∗ (x·[y∗([a∗(x·y)]·b)])
                    let lhs = ops.star(a, ops.dot(x, ops.star(y, ops.dot(a, b))));
                    let axy = ops.star(a, ops.dot(x, y));
                    let rhs = ops.star(axy, ops.dot(x, ops.star(y, ops.dot(axy, b))));
                    if lhs != rhs {
                        return Some(Violation::ExchangeI { witness: (a, b, x, y) });
                    }
                    // (ii) y∗([a∗(x·y)]·b) = (y∗[a·b]) ∗ ([a∗(x·[y∗(a·b)])]·b)
                    let lhs = ops.star(y, ops.dot(axy, b));
                    let yab = ops.star(y, ops.dot(a, b));
                    let rhs = ops.star(yab, ops.dot(ops.star(a, ops.dot(x, yab)), b));
                    if lhs != rhs {
                        return Some(Violation::ExchangeII { witness: (a, b, x, y) });
                    }
                }
            }
        }
    }
    None
}

/// Check candidate tables: Latin-square property of both tables, then the
/// two exchange identities over all of X^4. Malformed tables (wrong shape,
/// entries outside 1..=n) are an error, distinct from a failing verdict.
pub fn check_axioms(star: &[Vec<u8>], dot: &[Vec<u8>]) -> Result<Verdict, TableError> {
    let order = star.len();
    validate_table("star", star, order)?;
    validate_table("dot", dot, order)?;
    let star_flat: Vec<u8> = star.iter().flatten().copied().collect();
    let dot_flat: Vec<u8> = dot.iter().flatten().copied().collect();
    if let Some(v) = latin_violation("star", &star_flat, order) {
        return Ok(Verdict::Fail(v));
    }
    if let Some(v) = latin_violation("dot", &dot_flat, order) {
        return Ok(Verdict::Fail(v));
    }
    let ops = Ops { n: order, star: &star_flat, dot: &dot_flat };
    match exchange_violation(&ops) {
        Some(v) => Ok(Verdict::Fail(v)),
        None => Ok(Verdict::Pass),
    }
}

impl Biquasile {
    /// Build from operation tables, verifying all axioms.
    pub fn from_tables(star: &[Vec<u8>], dot: &[Vec<u8>]) -> Result<Self, BiquasileError> {
        match check_axioms(star, dot)? {
            Verdict::Pass => {}
            Verdict::Fail(v) => return Err(BiquasileError::Axiom(v)),
        }
        let order = star.len();
        let star: Vec<u8> = star.iter().flatten().copied().collect();
        let dot: Vec<u8> = dot.iter().flatten().copied().collect();
        Ok(Self::from_flat_unchecked(order, star, dot))
    }

    /// Internal constructor for tables already known to be Latin and to
    /// satisfy the exchange axioms.
    fn from_flat_unchecked(order: usize, star: Vec<u8>, dot: Vec<u8>) -> Self {
        let n = order;
        let invert = |flat: &[u8]| {
            let mut ldiv = vec![0u8; n * n];
            let mut rdiv = vec![0u8; n * n];
            for x in 0..n {
                for y in 0..n {
                    let z = flat[x * n + y] as usize;
                    // x op y = z  =>  x \ z = y  and  z / y = x
                    ldiv[x * n + (z - 1)] = (y + 1) as u8;
                    rdiv[(z - 1) * n + y] = (x + 1) as u8;
                }
            }
            (ldiv, rdiv)
        };
        let (ldiv_star, rdiv_star) = invert(&star);
        let (ldiv_dot, rdiv_dot) = invert(&dot);
        Biquasile { order, star, dot, ldiv_star, rdiv_star, ldiv_dot, rdiv_dot }
    }

    /// Modular affine biquasile from unit parameters; element i stands for
    /// residue i, with the order standing for zero.
    pub fn alexander(p: AlexanderParams) -> Self {
        let m = p.modulus;
        let n = m as usize;
        let res = |i: usize| (i as u64) % m;
        let lift = |r: u64| if r == 0 { n as u8 } else { r as u8 };
        let dsn2 = (p.d * p.s % m) * (p.n_param * p.n_param % m) % m;
        let mut star = vec![0u8; n * n];
        let mut dot = vec![0u8; n * n];
        for x in 1..=n {
            for y in 1..=n {
                let (rx, ry) = (res(x), res(y));
                let sv = ((m - dsn2 * rx % m) + p.n_param * ry) % m;
                let dv = (p.d * rx + p.s * ry) % m;
                star[(x - 1) * n + (y - 1)] = lift(sv);
                dot[(x - 1) * n + (y - 1)] = lift(dv);
            }
        }
        debug_assert!(matches!(
            check_axioms(&to_rows(n, &star), &to_rows(n, &dot)),
            Ok(Verdict::Pass)
        ));
        Self::from_flat_unchecked(n, star, dot)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn idx(&self, x: u8, y: u8) -> usize {
        (x as usize - 1) * self.order + (y as usize - 1)
    }

    /// `x ∗ y`
    #[inline]
    pub fn star(&self, x: u8, y: u8) -> u8 {
        self.star[self.idx(x, y)]
    }

    /// `x · y`
    #[inline]
    pub fn dot(&self, x: u8, y: u8) -> u8 {
        self.dot[self.idx(x, y)]
    }

    /// `y \∗ z`: the unique t with `y ∗ t = z`.
    #[inline]
    pub fn ldiv_star(&self, y: u8, z: u8) -> u8 {
        self.ldiv_star[self.idx(y, z)]
    }

    /// `z /∗ y`: the unique t with `t ∗ y = z`.
    #[inline]
    pub fn rdiv_star(&self, z: u8, y: u8) -> u8 {
        self.rdiv_star[self.idx(z, y)]
    }

    /// `y \ z`: the unique t with `y · t = z`.
    #[inline]
    pub fn ldiv_dot(&self, y: u8, z: u8) -> u8 {
        self.ldiv_dot[self.idx(y, z)]
    }

    /// `z / y`: the unique t with `t · y = z`.
    #[inline]
    pub fn rdiv_dot(&self, z: u8, y: u8) -> u8 {
        self.rdiv_dot[self.idx(z, y)]
    }

    pub fn star_rows(&self) -> Vec<Vec<u8>> {
        to_rows(self.order, &self.star)
    }

    pub fn dot_rows(&self) -> Vec<Vec<u8>> {
        to_rows(self.order, &self.dot)
    }

    /// The four derived division tables, in the order `\∗`, `/∗`, `\`, `/`.
    pub fn derived_divisions(&self) -> [Vec<Vec<u8>>; 4] {
        [
            to_rows(self.order, &self.ldiv_star),
            to_rows(self.order, &self.rdiv_star),
            to_rows(self.order, &self.ldiv_dot),
            to_rows(self.order, &self.rdiv_dot),
        ]
    }

    pub fn to_json(&self) -> BiquasileJson {
        BiquasileJson { order: self.order, star: self.star_rows(), dot: self.dot_rows() }
    }

    pub fn from_json(j: &BiquasileJson) -> Result<Self, BiquasileError> {
        if j.star.len() != j.order {
            return Err(TableError::BadRowCount { table: "star", got: j.star.len(), want: j.order }.into());
        }
        Self::from_tables(&j.star, &j.dot)
    }

    /// Block-matrix rendering: one bracketed line per carrier element, star
    /// block left of the bar, dot block right.
    pub fn render_block_matrix(&self) -> String {
        let n = self.order;
        let width = if n >= 10 { 2 } else { 1 };
        let mut out = String::new();
        for x in 0..n {
            out.push('[');
            for y in 0..n {
                out.push(' ');
                out.push_str(&format!("{:>width$}", self.star[x * n + y]));
            }
            out.push_str(" |");
            for y in 0..n {
                out.push(' ');
                out.push_str(&format!("{:>width$}", self.dot[x * n + y]));
            }
            out.push_str(" ]\n");
        }
        out
    }
}

fn to_rows(n: usize, flat: &[u8]) -> Vec<Vec<u8>> {
    (0..n).map(|i| flat[i * n..(i + 1) * n].to_vec()).collect()
}

/// All Latin squares of the given order, rows flattened, in lexicographic
/// order.
fn latin_squares(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut grid = vec![0u8; n * n];
    let mut row_used = vec![vec![false; n + 1]; n];
    let mut col_used = vec![vec![false; n + 1]; n];
    fn rec(
        pos: usize,
        n: usize,
        grid: &mut Vec<u8>,
        row_used: &mut [Vec<bool>],
        col_used: &mut [Vec<bool>],
        out: &mut Vec<Vec<u8>>,
    ) {
        if pos == n * n {
            out.push(grid.clone());
            return;
        }
        let (r, c) = (pos / n, pos % n);
        for v in 1..=n {
            if !row_used[r][v] && !col_used[c][v] {
                grid[pos] = v as u8;
                row_used[r][v] = true;
                col_used[c][v] = true;
                rec(pos + 1, n, grid, row_used, col_used, out);
                row_used[r][v] = false;
                col_used[c][v] = false;
            }
        }
        grid[pos] = 0;
    }
    rec(0, n, &mut grid, &mut row_used, &mut col_used, &mut out);
    out
}

/// Every biquasile of the given order (1..=4), as pairs of Latin squares
/// satisfying the exchange axioms, in lexicographic (star, dot) order.
pub fn enumerate_biquasiles(order: usize) -> Result<Vec<Biquasile>, BiquasileError> {
    if !(1..=4).contains(&order) {
        return Err(BiquasileError::OrderOutOfRange(order));
    }
    let squares = latin_squares(order);
    use rayon::prelude::*;
    let found: Vec<Biquasile> = squares
        .par_iter()
        .flat_map_iter(|star| {
            let ops_star = star.clone();
            squares.iter().filter_map(move |dot| {
                let ops = Ops { n: order, star: &ops_star, dot };
                if exchange_violation(&ops).is_none() {
                    Some(Biquasile::from_flat_unchecked(order, ops_star.clone(), dot.clone()))
                } else {
                    None
                }
            })
        })
        .collect();
    Ok(found)
}
