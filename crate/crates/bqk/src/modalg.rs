//! Exact linear algebra over the modular ring Z/m for arbitrary m >= 2.
//!
//! Gaussian elimination is not enough when m is composite: row spans over
//! Z/6 or Z/4 need a canonical form whose pivots are divisors of m and
//! which is closed under "annihilator" rows. This module implements the
//! Howell form and uses it to count and generate the full solution set of
//! homogeneous systems, exactly and without floating point.

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModAlgError {
    #[error("modulus must be >= 2, got {0}")]
    BadModulus(u64),
    #[error("row {row} has length {len}, expected {cols}")]
    RaggedRow { row: usize, len: usize, cols: usize },
    #[error("entry count {got} does not match {rows} x {cols}")]
    BadEntryCount { got: usize, rows: usize, cols: usize },
}

/// Dense matrix over Z/m, entries stored row-major in `[0, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - (a / b) * y)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Unit `w` of Z/m with `w * a = gcd(a, m) (mod m)`.
///
/// Writes a = u*d with d = gcd(a, m) and u a unit; returns u^{-1}. The unit
/// is found by lifting the inverse of a/d modulo m/d to a residue coprime
/// to m (such a lift always exists).
fn unit_annihilating_lift(a: u64, m: u64) -> u64 {
    debug_assert!(a > 0 && a < m);
    let d = gcd(a, m);
    let a1 = a / d;
    let m1 = m / d;
    if m1 == 1 {
        // a generates the same ideal as d; any unit works.
        return 1;
    }
    let (g, inv, _) = egcd(a1 as i128, m1 as i128);
    debug_assert_eq!(g, 1);
    let w0 = (inv.rem_euclid(m1 as i128)) as u64;
    let mut w = w0;
    loop {
        if gcd(w, m) == 1 {
            return w;
        }
        w += m1;
        debug_assert!(w < m + m1);
    }
}

impl ModMatrix {
    pub fn new(modulus: u64, rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self, ModAlgError> {
        if modulus < 2 {
            return Err(ModAlgError::BadModulus(modulus));
        }
        if entries.len() != rows * cols {
            return Err(ModAlgError::BadEntryCount { got: entries.len(), rows, cols });
        }
        let m = modulus as i128;
        let entries = entries.iter().map(|&e| (e as i128).rem_euclid(m) as u64).collect();
        Ok(ModMatrix { modulus, rows, cols, entries })
    }

    pub fn from_rows(modulus: u64, rows: &[Vec<i64>]) -> Result<Self, ModAlgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(ModAlgError::RaggedRow { row: i, len: r.len(), cols });
            }
        }
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Self::new(modulus, rows.len(), cols, flat)
    }

    pub fn zero(modulus: u64, rows: usize, cols: usize) -> Self {
        assert!(modulus >= 2);
        ModMatrix { modulus, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(modulus: u64, n: usize) -> Self {
        let mut m = Self::zero(modulus, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// `M v mod m`.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + mulmod(a, b, self.modulus)) % self.modulus)
            })
            .collect()
    }

    /// Canonical Howell form: echelon over Z/m with pivots dividing m,
    /// entries above a pivot d reduced into [0, d), and the row span closed
    /// under multiplication by annihilators. Unique for a fixed row span.
    ///
    /// The output has at least as many rows as needed to hold all nonzero
    /// Howell rows, padded with zero rows up to the input row count.
    pub fn howell_form(&self) -> ModMatrix {
        let rows = howell_rows(self.row_vecs(), self.modulus, self.cols);
        let nrows = rows.len().max(self.rows);
        let mut entries = Vec::with_capacity(nrows * self.cols);
        for r in &rows {
            entries.extend_from_slice(r);
        }
        entries.resize(nrows * self.cols, 0);
        ModMatrix { modulus: self.modulus, rows: nrows, cols: self.cols, entries }
    }

    /// Number of nonzero rows of the Howell form. For prime m this is the
    /// usual rank.
    pub fn howell_rank(&self) -> usize {
        howell_rows(self.row_vecs(), self.modulus, self.cols).len()
    }

    /// Generators and exact cardinality of `{ x : M x = 0 (mod m) }`.
    pub fn kernel(&self) -> SolutionSpace {
        let m = self.modulus;
        let r = self.rows;
        let c = self.cols;
        // Rows of [M^T | I]: combinations whose left block vanishes have a
        // right block lying in the kernel, and the Howell form lists
        // generators for all of them.
        let mut aug: Vec<Vec<u64>> = Vec::with_capacity(c);
        for j in 0..c {
            let mut row = vec![0u64; r + c];
            for i in 0..r {
                row[i] = self.get(i, j);
            }
            row[r + j] = 1;
            aug.push(row);
        }
        let hrows = howell_rows(aug, m, r + c);
        let mut generators = Vec::new();
        let mut count = BigUint::from(1u32);
        for row in &hrows {
            if row[..r].iter().all(|&e| e == 0) {
                let gen = row[r..].to_vec();
                let pivot = gen.iter().copied().find(|&e| e != 0);
                if let Some(d) = pivot {
                    count *= BigUint::from(m / d);
                    generators.push(gen);
                }
            }
        }
        SolutionSpace { modulus: m, cols: c, generators, count }
    }

    /// Exact cardinality of the homogeneous solution set.
    pub fn solve_count(&self) -> BigUint {
        self.kernel().count
    }
}

/// Solution set of a homogeneous system over Z/m, as a generator list plus
/// the exact count of distinct Z/m-combinations. Over composite m the set
/// is not free, so no "dimension" is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    modulus: u64,
    cols: usize,
    generators: Vec<Vec<u64>>,
    count: BigUint,
}

impl SolutionSpace {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub fn count(&self) -> &BigUint {
        &self.count
    }

    /// Membership test by reduction against the Howell form of the
    /// generator matrix.
    pub fn contains(&self, v: &[u64]) -> bool {
        if v.len() != self.cols {
            return false;
        }
        let h = howell_rows(self.generators.clone(), self.modulus, self.cols);
        span_reduces_to_zero(&h, v, self.modulus)
    }
}

/// Reduce `v` against Howell rows `h`; true iff v lies in their span.
fn span_reduces_to_zero(h: &[Vec<u64>], v: &[u64], m: u64) -> bool {
    let mut v = v.to_vec();
    for row in h {
        let Some(c) = row.iter().position(|&e| e != 0) else { continue };
        if v[c] == 0 {
            continue;
        }
        let d = row[c];
        if v[c] % d != 0 {
            return false;
        }
        let q = v[c] / d;
        for (vi, &ri) in v.iter_mut().zip(row) {
            *vi = (*vi + m - mulmod(q, ri, m)) % m;
        }
    }
    v.iter().all(|&e| e == 0)
}

/// Core Howell reduction: returns the nonzero canonical rows, pivot columns
/// strictly increasing.
fn howell_rows(rows: Vec<Vec<u64>>, m: u64, cols: usize) -> Vec<Vec<u64>> {
    let mut work: Vec<Vec<u64>> = rows.into_iter().filter(|r| r.iter().any(|&e| e != 0)).collect();
    let mut previous: Option<Vec<Vec<u64>>> = None;
    // Echelonize, then append annihilator rows of non-unit pivots; repeat
    // until the form stabilizes. Each pass can only add pivots in later
    // columns, so this terminates quickly.
    for _ in 0..=cols + 1 {
        echelonize(&mut work, m, cols);
        if previous.as_ref() == Some(&work) {
            return work;
        }
        previous = Some(work.clone());
        let mut extra = Vec::new();
        for row in &work {
            let Some(c) = row.iter().position(|&e| e != 0) else { continue };
            let d = row[c];
            if d > 1 {
                let t = m / d;
                let ann: Vec<u64> = row.iter().map(|&e| mulmod(t, e, m)).collect();
                if ann.iter().any(|&e| e != 0) {
                    extra.push(ann);
                }
            }
        }
        if extra.is_empty() {
            return work;
        }
        work.extend(extra);
    }
    unreachable!("howell reduction failed to stabilize");
}

fn echelonize(work: &mut Vec<Vec<u64>>, m: u64, cols: usize) {
    let mut pivot_row = 0;
    for c in 0..cols {
        if pivot_row >= work.len() {
            break;
        }
        let Some(found) = (pivot_row..work.len()).find(|&i| work[i][c] != 0) else {
            continue;
        };
        work.swap(pivot_row, found);
        for i in pivot_row + 1..work.len() {
            if work[i][c] == 0 {
                continue;
            }
            // 2x2 unimodular combination zeroing work[i][c]:
            // [s t; -b/g a/g] with s*a + t*b = g.
            let a = work[pivot_row][c] as i128;
            let b = work[i][c] as i128;
            let (g, s, t) = egcd(a, b);
            let (u, v) = (a / g, b / g);
            let mm = m as i128;
            let (s, t) = (s.rem_euclid(mm) as u64, t.rem_euclid(mm) as u64);
            let (u, v) = (u.rem_euclid(mm) as u64, v.rem_euclid(mm) as u64);
            for j in 0..cols {
                let (x, y) = (work[pivot_row][j], work[i][j]);
                let new_p = (mulmod(s, x, m) + mulmod(t, y, m)) % m;
                let new_i = (mulmod(u, y, m) + m - mulmod(v, x, m) % m) % m;
                work[pivot_row][j] = new_p;
                work[i][j] = new_i;
            }
            debug_assert_eq!(work[i][c], 0);
        }
        // Scale so the pivot is the canonical divisor gcd(a, m).
        let a = work[pivot_row][c];
        let w = unit_annihilating_lift(a, m);
        if w != 1 {
            for j in 0..cols {
                work[pivot_row][j] = mulmod(w, work[pivot_row][j], m);
            }
        }
        debug_assert_eq!(work[pivot_row][c], gcd(a, m));
        // Reduce entries above the pivot into [0, d).
        let d = work[pivot_row][c];
        for i in 0..pivot_row {
            let q = work[i][c] / d;
            if q != 0 {
                for j in 0..cols {
                    let sub = mulmod(q, work[pivot_row][j], m);
                    work[i][j] = (work[i][j] + m - sub) % m;
                }
            }
        }
        pivot_row += 1;
    }
    work.retain(|r| r.iter().any(|&e| e != 0));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_count(m: &ModMatrix) -> u64 {
        let md = m.modulus();
        let c = m.cols();
        let total = md.pow(c as u32);
        let mut n = 0;
        for idx in 0..total {
            let mut v = Vec::with_capacity(c);
            let mut k = idx;
            for _ in 0..c {
                v.push(k % md);
                k /= md;
            }
            if m.mul_vec(&v).iter().all(|&e| e == 0) {
                n += 1;
            }
        }
        n
    }

    #[test]
    fn identity_is_already_canonical() {
        let id = ModMatrix::identity(5, 2);
        assert_eq!(id.howell_form(), id);
    }

    #[test]
    fn rank_one_pair_reduces_to_single_row() {
        let m = ModMatrix::from_rows(3, &[vec![1, 2, 1, 2], vec![1, 2, 1, 2]]).unwrap();
        let h = m.howell_form();
        assert_eq!(h.row(0), &[1, 2, 1, 2]);
        assert_eq!(h.row(1), &[0, 0, 0, 0]);
        assert_eq!(h.rows(), 2);
    }

    #[test]
    fn kernel_count_mod3_rank1() {
        let m = ModMatrix::from_rows(3, &[vec![1, 2, 1, 2], vec![1, 2, 1, 2]]).unwrap();
        assert_eq!(m.solve_count(), BigUint::from(27u32));
    }

    #[test]
    fn kernel_of_zero_row_is_everything() {
        let m = ModMatrix::zero(5, 1, 3);
        assert_eq!(m.solve_count(), BigUint::from(125u32));
    }

    #[test]
    fn kernel_2x0_mod6() {
        let m = ModMatrix::from_rows(6, &[vec![2, 0]]).unwrap();
        // 2x = 0 mod 6 has x in {0, 3}; y free: 12 solutions.
        assert_eq!(m.solve_count(), BigUint::from(12u32));
        assert_eq!(brute_count(&m), 12);
    }

    #[test]
    fn identity_kernel_is_trivial() {
        for m in [2u64, 4, 6, 7] {
            let id = ModMatrix::identity(m, 3);
            assert_eq!(id.solve_count(), BigUint::from(1u32));
        }
    }

    #[test]
    fn kernel_generators_satisfy_system() {
        let m = ModMatrix::from_rows(6, &[vec![2, 3, 4], vec![1, 5, 0]]).unwrap();
        let k = m.kernel();
        for g in k.generators() {
            assert!(m.mul_vec(g).iter().all(|&e| e == 0), "generator {g:?} fails");
        }
        assert_eq!(k.count(), &BigUint::from(brute_count(&m)));
    }

    #[test]
    fn howell_is_complete_for_non_unit_pivot() {
        // Span of (2,1) mod 4 contains (0,2), which needs its own row.
        let m = ModMatrix::from_rows(4, &[vec![2, 1]]).unwrap();
        let h = m.howell_form();
        assert_eq!(h.rows(), 2);
        assert_eq!(h.row(0), &[2, 1]);
        assert_eq!(h.row(1), &[0, 2]);
    }

    #[test]
    fn membership_via_canonical_form() {
        let m = ModMatrix::from_rows(4, &[vec![2, 1]]).unwrap();
        let k = ModMatrix::from_rows(4, &[vec![1, 2]]).unwrap().kernel();
        // kernel of [1 2] mod 4: vectors (x,y) with x = -2y: gen (2,1).
        assert!(k.contains(&[2, 1]));
        assert!(k.contains(&[0, 2]));
        assert!(!k.contains(&[1, 1]));
        let _ = m;
    }

    #[test]
    fn unit_lift_examples() {
        assert_eq!(unit_annihilating_lift(2, 6), 1); // gcd already
        let w = unit_annihilating_lift(4, 6); // gcd(4,6)=2, need w*4=2 mod 6
        assert_eq!(gcd(w, 6), 1);
        assert_eq!(mulmod(w, 4, 6), 2);
        let w = unit_annihilating_lift(6, 8); // gcd=2: w*6=2 mod 8 -> w=3
        assert_eq!(mulmod(w, 6, 8), 2);
        assert_eq!(gcd(w, 8), 1);
    }
}
