//! Shared helpers for integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use bqk::biquasile::Biquasile;
use bqk::boltzmann::{BoltzmannWeight, WeightJson};
use bqk::diagram::LinkDiagram;

/// The order-2 biquasile with star rows (1,2),(2,1) and dot rows
/// (2,1),(1,2); the running example for the weight tables.
pub fn affine_order2() -> Biquasile {
    let star = vec![vec![1u8, 2], vec![2, 1]];
    let dot = vec![vec![2u8, 1], vec![1, 2]];
    Biquasile::from_tables(&star, &dot).unwrap()
}

/// Weight from sparse "x,y,z" -> value entries.
pub fn weight(modulus: u64, entries: &[(&str, u64)]) -> BoltzmannWeight {
    let coeffs = entries.iter().map(|&(k, v)| (k.to_string(), v)).collect();
    BoltzmannWeight::from_json(&WeightJson { order: 2, modulus, coeffs }).unwrap()
}

/// Kauffman-bracket polynomial normalized by writhe: a classical oriented
/// link invariant (up to a fixed global mirror convention), used as an
/// independent isotopy oracle for diagram machinery and fixtures.
pub fn kauffman_f(d: &LinkDiagram) -> BTreeMap<i64, i64> {
    let n = d.crossing_count();
    let crossings = d.crossings();
    let e = d.edge_count() as usize;
    if n == 0 {
        return BTreeMap::from([(0, 1)]);
    }
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut bracket: BTreeMap<i64, i64> = BTreeMap::new();
    for state in 0..(1u32 << n) {
        let mut parent: Vec<usize> = (0..=e).collect();
        let union = |p: &mut Vec<usize>, a: u32, b: u32| {
            let (ra, rb) = (find(p, a as usize), find(p, b as usize));
            if ra != rb {
                p[ra] = rb;
            }
        };
        let mut exp: i64 = 0;
        for (i, t) in crossings.iter().enumerate() {
            if state >> i & 1 == 0 {
                exp += 1;
                union(&mut parent, t[0], t[1]);
                union(&mut parent, t[2], t[3]);
            } else {
                exp -= 1;
                union(&mut parent, t[0], t[3]);
                union(&mut parent, t[1], t[2]);
            }
        }
        let mut roots = std::collections::BTreeSet::new();
        for x in 1..=e {
            roots.insert(find(&mut parent, x));
        }
        let loops = roots.len() as i64;
        let mut terms: BTreeMap<i64, i64> = BTreeMap::from([(exp, 1)]);
        for _ in 0..loops - 1 {
            let mut next: BTreeMap<i64, i64> = BTreeMap::new();
            for (&k, &v) in &terms {
                *next.entry(k + 2).or_default() -= v;
                *next.entry(k - 2).or_default() -= v;
            }
            terms = next;
        }
        for (k, v) in terms {
            *bracket.entry(k).or_default() += v;
        }
    }
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let mut out = BTreeMap::new();
    for (k, v) in bracket {
        if v != 0 {
            out.insert(k - 3 * w, v * sign);
        }
    }
    out
}

pub fn jones_string(d: &LinkDiagram) -> String {
    format!("{:?}", kauffman_f(d))
}

/// Exponent span of the Kauffman polynomial. Equals 4c for an alternating
/// link of crossing number c, and is at most 4c for any diagram with c
/// crossings, so it certifies lower bounds on crossing number.
#[allow(dead_code)]
pub fn kauffman_span(d: &LinkDiagram) -> i64 {
    let f = kauffman_f(d);
    match (f.keys().next(), f.keys().last()) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => 0,
    }
}
