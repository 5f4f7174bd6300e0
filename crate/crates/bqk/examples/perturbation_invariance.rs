//! Apply R1/R2 perturbations to a diagram and watch the counting invariant
//! and enhanced polynomial stay put while the diagram grows.
//!
//!     cargo run --example perturbation_invariance

use bqk::biquasile::Biquasile;
use bqk::boltzmann::{enhanced_polynomial, BoltzmannWeight, WeightJson};
use bqk::coloring::count_colorings;
use bqk::corpus;
use bqk::diagram::ReidemeisterMove;

fn main() {
    let star = vec![vec![1u8, 2], vec![2, 1]];
    let dot = vec![vec![2u8, 1], vec![1, 2]];
    let b = Biquasile::from_tables(&star, &dot).unwrap();
    let coeffs = [("1,1,1", 2u64), ("1,2,2", 3), ("2,1,1", 4), ("2,2,2", 3)]
        .iter()
        .map(|&(k, v)| (k.to_string(), v))
        .collect();
    let phi = BoltzmannWeight::from_json(&WeightJson { order: 2, modulus: 5, coeffs }).unwrap();

    let mut d = corpus::by_name("L4a1").unwrap();
    let g = d.to_dual_graph().unwrap();
    println!(
        "L4a1: {} crossings, count {}, enhanced {}",
        d.crossing_count(),
        count_colorings(&g, &b),
        enhanced_polynomial(&g, &b, &phi)
    );
    let moves = [
        (ReidemeisterMove::R1Plus, 2),
        (ReidemeisterMove::R2, 5),
        (ReidemeisterMove::R1Minus, 1),
        (ReidemeisterMove::R2, 9),
    ];
    for (mv, site) in moves {
        d = d.perturb(mv, site).unwrap();
        let g = d.to_dual_graph().unwrap();
        println!(
            "after {mv:?} at edge {site}: {} crossings, count {}, enhanced {}",
            d.crossing_count(),
            count_colorings(&g, &b),
            enhanced_polynomial(&g, &b, &phi)
        );
    }
}
