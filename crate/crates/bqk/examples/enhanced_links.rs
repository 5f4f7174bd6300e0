//! The Hopf link and the (2,4)-torus link share the counting invariant 8
//! over the order-2 biquasile; the Boltzmann enhancement with a Z/5 weight
//! tells them apart.
//!
//!     cargo run --example enhanced_links

use bqk::biquasile::Biquasile;
use bqk::boltzmann::{coloring_weight, enhanced_polynomial, weight_triples, BoltzmannWeight};
use bqk::coloring::{count_colorings, enumerate_colorings};
use bqk::corpus;

fn main() {
    let star = vec![vec![1u8, 2], vec![2, 1]];
    let dot = vec![vec![2u8, 1], vec![1, 2]];
    let b = Biquasile::from_tables(&star, &dot).unwrap();
    let mut phi = BoltzmannWeight::zero(2, 5).to_json();
    for (k, v) in [("1,1,1", 2u64), ("1,2,2", 3), ("2,1,1", 4), ("2,2,2", 3)] {
        phi.coeffs.insert(k.into(), v);
    }
    let phi = BoltzmannWeight::from_json(&phi).unwrap();

    for name in ["L2a1", "L4a1"] {
        let g = corpus::by_name(name).unwrap().to_dual_graph().unwrap();
        println!("{name}: counting invariant {}", count_colorings(&g, &b));
    }
    println!();
    for name in ["L2a1", "L4a1"] {
        let g = corpus::by_name(name).unwrap().to_dual_graph().unwrap();
        let p = enhanced_polynomial(&g, &b, &phi);
        println!("{name}: enhanced polynomial {p}");
        for f in enumerate_colorings(&g, &b).iter().take(3) {
            println!(
                "  coloring {:?}: crossing triples {:?}, weight {}",
                f.colors,
                weight_triples(&g, f),
                coloring_weight(&g, &phi, f)
            );
        }
    }
}
