//! Solve for every Boltzmann weight on the order-2 biquasile with values
//! in Z/5: the axiom system has exactly 125 solutions, including the
//! sample weight 2χ(1,1,1) + 3χ(1,2,2) + 4χ(2,1,1) + 3χ(2,2,2).
//!
//!     cargo run --example weight_space

use bqk::biquasile::Biquasile;
use bqk::boltzmann::{check_weight, solve_weights, BoltzmannWeight, WeightVerdict};

fn main() {
    let star = vec![vec![1u8, 2], vec![2, 1]];
    let dot = vec![vec![2u8, 1], vec![1, 2]];
    let b = Biquasile::from_tables(&star, &dot).unwrap();

    let sol = solve_weights(&b, 5);
    println!("weights over Z/5: {}", sol.count());
    println!("generators: {}", sol.generators().len());
    for g in sol.generators() {
        let w = BoltzmannWeight::new(2, 5, g.clone()).unwrap();
        assert_eq!(check_weight(&b, &w).unwrap(), WeightVerdict::Pass);
    }
    println!("all generators satisfy the weight axioms");

    let mut sample = BoltzmannWeight::zero(2, 5).to_json();
    sample.coeffs.insert("1,1,1".into(), 2);
    sample.coeffs.insert("1,2,2".into(), 3);
    sample.coeffs.insert("2,1,1".into(), 4);
    sample.coeffs.insert("2,2,2".into(), 3);
    let w = BoltzmannWeight::from_json(&sample).unwrap();
    println!("sample weight in solution set: {}", sol.contains(w.coeff_vector()));

    for m in [2u64, 3, 4, 6] {
        println!("weights over Z/{m}: {}", solve_weights(&b, m).count());
    }
}
