//! Scan every affine biquasile over Z/n (n up to 4 here; the acceptance
//! suite runs n up to 5 and an opt-in test covers n up to 7) and every
//! γ against the bundled corpus, classifying the linear-weight
//! enhancement of each work unit.
//!
//!     cargo run --release --example conjecture_scan

use bqk::boltzmann::{scan_conjecture, Predicate};
use bqk::corpus;
use bqk::diagram::DualGraphDiagram;

fn main() {
    let corpus: Vec<(String, DualGraphDiagram)> = corpus::knots_up_to(7)
        .into_iter()
        .chain(corpus::links_up_to(7))
        .map(|(n, d)| (n.clone(), d.to_dual_graph().unwrap()))
        .collect();
    println!("{} diagrams in the corpus", corpus.len());

    let records = scan_conjecture(&corpus, &[2, 3, 4]);
    let mut trivial = 0;
    let mut constant = 0;
    let mut counterexamples = 0;
    for r in &records {
        match r.predicate {
            Predicate::TrivialZero => trivial += 1,
            Predicate::Constant => constant += 1,
            Predicate::Counterexample => {
                counterexamples += 1;
                println!("counterexample: {r:?}");
            }
        }
    }
    println!("{} work units scanned", records.len());
    println!("  all-zero weight multisets: {trivial}");
    println!("  constant nonzero multisets: {constant}");
    println!("  counterexamples: {counterexamples}");
}
