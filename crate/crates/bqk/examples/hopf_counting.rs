//! The counting invariant of the Hopf link over the affine Z/3 biquasile,
//! computed two ways: backtracking over region colorings, and as the
//! kernel size of the homogeneous linear system read off the crossing
//! relations.
//!
//!     cargo run --example hopf_counting

use bqk::biquasile::{AlexanderParams, Biquasile};
use bqk::coloring::{alexander_matrix, count_colorings, count_colorings_alexander, presentation};
use bqk::diagram::LinkDiagram;

fn main() {
    let hopf = LinkDiagram::parse_pd("PD[X[4,1,3,2],X[2,3,1,4]]").unwrap();
    let g = hopf.to_dual_graph().unwrap();
    println!("Hopf link: {} crossings, {} regions", g.crossings.len(), g.regions);
    println!("presentation: {}", presentation(&g).render(false));

    let params = AlexanderParams::new(3, 1, 1, 2).unwrap();
    let b = Biquasile::alexander(params);
    let by_search = count_colorings(&g, &b);
    let by_kernel = count_colorings_alexander(&g, params);
    println!("colorings by backtracking:    {by_search}");
    println!("colorings by kernel counting: {by_kernel}");

    let matrix = alexander_matrix(&g, params);
    let reduced = matrix.howell_form();
    println!("coefficient matrix rows:");
    for i in 0..matrix.rows() {
        println!("  {:?}", matrix.row(i));
    }
    println!("row-reduced:");
    for i in 0..reduced.rows() {
        println!("  {:?}", reduced.row(i));
    }
    let nonzero = (0..reduced.rows()).filter(|&i| reduced.row(i).iter().any(|&e| e != 0)).count();
    println!("nonzero rows after reduction: {nonzero}");
}
