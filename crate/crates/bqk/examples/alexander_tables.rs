//! Build modular affine biquasiles and print their operation tables as
//! block matrices (star block left, dot block right).
//!
//!     cargo run --example alexander_tables

use bqk::biquasile::{check_axioms, AlexanderParams, Biquasile, Verdict};

fn main() {
    for (m, d, s, n) in [(3u64, 1, 1, 2), (3, 2, 2, 1), (5, 2, 3, 4)] {
        let params = AlexanderParams::new(m, d, s, n).unwrap();
        let b = Biquasile::alexander(params);
        println!("Z/{m} with d={d}, s={s}, n={n}:");
        print!("{}", b.render_block_matrix());
        let verdict = check_axioms(&b.star_rows(), &b.dot_rows()).unwrap();
        assert_eq!(verdict, Verdict::Pass);
        println!("axioms: pass");
        let [ldiv_star, _, _, rdiv_dot] = b.derived_divisions();
        println!("left star division table: {ldiv_star:?}");
        println!("right dot division table: {rdiv_dot:?}");
        println!();
    }
}
