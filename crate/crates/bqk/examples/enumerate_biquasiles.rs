//! Exhaustively enumerate all biquasiles of small order: pairs of Latin
//! squares satisfying the exchange axioms.
//!
//!     cargo run --release --example enumerate_biquasiles

use bqk::enumerate_biquasiles;

fn main() {
    for order in 1..=3 {
        let all = enumerate_biquasiles(order).unwrap();
        println!("order {order}: {} biquasiles", all.len());
    }
    let order2 = enumerate_biquasiles(2).unwrap();
    println!("\nthe order-2 biquasiles:");
    for b in &order2 {
        println!("{}", b.render_block_matrix());
    }
}
