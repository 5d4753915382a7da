//! Self-dual irreducible polynomials and dual pairs over a small field.
//!
//! cargo run --example census -- 3

use symreal::ffcensus::{census, dual_pairs, self_dual_irreducibles};

fn main() -> symreal::Result<()> {
    let q: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    print!("{}", census(q, 8)?.to_table());

    println!("\nself-dual irreducibles of degree 2 and 4:");
    for d in [2, 4] {
        for f in self_dual_irreducibles(q, d)? {
            println!("  {f}");
        }
    }
    println!("\ndual pairs of degree 2:");
    for (g, h) in dual_pairs(q, 2)? {
        println!("  {g}  <->  {h}");
    }
    Ok(())
}
