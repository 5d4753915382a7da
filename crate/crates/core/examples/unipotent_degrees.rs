//! Unipotent character degrees of Sp(2n, q) from symbols, and of GL(n, q)
//! and U(n, q) from partitions.

use symreal::partitions::enumerate_partitions;
use symreal::symbols::{enumerate_symbols, symbol_degree, unipotent_degree_sum};
use symreal::unipotent::{unipotent_degree, unipotent_degree_sum as gl_u_sum, Family};

fn main() -> symreal::Result<()> {
    let q = 3;
    let n = 2;
    println!("Sp({}, {q}):", 2 * n);
    for sym in enumerate_symbols(n)? {
        println!("  {:<16} defect {}  degree {}", sym.to_string(), sym.defect(), symbol_degree(&sym, q)?);
    }
    println!("  sum {}", unipotent_degree_sum(q, n)?);

    for family in [Family::GL, Family::U] {
        println!("\n{family}(3, {q}):");
        for lambda in enumerate_partitions(3) {
            println!("  {:<10} {}", lambda.to_string(), unipotent_degree(family, &lambda, q)?.degree);
        }
        println!("  sum {}", gl_u_sum(family, 3, q)?);
    }
    Ok(())
}
