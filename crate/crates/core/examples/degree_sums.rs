//! Character degree sums of SO(2n+1, q) through semisimple labels, compared
//! with the generating-function route.
//!
//! cargo run --example degree_sums -- 3 2

use symreal::jordan::{degree_sum_direct, degree_sum_from_series, enumerate_labels};

fn main() -> symreal::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().ok());
    let q = args.next().flatten().unwrap_or(3);
    let n = args.next().flatten().unwrap_or(2) as usize;

    println!("{} semisimple labels for SO({}, {q})", enumerate_labels(q, n)?.len(), 2 * n + 1);
    let direct = degree_sum_direct(q, n)?;
    for sub in &direct.labels {
        println!("  {:<40} {:>3} characters, degrees sum to {}", sub.label, sub.characters, sub.degree_sum);
    }
    println!("{} characters, degree sum {}", direct.characters, direct.total);
    println!("from the generating function: {}", degree_sum_from_series(q, n)?);
    Ok(())
}
