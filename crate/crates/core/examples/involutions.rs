//! Counting g with g² = 1 in explicit matrix groups and comparing with the
//! character degree sum.

use std::time::Instant;

use symreal::brutegroups::{count_involutions, so_odd_group, sp_group, DEFAULT_MAX_ELEMENTS};
use symreal::jordan::degree_sum_direct;

fn main() -> symreal::Result<()> {
    for (n, q) in [(1, 2), (2, 2), (1, 4), (3, 2)] {
        let t = Instant::now();
        let g = sp_group(n, q, DEFAULT_MAX_ELEMENTS)?;
        let inv = count_involutions(&g);
        println!(
            "Sp({}, {q}): order {:>8}, involutions {:>5}, degree sum {:>5}  ({} ms)",
            2 * n,
            g.order(),
            inv,
            degree_sum_direct(q, n)?.total,
            t.elapsed().as_millis()
        );
    }
    for (n, q) in [(1, 3), (1, 5), (2, 3)] {
        let g = so_odd_group(n, q, DEFAULT_MAX_ELEMENTS)?;
        println!(
            "SO({}, {q}): order {:>8}, involutions {:>5}, degree sum {:>5}",
            2 * n + 1,
            g.order(),
            count_involutions(&g),
            degree_sum_direct(q, n)?.total
        );
    }
    // odd q breaks the equality for Sp: SL(2, 3) has only ±I
    let g = sp_group(1, 3, DEFAULT_MAX_ELEMENTS)?;
    println!("Sp(2, 3): involutions {}", count_involutions(&g));
    Ok(())
}
