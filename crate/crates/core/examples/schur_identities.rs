//! Schur function sums under x_i = z^i, and the principal specialization
//! against a tableau count.

use num_traits::ToPrimitive;
use symreal::exact::{pow_i, rat_string, ratio, Rat};
use symreal::partitions::{enumerate_partitions, principal_specialization, schur_poly_oracle};
use symreal::qseries::TruncatedSeries;
use symreal::verify::{schur_sum_lhs, schur_sum_rhs};

fn show(s: &TruncatedSeries) -> String {
    s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn main() -> symreal::Result<()> {
    for signed in [false, true] {
        let lhs = schur_sum_lhs(3, 8, signed);
        let rhs = schur_sum_rhs(3, 8, signed)?;
        println!("signed = {signed}: {}  ({})", show(&lhs), if lhs == rhs { "equal" } else { "DIFFERENT" });
    }

    let x = ratio(1, 3);
    let values: Vec<Rat> = (0..30).map(|i| pow_i(&x, i)).collect();
    for lambda in enumerate_partitions(3) {
        let closed = principal_specialization(&lambda, &x)?;
        let oracle = schur_poly_oracle(&lambda, &values);
        let gap = (&closed - &oracle).to_f64().unwrap_or(f64::NAN);
        println!("{lambda:<8} closed {:<12} 30-variable gap {gap:e}", rat_string(&closed));
    }
    Ok(())
}
