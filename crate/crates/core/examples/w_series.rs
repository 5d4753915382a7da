//! The generating function of Sp(2n, q) unipotent degree sums, once by
//! enumerating symbols and once from its infinite-product form.

use symreal::exact::{rat_string, sp_order_factor, Rat};
use symreal::qseries::{named_series, SeriesName};
use symreal::symbols::w_series_enum;

fn main() -> symreal::Result<()> {
    let order = 5;
    for q in [2, 3, 4, 5] {
        let enumerated = w_series_enum(q, order)?;
        let closed = named_series(SeriesName::WClosed, q, None, order)?;
        println!("q = {q}: {}", if enumerated == closed { "equal" } else { "DIFFERENT" });
        for n in 0..=order {
            let c = enumerated.coeff(n)?;
            let sum = c * Rat::from_integer(sp_order_factor(q, n));
            println!("  u^{n}: {:<28} degree sum {}", rat_string(c), sum);
        }
    }
    Ok(())
}
