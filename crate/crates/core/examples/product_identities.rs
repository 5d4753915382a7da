//! Power-series identities built from polynomial census counts.

use symreal::exact::e_of;
use symreal::ffcensus::{series_string, verify_dualgenfn, DualPart};
use symreal::jordan::guexpand_lhs;
use symreal::qseries::{named_series, SeriesName};

fn main() -> symreal::Result<()> {
    for q in [2, 3, 4, 5] {
        for part in [DualPart::A, DualPart::B] {
            let r = verify_dualgenfn(q, 6, part)?;
            println!("q = {q} {part:?}: equal = {}  [{}]", r.equal, r.lhs_string());
        }
    }
    println!();
    for q in [2, 3] {
        let lhs = guexpand_lhs(q, 4)?;
        let rhs = named_series(SeriesName::GuexpandRhs, q, Some(e_of(q)), 4)?;
        println!("q = {q} GL/U product: equal = {}\n  {}", lhs == rhs, series_string(&lhs));
    }
    Ok(())
}
