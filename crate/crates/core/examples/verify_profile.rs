//! Every named claim of the quick profile, as the `verify-all` command
//! prints it.

use symreal::verify::{reports_table, run_all, Profile};

fn main() -> symreal::Result<()> {
    let reports = run_all(Profile::Quick, None)?;
    print!("{}", reports_table(&reports));
    let bad = reports.iter().filter(|r| !r.equal).count();
    println!("{} claims, {bad} mismatches", reports.len());
    Ok(())
}
