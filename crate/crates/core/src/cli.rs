//! Command-line front end. Exit codes: 0 when every comparison is equal,
//! 1 on any mismatch, 2 on usage errors or exceeded caps.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::brutegroups::{count_involutions, so_odd_group, sp_group, DEFAULT_MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::exact::{rat_string, sp_order_factor, Rat};
use crate::ffcensus::census;
use crate::jordan::{degree_sum_direct, degree_sum_series};
use crate::partitions::enumerate_partitions;
use crate::qseries::{named_series, SeriesName};
use crate::symbols::{enumerate_symbols, symbol_degree};
use crate::unipotent::{unipotent_degree, Family};
use crate::verify::{reports_table, run_all, run_verify, Claim, Profile, VerificationReport, VerifyParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "symreal", version, about = "Exact degree sums, polynomial censuses and involution counts")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Series truncation order override.
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Element budget for brute-force group closure.
    #[arg(long, global = true)]
    pub max_elements: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnipFamily {
    Sp,
    Gl,
    U,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SumMethod {
    Direct,
    Series,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Sp,
    So,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Brute,
    Series,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Counts of self-dual irreducibles and dual pairs by degree.
    Census {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        max_degree: usize,
    },
    /// Sum of unipotent character degrees.
    UnipotentSum {
        #[arg(long, value_enum)]
        family: UnipFamily,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        /// Also list every degree.
        #[arg(long)]
        list: bool,
    },
    /// Character degree sum of SO(2n+1, q).
    DegreeSum {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SumMethod::Direct)]
        method: SumMethod,
    },
    /// Number of g with g² = 1 in Sp(2n, q) or SO(2n+1, q).
    Involutions {
        #[arg(long, value_enum)]
        group: GroupKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = CountMethod::Brute)]
        method: CountMethod,
    },
    /// Check one claim.
    Verify {
        claim: String,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        /// Number of variables (Schur identities).
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Check every claim of a profile.
    VerifyAll {
        #[arg(long, default_value = "quick")]
        profile: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledDegree {
    pub label: String,
    #[serde(with = "crate::exact::bigint_str")]
    pub degree: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentSumOutput {
    pub family: UnipFamily,
    pub q: u64,
    pub n: usize,
    #[serde(with = "crate::exact::bigint_str")]
    pub sum: BigInt,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub degrees: Vec<LabelledDegree>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesSumOutput {
    pub q: u64,
    pub n: usize,
    pub order: usize,
    pub total: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionOutput {
    pub group: GroupKind,
    pub n: usize,
    pub q: u64,
    pub method: CountMethod,
    pub count: String,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize") + "\n"
}

fn unipotent_sum(family: UnipFamily, q: u64, n: usize, list: bool) -> Result<UnipotentSumOutput> {
    crate::exact::prime_power(q).ok_or(Error::InvalidFieldSize(q))?;
    let mut degrees = Vec::new();
    match family {
        UnipFamily::Sp => {
            for sym in enumerate_symbols(n)? {
                degrees.push(LabelledDegree { label: sym.to_string(), degree: symbol_degree(&sym, q)? });
            }
        }
        UnipFamily::Gl | UnipFamily::U => {
            let fam = if family == UnipFamily::Gl { Family::GL } else { Family::U };
            for lambda in enumerate_partitions(n) {
                let d = unipotent_degree(fam, &lambda, q)?;
                degrees.push(LabelledDegree { label: lambda.to_string(), degree: d.degree });
            }
        }
    }
    let sum = degrees.iter().map(|d| &d.degree).sum();
    if !list {
        degrees.clear();
    }
    Ok(UnipotentSumOutput { family, q, n, sum, degrees })
}

fn involutions(group: GroupKind, n: usize, q: u64, method: CountMethod, budget: usize) -> Result<InvolutionOutput> {
    let odd = q % 2 == 1;
    if group == GroupKind::So && !odd && method == CountMethod::Brute {
        return Err(Error::Parameter("the orthogonal group is built for odd q only".into()));
    }
    let count = match method {
        CountMethod::Brute => {
            let g = match group {
                GroupKind::Sp => sp_group(n, q, budget)?,
                GroupKind::So => so_odd_group(n, q, budget)?,
            };
            rat_string(&Rat::from_integer(count_involutions(&g).into()))
        }
        CountMethod::Series => {
            if group == GroupKind::Sp && odd {
                return Err(Error::Parameter("no involution series for Sp(2n, q) with q odd".into()));
            }
            let name = if odd { SeriesName::FgsSoOdd } else { SeriesName::FgsSpEven };
            let s = named_series(name, q, None, n)?;
            rat_string(&(s.coeff(n)? * Rat::from_integer(sp_order_factor(q, n))))
        }
    };
    Ok(InvolutionOutput { group, n, q, method, count })
}

fn report_output(reports: &[VerificationReport], format: Format, out: &mut impl Write) -> std::io::Result<i32> {
    match format {
        Format::Json => write!(out, "{}", to_json(&reports))?,
        Format::Table => write!(out, "{}", reports_table(reports))?,
    }
    Ok(if reports.iter().all(|r| r.equal) { EXIT_OK } else { EXIT_MISMATCH })
}

fn dispatch(cli: Cli, out: &mut impl Write) -> Result<std::io::Result<i32>> {
    let budget = cli.max_elements.unwrap_or(DEFAULT_MAX_ELEMENTS);
    let format = cli.format;
    let text = match cli.command {
        Command::Census { q, max_degree } => {
            let t = census(q, max_degree)?;
            match format {
                Format::Json => to_json(&t),
                Format::Table => t.to_table(),
            }
        }
        Command::UnipotentSum { family, q, n, list } => {
            let o = unipotent_sum(family, q, n, list)?;
            match format {
                Format::Json => to_json(&o),
                Format::Table => {
                    let mut s = String::new();
                    for d in &o.degrees {
                        s.push_str(&format!("{:<24} {}\n", d.label, d.degree));
                    }
                    s + &format!("{}\n", o.sum)
                }
            }
        }
        Command::DegreeSum { q, n, method } => match method {
            SumMethod::Direct => {
                let d = degree_sum_direct(q, n)?;
                match format {
                    Format::Json => to_json(&d),
                    Format::Table => format!("{}\n", d.total),
                }
            }
            SumMethod::Series => {
                let order = cli.order.unwrap_or(n).max(n);
                let s = degree_sum_series(q, order)?;
                let v = s.coeff(n)? * Rat::from_integer(sp_order_factor(q, n));
                if !crate::exact::is_positive_integer(&v) {
                    return Err(Error::NonIntegral(format!("series degree sum {v}")));
                }
                match format {
                    Format::Json => to_json(&SeriesSumOutput { q, n, order, total: v.to_integer().to_string() }),
                    Format::Table => format!("{}\n", v.to_integer()),
                }
            }
        },
        Command::Involutions { group, n, q, method } => {
            let o = involutions(group, n, q, method, budget)?;
            match format {
                Format::Json => to_json(&o),
                Format::Table => format!("{}\n", o.count.trim_end_matches("/1")),
            }
        }
        Command::Verify { claim, q, n, vars } => {
            let claim: Claim = claim.parse()?;
            let params = VerifyParams { q, n, order: cli.order, vars, max_elements: cli.max_elements };
            let r = run_verify(claim, &params)?;
            return Ok(report_output(&[r], format, out));
        }
        Command::VerifyAll { profile } => {
            let profile: Profile = profile.parse()?;
            let reports = run_all(profile, cli.max_elements)?;
            return Ok(report_output(&reports, format, out));
        }
    };
    Ok(write!(out, "{text}").map(|_| EXIT_OK))
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(Ok(code)) => code,
        Ok(Err(io)) => {
            let _ = writeln!(err, "error: {io}");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
