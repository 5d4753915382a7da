//! Unipotent character degrees of `GL(n, Q)` and `U(n, Q)` from hook lengths.
//!
//! `Q` is always the effective field size: `q^d` for a `GL(m, q^d)` factor
//! and `q^d` for a unitary factor `U(m, q^d)` attached to a degree-`2d`
//! self-dual polynomial.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int_pow, is_positive_integer, Rat};
use crate::partitions::{enumerate_partitions, Partition};
use crate::qseries::TruncatedSeries;

/// Largest series order accepted by [`unipotent_sum_series`].
pub const MAX_SERIES_ORDER: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "gl")]
    GL,
    #[serde(rename = "u")]
    U,
}

impl Family {
    /// `ε` in `Q^i - ε^i`: `+1` for `GL`, `-1` for `U`.
    fn epsilon(self) -> i64 {
        match self {
            Family::GL => 1,
            Family::U => -1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::GL => "gl",
            Family::U => "u",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" | "GL" => Ok(Family::GL),
            "u" | "U" => Ok(Family::U),
            _ => Err(Error::Parameter(format!("unknown family `{s}`"))),
        }
    }
}

fn check_field_size(big_q: u64) -> Result<()> {
    if big_q < 2 {
        return Err(Error::InvalidFieldSize(big_q));
    }
    Ok(())
}

/// `ε^h` as an integer.
fn eps_pow(eps: i64, h: usize) -> i64 {
    if eps == -1 && h % 2 == 1 {
        -1
    } else {
        1
    }
}

fn hook_delta(family: Family, lambda: &Partition, big_q: u64) -> Result<Rat> {
    check_field_size(big_q)?;
    let eps = family.epsilon();
    let mut den = BigInt::one();
    for h in lambda.hooks() {
        den *= int_pow(big_q, h as u32) - eps_pow(eps, h);
    }
    let num = int_pow(big_q, lambda.conjugate().a_stat() as u32);
    Ok(Rat::new(num, den))
}

/// `Q^{a(λ')} / Π_y (Q^{h(y)} - 1)`.
pub fn delta_gl(lambda: &Partition, big_q: u64) -> Result<Rat> {
    hook_delta(Family::GL, lambda, big_q)
}

/// `Q^{a(λ')} / Π_y (Q^{h(y)} - (-1)^{h(y)})`.
pub fn delta_u(lambda: &Partition, big_q: u64) -> Result<Rat> {
    hook_delta(Family::U, lambda, big_q)
}

pub fn delta_family(family: Family, lambda: &Partition, big_q: u64) -> Result<Rat> {
    hook_delta(family, lambda, big_q)
}

/// `Π_{i=1}^m (Q^i - ε^i)`, the prime-to-`p` part of `|GL(m,Q)|` or `|U(m,Q)|`.
pub fn order_factor(family: Family, m: usize, big_q: u64) -> BigInt {
    let eps = family.epsilon();
    (1..=m).fold(BigInt::one(), |acc, i| acc * (int_pow(big_q, i as u32) - eps_pow(eps, i)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentDegree {
    pub family: Family,
    pub lambda: Partition,
    pub field_size: u64,
    #[serde(with = "crate::exact::bigint_str")]
    pub degree: BigInt,
}

/// The unipotent degree `Π (Q^i - ε^i)·δ(λ, Q)`.
///
/// # Panics
///
/// If the result is not a positive integer, which would mean the hook
/// formula has been miscomputed.
pub fn unipotent_degree(family: Family, lambda: &Partition, big_q: u64) -> Result<UnipotentDegree> {
    let delta = hook_delta(family, lambda, big_q)?;
    let deg = delta * Rat::from_integer(order_factor(family, lambda.size(), big_q));
    assert!(is_positive_integer(&deg), "non-integral {family} degree for {lambda} at Q = {big_q}: {deg}");
    Ok(UnipotentDegree { family, lambda: lambda.clone(), field_size: big_q, degree: deg.to_integer() })
}

/// Sum of the unipotent degrees of `GL(n, Q)` or `U(n, Q)`.
pub fn unipotent_degree_sum(family: Family, n: usize, big_q: u64) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for lambda in enumerate_partitions(n) {
        acc += unipotent_degree(family, &lambda, big_q)?.degree;
    }
    Ok(acc)
}

/// `Σ_λ δ(λ, q^d) u^{|λ|·d}` by enumerating partitions.
pub fn unipotent_sum_series(family: Family, q: u64, d: u32, order: usize) -> Result<TruncatedSeries> {
    if order > MAX_SERIES_ORDER {
        return Err(Error::CapExceeded { what: "series order", value: order as u64, cap: MAX_SERIES_ORDER as u64 });
    }
    if d == 0 {
        return Err(Error::Parameter("d must be positive".into()));
    }
    let big_q = q.checked_pow(d).ok_or(Error::InvalidFieldSize(q))?;
    let mut coeffs = vec![Rat::zero(); order + 1];
    let d = d as usize;
    for m in 0..=order / d {
        let mut acc = Rat::zero();
        for lambda in enumerate_partitions(m) {
            acc += hook_delta(family, &lambda, big_q)?;
        }
        coeffs[m * d] = acc;
    }
    Ok(TruncatedSeries::new(coeffs, order))
}
