//! Symbols of odd defect, which label the unipotent characters of
//! `Sp(2n, q)` and `SO(2n+1, q)`, and their degrees.
//!
//! The rank is `Σμ + Σν - ⌊((r+k-1)/2)²⌋`. The degree of the unipotent
//! character labelled by a symbol of rank `n` is `Π_{i=1}^n (q^{2i}-1)·δ(Λ)`,
//! where `δ(Λ)` is a ratio of products of `q`-powers that is the same
//! expression for every `q`, odd or even.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int_pow, is_positive_integer, sp_order_factor, Rat};
use crate::qseries::TruncatedSeries;

/// Symbols of rank above this are refused by default.
pub const DEFAULT_RANK_CAP: usize = 12;

/// A reduced symbol `(μ, ν)` of odd positive defect.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymbolOD {
    mu: Vec<u32>,
    nu: Vec<u32>,
}

impl SymbolOD {
    pub fn new(mu: Vec<u32>, nu: Vec<u32>) -> Result<Self> {
        let increasing = |v: &[u32]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&mu) || !increasing(&nu) {
            return Err(Error::InvalidSymbol(format!("({mu:?}, {nu:?}) rows must be strictly increasing")));
        }
        if mu.len() <= nu.len() || (mu.len() - nu.len()).is_multiple_of(2) {
            return Err(Error::InvalidSymbol(format!("({mu:?}, {nu:?}) must have odd positive defect")));
        }
        if mu.first() == Some(&0) && nu.first() == Some(&0) {
            return Err(Error::InvalidSymbol(format!("({mu:?}, {nu:?}) is not reduced")));
        }
        Ok(SymbolOD { mu, nu })
    }

    /// The symbol `({0}, ∅)` of the trivial group.
    pub fn trivial() -> Self {
        SymbolOD { mu: vec![0], nu: Vec::new() }
    }

    pub fn mu(&self) -> &[u32] {
        &self.mu
    }

    pub fn nu(&self) -> &[u32] {
        &self.nu
    }

    pub fn defect(&self) -> usize {
        self.mu.len() - self.nu.len()
    }

    /// `(r + k - 1) / 2`; always an integer because the defect is odd.
    fn half_len(&self) -> usize {
        (self.mu.len() + self.nu.len() - 1) / 2
    }

    pub fn rank(&self) -> usize {
        let entries: u64 = self.mu.iter().chain(&self.nu).map(|&x| x as u64).sum();
        let h = self.half_len() as u64;
        // a valid symbol never has negative rank, see `min_rank`
        (entries - h * h) as usize
    }

    /// `c(Λ) = Σ_{i=1}^{(r+k-1)/2} C(r+k-2i, 2)`.
    pub fn c_exponent(&self) -> usize {
        let s = self.mu.len() + self.nu.len();
        (1..=self.half_len()).map(|i| binom2(s - 2 * i)).sum()
    }
}

fn binom2(m: usize) -> usize {
    if m < 2 {
        0
    } else {
        m * (m - 1) / 2
    }
}

impl fmt::Display for SymbolOD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "({} | {})", row(&self.mu), row(&self.nu))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolDegreeData {
    pub rank: usize,
    pub defect: usize,
    pub delta: Rat,
    pub c_exponent: usize,
}

/// Smallest rank of a symbol with `r = k + defect` and `k` lower entries:
/// `k + (defect² - 1)/4`.
pub fn min_rank(defect: usize, k: usize) -> usize {
    k + (defect * defect - 1) / 4
}

/// Reduced odd-defect symbols of rank `n`, sorted.
pub fn enumerate_symbols(n: usize) -> Result<Vec<SymbolOD>> {
    if n > DEFAULT_RANK_CAP {
        return Err(Error::CapExceeded { what: "symbol rank", value: n as u64, cap: DEFAULT_RANK_CAP as u64 });
    }
    let mut max_defect = 1;
    while min_rank(max_defect + 2, 0) <= n {
        max_defect += 2;
    }
    Ok(enumerate_symbols_with_defect_bound(n, max_defect))
}

/// Like [`enumerate_symbols`], but tries every odd defect up to `max_defect`.
pub fn enumerate_symbols_with_defect_bound(n: usize, max_defect: usize) -> Vec<SymbolOD> {
    let mut out = Vec::new();
    for defect in (1..=max_defect).step_by(2) {
        let mut k = 0;
        while min_rank(defect, k) <= n {
            let r = k + defect;
            let h = (r + k - 1) / 2;
            let target = (n + h * h) as u32;
            for mu_sum in 0..=target {
                let mus = increasing_with_sum(r, mu_sum);
                if mus.is_empty() {
                    continue;
                }
                let nus = increasing_with_sum(k, target - mu_sum);
                for mu in &mus {
                    for nu in &nus {
                        if mu.first() == Some(&0) && nu.first() == Some(&0) {
                            continue;
                        }
                        out.push(SymbolOD { mu: mu.clone(), nu: nu.clone() });
                    }
                }
            }
            k += 1;
        }
    }
    out.sort();
    out
}

/// Strictly increasing sequences of `len` non-negative integers summing to `sum`.
fn increasing_with_sum(len: usize, sum: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, start: u32, sum: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 0 {
            if sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let l = len as u32;
        // smallest sum of `len` increasing entries starting at `x` is l·x + l(l-1)/2
        let mut x = start;
        while l * x + l * (l - 1) / 2 <= sum {
            cur.push(x);
            rec(len - 1, x + 1, sum - x, cur, out);
            cur.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    rec(len, 0, sum, &mut Vec::new(), &mut out);
    out
}

/// `δ(Λ)` at field size `q`, with every difference taken as
/// `q^{larger} - q^{smaller}` so that `δ(Λ) > 0`.
pub fn delta_symbol(sym: &SymbolOD, q: u64) -> SymbolDegreeData {
    let pw = |e: u32| int_pow(q, e);
    let mut num = BigInt::one();
    for row in [&sym.mu, &sym.nu] {
        for (i, &a) in row.iter().enumerate() {
            for &b in &row[i + 1..] {
                num *= pw(b) - pw(a);
            }
        }
    }
    for &a in &sym.mu {
        for &b in &sym.nu {
            num *= pw(a) + pw(b);
        }
    }
    let c = sym.c_exponent();
    let mut den = BigInt::from(2u32).pow(sym.half_len() as u32) * pw(c as u32);
    for &a in sym.mu.iter().chain(&sym.nu) {
        for j in 1..=a {
            den *= pw(2 * j) - 1;
        }
    }
    SymbolDegreeData { rank: sym.rank(), defect: sym.defect(), delta: Rat::new(num, den), c_exponent: c }
}

/// Degree of the unipotent character labelled by `sym`, checked integral.
pub fn symbol_degree(sym: &SymbolOD, q: u64) -> Result<BigInt> {
    let data = delta_symbol(sym, q);
    let deg = data.delta * Rat::from_integer(sp_order_factor(q, data.rank));
    if !is_positive_integer(&deg) {
        return Err(Error::NonIntegral(format!("unipotent degree of {sym} at q = {q}: {deg}")));
    }
    Ok(deg.to_integer())
}

/// `W(u) = Σ_Λ δ(Λ) u^{|Λ|}` by enumerating every symbol of rank `≤ order`.
pub fn w_series_enum(q: u64, order: usize) -> Result<TruncatedSeries> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = Rat::zero();
        for sym in enumerate_symbols(n)? {
            acc += delta_symbol(&sym, q).delta;
        }
        coeffs.push(acc);
    }
    Ok(TruncatedSeries::new(coeffs, order))
}

/// Sum of the unipotent degrees of `Sp(2n, q)`.
pub fn unipotent_degree_sum(q: u64, n: usize) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for sym in enumerate_symbols(n)? {
        acc += symbol_degree(&sym, q)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::partitions::enumerate_partitions;

    fn sym(mu: &[u32], nu: &[u32]) -> SymbolOD {
        SymbolOD::new(mu.to_vec(), nu.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(SymbolOD::new(vec![0, 1], vec![0]).is_err());
        assert!(SymbolOD::new(vec![1, 1], vec![]).is_err());
        assert!(SymbolOD::new(vec![1, 2], vec![]).is_err());
        assert!(SymbolOD::new(vec![1], vec![2]).is_err());
        assert!(SymbolOD::new(vec![0, 1], vec![1]).is_ok());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(SymbolOD::trivial().rank(), 0);
        assert_eq!(sym(&[1], &[]).rank(), 1);
        assert_eq!(sym(&[0, 1], &[1]).rank(), 1);
        assert_eq!(sym(&[0, 1, 2], &[]).rank(), 2);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_symbols(0).unwrap(), vec![SymbolOD::trivial()]);
        assert_eq!(enumerate_symbols(1).unwrap().len(), 2);
        assert_eq!(enumerate_symbols(2).unwrap().len(), 6);
        assert!(enumerate_symbols(13).is_err());
    }

    // Symbols of defect D and rank n correspond to bipartitions of
    // n - (D²-1)/4, an independent count.
    #[test]
    fn counts_match_bipartitions() {
        let p: Vec<usize> = (0..=12).map(|m| enumerate_partitions(m).len()).collect();
        let bip = |m: usize| (0..=m).map(|a| p[a] * p[m - a]).sum::<usize>();
        for n in 0..=10 {
            let mut expected = 0;
            let mut d = 1;
            while min_rank(d, 0) <= n {
                expected += bip(n - min_rank(d, 0));
                d += 2;
            }
            let syms = enumerate_symbols(n).unwrap();
            assert_eq!(syms.len(), expected, "n = {n}");
            for s in &syms {
                assert_eq!(s.rank(), n);
                assert!((s.defect() * s.defect() - 1) / 4 <= n);
                assert_eq!(SymbolOD::new(s.mu.clone(), s.nu.clone()).as_ref(), Ok(s));
            }
            assert_eq!(enumerate_symbols_with_defect_bound(n, 2 * n + 7), syms);
        }
        assert_eq!(enumerate_symbols(5).unwrap().len(), 46);
    }

    #[test]
    fn delta_examples() {
        for q in [2u64, 3, 4, 5, 7] {
            let qq = rat(q as i64);
            let q2m1 = &qq * &qq - rat(1);
            assert_eq!(delta_symbol(&sym(&[1], &[]), q).delta, rat(1) / &q2m1);
            assert_eq!(delta_symbol(&sym(&[0, 1], &[1]), q).delta, &qq / &q2m1);
            assert_eq!(symbol_degree(&sym(&[1], &[]), q).unwrap(), BigInt::from(1));
            assert_eq!(symbol_degree(&sym(&[0, 1], &[1]), q).unwrap(), BigInt::from(q));
        }
        let triv = delta_symbol(&SymbolOD::trivial(), 3);
        assert_eq!((triv.delta, triv.rank, triv.defect, triv.c_exponent), (rat(1), 0, 1, 0));
    }

    #[test]
    fn sp4_degrees() {
        // 1, q^4, q(q+1)^2/2, q(q^2+1)/2 twice, q(q-1)^2/2
        for q in [2i64, 3, 4, 5] {
            let mut got: Vec<BigInt> =
                enumerate_symbols(2).unwrap().iter().map(|s| symbol_degree(s, q as u64).unwrap()).collect();
            got.sort();
            let mut want: Vec<BigInt> = [
                1,
                q.pow(4),
                q * (q + 1) * (q + 1) / 2,
                q * (q * q + 1) / 2,
                q * (q * q + 1) / 2,
                q * (q - 1) * (q - 1) / 2,
            ]
            .into_iter()
            .map(BigInt::from)
            .collect();
            want.sort();
            assert_eq!(got, want, "q = {q}");
        }
    }

    #[test]
    fn w_series_low_coefficients() {
        for q in [2i64, 3, 4, 5, 8, 9] {
            let w = w_series_enum(q as u64, 2).unwrap();
            assert_eq!(w.coeffs()[0], rat(1));
            assert_eq!(w.coeffs()[1], ratio(1, q - 1));
            let scale = rat((q * q - 1) * (q.pow(4) - 1));
            assert_eq!(&w.coeffs()[2] * scale, rat(q.pow(4) + 2 * q.pow(3) + 2 * q + 1));
        }
    }

    #[test]
    fn degrees_are_integral() {
        for q in [2u64, 3, 4, 5] {
            for n in 0..=5 {
                for s in enumerate_symbols(n).unwrap() {
                    symbol_degree(&s, q).unwrap();
                }
            }
        }
    }
}
