//! Irreducible and self-dual polynomials over small finite fields, the counts
//! `N*(q;d)` and `M*(q;d)`, and the two generating identities they satisfy.

mod field;
mod poly;

pub use field::{Elem, GaloisField};
pub use poly::{
    is_irreducible, is_irreducible_trial_division, poly_gcd, poly_mul, poly_mulmod, poly_powmod, poly_rem,
    poly_sub, MonicPoly,
};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{e_of, rat, rat_string, Rat};
use crate::qseries::{factor_log, TruncatedSeries};

/// Enumeration limits. `max_degree` bounds full enumeration of degree-`d`
/// polynomials (`q^d` candidates); self-dual enumeration only has about
/// `q^{d/2}` candidates and gets its own bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_q: u64,
    pub max_degree: usize,
    pub max_self_dual_degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_q: 9, max_degree: 12, max_self_dual_degree: 24 }
    }
}

impl Caps {
    fn field(&self, q: u64) -> Result<GaloisField> {
        if q > self.max_q {
            return Err(Error::CapExceeded { what: "q", value: q, cap: self.max_q });
        }
        GaloisField::new(q)
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::CapExceeded { what: "degree", value: d as u64, cap: self.max_degree as u64 });
        }
        Ok(())
    }

    fn check_self_dual_degree(&self, d: usize) -> Result<()> {
        if d > self.max_self_dual_degree {
            return Err(Error::CapExceeded {
                what: "self-dual degree",
                value: d as u64,
                cap: self.max_self_dual_degree as u64,
            });
        }
        Ok(())
    }
}

/// Monic irreducibles of degree `d` with nonzero constant term, sorted.
pub fn enumerate_monic_irreducibles(q: u64, d: usize) -> Result<Vec<MonicPoly>> {
    enumerate_monic_irreducibles_with(&Caps::default(), q, d)
}

pub fn enumerate_monic_irreducibles_with(caps: &Caps, q: u64, d: usize) -> Result<Vec<MonicPoly>> {
    let field = caps.field(q)?;
    caps.check_degree(d)?;
    if d == 0 {
        return Ok(Vec::new());
    }
    Ok(MonicPoly::all_of_degree(&field, d).filter(|g| g.constant() != 0 && g.is_irreducible(&field)).collect())
}

/// The self-dual monic irreducibles of degree `d` (the set `N(q)` restricted
/// to degree `d`).
pub fn self_dual_irreducibles(q: u64, d: usize) -> Result<Vec<MonicPoly>> {
    self_dual_irreducibles_with(&Caps::default(), q, d)
}

pub fn self_dual_irreducibles_with(caps: &Caps, q: u64, d: usize) -> Result<Vec<MonicPoly>> {
    let field = caps.field(q)?;
    caps.check_self_dual_degree(d)?;
    if d == 0 {
        return Ok(Vec::new());
    }
    Ok(MonicPoly::self_dual_of_degree(&field, d).into_iter().filter(|g| g.is_irreducible(&field)).collect())
}

/// Unordered pairs `{g, g*}` with `g ≠ g*` and `deg g = d`, smaller member
/// first.
pub fn dual_pairs(q: u64, d: usize) -> Result<Vec<(MonicPoly, MonicPoly)>> {
    dual_pairs_with(&Caps::default(), q, d)
}

pub fn dual_pairs_with(caps: &Caps, q: u64, d: usize) -> Result<Vec<(MonicPoly, MonicPoly)>> {
    let field = caps.field(q)?;
    let mut out = Vec::new();
    for g in enumerate_monic_irreducibles_with(caps, q, d)? {
        let dual = g.dual(&field)?;
        if g < dual {
            out.push((g, dual));
        }
    }
    Ok(out)
}

/// `N*(q;d)` for `d ≤ self_dual_max` and `M*(q;d)` for `d ≤ pair_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusTable {
    pub q: u64,
    pub self_dual_max: usize,
    pub pair_max: usize,
    pub n_star: BTreeMap<usize, u64>,
    pub m_star: BTreeMap<usize, u64>,
}

impl CensusTable {
    pub fn n_star(&self, d: usize) -> Option<u64> {
        self.n_star.get(&d).copied()
    }

    pub fn m_star(&self, d: usize) -> Option<u64> {
        self.m_star.get(&d).copied()
    }

    /// `e(q)`, which equals `N*(q;1)`.
    pub fn e(&self) -> u32 {
        e_of(self.q)
    }

    /// Fixed-width table, one row per degree.
    pub fn to_table(&self) -> String {
        let mut out = format!("q = {}\n{:>6} {:>12} {:>12}\n", self.q, "d", "N*(q;d)", "M*(q;d)");
        let top = self.self_dual_max.max(self.pair_max);
        for d in 1..=top {
            let show = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
            out.push_str(&format!("{:>6} {:>12} {:>12}\n", d, show(self.n_star(d)), show(self.m_star(d))));
        }
        out
    }
}

pub fn census(q: u64, max_degree: usize) -> Result<CensusTable> {
    census_split(&Caps::default(), q, max_degree, max_degree)
}

/// Census sufficient for products truncated at `w^order`: self-dual counts
/// up to degree `2·order`, pair counts up to degree `order`.
pub fn census_for_order(q: u64, order: usize) -> Result<CensusTable> {
    census_split(&Caps::default(), q, 2 * order, order)
}

pub fn census_split(caps: &Caps, q: u64, self_dual_max: usize, pair_max: usize) -> Result<CensusTable> {
    caps.field(q)?;
    caps.check_self_dual_degree(self_dual_max)?;
    caps.check_degree(pair_max)?;
    let mut n_star = BTreeMap::new();
    for d in 1..=self_dual_max {
        n_star.insert(d, self_dual_irreducibles_with(caps, q, d)?.len() as u64);
    }
    let mut m_star = BTreeMap::new();
    for d in 1..=pair_max {
        m_star.insert(d, dual_pairs_with(caps, q, d)?.len() as u64);
    }
    Ok(CensusTable { q, self_dual_max, pair_max, n_star, m_star })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualPart {
    /// `Π (1-w^d)^{-N*(q;2d)} (1-w^d)^{-M*(q;d)} = (1-w)^e / (1-qw)`
    A,
    /// `Π (1+w^d)^{-N*(q;2d)} (1-w^d)^{-M*(q;d)} = 1-w`
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGenFnReport {
    pub equal: bool,
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
}

impl DualGenFnReport {
    pub fn lhs_string(&self) -> String {
        series_string(&self.lhs)
    }

    pub fn rhs_string(&self) -> String {
        series_string(&self.rhs)
    }
}

/// Coefficients as comma-separated canonical `p/q` strings.
pub fn series_string(s: &TruncatedSeries) -> String {
    s.coeffs().iter().map(rat_string).collect::<Vec<_>>().join(",")
}

/// Left side of the self-dual identity built from a census.
pub fn dualgenfn_lhs(table: &CensusTable, order: usize, part: DualPart) -> Result<TruncatedSeries> {
    let mut log = TruncatedSeries::zero(order);
    for d in 1..=order {
        let n = table.n_star(2 * d).ok_or(Error::Parameter(format!("census lacks N*(q;{})", 2 * d)))?;
        let m = table.m_star(d).ok_or(Error::Parameter(format!("census lacks M*(q;{d})")))?;
        let c = match part {
            DualPart::A => rat(-1),
            DualPart::B => rat(1),
        };
        log = log.add(&factor_log(&c, d, -(n as i64), order))?;
        log = log.add(&factor_log(&rat(-1), d, -(m as i64), order))?;
    }
    log.exp()
}

pub fn dualgenfn_rhs(q: u64, order: usize, part: DualPart) -> TruncatedSeries {
    let one_minus_w = TruncatedSeries::from_ints(&[1, -1], order);
    match part {
        DualPart::A => {
            let geometric: Vec<Rat> = (0..=order as u32).map(|k| Rat::from_integer(crate::exact::int_pow(q, k))).collect();
            let g = TruncatedSeries::new(geometric, order);
            let num = one_minus_w.pow(e_of(q) as i64).expect("constant term 1");
            num.mul(&g).expect("equal orders")
        }
        DualPart::B => one_minus_w,
    }
}

pub fn verify_dualgenfn(q: u64, order: usize, part: DualPart) -> Result<DualGenFnReport> {
    let table = census_for_order(q, order)?;
    let lhs = dualgenfn_lhs(&table, order, part)?;
    let rhs = dualgenfn_rhs(q, order, part);
    Ok(DualGenFnReport { equal: lhs == rhs, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_examples() {
        let two: Vec<String> = enumerate_monic_irreducibles(2, 2).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(two, vec!["t^2 + t + 1"]);
        let one: Vec<String> = enumerate_monic_irreducibles(2, 1).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(one, vec!["t + 1"]);
        assert_eq!(enumerate_monic_irreducibles(3, 2).unwrap().len(), 3);
        assert!(enumerate_monic_irreducibles(11, 1).is_err());
        assert!(enumerate_monic_irreducibles(2, 13).is_err());
    }

    // Gauss count (1/d) Σ_{e|d} μ(e) q^{d/e}, minus one for t when d = 1.
    fn mobius(n: u64) -> i64 {
        let (mut n, mut k, mut p) = (n, 0, 2);
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                k += 1;
            }
            p += 1;
        }
        if n > 1 {
            k += 1;
        }
        if k % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn gauss(q: u64, d: u64) -> u64 {
        let s: i64 = (1..=d).filter(|e| d.is_multiple_of(*e)).map(|e| mobius(e) * (q.pow((d / e) as u32) as i64)).sum();
        let c = s as u64 / d;
        if d == 1 {
            c - 1
        } else {
            c
        }
    }

    #[test]
    fn counts_match_gauss_formula() {
        for (q, top) in [(2u64, 10usize), (3, 7), (4, 5), (5, 5), (7, 3), (8, 3), (9, 3)] {
            for d in 1..=top {
                assert_eq!(enumerate_monic_irreducibles(q, d).unwrap().len() as u64, gauss(q, d as u64), "q={q} d={d}");
            }
        }
    }

    #[test]
    fn census_examples() {
        let c2 = census(2, 3).unwrap();
        assert_eq!((c2.n_star(1), c2.n_star(2), c2.m_star(1), c2.m_star(2)), (Some(1), Some(1), Some(0), Some(0)));
        let c3 = census(3, 3).unwrap();
        assert_eq!((c3.n_star(1), c3.n_star(2)), (Some(2), Some(1)));
        let only: Vec<String> = self_dual_irreducibles(3, 2).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(only, vec!["t^2 + 1"]);
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let c = census(q, 3).unwrap();
            assert_eq!(c.n_star(3), Some(0));
            assert_eq!(c.n_star(1), Some(c.e() as u64));
        }
    }

    #[test]
    fn irreducibles_split_into_self_dual_and_pairs() {
        for (q, top) in [(2u64, 10usize), (3, 7), (4, 5), (5, 5)] {
            let c = census(q, top).unwrap();
            for d in 1..=top {
                let total = enumerate_monic_irreducibles(q, d).unwrap().len() as u64;
                assert_eq!(total, c.n_star(d).unwrap() + 2 * c.m_star(d).unwrap(), "q={q} d={d}");
                if d % 2 == 1 && d > 1 {
                    assert_eq!(c.n_star(d), Some(0));
                }
            }
        }
    }

    // In K = F_q[t]/(f) the roots of an irreducible f are t^{q^i}; f is
    // self-dual iff t^{-1} is one of them.
    #[test]
    fn self_duality_is_root_inversion() {
        for q in [2u64, 3, 4, 5] {
            let field = GaloisField::new(q).unwrap();
            for d in 1..=4 {
                for f in enumerate_monic_irreducibles(q, d).unwrap() {
                    let m = f.coeffs();
                    let t = poly_rem(&field, &[0, 1], m);
                    let order = q.pow(d as u32) - 1;
                    let t_inv = poly_powmod(&field, &t, order - 1, m);
                    assert_eq!(poly_mulmod(&field, &t, &t_inv, m), vec![1]);
                    let mut conj = t.clone();
                    let mut closed = false;
                    for _ in 0..d {
                        if conj == t_inv {
                            closed = true;
                        }
                        conj = poly_powmod(&field, &conj, q, m);
                    }
                    assert_eq!(closed, f.is_self_dual(&field), "{f} over F_{q}");
                }
            }
        }
    }

    #[test]
    fn dualgenfn_examples() {
        let r = verify_dualgenfn(2, 6, DualPart::B).unwrap();
        assert!(r.equal);
        assert_eq!(r.rhs, TruncatedSeries::from_ints(&[1, -1], 6));
        let r = verify_dualgenfn(3, 6, DualPart::A).unwrap();
        assert!(r.equal);
        let r = verify_dualgenfn(2, 0, DualPart::A).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, TruncatedSeries::one(0));
    }

    #[test]
    fn census_table_json_round_trip() {
        let c = census(3, 4).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<CensusTable>(&json).unwrap(), c);
        assert!(c.to_table().contains("N*(q;d)"));
    }
}
