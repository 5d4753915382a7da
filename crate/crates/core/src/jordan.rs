//! Character degree sums of `SO(2n+1, q)` through the Jordan decomposition.
//!
//! A character is a pair `(s, ψ)`: a semisimple class `s` of `Sp(2n, q)`,
//! labelled by multiplicities on self-dual irreducibles, dual pairs and
//! `t ∓ 1`, together with a unipotent character `ψ` of its centralizer
//! `Π U(m_f, q^{deg f/2}) × Π GL(m_g, q^{deg g}) × Sp(2m_+) × Sp(2m_-)`.
//! Its degree is `Π_{i=1}^n (q^{2i}-1)` times a product of `δ` factors, one
//! per centralizer component.
//!
//! [`degree_sum_direct`] walks every such pair over explicitly enumerated
//! polynomials. [`degree_sum_series`] multiplies per-degree generating
//! functions raised to census counts. The two share no code beyond the `δ`
//! formulas.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{e_of, is_positive_integer, sp_order_factor, Rat};
use crate::ffcensus::{self, census_for_order, MonicPoly};
use crate::partitions::{enumerate_partitions, Partition};
use crate::qseries::TruncatedSeries;
use crate::symbols::{delta_symbol, enumerate_symbols, w_series_enum, SymbolOD};
use crate::unipotent::{delta_gl, delta_u, unipotent_sum_series, Family};

/// Limits for the direct enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectCaps {
    pub max_n: usize,
    pub max_q: u64,
}

impl Default for DirectCaps {
    fn default() -> Self {
        DirectCaps { max_n: 4, max_q: 5 }
    }
}

impl DirectCaps {
    fn check(&self, q: u64, n: usize) -> Result<()> {
        crate::exact::prime_power(q).ok_or(Error::InvalidFieldSize(q))?;
        if n > self.max_n {
            return Err(Error::CapExceeded { what: "n", value: n as u64, cap: self.max_n as u64 });
        }
        if q > self.max_q {
            return Err(Error::CapExceeded { what: "q", value: q, cap: self.max_q });
        }
        Ok(())
    }
}

/// One centralizer component: which polynomial class, its weight in `|Φ|`
/// and the field size `Q` of its `GL`/`U` factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PolyClass {
    /// `f ∈ N'(q)`: weight `deg f / 2`, factor `U(m, q^{deg f/2})`.
    SelfDual(MonicPoly),
    /// `{g, g*}` stored by its smaller member: weight `deg g`, factor
    /// `GL(m, q^{deg g})`.
    Pair(MonicPoly, MonicPoly),
}

impl PolyClass {
    pub fn weight(&self) -> usize {
        match self {
            PolyClass::SelfDual(f) => f.degree() / 2,
            PolyClass::Pair(g, _) => g.degree(),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            PolyClass::SelfDual(_) => Family::U,
            PolyClass::Pair(..) => Family::GL,
        }
    }

    pub fn field_size(&self, q: u64) -> u64 {
        q.pow(self.weight() as u32)
    }
}

impl fmt::Display for PolyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyClass::SelfDual(p) => write!(f, "[{p}]"),
            PolyClass::Pair(g, h) => write!(f, "{{{g}, {h}}}"),
        }
    }
}

/// Multiplicities on `t ∓ 1`. For even `q` the two coincide and there is a
/// single slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearPart {
    Even { m_plus: usize },
    Odd { m_plus: usize, m_minus: usize },
}

impl LinearPart {
    pub fn m_plus(&self) -> usize {
        match *self {
            LinearPart::Even { m_plus } | LinearPart::Odd { m_plus, .. } => m_plus,
        }
    }

    pub fn m_minus(&self) -> Option<usize> {
        match *self {
            LinearPart::Even { .. } => None,
            LinearPart::Odd { m_minus, .. } => Some(m_minus),
        }
    }
}

/// A semisimple class of `Sp(2n, q)`; classes with multiplicity zero are
/// omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleLabel {
    pub classes: Vec<(PolyClass, usize)>,
    pub linear: LinearPart,
}

impl SemisimpleLabel {
    /// `|Φ| = Σ m_f deg f/2 + Σ m_g deg g + m_+ + m_-`.
    pub fn size(&self) -> usize {
        let poly: usize = self.classes.iter().map(|(c, m)| c.weight() * m).sum();
        poly + self.linear.m_plus() + self.linear.m_minus().unwrap_or(0)
    }

    /// `P(s)`, the prime-to-`p` part of `|C(s)|`.
    pub fn centralizer_factor(&self, q: u64) -> BigInt {
        let mut acc = BigInt::one();
        for (class, m) in &self.classes {
            acc *= crate::unipotent::order_factor(class.family(), *m, class.field_size(q));
        }
        acc * sp_order_factor(q, self.linear.m_plus()) * sp_order_factor(q, self.linear.m_minus().unwrap_or(0))
    }
}

impl fmt::Display for SemisimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.linear {
            LinearPart::Even { m_plus } => parts.push(format!("m+={m_plus}")),
            LinearPart::Odd { m_plus, m_minus } => {
                parts.push(format!("m+={m_plus}"));
                parts.push(format!("m-={m_minus}"));
            }
        }
        for (c, m) in &self.classes {
            parts.push(format!("{c}^{m}"));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// A label with a partition per polynomial class and a symbol per `t ∓ 1`
/// slot, i.e. one irreducible character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedLabel {
    pub base: SemisimpleLabel,
    pub partitions: Vec<Partition>,
    pub plus: SymbolOD,
    pub minus: Option<SymbolOD>,
}

/// The polynomial classes available in `Sp(2n, q)`, built from explicit
/// enumeration of irreducibles.
pub fn polynomial_classes(q: u64, n: usize) -> Result<Vec<PolyClass>> {
    let mut out = Vec::new();
    for half in 1..=n {
        for f in ffcensus::self_dual_irreducibles(q, 2 * half)? {
            out.push(PolyClass::SelfDual(f));
        }
    }
    for d in 1..=n {
        for (g, h) in ffcensus::dual_pairs(q, d)? {
            out.push(PolyClass::Pair(g, h));
        }
    }
    Ok(out)
}

/// Every semisimple label with `|Φ| = n`.
pub fn enumerate_labels(q: u64, n: usize) -> Result<Vec<SemisimpleLabel>> {
    enumerate_labels_with(&DirectCaps::default(), q, n)
}

pub fn enumerate_labels_with(caps: &DirectCaps, q: u64, n: usize) -> Result<Vec<SemisimpleLabel>> {
    caps.check(q, n)?;
    let classes = polynomial_classes(q, n)?;
    let odd = e_of(q) == 2;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        classes: &[PolyClass],
        idx: usize,
        rest: usize,
        odd: bool,
        chosen: &mut Vec<(PolyClass, usize)>,
        out: &mut Vec<SemisimpleLabel>,
    ) {
        if idx == classes.len() {
            if odd {
                for m_minus in 0..=rest {
                    out.push(SemisimpleLabel {
                        classes: chosen.clone(),
                        linear: LinearPart::Odd { m_plus: rest - m_minus, m_minus },
                    });
                }
            } else {
                out.push(SemisimpleLabel { classes: chosen.clone(), linear: LinearPart::Even { m_plus: rest } });
            }
            return;
        }
        let w = classes[idx].weight();
        rec(classes, idx + 1, rest, odd, chosen, out);
        let mut m = 1;
        while m * w <= rest {
            chosen.push((classes[idx].clone(), m));
            rec(classes, idx + 1, rest - m * w, odd, chosen, out);
            chosen.pop();
            m += 1;
        }
    }
    rec(&classes, 0, n, odd, &mut chosen, &mut out);
    Ok(out)
}

/// The product of `δ` factors for one decorated label.
pub fn degree_contribution(label: &DecoratedLabel, q: u64) -> Result<Rat> {
    let mut acc = Rat::one();
    for ((class, _), lambda) in label.base.classes.iter().zip(&label.partitions) {
        let big_q = class.field_size(q);
        acc *= match class.family() {
            Family::U => delta_u(lambda, big_q)?,
            Family::GL => delta_gl(lambda, big_q)?,
        };
    }
    acc *= delta_symbol(&label.plus, q).delta;
    if let Some(minus) = &label.minus {
        acc *= delta_symbol(minus, q).delta;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelSubtotal {
    pub label: String,
    pub characters: u64,
    #[serde(with = "crate::exact::bigint_str")]
    pub degree_sum: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectSum {
    pub q: u64,
    pub n: usize,
    #[serde(with = "crate::exact::bigint_str")]
    pub total: BigInt,
    pub characters: u64,
    pub labels: Vec<LabelSubtotal>,
}

/// Character degree sum of `SO(2n+1, q)`, one decorated label at a time.
///
/// Every character degree, and every index factor `Π(q^{2i}-1)/P(s)`, is
/// checked to be a positive integer; a failure is returned as
/// [`Error::NonIntegral`].
pub fn degree_sum_direct(q: u64, n: usize) -> Result<DirectSum> {
    degree_sum_direct_with(&DirectCaps::default(), q, n)
}

pub fn degree_sum_direct_with(caps: &DirectCaps, q: u64, n: usize) -> Result<DirectSum> {
    let labels = enumerate_labels_with(caps, q, n)?;
    let order = Rat::from_integer(sp_order_factor(q, n));
    let symbols: Vec<Vec<SymbolOD>> = (0..=n).map(enumerate_symbols).collect::<Result<_>>()?;
    let partitions: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();

    let mut total = BigInt::zero();
    let mut characters = 0u64;
    let mut subtotals = Vec::with_capacity(labels.len());
    for label in labels {
        let index = sp_order_factor(q, n);
        let (index, rem) = index.div_rem(&label.centralizer_factor(q));
        if !rem.is_zero() {
            return Err(Error::NonIntegral(format!("index factor for {label} at q = {q}")));
        }
        debug_assert!(index > BigInt::zero());

        let mut sub = BigInt::zero();
        let mut count = 0u64;
        let mut dec = DecoratedLabel {
            partitions: label.classes.iter().map(|_| Partition::empty()).collect(),
            plus: SymbolOD::trivial(),
            minus: label.linear.m_minus().map(|_| SymbolOD::trivial()),
            base: label.clone(),
        };
        let mut visit = |dec: &DecoratedLabel| -> Result<()> {
            let deg = degree_contribution(dec, q)? * &order;
            if !is_positive_integer(&deg) {
                return Err(Error::NonIntegral(format!("character degree {deg} for label {}", dec.base)));
            }
            sub += deg.to_integer();
            count += 1;
            Ok(())
        };
        decorate(&mut dec, 0, &partitions, &symbols, &mut visit)?;
        total += &sub;
        characters += count;
        subtotals.push(LabelSubtotal { label: label.to_string(), characters: count, degree_sum: sub });
    }
    Ok(DirectSum { q, n, total, characters, labels: subtotals })
}

/// Visits every decoration of `dec.base` without materializing the product.
fn decorate(
    dec: &mut DecoratedLabel,
    slot: usize,
    partitions: &[Vec<Partition>],
    symbols: &[Vec<SymbolOD>],
    visit: &mut impl FnMut(&DecoratedLabel) -> Result<()>,
) -> Result<()> {
    let nclass = dec.base.classes.len();
    if slot < nclass {
        let m = dec.base.classes[slot].1;
        for lambda in &partitions[m] {
            dec.partitions[slot] = lambda.clone();
            decorate(dec, slot + 1, partitions, symbols, visit)?;
        }
        return Ok(());
    }
    if slot == nclass {
        for s in &symbols[dec.base.linear.m_plus()] {
            dec.plus = s.clone();
            decorate(dec, slot + 1, partitions, symbols, visit)?;
        }
        return Ok(());
    }
    match dec.base.linear.m_minus() {
        Some(m_minus) => {
            for s in &symbols[m_minus] {
                dec.minus = Some(s.clone());
                visit(dec)?;
            }
            Ok(())
        }
        None => visit(dec),
    }
}

/// `Π_d (Σ_λ δ_U(λ, 2d) u^{|λ|d})^{N*(q;2d)} · Π_d (Σ_λ δ_GL(λ, d) u^{|λ|d})^{M*(q;d)}`
/// from census counts and enumerated unipotent sums.
pub fn guexpand_lhs(q: u64, order: usize) -> Result<TruncatedSeries> {
    let table = census_for_order(q, order)?;
    let mut acc = TruncatedSeries::one(order);
    for d in 1..=order {
        let n_star = table.n_star(2 * d).unwrap_or(0) as i64;
        let m_star = table.m_star(d).unwrap_or(0) as i64;
        if n_star > 0 {
            let u = unipotent_sum_series(Family::U, q, d as u32, order)?;
            acc = acc.mul(&u.pow(n_star)?)?;
        }
        if m_star > 0 {
            let gl = unipotent_sum_series(Family::GL, q, d as u32, order)?;
            acc = acc.mul(&gl.pow(m_star)?)?;
        }
    }
    Ok(acc)
}

/// The degree-sum generating function: [`guexpand_lhs`] times `W(u)^{e(q)}`,
/// with `W` from symbol enumeration.
pub fn degree_sum_series(q: u64, order: usize) -> Result<TruncatedSeries> {
    let w = w_series_enum(q, order)?;
    guexpand_lhs(q, order)?.mul(&w.pow(e_of(q) as i64)?)
}

/// `Π(q^{2i}-1)·[u^n]` of [`degree_sum_series`], checked integral.
pub fn degree_sum_from_series(q: u64, n: usize) -> Result<BigInt> {
    let s = degree_sum_series(q, n)?;
    let v = s.coeff(n)? * Rat::from_integer(sp_order_factor(q, n));
    if !is_positive_integer(&v) {
        return Err(Error::NonIntegral(format!("series degree sum {v} at q = {q}, n = {n}")));
    }
    Ok(v.to_integer())
}

/// Deterministic per-degree counts of classes, for display.
pub fn class_census(q: u64, n: usize) -> Result<BTreeMap<String, usize>> {
    let mut out = BTreeMap::new();
    for c in polynomial_classes(q, n)? {
        let key = match &c {
            PolyClass::SelfDual(f) => format!("self-dual deg {}", f.degree()),
            PolyClass::Pair(g, _) => format!("pair deg {}", g.degree()),
        };
        *out.entry(key).or_insert(0) += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_label_sets() {
        let l = enumerate_labels(2, 1).unwrap();
        let shown: Vec<String> = l.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown.len(), 2);
        assert!(shown.contains(&"m+=1".to_string()));
        assert!(shown.contains(&"m+=0 [t^2 + t + 1]^1".to_string()));

        let l = enumerate_labels(3, 1).unwrap();
        let shown: Vec<String> = l.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown.len(), 3, "{shown:?}");
        assert!(shown.contains(&"m+=0 m-=0 [t^2 + 1]^1".to_string()));
        assert!(l.iter().all(|s| s.size() == 1));
    }

    #[test]
    fn rank_one_sums() {
        // SO(3,2) is S3 and SO(3,3) is S4
        let d = degree_sum_direct(2, 1).unwrap();
        assert_eq!((d.total.clone(), d.characters), (BigInt::from(4), 3));
        let d = degree_sum_direct(3, 1).unwrap();
        assert_eq!((d.total.clone(), d.characters), (BigInt::from(10), 5));
        assert_eq!(d.labels.iter().map(|s| s.degree_sum.clone()).sum::<BigInt>(), d.total);
    }

    #[test]
    fn direct_matches_series() {
        for (q, max_n) in [(2u64, 4usize), (3, 3), (4, 2), (5, 2)] {
            for n in 0..=max_n {
                let direct = degree_sum_direct(q, n).unwrap().total;
                assert_eq!(direct, degree_sum_from_series(q, n).unwrap(), "q = {q}, n = {n}");
            }
        }
    }

    #[test]
    fn labels_have_integral_index() {
        for q in [2u64, 3] {
            let n = 3;
            let labels = enumerate_labels(q, n).unwrap();
            assert!(labels.iter().all(|s| s.size() == n));
            for s in &labels {
                let (_, r) = sp_order_factor(q, n).div_rem(&s.centralizer_factor(q));
                assert!(r.is_zero());
            }
        }
    }

    #[test]
    fn caps_enforced() {
        assert!(matches!(degree_sum_direct(7, 1), Err(Error::CapExceeded { .. })));
        assert!(matches!(degree_sum_direct(2, 5), Err(Error::CapExceeded { .. })));
        assert!(matches!(degree_sum_direct(6, 1), Err(Error::InvalidFieldSize(6))));
    }
}
