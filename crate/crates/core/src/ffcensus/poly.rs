//! Dense polynomials over [`GaloisField`], coefficients low to high.

use std::cmp::Ordering;
use std::fmt;

use super::field::{Elem, GaloisField};
use crate::error::{Error, Result};

fn trim(mut v: Vec<Elem>) -> Vec<Elem> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn poly_mul(f: &GaloisField, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Remainder of `a` modulo a nonzero `m`.
pub fn poly_rem(f: &GaloisField, a: &[Elem], m: &[Elem]) -> Vec<Elem> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = f.inv(m[dm]).expect("nonzero modulus");
    while r.len() > dm {
        let top = r.len() - 1;
        let c = f.mul(r[top], lead_inv);
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, mi));
        }
        r = trim(r);
    }
    r
}

pub fn poly_mulmod(f: &GaloisField, a: &[Elem], b: &[Elem], m: &[Elem]) -> Vec<Elem> {
    poly_rem(f, &poly_mul(f, a, b), m)
}

pub fn poly_powmod(f: &GaloisField, base: &[Elem], mut e: u64, m: &[Elem]) -> Vec<Elem> {
    let mut acc = poly_rem(f, &[1], m);
    let mut b = poly_rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(f, &acc, &b, m);
        }
        b = poly_mulmod(f, &b, &b, m);
        e >>= 1;
    }
    acc
}

pub fn poly_sub(f: &GaloisField, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(out)
}

/// Monic gcd; the gcd of two zero polynomials is zero.
pub fn poly_gcd(f: &GaloisField, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(f, &x, &y);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let li = f.inv(lead).unwrap();
        x.iter_mut().for_each(|c| *c = f.mul(*c, li));
    }
    x
}

/// Ben-Or irreducibility test: `f` of degree `d` is irreducible iff
/// `gcd(f, t^{q^i} - t) = 1` for every `i ≤ d/2`.
pub fn is_irreducible(field: &GaloisField, poly: &[Elem]) -> bool {
    let d = poly.len().saturating_sub(1);
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let q = field.order() as u64;
    let t = [0, 1];
    let mut h = poly_rem(field, &t, poly);
    for _ in 1..=d / 2 {
        h = poly_powmod(field, &h, q, poly);
        let g = poly_gcd(field, poly, &poly_sub(field, &h, &t));
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Irreducibility by trial division with every monic polynomial of degree
/// `1..=d/2`. Exponential; used only to cross-check [`is_irreducible`].
pub fn is_irreducible_trial_division(field: &GaloisField, poly: &[Elem]) -> bool {
    let d = poly.len().saturating_sub(1);
    if d == 0 {
        return false;
    }
    (1..=d / 2).all(|k| MonicPoly::all_of_degree(field, k).all(|g| !poly_rem(field, poly, g.coeffs()).is_empty()))
}

/// A monic polynomial over `GF(q)` of degree at least 1.
///
/// Ordered by degree, then by coefficients from the top down.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonicPoly {
    coeffs: Vec<Elem>,
}

impl MonicPoly {
    pub fn new(coeffs: Vec<Elem>) -> Result<Self> {
        let coeffs = trim(coeffs);
        if coeffs.len() < 2 || *coeffs.last().unwrap() != 1 {
            return Err(Error::Parameter(format!("{coeffs:?} is not monic of positive degree")));
        }
        Ok(MonicPoly { coeffs })
    }

    /// Every monic polynomial of degree `d`, in numeric order of the lower
    /// coefficients read as base-`q` digits.
    pub fn all_of_degree(field: &GaloisField, d: usize) -> impl Iterator<Item = MonicPoly> {
        let q = field.order() as u64;
        let total = q.pow(d as u32);
        (0..total).map(move |mut idx| {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push((idx % q) as Elem);
                idx /= q;
            }
            coeffs.push(1);
            MonicPoly { coeffs }
        })
    }

    /// Every monic `f` of degree `d` with `f = f*`.
    ///
    /// Self-duality forces `a_0^2 = 1` and `a_{d-i} = a_0·a_i`, so only the
    /// lower half of the coefficients is free.
    pub fn self_dual_of_degree(field: &GaloisField, d: usize) -> Vec<MonicPoly> {
        let q = field.order() as u64;
        let free = d / 2;
        let mut units = vec![1 as Elem];
        if field.minus_one() != 1 {
            units.push(field.minus_one());
        }
        let mut out = Vec::new();
        for &a0 in &units {
            for mut idx in 0..q.pow(free as u32) {
                let mut coeffs = vec![0 as Elem; d + 1];
                coeffs[0] = a0;
                coeffs[d] = 1;
                for i in 1..=free {
                    let c = (idx % q) as Elem;
                    idx /= q;
                    coeffs[i] = c;
                    if d - i != i {
                        coeffs[d - i] = field.mul(a0, c);
                    }
                }
                let f = MonicPoly { coeffs };
                if f.dual(field).ok().as_ref() == Some(&f) {
                    out.push(f);
                }
            }
        }
        out.sort();
        out
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn constant(&self) -> Elem {
        self.coeffs[0]
    }

    /// `f*(t) = a_0^{-1} t^d f(1/t)`.
    pub fn dual(&self, field: &GaloisField) -> Result<MonicPoly> {
        let inv = field.inv(self.constant()).ok_or(Error::ZeroConstantTerm)?;
        let coeffs = self.coeffs.iter().rev().map(|&c| field.mul(inv, c)).collect();
        Ok(MonicPoly { coeffs })
    }

    pub fn is_self_dual(&self, field: &GaloisField) -> bool {
        self.dual(field).is_ok_and(|d| d == *self)
    }

    pub fn is_irreducible(&self, field: &GaloisField) -> bool {
        is_irreducible(field, &self.coeffs)
    }
}

impl Ord for MonicPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for MonicPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Coefficients print as their integer encodings, e.g. `t^2 + 2t + 1`.
impl fmt::Display for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}t"),
                _ => format!("{coef}t^{i}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64) -> GaloisField {
        GaloisField::new(q).unwrap()
    }

    #[test]
    fn dual_examples() {
        let f2 = field(2);
        let t_plus_1 = MonicPoly::new(vec![1, 1]).unwrap();
        assert_eq!(t_plus_1.dual(&f2).unwrap(), t_plus_1);
        let quad = MonicPoly::new(vec![1, 1, 1]).unwrap();
        assert_eq!(quad.dual(&f2).unwrap(), quad);

        let f5 = field(5);
        // t - 2 has root 2, its dual has root 2^{-1} = 3
        let t_minus_2 = MonicPoly::new(vec![3, 1]).unwrap();
        assert_eq!(t_minus_2.dual(&f5).unwrap(), MonicPoly::new(vec![2, 1]).unwrap());
        assert_eq!(MonicPoly::new(vec![0, 1]).unwrap().dual(&f5), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn dual_is_an_involution() {
        for q in [2u64, 3, 4, 5] {
            let f = field(q);
            let max_deg = if q <= 3 { 8 } else { 6 };
            for d in 1..=max_deg {
                for g in MonicPoly::all_of_degree(&f, d).filter(|g| g.constant() != 0) {
                    let dual = g.dual(&f).unwrap();
                    assert_eq!(dual.degree(), d);
                    assert_eq!(dual.dual(&f).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn self_dual_generation_matches_filtering() {
        for q in [2u64, 3, 4, 5] {
            let f = field(q);
            for d in 1..=6 {
                let mut filtered: Vec<MonicPoly> =
                    MonicPoly::all_of_degree(&f, d).filter(|g| g.is_self_dual(&f)).collect();
                filtered.sort();
                assert_eq!(MonicPoly::self_dual_of_degree(&f, d), filtered, "q={q} d={d}");
            }
        }
    }

    #[test]
    fn ben_or_agrees_with_trial_division() {
        for (q, max_deg) in [(2u64, 8usize), (3, 6), (4, 4), (5, 4)] {
            let f = field(q);
            for d in 1..=max_deg {
                for g in MonicPoly::all_of_degree(&f, d) {
                    assert_eq!(
                        is_irreducible(&f, g.coeffs()),
                        is_irreducible_trial_division(&f, g.coeffs()),
                        "{g} over F_{q}"
                    );
                }
            }
        }
    }

    #[test]
    fn gcd_and_remainder() {
        let f = field(3);
        // (t+1)(t+2) = t^2 + 2 over F_3
        let a = poly_mul(&f, &[1, 1], &[2, 1]);
        assert_eq!(a, vec![2, 0, 1]);
        assert_eq!(poly_gcd(&f, &a, &[1, 1]), vec![1, 1]);
        assert!(poly_rem(&f, &a, &[2, 1]).is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(MonicPoly::new(vec![1, 2, 1]).unwrap().to_string(), "t^2 + 2t + 1");
        assert_eq!(MonicPoly::new(vec![0, 1]).unwrap().to_string(), "t");
    }
}
