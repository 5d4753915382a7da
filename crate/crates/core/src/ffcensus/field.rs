//! Small finite fields `GF(q)`, `q ≤ 9` by default, as lookup tables.
//!
//! Elements are the integers `0..q`. For `q = p^k` with `k > 1` the integer
//! `Σ c_i p^i` stands for the residue `Σ c_i α^i` modulo a fixed Conway
//! polynomial, so encodings are stable across runs.

use crate::error::{Error, Result};
use crate::exact::prime_power;

pub type Elem = u8;

/// Conway polynomials, coefficients low to high, leading 1 included.
const CONWAY: &[(u64, u32, &[u8])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 2, &[3, 6, 1]),
];

#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u64,
    k: u32,
    q: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::InvalidFieldSize(q))?;
        if q > 255 {
            return Err(Error::InvalidFieldSize(q));
        }
        let modulus: Vec<u64> = if k == 1 {
            vec![0, 1]
        } else {
            let (_, _, m) = CONWAY
                .iter()
                .find(|(pp, kk, _)| *pp == p && *kk == k)
                .ok_or(Error::InvalidFieldSize(q))?;
            m.iter().map(|&c| c as u64).collect()
        };
        let qs = q as usize;
        let digits = |x: usize| -> Vec<u64> {
            let mut v = Vec::with_capacity(k as usize);
            let mut x = x as u64;
            for _ in 0..k {
                v.push(x % p);
                x /= p;
            }
            v
        };
        let encode = |v: &[u64]| -> Elem { v.iter().rev().fold(0u64, |acc, &c| acc * p + c) as Elem };
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..qs {
            let da = digits(a);
            for b in 0..qs {
                let db = digits(b);
                let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = encode(&s);
                // schoolbook product, then reduce by the monic modulus
                let mut prod = vec![0u64; 2 * k as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                if k > 1 {
                    for deg in (k as usize..prod.len()).rev() {
                        let c = prod[deg];
                        if c == 0 {
                            continue;
                        }
                        for (i, m) in modulus.iter().enumerate() {
                            let idx = deg - k as usize + i;
                            prod[idx] = (prod[idx] + (p - c) * m) % p;
                        }
                    }
                }
                mul[a * qs + b] = encode(&prod[..k as usize]);
            }
        }
        let neg = (0..qs).map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as Elem).collect();
        let inv = (0..qs)
            .map(|a| if a == 0 { 0 } else { (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as Elem })
            .collect();
        Ok(GaloisField { p, k, q: qs, add, mul, neg, inv })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The element `-1`.
    pub fn minus_one(&self) -> Elem {
        self.neg(1)
    }

    /// Smallest element of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> Elem {
        let n = self.q as u64 - 1;
        (1..self.q as Elem)
            .find(|&a| (1..n).all(|e| !n.is_multiple_of(e) || self.pow(a, e) != 1))
            .unwrap_or(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q as Elem
    }
}
