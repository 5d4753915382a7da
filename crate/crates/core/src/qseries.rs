//! Truncated power series in `u` with exact rational coefficients, and exact
//! evaluation of the infinite products used throughout the crate.
//!
//! An infinite product `Π_{i≥1} (1 ± u^a x^{bi+c})^{αi+β}` cannot be expanded
//! exactly by truncating `i`. Its logarithm, however, has coefficients that
//! are affine-weighted geometric sums in `x`, which close to rationals:
//! `Σ_i (αi+β) y^i = α y/(1-y)² + β y/(1-y)`. Each product is therefore
//! evaluated as `exp` of a sum of closed-form logarithms.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{e_of, pow_i, prime_power, rat, ratio, Rat};

/// Coefficients `c_0..=c_N` of a power series truncated after `u^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn new(mut coeffs: Vec<Rat>, order: usize) -> Self {
        coeffs.resize(order + 1, Rat::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rat::one()], order)
    }

    /// `c·u^k`, or zero if `k > order`.
    pub fn monomial(c: Rat, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&Rat> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange { index: n, order: self.order() })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    fn require_constant(&self, op: &'static str, one: bool) -> Result<()> {
        let ok = if one { self.coeffs[0].is_one() } else { self.coeffs[0].is_zero() };
        if ok {
            Ok(())
        } else {
            Err(Error::ConstantTerm { op, expected: if one { "1" } else { "0" } })
        }
    }

    /// Formal inverse; requires `c_0 = 1`.
    pub fn inv(&self) -> Result<Self> {
        self.require_constant("inv", true)?;
        let n = self.order();
        let mut out = vec![Rat::zero(); n + 1];
        out[0] = Rat::one();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -acc;
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Formal logarithm; requires `c_0 = 1`.
    pub fn log(&self) -> Result<Self> {
        self.require_constant("log", true)?;
        // f' = f·g' with g = log f, solved coefficientwise
        let n = self.order();
        let mut g = vec![Rat::zero(); n + 1];
        for k in 1..=n {
            let mut acc = rat(k as i64) * &self.coeffs[k];
            for j in 1..k {
                if !self.coeffs[k - j].is_zero() {
                    acc -= rat(j as i64) * &g[j] * &self.coeffs[k - j];
                }
            }
            g[k] = acc / rat(k as i64);
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// Formal exponential; requires `c_0 = 0`.
    pub fn exp(&self) -> Result<Self> {
        self.require_constant("exp", false)?;
        let n = self.order();
        let mut f = vec![Rat::zero(); n + 1];
        f[0] = Rat::one();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += rat(j as i64) * &self.coeffs[j] * &f[k - j];
                }
            }
            f[k] = acc / rat(k as i64);
        }
        Ok(TruncatedSeries { coeffs: f })
    }

    /// `f^m` for any integer `m`; requires `c_0 = 1`.
    pub fn pow(&self, m: i64) -> Result<Self> {
        if m == 0 {
            return Ok(Self::one(self.order()));
        }
        if m == 1 {
            return Ok(self.clone());
        }
        self.log()?.scale(&rat(m)).exp()
    }

    /// Substitute `u ↦ u^d`, keeping the same order.
    pub fn stretch(&self, d: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * d > n {
                break;
            }
            out.coeffs[k * d] = c.clone();
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})u"),
                _ => format!("({c})u^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", terms.join(" + "))?;
        }
        write!(f, " + O(u^{})", self.order() + 1)
    }
}

/// Dense polynomial with exact rational coefficients, no truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, other: Polynomial) -> Polynomial {
        let (mut long, short) =
            if self.coeffs.len() >= other.coeffs.len() { (self, other) } else { (other, self) };
        for (a, b) in long.coeffs.iter_mut().zip(short.coeffs) {
            *a += b;
        }
        Polynomial::new(long.coeffs)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, other: Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial { coeffs: vec![Rat::one()] }
    }
}

/// `Π_{i≥1} (1 + sign·u^a·x^{b·i+c})^{α·i+β}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductFamily {
    pub u_power: usize,
    /// `+1` or `-1`
    pub sign: i8,
    pub ratio_base: Rat,
    pub exp_stride: u32,
    pub exp_offset: i64,
    pub weight_slope: i64,
    pub weight_intercept: i64,
}

impl ProductFamily {
    /// Family with constant weight `β` (slope zero).
    pub fn flat(u_power: usize, sign: i8, x: Rat, stride: u32, offset: i64, weight: i64) -> Self {
        ProductFamily {
            u_power,
            sign,
            ratio_base: x,
            exp_stride: stride,
            exp_offset: offset,
            weight_slope: 0,
            weight_intercept: weight,
        }
    }

    /// `Π_{1≤i<j, i+j odd} (1 + sign·u^a·x^{i+j})^{w}`, collapsed on
    /// `s = i+j = 2m+1` which has multiplicity `m`.
    pub fn odd_pair_sums(u_power: usize, sign: i8, x: Rat, w: i64) -> Self {
        ProductFamily {
            u_power,
            sign,
            ratio_base: x,
            exp_stride: 2,
            exp_offset: 1,
            weight_slope: w,
            weight_intercept: 0,
        }
    }

    /// The `i+j` even half of the full pair product: `s = 2m+2` has
    /// multiplicity `m`.
    pub fn even_pair_sums(u_power: usize, sign: i8, x: Rat, w: i64) -> Self {
        ProductFamily { exp_offset: 2, ..Self::odd_pair_sums(u_power, sign, x, w) }
    }
}

/// Logarithm of a [`ProductFamily`], truncated at `u^order`.
pub fn family_log(fam: &ProductFamily, order: usize) -> Result<TruncatedSeries> {
    if fam.exp_stride == 0 || fam.u_power == 0 || !(fam.sign == 1 || fam.sign == -1) {
        return Err(Error::Parameter(format!("malformed product family {fam:?}")));
    }
    if fam.ratio_base.abs() >= Rat::one() {
        return Err(Error::Divergent);
    }
    let x = &fam.ratio_base;
    let mut out = TruncatedSeries::zero(order);
    let mut k = 1usize;
    while fam.u_power * k <= order {
        let y = pow_i(x, (k as i64) * fam.exp_stride as i64);
        let one_minus = Rat::one() - &y;
        let weighted = rat(fam.weight_slope) * &y / (&one_minus * &one_minus)
            + rat(fam.weight_intercept) * &y / &one_minus;
        // log(1 + z) = Σ (-1)^{k+1} z^k / k with z = sign·u^a·x^{bi+c}
        let sign_k = if fam.sign == -1 && k % 2 == 1 { -1 } else { 1 };
        let alt = if k % 2 == 1 { 1 } else { -1 };
        let c = ratio(sign_k * alt, k as i64) * pow_i(x, k as i64 * fam.exp_offset) * weighted;
        out.coeffs[fam.u_power * k] += c;
        k += 1;
    }
    Ok(out)
}

/// Logarithm of a single factor `(1 + c·u^a)^m`.
pub fn factor_log(c: &Rat, u_power: usize, m: i64, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    let mut k = 1usize;
    let mut ck = c.clone();
    while u_power * k <= order {
        let alt = if k % 2 == 1 { 1 } else { -1 };
        out.coeffs[u_power * k] += ratio(alt * m, k as i64) * &ck;
        ck *= c;
        k += 1;
    }
    out
}

/// A finite list of product families and single factors, evaluated together.
#[derive(Clone, Debug, Default)]
pub struct ProductSpec {
    pub families: Vec<ProductFamily>,
    /// `(c, a, m)` stands for `(1 + c·u^a)^m`.
    pub factors: Vec<(Rat, usize, i64)>,
}

impl ProductSpec {
    pub fn family(mut self, fam: ProductFamily) -> Self {
        self.families.push(fam);
        self
    }

    pub fn factor(mut self, c: Rat, u_power: usize, m: i64) -> Self {
        self.factors.push((c, u_power, m));
        self
    }

    pub fn log(&self, order: usize) -> Result<TruncatedSeries> {
        let mut acc = TruncatedSeries::zero(order);
        for fam in &self.families {
            acc = acc.add(&family_log(fam, order)?)?;
        }
        for (c, a, m) in &self.factors {
            acc = acc.add(&factor_log(c, *a, *m, order))?;
        }
        Ok(acc)
    }

    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        self.log(order)?.exp()
    }
}

/// The closed-form series built by [`named_series`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesName {
    /// Involution generating function of `SO(2n+1, q)`, `q` odd.
    FgsSoOdd,
    /// Involution generating function of `Sp(2n, q)`, `q` even.
    FgsSpEven,
    /// Closed form of the unipotent degree-sum series `W(u)`.
    WClosed,
    /// Product form of the general linear and unitary part of the degree sum.
    GuexpandRhs,
    GlUnip,
    UUnip,
}

impl SeriesName {
    pub const ALL: [SeriesName; 6] = [
        SeriesName::FgsSoOdd,
        SeriesName::FgsSpEven,
        SeriesName::WClosed,
        SeriesName::GuexpandRhs,
        SeriesName::GlUnip,
        SeriesName::UUnip,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SeriesName::FgsSoOdd => "fgs_so_odd",
            SeriesName::FgsSpEven => "fgs_sp_even",
            SeriesName::WClosed => "w_closed",
            SeriesName::GuexpandRhs => "guexpand_rhs",
            SeriesName::GlUnip => "gl_unip",
            SeriesName::UUnip => "u_unip",
        }
    }
}

impl FromStr for SeriesName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SeriesName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

fn check_q(q: u64) -> Result<Rat> {
    prime_power(q).ok_or(Error::InvalidFieldSize(q))?;
    Ok(ratio(1, q as i64))
}

/// Builds one of the closed-form series at a fixed prime power `q`.
///
/// `e` is only read by `guexpand_rhs`; `None` means `e(q)`, and an explicit
/// value must agree with the parity of `q`.
pub fn named_series(name: SeriesName, q: u64, e: Option<u32>, order: usize) -> Result<TruncatedSeries> {
    let x = check_q(q)?;
    let spec = match name {
        SeriesName::FgsSoOdd => ProductSpec::default()
            .factor(rat(-1), 1, -1)
            .family(ProductFamily::flat(1, 1, x.clone(), 2, 0, 2))
            .family(ProductFamily::flat(2, -1, x, 2, 0, -1)),
        SeriesName::FgsSpEven => ProductSpec::default()
            .factor(rat(-1), 1, -1)
            .family(ProductFamily::flat(1, 1, x.clone(), 2, 0, 1))
            .family(ProductFamily::flat(2, -1, x, 2, 0, -1)),
        SeriesName::WClosed => ProductSpec::default()
            .family(ProductFamily::flat(1, 1, x.clone(), 2, 0, 1))
            .family(ProductFamily::flat(1, -1, x.clone(), 2, -1, -1))
            .family(ProductFamily::odd_pair_sums(2, -1, x, -1)),
        SeriesName::GuexpandRhs => {
            let e = match e {
                None => e_of(q),
                Some(e) if e == e_of(q) => e,
                Some(e) => {
                    return Err(Error::Parameter(format!("e = {e} does not match the parity of q = {q}")))
                }
            } as i64;
            ProductSpec::default()
                .factor(rat(-1), 1, -1)
                .family(ProductFamily::flat(1, -1, x.clone(), 2, -1, e))
                .family(ProductFamily::flat(2, -1, x.clone(), 2, 0, -1))
                .family(ProductFamily::odd_pair_sums(2, -1, x, e))
        }
        SeriesName::GlUnip => return gl_unip_closed(q, 1, order),
        SeriesName::UUnip => return u_unip_closed(q, 1, order),
    };
    spec.expand(order)
}

/// `Π_i (1 - u^d/Q^i)^{-1} Π_{i<j} (1 - u^{2d}/Q^{i+j})^{-1}` with `Q = q^d`.
pub fn gl_unip_closed(q: u64, d: u32, order: usize) -> Result<TruncatedSeries> {
    check_q(q)?;
    let x = pow_i(&ratio(1, q as i64), d as i64);
    let d = d as usize;
    ProductSpec::default()
        .family(ProductFamily::flat(d, -1, x.clone(), 1, 0, -1))
        .family(ProductFamily::odd_pair_sums(2 * d, -1, x.clone(), -1))
        .family(ProductFamily::even_pair_sums(2 * d, -1, x, -1))
        .expand(order)
}

/// `Π_i (1 - (-1)^{i-1} u^d/Q^i)^{-1} Π_{i<j} (1 + (-1)^{i+j} u^{2d}/Q^{i+j})^{-1}`
/// with `Q = q^d`, written with the negative base `x = -1/Q`.
pub fn u_unip_closed(q: u64, d: u32, order: usize) -> Result<TruncatedSeries> {
    check_q(q)?;
    let x = -pow_i(&ratio(1, q as i64), d as i64);
    let d = d as usize;
    ProductSpec::default()
        .family(ProductFamily::flat(d, 1, x.clone(), 1, 0, -1))
        .family(ProductFamily::odd_pair_sums(2 * d, 1, x.clone(), -1))
        .family(ProductFamily::even_pair_sums(2 * d, 1, x, -1))
        .expand(order)
}
