//! Integer partitions, hook lengths, the `a` statistic and Schur function
//! evaluations.
//!
//! The hook-product closed form [`principal_specialization`] is what the
//! degree formulas use. [`schur_poly_oracle`] sums over semistandard tableaux
//! and only exists to check it.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{pow_i, Rat};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parameter(format!("partition {parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parameter(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `a(λ) = Σ (i-1) λ_i`.
    pub fn a_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                // zero-based form of λ_i + λ'_j - i - j + 1
                hooks.push(row + conj.parts[j] - i - j - 1);
            }
        }
        hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookData {
    pub hooks: Vec<usize>,
    pub a_stat: usize,
    pub a_stat_conj: usize,
}

pub fn hook_data(lambda: &Partition) -> HookData {
    HookData {
        hooks: lambda.hooks(),
        a_stat: lambda.a_stat(),
        a_stat_conj: lambda.conjugate().a_stat(),
    }
}

/// Every partition of `n`, in reverse lexicographic order: `(n)` first,
/// `(1^n)` last.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

/// `s_λ(x_1, …, x_k)` as a sum over semistandard Young tableaux with entries
/// in `1..=k`.
///
/// Tableaux are built one entry value at a time: the cells holding `j` form a
/// horizontal strip added to the shape holding entries `< j`. Intermediate
/// shapes are memoized, so `k` may be large. Works over any commutative ring;
/// see [`crate::qseries::Polynomial`] for evaluation at polynomial arguments.
pub fn schur_poly_oracle<R>(lambda: &Partition, values: &[R]) -> R
where
    R: Clone + Zero + One + Mul<Output = R>,
{
    let mut memo: HashMap<(Vec<usize>, usize), R> = HashMap::new();
    tableau_sum(lambda.parts(), values.len(), values, &mut memo)
}

fn tableau_sum<R>(
    shape: &[usize],
    k: usize,
    values: &[R],
    memo: &mut HashMap<(Vec<usize>, usize), R>,
) -> R
where
    R: Clone + Zero + One + Mul<Output = R>,
{
    if shape.is_empty() {
        return R::one();
    }
    if shape.len() > k {
        return R::zero();
    }
    let key = (shape.to_vec(), k);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let x = &values[k - 1];
    let total: usize = shape.iter().sum();
    let mut acc = R::zero();
    for inner in horizontal_strip_removals(shape) {
        let removed = total - inner.iter().sum::<usize>();
        let mut term = tableau_sum(&inner, k - 1, values, memo);
        for _ in 0..removed {
            term = term * x.clone();
        }
        acc = acc + term;
    }
    memo.insert(key, acc.clone());
    acc
}

/// Shapes `ν ⊆ μ` with `μ/ν` a horizontal strip (`μ_{i+1} ≤ ν_i ≤ μ_i`),
/// trailing zeros stripped.
fn horizontal_strip_removals(shape: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(shape.len());
    fn rec(shape: &[usize], i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == shape.len() {
            let mut v = cur.clone();
            while v.last() == Some(&0) {
                v.pop();
            }
            out.push(v);
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        for part in lo..=shape[i] {
            cur.push(part);
            rec(shape, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(shape, 0, &mut cur, &mut out);
    out
}

/// `s_λ(1, x, x², …) = x^{a(λ)} / Π_y (1 - x^{h(y)})`.
pub fn principal_specialization(lambda: &Partition, x: &Rat) -> Result<Rat> {
    let mut denom = Rat::one();
    for h in lambda.hooks() {
        let factor = Rat::one() - pow_i(x, h as i64);
        if factor.is_zero() {
            return Err(Error::ZeroDenominator(format!("1 - x^{h} at x = {x}")));
        }
        denom *= factor;
    }
    Ok(pow_i(x, lambda.a_stat() as i64) / denom)
}
