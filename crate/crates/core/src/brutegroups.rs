//! `Sp(2n, q)` and `SO(2n+1, q)` as explicit matrix groups, closed by
//! breadth-first multiplication, for counting involutions directly.

use std::fmt;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::ffcensus::{Elem, GaloisField};

/// Default closure budget, in elements.
pub const DEFAULT_MAX_ELEMENTS: usize = 2_000_000;

/// A square matrix over `GF(q)` packed into a `u128`, `bits` bits per entry,
/// row-major. Two matrices are equal iff their encodings are.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GFMatrix {
    dim: u8,
    bits: u8,
    packed: u128,
}

fn bits_for(q: usize) -> u8 {
    (usize::BITS - (q - 1).leading_zeros()).max(1) as u8
}

impl GFMatrix {
    pub fn from_entries(field: &GaloisField, dim: usize, entries: &[Elem]) -> Result<Self> {
        let bits = bits_for(field.order());
        if dim == 0 || dim * dim * bits as usize > 128 {
            return Err(Error::Parameter(format!(
                "a {dim}x{dim} matrix over GF({}) does not fit the packed encoding",
                field.order()
            )));
        }
        if entries.len() != dim * dim || entries.iter().any(|&e| e as usize >= field.order()) {
            return Err(Error::Parameter("matrix entries do not match the dimension or field".into()));
        }
        Ok(Self::pack(dim, bits, entries))
    }

    fn pack(dim: usize, bits: u8, entries: &[Elem]) -> Self {
        let mut packed = 0u128;
        for (i, &e) in entries.iter().enumerate() {
            packed |= (e as u128) << (i * bits as usize);
        }
        GFMatrix { dim: dim as u8, bits, packed }
    }

    pub fn identity(field: &GaloisField, dim: usize) -> Result<Self> {
        let mut e = vec![0; dim * dim];
        for i in 0..dim {
            e[i * dim + i] = 1;
        }
        Self::from_entries(field, dim, &e)
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        let shift = (i * self.dim() + j) * self.bits as usize;
        ((self.packed >> shift) & ((1u128 << self.bits) - 1)) as Elem
    }

    pub fn entries(&self) -> Vec<Elem> {
        let d = self.dim();
        (0..d * d).map(|k| self.get(k / d, k % d)).collect()
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim();
        let mut e = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                e[j * d + i] = self.get(i, j);
            }
        }
        Self::pack(d, self.bits, &e)
    }

    pub fn mul(&self, other: &Self, field: &GaloisField) -> Self {
        mul_unpacked(&self.entries(), &other.entries(), self.dim(), self.bits, field)
    }

    pub fn det(&self, field: &GaloisField) -> Elem {
        let d = self.dim();
        let mut a = self.entries();
        let mut det: Elem = 1;
        for c in 0..d {
            let Some(p) = (c..d).find(|&r| a[r * d + c] != 0) else {
                return 0;
            };
            if p != c {
                for k in 0..d {
                    a.swap(p * d + k, c * d + k);
                }
                det = field.neg(det);
            }
            let pivot = a[c * d + c];
            det = field.mul(det, pivot);
            let pinv = field.inv(pivot).expect("nonzero pivot");
            for r in c + 1..d {
                let f = field.mul(a[r * d + c], pinv);
                if f == 0 {
                    continue;
                }
                for k in c..d {
                    let v = field.mul(f, a[c * d + k]);
                    a[r * d + k] = field.sub(a[r * d + k], v);
                }
            }
        }
        det
    }
}

fn mul_unpacked(a: &[Elem], b: &[Elem], d: usize, bits: u8, field: &GaloisField) -> GFMatrix {
    let mut packed = 0u128;
    for i in 0..d {
        for j in 0..d {
            let mut s: Elem = 0;
            for k in 0..d {
                s = field.add(s, field.mul(a[i * d + k], b[k * d + j]));
            }
            packed |= (s as u128) << ((i * d + j) * bits as usize);
        }
    }
    GFMatrix { dim: d as u8, bits, packed }
}

impl fmt::Debug for GFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        let rows: Vec<Vec<Elem>> = (0..d).map(|i| (0..d).map(|j| self.get(i, j)).collect()).collect();
        write!(f, "{rows:?}")
    }
}

/// A generated matrix group with its full element set.
#[derive(Clone, Debug)]
pub struct FiniteGroupSet {
    field: GaloisField,
    dim: usize,
    elements: FxHashSet<GFMatrix>,
    generators: Vec<GFMatrix>,
}

impl FiniteGroupSet {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[GFMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &GFMatrix> {
        self.elements.iter()
    }

    pub fn contains(&self, g: &GFMatrix) -> bool {
        self.elements.contains(g)
    }
}

/// Closure of `gens` under multiplication. Fails once more than
/// `max_elements` elements have been found.
pub fn generate_group(
    field: &GaloisField,
    dim: usize,
    gens: &[GFMatrix],
    max_elements: usize,
) -> Result<FiniteGroupSet> {
    let id = GFMatrix::identity(field, dim)?;
    if gens.iter().any(|g| g.dim() != dim || g.det(field) == 0) {
        return Err(Error::Parameter("generators must be invertible and of the stated dimension".into()));
    }
    let unpacked: Vec<Vec<Elem>> = gens.iter().map(GFMatrix::entries).collect();
    let mut elements = FxHashSet::default();
    elements.insert(id);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            let xe = x.entries();
            for g in &unpacked {
                let y = mul_unpacked(&xe, g, dim, id.bits, field);
                if elements.insert(y) {
                    if elements.len() > max_elements {
                        return Err(Error::BudgetExceeded(max_elements));
                    }
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(FiniteGroupSet { field: field.clone(), dim, elements, generators: gens.to_vec() })
}

/// `#{g : g² = 1}`, the identity included.
pub fn count_involutions(group: &FiniteGroupSet) -> u64 {
    let id = GFMatrix::identity(&group.field, group.dim).expect("dimension already validated");
    group.elements.iter().filter(|g| g.mul(g, &group.field) == id).count() as u64
}

/// `q^{n²} Π_{i=1}^n (q^{2i} - 1)`, the order of both `Sp(2n, q)` and
/// `SO(2n+1, q)`.
pub fn sp_order(n: usize, q: u64) -> Option<u128> {
    let q = q as u128;
    let mut acc = q.checked_pow((n * n) as u32)?;
    for i in 1..=n as u32 {
        acc = acc.checked_mul(q.checked_pow(2 * i)? - 1)?;
    }
    Some(acc)
}

/// `J = [[0, I], [-I, 0]]`.
pub fn symplectic_form(field: &GaloisField, n: usize) -> Result<GFMatrix> {
    let d = 2 * n;
    let mut e = vec![0; d * d];
    for i in 0..n {
        e[i * d + n + i] = 1;
        e[(n + i) * d + i] = field.minus_one();
    }
    GFMatrix::from_entries(field, d, &e)
}

fn block_diag_dual(field: &GaloisField, a: &[Elem], n: usize) -> Result<GFMatrix> {
    // diag(A, A^{-T}) preserves J
    let am = GFMatrix::from_entries(field, n, a)?;
    let ainv_t = invert(field, &am)?.transpose();
    let d = 2 * n;
    let mut e = vec![0; d * d];
    for i in 0..n {
        for j in 0..n {
            e[i * d + j] = am.get(i, j);
            e[(n + i) * d + n + j] = ainv_t.get(i, j);
        }
    }
    GFMatrix::from_entries(field, d, &e)
}

fn invert(field: &GaloisField, m: &GFMatrix) -> Result<GFMatrix> {
    let d = m.dim();
    let mut a = m.entries();
    let mut inv = vec![0; d * d];
    for i in 0..d {
        inv[i * d + i] = 1;
    }
    for c in 0..d {
        let p = (c..d)
            .find(|&r| a[r * d + c] != 0)
            .ok_or_else(|| Error::Parameter("singular matrix".into()))?;
        for k in 0..d {
            a.swap(p * d + k, c * d + k);
            inv.swap(p * d + k, c * d + k);
        }
        let pinv = field.inv(a[c * d + c]).expect("nonzero pivot");
        for k in 0..d {
            a[c * d + k] = field.mul(a[c * d + k], pinv);
            inv[c * d + k] = field.mul(inv[c * d + k], pinv);
        }
        for r in 0..d {
            let f = a[r * d + c];
            if r == c || f == 0 {
                continue;
            }
            for k in 0..d {
                let (x, y) = (field.mul(f, a[c * d + k]), field.mul(f, inv[c * d + k]));
                a[r * d + k] = field.sub(a[r * d + k], x);
                inv[r * d + k] = field.sub(inv[r * d + k], y);
            }
        }
    }
    GFMatrix::from_entries(field, d, &inv)
}

/// Generators of `Sp(2n, q)` for the form [`symplectic_form`]: `J` itself,
/// `diag(A, A^{-T})` for `A` running over generators of `GL(n, q)`, and the
/// transvections `[[I, cE_11], [0, I]]` for `c ∈ {1, ξ}`.
pub fn sp_generators(n: usize, q: u64) -> Result<Vec<GFMatrix>> {
    if n == 0 {
        return Err(Error::Parameter("Sp(0, q) has no matrices".into()));
    }
    let field = GaloisField::new(q)?;
    let xi = field.primitive_element();
    let mut gens = vec![symplectic_form(&field, n)?];

    let ident = |n: usize| -> Vec<Elem> {
        let mut e = vec![0; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        e
    };
    let mut gl = Vec::new();
    if xi != 1 {
        let mut a = ident(n);
        a[0] = xi;
        gl.push(a);
    }
    if n > 1 {
        let mut a = ident(n);
        a[1] = 1;
        gl.push(a);
        let mut swap = vec![0; n * n];
        swap[1] = 1;
        swap[n] = 1;
        for i in 2..n {
            swap[i * n + i] = 1;
        }
        gl.push(swap);
        let mut cycle = vec![0; n * n];
        for i in 0..n {
            cycle[i * n + (i + 1) % n] = 1;
        }
        gl.push(cycle);
    }
    for a in gl {
        gens.push(block_diag_dual(&field, &a, n)?);
    }

    let d = 2 * n;
    for c in [1, xi] {
        let mut e = ident(d);
        e[n] = c;
        gens.push(GFMatrix::from_entries(&field, d, &e)?);
        if xi == 1 {
            break;
        }
    }
    Ok(gens)
}

/// Reflections `I - (2 / v·v) v vᵀ` for the identity form, one per
/// anisotropic line, and the products `r_{e_1} r_v` generating `SO(m, q)`.
pub fn so_generators(m: usize, q: u64) -> Result<Vec<GFMatrix>> {
    let field = GaloisField::new(q)?;
    if q.is_multiple_of(2) {
        return Err(Error::Parameter("orthogonal groups are built for odd q only".into()));
    }
    let qs = field.order();
    let two = field.add(1, 1);
    let reflection = |v: &[Elem]| -> Option<GFMatrix> {
        let vv = v.iter().fold(0, |s, &x| field.add(s, field.mul(x, x)));
        let c = field.mul(two, field.inv(vv)?);
        let mut e = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                let id = (i == j) as Elem;
                e[i * m + j] = field.sub(id, field.mul(c, field.mul(v[i], v[j])));
            }
        }
        GFMatrix::from_entries(&field, m, &e).ok()
    };
    let mut e1 = vec![0; m];
    e1[0] = 1;
    let r0 = reflection(&e1).expect("e_1 is anisotropic");
    let mut gens = Vec::new();
    let total = qs.pow(m as u32);
    for code in 1..total {
        let mut v = vec![0; m];
        let mut c = code;
        for x in v.iter_mut() {
            *x = (c % qs) as Elem;
            c /= qs;
        }
        // one representative per line: first nonzero coordinate is 1
        if v.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        if let Some(r) = reflection(&v) {
            let g = r0.mul(&r, &field);
            if g != GFMatrix::identity(&field, m)? {
                gens.push(g);
            }
        }
    }
    if gens.is_empty() {
        gens.push(GFMatrix::identity(&field, m)?);
    }
    Ok(gens)
}

fn gated(n: usize, q: u64, max_elements: usize) -> Result<u128> {
    let expected = sp_order(n, q).ok_or(Error::BudgetExceeded(max_elements))?;
    if expected > max_elements as u128 {
        return Err(Error::BudgetExceeded(max_elements));
    }
    Ok(expected)
}

fn check_gate(group: &FiniteGroupSet, expected: u128) -> Result<()> {
    let got = group.order() as u128;
    if got != expected {
        return Err(Error::OrderGate { got, expected });
    }
    Ok(())
}

/// `Sp(2n, q)`; refuses to start when the order formula exceeds the budget,
/// and fails if the closure does not reach that order.
pub fn sp_group(n: usize, q: u64, max_elements: usize) -> Result<FiniteGroupSet> {
    let expected = gated(n, q, max_elements)?;
    let field = GaloisField::new(q)?;
    if n == 0 {
        return Err(Error::Parameter("Sp(0, q) has no matrices".into()));
    }
    let group = generate_group(&field, 2 * n, &sp_generators(n, q)?, max_elements)?;
    check_gate(&group, expected)?;
    Ok(group)
}

/// `SO(2n+1, q)` for odd `q`, preserving `x_1² + … + x_{2n+1}²`.
pub fn so_odd_group(n: usize, q: u64, max_elements: usize) -> Result<FiniteGroupSet> {
    let expected = gated(n, q, max_elements)?;
    let field = GaloisField::new(q)?;
    let m = 2 * n + 1;
    let group = generate_group(&field, m, &so_generators(m, q)?, max_elements)?;
    check_gate(&group, expected)?;
    Ok(group)
}

pub fn preserves_symplectic_form(g: &GFMatrix, field: &GaloisField) -> bool {
    let j = symplectic_form(field, g.dim() / 2).expect("even dimension");
    g.transpose().mul(&j, field).mul(g, field) == j
}

/// `gᵀg = I` and `det g = 1`.
pub fn is_special_orthogonal(g: &GFMatrix, field: &GaloisField) -> bool {
    let id = GFMatrix::identity(field, g.dim()).expect("valid dimension");
    g.transpose().mul(g, field) == id && g.det(field) == 1
}
