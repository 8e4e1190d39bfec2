//! Arithmetic in GF(2^n) for 1 <= n <= 24.
//!
//! Elements are stored as their polynomial-basis index: bit `i` of the
//! integer is the coefficient of `x^i` modulo the shipped modulus for `n`.
//! Multiplication goes through log/antilog tables built from the primitive
//! element `gamma = x`.
//!
//! Shipped moduli (x is primitive for every entry):
//!
//! | n | modulus | n | modulus | n | modulus |
//! |---|---------|---|---------|---|---------|
//! | 2 | 0x7 | 10 | 0x409 | 18 | 0x40081 |
//! | 3 | 0xb | 11 | 0x805 | 19 | 0x80027 |
//! | 4 | 0x13 | 12 | 0x1053 | 20 | 0x100009 |
//! | 5 | 0x25 | 13 | 0x201b | 21 | 0x200005 |
//! | 6 | 0x43 | 14 | 0x4443 | 22 | 0x400003 |
//! | 7 | 0x83 | 15 | 0x8003 | 23 | 0x800021 |
//! | 8 | 0x11d | 16 | 0x1100b | 24 | 0x1000087 |
//! | 9 | 0x211 | 17 | 0x20009 | | |

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 24;

/// Index `n` holds the modulus used for GF(2^n). Degree 1 (`x + 1`) is only
/// used internally for the prime subfield.
const MODULI: [u32; 25] = [
    0, 0x3, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11d, 0x211, 0x409, 0x805, 0x1053, 0x201b, 0x4443, 0x8003, 0x1100b,
    0x20009, 0x40081, 0x80027, 0x100009, 0x200005, 0x400003, 0x800021, 0x1000087,
];

/// The shipped modulus for degree `n`, if any.
pub fn shipped_modulus(n: u32) -> Option<u32> {
    MODULI.get(n as usize).copied().filter(|&m| m != 0)
}

/// Immutable description of GF(2^n).
pub struct FieldContext {
    degree: u32,
    modulus: u32,
    /// 2^n - 1, the order of the multiplicative group.
    order: u32,
    log: Vec<u32>,
    antilog: Vec<u32>,
    /// Bit `i` is Tr(x^i); Tr(a) is the parity of `a & trace_mask`.
    trace_mask: u32,
    /// Row `j` is the F_2-linear image of x^j under lambda -> (Tr(lambda x^i))_i.
    trace_dual: Vec<u32>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("degree", &self.degree)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .finish()
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for FieldContext {}

/// Builds GF(2^n) with the shipped modulus. `2 <= n <= 24`.
pub fn make_field(n: u32) -> Result<Arc<FieldContext>> {
    if !(2..=MAX_DEGREE).contains(&n) {
        return Err(Error::DegreeOutOfRange(n));
    }
    FieldContext::build(n).map(Arc::new)
}

/// Carry-less remainder of `a` modulo `b` over F_2.
fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= db {
        let shift = (63 - a.leading_zeros()) - db;
        a ^= b << shift;
    }
    a
}

fn is_irreducible(modulus: u32) -> bool {
    let n = 31 - modulus.leading_zeros();
    // every reducible polynomial has a factor of degree <= n/2
    for d in 1..=n / 2 {
        for low in 0..(1u64 << d) {
            let divisor = (1u64 << d) | low;
            if poly_rem(modulus as u64, divisor) == 0 {
                return false;
            }
        }
    }
    true
}

impl FieldContext {
    pub(crate) fn build(n: u32) -> Result<Self> {
        let modulus = shipped_modulus(n).ok_or(Error::MissingModulus(n))?;
        if !is_irreducible(modulus) {
            return Err(Error::ReducibleModulus { modulus });
        }
        let size = 1usize << n;
        let order = (size - 1) as u32;
        let gamma: u32 = if n == 1 { 1 } else { 2 };

        let mut log = vec![0u32; size];
        let mut antilog = vec![0u32; order as usize];
        let mut acc = 1u32;
        for (i, slot) in antilog.iter_mut().enumerate() {
            if i > 0 && acc == 1 {
                return Err(Error::NotPrimitive { modulus });
            }
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = mul_slow(acc, gamma, modulus, n);
        }
        if acc != 1 {
            return Err(Error::NotPrimitive { modulus });
        }

        let mut ctx = FieldContext { degree: n, modulus, order, log, antilog, trace_mask: 0, trace_dual: Vec::new() };
        let basis_traces: Vec<u32> = (0..2 * n - 1).map(|i| ctx.trace_slow(gamma_pow_basis(n, i))).collect();
        ctx.trace_mask = (0..n).fold(0, |m, i| m | (basis_traces[i as usize] << i));
        ctx.trace_dual = (0..n).map(|j| (0..n).fold(0, |row, i| row | (basis_traces[(i + j) as usize] << i))).collect();
        Ok(ctx)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, 2^n.
    pub fn size(&self) -> usize {
        1usize << self.degree
    }

    /// 2^n - 1.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// The primitive element gamma (the residue class of x).
    pub fn gamma(&self) -> u32 {
        if self.degree == 1 {
            1
        } else {
            2
        }
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.size() as u64
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        let s = if s >= self.order { s - self.order } else { s };
        self.antilog[s as usize]
    }

    #[inline]
    pub fn square(&self, a: u32) -> u32 {
        self.mul(a, a)
    }

    /// `a^e`, with `a^0 = 1` for every `a` (including zero).
    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = (self.log[a as usize] as u64 * (e % self.order as u64)) % self.order as u64;
        self.antilog[l as usize]
    }

    /// `a^(2^n - 2)`; zero maps to zero.
    pub fn inv(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize];
        self.antilog[((self.order - l) % self.order) as usize]
    }

    /// Discrete log base gamma, `None` for zero.
    #[inline]
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// gamma^e.
    #[inline]
    pub fn exp(&self, e: u64) -> u32 {
        self.antilog[(e % self.order as u64) as usize]
    }

    /// a^(2^j).
    pub fn frobenius(&self, a: u32, j: u32) -> u32 {
        (0..j % self.degree).fold(a, |z, _| self.square(z))
    }

    /// The unique square root, a^(2^(n-1)).
    pub fn sqrt(&self, a: u32) -> u32 {
        self.frobenius(a, self.degree - 1)
    }

    /// Absolute trace Tr_1^n(a) as a bit.
    #[inline]
    pub fn trace(&self, a: u32) -> u32 {
        (a & self.trace_mask).count_ones() & 1
    }

    fn trace_slow(&self, a: u32) -> u32 {
        let mut z = a;
        let mut acc = 0;
        for _ in 0..self.degree {
            acc ^= z;
            z = self.square(z);
        }
        debug_assert!(acc <= 1);
        acc
    }

    /// Relative trace Tr_k^n(a) = sum of a^(2^(k i)) for i < n/k.
    pub fn relative_trace(&self, a: u32, k: u32) -> Result<u32> {
        if k == 0 || !self.degree.is_multiple_of(k) {
            return Err(Error::NotADivisor { k, n: self.degree });
        }
        Ok(self.relative_trace_unchecked(a, k))
    }

    pub(crate) fn relative_trace_unchecked(&self, a: u32, k: u32) -> u32 {
        let mut z = a;
        let mut acc = 0;
        for _ in 0..self.degree / k {
            acc ^= z;
            z = self.frobenius(z, k);
        }
        acc
    }

    /// Whether `a` lies in the degree-`k` subfield (fixed by z -> z^(2^k)).
    pub fn in_subfield(&self, a: u32, k: u32) -> bool {
        self.degree.is_multiple_of(k) && self.frobenius(a, k) == a
    }

    /// The linear map lambda -> w with Tr(lambda y) = <w, y> for every y.
    #[inline]
    pub fn trace_dual(&self, lambda: u32) -> u32 {
        let mut w = 0;
        let mut bits = lambda;
        while bits != 0 {
            let j = bits.trailing_zeros();
            w ^= self.trace_dual[j as usize];
            bits &= bits - 1;
        }
        w
    }

    pub fn element(&self, bits: u64) -> Result<FieldElement> {
        if !self.contains(bits) {
            return Err(Error::ElementOutOfRange { bits, degree: self.degree });
        }
        Ok(FieldElement { bits: bits as u32, degree: self.degree })
    }

    fn own(&self, a: FieldElement) -> Result<u32> {
        if a.degree != self.degree {
            return Err(Error::ContextMismatch { left: self.degree, right: a.degree });
        }
        Ok(a.bits)
    }

    fn wrap(&self, bits: u32) -> FieldElement {
        FieldElement { bits, degree: self.degree }
    }

    /// Checked arithmetic on context-tagged elements.
    pub fn field_arith(&self, op: ArithOp, a: FieldElement, b: Option<FieldElement>) -> Result<FieldElement> {
        let a = self.own(a)?;
        let rhs = |b: Option<FieldElement>| -> Result<u32> {
            let b = b.ok_or(Error::DimensionMismatch { expected: 2, got: 1 })?;
            self.own(b)
        };
        let bits = match op {
            ArithOp::Add => self.add(a, rhs(b)?),
            ArithOp::Mul => self.mul(a, rhs(b)?),
            ArithOp::Inv => {
                if a == 0 {
                    return Err(Error::ZeroInverse);
                }
                self.pow(a, (self.order - 1) as u64)
            }
            ArithOp::Pow(e) => self.pow(a, e),
        };
        Ok(self.wrap(bits))
    }

    /// Tr_k^n on a context-tagged element.
    pub fn trace_to(&self, a: FieldElement, k: u32) -> Result<FieldElement> {
        let a = self.own(a)?;
        self.relative_trace(a, k).map(|t| self.wrap(t))
    }
}

fn gamma_pow_basis(n: u32, i: u32) -> u32 {
    // x^i reduced; only used before the tables are queried for traces
    poly_rem(1u64 << i, MODULI[n as usize] as u64) as u32
}

fn mul_slow(a: u32, b: u32, modulus: u32, n: u32) -> u32 {
    let mut acc = 0u64;
    for i in 0..n {
        if b >> i & 1 == 1 {
            acc ^= (a as u64) << i;
        }
    }
    poly_rem(acc, modulus as u64) as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Inv,
    Pow(u64),
}

/// A field element tagged with the degree of the field it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    bits: u32,
    degree: u32,
}

impl FieldElement {
    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn degree(self) -> u32 {
        self.degree
    }
}

/// The degree-k subfield of an ambient field, paired with a standalone
/// GF(2^k) whose polynomial basis fixes the k-bit word encoding.
///
/// The embedding sends the standalone `x` to the smallest-index root of the
/// standalone modulus inside the ambient field.
#[derive(Debug)]
pub struct Subfield {
    ambient: Arc<FieldContext>,
    small: Arc<FieldContext>,
    to_ambient: Vec<u32>,
    to_word: HashMap<u32, u32>,
}

impl Subfield {
    pub fn new(ambient: Arc<FieldContext>, k: u32) -> Result<Self> {
        let n = ambient.degree();
        if k == 0 || !n.is_multiple_of(k) {
            return Err(Error::NotADivisor { k, n });
        }
        let small = Arc::new(FieldContext::build(k)?);
        let step = ambient.order() / small.order();
        let poly = small.modulus();
        let root = (0..small.order())
            .map(|j| ambient.exp(j as u64 * step as u64))
            .filter(|&z| {
                let v = (0..=k).rev().fold(0, |acc, i| ambient.add(ambient.mul(acc, z), poly >> i & 1));
                v == 0
            })
            .min()
            .expect("the standalone modulus splits in the subfield");
        let powers: Vec<u32> = (0..k).map(|i| ambient.pow(root, i as u64)).collect();
        let to_ambient: Vec<u32> = (0..small.size() as u32)
            .map(|w| (0..k).filter(|&i| w >> i & 1 == 1).fold(0, |acc, i| acc ^ powers[i as usize]))
            .collect();
        let to_word = to_ambient.iter().enumerate().map(|(w, &z)| (z, w as u32)).collect();
        Ok(Subfield { ambient, small, to_ambient, to_word })
    }

    pub fn degree(&self) -> u32 {
        self.small.degree()
    }

    pub fn ambient(&self) -> &Arc<FieldContext> {
        &self.ambient
    }

    /// The standalone GF(2^k) whose element indices are the word encoding.
    pub fn small(&self) -> &Arc<FieldContext> {
        &self.small
    }

    pub fn to_ambient(&self, word: u32) -> u32 {
        self.to_ambient[word as usize]
    }

    pub fn to_word(&self, element: u32) -> Result<u32> {
        self.to_word.get(&element).copied().ok_or(Error::NotInSubfield { bits: element, k: self.degree() })
    }
}

/// A basis of the degree-k subfield and its trace-dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasisPair {
    pub k: u32,
    pub a: Vec<FieldElement>,
    pub b: Vec<FieldElement>,
}

/// Tr_1^k for an element of the degree-k subfield, computed in the ambient field.
pub(crate) fn subfield_trace(ctx: &FieldContext, z: u32, k: u32) -> u32 {
    let mut acc = 0;
    let mut w = z;
    for _ in 0..k {
        acc ^= w;
        w = ctx.square(w);
    }
    acc
}

/// Inverse of a square F_2 matrix given as row bitmasks, or `None` if singular.
fn invert_bit_matrix(rows: &[u64]) -> Option<Vec<u64>> {
    let k = rows.len();
    let mut a = rows.to_vec();
    let mut inv: Vec<u64> = (0..k).map(|i| 1u64 << i).collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| a[r] >> col & 1 == 1)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        for r in 0..k {
            if r != col && a[r] >> col & 1 == 1 {
                a[r] ^= a[col];
                inv[r] ^= inv[col];
            }
        }
    }
    Some(inv)
}

fn rank(vectors: &[u32]) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    for &v in vectors {
        let reduced = basis.iter().fold(v, |acc, &b| acc.min(acc ^ b));
        if reduced != 0 {
            basis.push(reduced);
            basis.sort_unstable_by(|x, y| y.cmp(x));
        }
    }
    basis.len()
}

/// Computes the unique dual basis B of a basis A of the degree-k subfield,
/// where k = `a.len()`: Tr_1^k(a_i b_j) = delta_ij.
pub fn dual_basis(ctx: &FieldContext, a: &[FieldElement]) -> Result<DualBasisPair> {
    let k = a.len() as u32;
    let n = ctx.degree();
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::NotADivisor { k, n });
    }
    let bits = a.iter().map(|&e| ctx.own(e)).collect::<Result<Vec<u32>>>()?;
    if let Some(&bad) = bits.iter().find(|&&z| !ctx.in_subfield(z, k)) {
        return Err(Error::NotInSubfield { bits: bad, k });
    }
    if rank(&bits) != bits.len() {
        return Err(Error::LinearlyDependent);
    }
    // Gram matrix G_ij = Tr(a_i a_j); B = G^-1 A.
    let gram: Vec<u64> = bits
        .iter()
        .map(|&x| {
            bits.iter().enumerate().fold(0u64, |row, (j, &y)| row | (subfield_trace(ctx, ctx.mul(x, y), k) as u64) << j)
        })
        .collect();
    let inv = invert_bit_matrix(&gram).ok_or(Error::LinearlyDependent)?;
    let b = inv
        .iter()
        .map(|&row| {
            let z = bits.iter().enumerate().filter(|(l, _)| row >> l & 1 == 1).fold(0, |acc, (_, &x)| acc ^ x);
            ctx.wrap(z)
        })
        .collect();
    Ok(DualBasisPair { k, a: a.to_vec(), b })
}

/// Inverse of `a` modulo `modulus` by extended Euclid, if it exists.
pub fn mod_inverse(a: u64, modulus: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(modulus as i128));
    (g.gcd == 1).then(|| g.x.rem_euclid(modulus as i128) as u64)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_has_the_quadratic_modulus() {
        let ctx = make_field(2).unwrap();
        assert_eq!(ctx.modulus(), 0b111);
        // x * x = x + 1
        assert_eq!(ctx.mul(2, 2), 3);
    }

    #[test]
    fn gamma_has_full_order_in_gf16() {
        let ctx = make_field(4).unwrap();
        let g = ctx.gamma();
        let mut z = 1;
        for j in 1..15 {
            z = mul_slow(z, g, ctx.modulus(), 4);
            assert_ne!(z, 1, "gamma^{j} = 1");
        }
        assert_eq!(mul_slow(z, g, ctx.modulus(), 4), 1);
    }

    #[test]
    fn degree_guard() {
        assert_eq!(make_field(25).unwrap_err(), Error::DegreeOutOfRange(25));
        assert_eq!(make_field(1).unwrap_err(), Error::DegreeOutOfRange(1));
        assert_eq!(make_field(0).unwrap_err(), Error::DegreeOutOfRange(0));
    }

    #[test]
    fn every_shipped_modulus_is_irreducible() {
        for n in 1..=MAX_DEGREE {
            assert!(is_irreducible(shipped_modulus(n).unwrap()), "n={n}");
        }
    }

    #[test]
    fn shipped_moduli_are_primitive_up_to_20() {
        for n in 2..=20 {
            make_field(n).unwrap();
        }
    }

    #[test]
    fn reducible_polynomials_are_rejected() {
        assert!(!is_irreducible(0b101)); // x^2 + 1
        assert!(!is_irreducible(0b10101)); // (x^2 + x + 1)^2
        assert!(is_irreducible(0b11111));
    }

    #[test]
    fn basic_arith_examples() {
        for n in [2, 5, 8] {
            let ctx = make_field(n).unwrap();
            let g = ctx.element(ctx.gamma() as u64).unwrap();
            let e = (ctx.order() - 1) as u64;
            let ge = ctx.field_arith(ArithOp::Pow(e), g, None).unwrap();
            let one = ctx.field_arith(ArithOp::Mul, g, Some(ge)).unwrap();
            assert_eq!(one.bits(), 1);
            let x = ctx.element(3).unwrap();
            assert_eq!(ctx.field_arith(ArithOp::Add, x, Some(x)).unwrap().bits(), 0);
        }
        let gf4 = make_field(2).unwrap();
        let g = gf4.element(2).unwrap();
        assert_eq!(gf4.field_arith(ArithOp::Mul, g, Some(g)).unwrap().bits(), 3);
    }

    #[test]
    fn arith_errors() {
        let a = make_field(4).unwrap();
        let b = make_field(6).unwrap();
        let zero = a.element(0).unwrap();
        assert_eq!(a.field_arith(ArithOp::Inv, zero, None).unwrap_err(), Error::ZeroInverse);
        let y = b.element(3).unwrap();
        assert_eq!(
            a.field_arith(ArithOp::Add, zero, Some(y)).unwrap_err(),
            Error::ContextMismatch { left: 4, right: 6 }
        );
        assert!(a.element(16).is_err());
    }

    #[test]
    fn inverse_matches_power_and_log_tables_roundtrip() {
        let ctx = make_field(7).unwrap();
        for x in 1..ctx.size() as u32 {
            assert_eq!(ctx.exp(ctx.log(x).unwrap() as u64), x);
            assert_eq!(ctx.inv(x), ctx.pow(x, (ctx.order() - 1) as u64));
            assert_eq!(ctx.mul(x, ctx.inv(x)), 1);
        }
    }

    #[test]
    fn field_laws_exhaustive_small() {
        for n in 2..=12 {
            let ctx = make_field(n).unwrap();
            let half = ctx.size() / 2;
            let mut zero_traces = 0;
            for x in 0..ctx.size() as u32 {
                if x != 0 {
                    assert_eq!(ctx.pow(x, ctx.order() as u64), 1);
                }
                assert_eq!(ctx.trace(x), ctx.trace_slow(x));
                assert_eq!(ctx.trace(ctx.square(x)), ctx.trace(x));
                zero_traces += (ctx.trace(x) == 0) as usize;
            }
            assert_eq!(zero_traces, half, "n={n}");
        }
    }

    #[test]
    fn trace_additivity_exhaustive() {
        for n in 2..=8 {
            let ctx = make_field(n).unwrap();
            for x in 0..ctx.size() as u32 {
                for y in 0..ctx.size() as u32 {
                    assert_eq!(ctx.trace(x ^ y), ctx.trace(x) ^ ctx.trace(y));
                }
            }
        }
    }

    #[test]
    fn trace_examples_gf4() {
        let ctx = make_field(2).unwrap();
        assert_eq!(ctx.trace(0), 0);
        // gamma + gamma^2 = x + (x + 1) = 1
        assert_eq!(ctx.trace(2), 1);
        assert_eq!(ctx.relative_trace(2, 1).unwrap(), 1);
    }

    #[test]
    fn trace_transitivity_gf16_and_gf64() {
        for (n, ks) in [(4u32, vec![2u32]), (6, vec![2, 3]), (12, vec![2, 3, 4, 6])] {
            let ctx = make_field(n).unwrap();
            for &k in &ks {
                for x in 0..ctx.size() as u32 {
                    let t = ctx.relative_trace(x, k).unwrap();
                    assert!(ctx.in_subfield(t, k));
                    assert_eq!(ctx.trace(x), subfield_trace(&ctx, t, k));
                }
            }
        }
    }

    #[test]
    fn relative_trace_requires_divisor() {
        let ctx = make_field(6).unwrap();
        assert_eq!(ctx.relative_trace(3, 4).unwrap_err(), Error::NotADivisor { k: 4, n: 6 });
        let e = ctx.element(3).unwrap();
        assert!(ctx.trace_to(e, 5).is_err());
    }

    #[test]
    fn trace_dual_represents_trace_form() {
        let ctx = make_field(6).unwrap();
        for l in 0..64u32 {
            let w = ctx.trace_dual(l);
            for y in 0..64u32 {
                assert_eq!(ctx.trace(ctx.mul(l, y)), (w & y).count_ones() & 1);
            }
        }
    }

    #[test]
    fn subfield_embedding_is_a_ring_isomorphism() {
        let ctx = make_field(8).unwrap();
        for k in [1, 2, 4, 8] {
            let sub = Subfield::new(ctx.clone(), k).unwrap();
            let small = sub.small().clone();
            for a in 0..small.size() as u32 {
                assert!(ctx.in_subfield(sub.to_ambient(a), k));
                assert_eq!(sub.to_word(sub.to_ambient(a)).unwrap(), a);
                for b in 0..small.size() as u32 {
                    assert_eq!(sub.to_ambient(small.mul(a, b)), ctx.mul(sub.to_ambient(a), sub.to_ambient(b)));
                }
            }
        }
        let full = Subfield::new(ctx.clone(), 8).unwrap();
        assert!((0..256).all(|w| full.to_ambient(w) == w));
        assert!(Subfield::new(ctx, 3).is_err());
    }

    #[test]
    fn dual_basis_of_one_is_one() {
        let ctx = make_field(4).unwrap();
        let one = ctx.element(1).unwrap();
        let pair = dual_basis(&ctx, &[one]).unwrap();
        assert_eq!(pair.b, vec![one]);
    }

    #[test]
    fn dual_basis_gf4_example() {
        let ctx = make_field(2).unwrap();
        let a = [ctx.element(1).unwrap(), ctx.element(2).unwrap()];
        let pair = dual_basis(&ctx, &a).unwrap();
        // Tr(0) = Tr(1) = 0, Tr(gamma) = Tr(gamma + 1) = 1:
        // b1 = gamma + 1 (Tr(b1) = 1, Tr(gamma b1) = Tr(1) = 0), b2 = 1
        assert_eq!(pair.b[0].bits(), 3);
        assert_eq!(pair.b[1].bits(), 1);
    }

    fn all_bases(ctx: &FieldContext, k: u32) -> Vec<Vec<FieldElement>> {
        let elems: Vec<u32> = (0..ctx.size() as u32).filter(|&z| ctx.in_subfield(z, k)).collect();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(ctx: &FieldContext, elems: &[u32], k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<FieldElement>>) {
            if cur.len() == k {
                if rank(cur) == k {
                    out.push(cur.iter().map(|&b| ctx.element(b as u64).unwrap()).collect());
                }
                return;
            }
            for &e in elems {
                if e != 0 && !cur.contains(&e) {
                    cur.push(e);
                    rec(ctx, elems, k, cur, out);
                    cur.pop();
                }
            }
        }
        rec(ctx, &elems, k as usize, &mut cur, &mut out);
        out
    }

    #[test]
    fn dual_basis_relation_and_involution_exhaustive() {
        let gf4 = make_field(2).unwrap();
        let bases = all_bases(&gf4, 2);
        assert_eq!(bases.len(), 6);
        let gf16 = make_field(4).unwrap();
        let mut count = 0;
        for (ctx, k) in [(&gf4, 2), (&gf16, 2), (&gf16, 4)] {
            for a in all_bases(ctx, k) {
                let pair = dual_basis(ctx, &a).unwrap();
                for (i, x) in pair.a.iter().enumerate() {
                    for (j, y) in pair.b.iter().enumerate() {
                        let t = subfield_trace(ctx, ctx.mul(x.bits(), y.bits()), k);
                        assert_eq!(t, (i == j) as u32);
                    }
                }
                assert_eq!(dual_basis(ctx, &pair.b).unwrap().b, a);
                count += 1;
            }
        }
        assert!(count > 0);
    }

    #[test]
    fn dual_basis_rejections() {
        let ctx = make_field(4).unwrap();
        let one = ctx.element(1).unwrap();
        assert_eq!(dual_basis(&ctx, &[one, one]).unwrap_err(), Error::LinearlyDependent);
        let g = ctx.element(2).unwrap();
        assert_eq!(dual_basis(&ctx, &[one, g]).unwrap_err(), Error::NotInSubfield { bits: 2, k: 2 });
        assert!(dual_basis(&ctx, &[one, g, g]).is_err());
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(7, 9), Some(4));
        assert_eq!(mod_inverse(3, 5), Some(2));
        assert_eq!(mod_inverse(3, 9), None);
    }
}
