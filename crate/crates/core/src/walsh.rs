//! Truth tables, (extended) Walsh–Hadamard spectra, and the definitional
//! bent / hyper-bent checks.
//!
//! The extended transform is
//! `W_f(lambda, t) = sum_x (-1)^(f(x) + Tr(lambda x^t))` for `t` coprime with
//! `2^n - 1`. [`full_spectrum`] computes all `lambda` at once by re-indexing
//! the table through `y = x^t` and running a butterfly over the trace-dual
//! coordinates of `lambda`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2n::{gcd, mod_inverse, FieldContext};
use crate::limits::Limits;

/// Largest n the hyper-bent oracle accepts without a guard override.
pub const ORACLE_MAX_DEGREE: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanFunction {
    ctx: Arc<FieldContext>,
    table: Vec<bool>,
}

impl BooleanFunction {
    pub fn new(ctx: Arc<FieldContext>, table: Vec<bool>) -> Result<Self> {
        if table.len() != ctx.size() {
            return Err(Error::TableLength { got: table.len(), expected: ctx.size() });
        }
        Ok(BooleanFunction { ctx, table })
    }

    pub fn from_fn(ctx: Arc<FieldContext>, f: impl FnMut(u32) -> bool) -> Self {
        let table = (0..ctx.size() as u32).map(f).collect();
        BooleanFunction { ctx, table }
    }

    pub fn zero(ctx: Arc<FieldContext>) -> Self {
        let table = vec![false; ctx.size()];
        BooleanFunction { ctx, table }
    }

    pub fn ctx(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    #[inline]
    pub fn value(&self, x: u32) -> bool {
        self.table[x as usize]
    }

    /// (-1)^f(x)
    #[inline]
    pub fn sign(&self, x: u32) -> i64 {
        if self.table[x as usize] {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    pub values: Vec<i64>,
}

impl WalshSpectrum {
    pub fn parseval_sum(&self) -> i64 {
        self.values.iter().map(|v| v * v).sum()
    }

    pub fn histogram(&self) -> BTreeMap<i64, u64> {
        let mut h = BTreeMap::new();
        for &v in &self.values {
            *h.entry(v).or_insert(0) += 1;
        }
        h
    }
}

/// A failing coefficient of the extended transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectrumWitness {
    pub t: u64,
    pub lambda: u32,
    pub value: i64,
}

/// In-place Walsh–Hadamard butterfly, unnormalized.
pub fn fwht(buf: &mut [i64]) {
    let len = buf.len();
    debug_assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in buf.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

fn check_exponent(ctx: &FieldContext, t: u64) -> Result<()> {
    if t == 0 || gcd(t, ctx.order() as u64) != 1 {
        return Err(Error::ExponentNotCoprime { t, n: ctx.degree() });
    }
    Ok(())
}

/// Exponents `1 <= t <= 2^n - 2` coprime with `2^n - 1`.
pub fn coprime_exponents(ctx: &FieldContext) -> Vec<u64> {
    let order = ctx.order() as u64;
    (1..order.max(2)).filter(|&t| gcd(t, order) == 1).collect()
}

/// One representative (the smallest) per cyclotomic coset `{t 2^j mod 2^n-1}`
/// among the coprime exponents.
pub fn coset_representatives(ctx: &FieldContext) -> Vec<u64> {
    let order = ctx.order() as u64;
    coprime_exponents(ctx)
        .into_iter()
        .filter(|&t| {
            let mut u = t;
            (0..ctx.degree()).all(|_| {
                u = (u * 2) % order;
                u >= t
            })
        })
        .collect()
}

/// Single coefficient of the extended transform, summed over all 2^n inputs.
pub fn extended_walsh(f: &BooleanFunction, lambda: u32, t: u64) -> Result<i64> {
    let ctx = f.ctx();
    check_exponent(ctx, t)?;
    if !ctx.contains(lambda as u64) {
        return Err(Error::ElementOutOfRange { bits: lambda as u64, degree: ctx.degree() });
    }
    Ok((0..ctx.size() as u32)
        .map(|x| {
            let bit = f.value(x) as u32 ^ ctx.trace(ctx.mul(lambda, ctx.pow(x, t)));
            1 - 2 * bit as i64
        })
        .sum())
}

/// All coefficients `W_f(lambda, t)` for fixed `t`, in O(n 2^n).
pub fn full_spectrum(f: &BooleanFunction, t: u64) -> Result<WalshSpectrum> {
    let ctx = f.ctx();
    check_exponent(ctx, t)?;
    let t_inv = mod_inverse(t, ctx.order() as u64).expect("coprime exponent is invertible");
    // h(y) = f(y^(1/t)); sum_x (-1)^(f(x) + Tr(l x^t)) = sum_y (-1)^(h(y) + Tr(l y))
    let mut buf: Vec<i64> = (0..ctx.size() as u32).map(|y| f.sign(ctx.pow(y, t_inv))).collect();
    #[cfg(debug_assertions)]
    {
        let mut seen = vec![false; ctx.size()];
        for y in 0..ctx.size() as u32 {
            let x = ctx.pow(y, t_inv) as usize;
            assert!(!seen[x], "x -> x^t is not a bijection");
            seen[x] = true;
        }
        assert_eq!(ctx.pow(0, t_inv), 0);
    }
    fwht(&mut buf);
    let values = (0..ctx.size() as u32).map(|l| buf[ctx.trace_dual(l) as usize]).collect();
    Ok(WalshSpectrum { values })
}

fn require_even(ctx: &FieldContext) -> Result<u32> {
    let n = ctx.degree();
    if !n.is_multiple_of(2) {
        return Err(Error::OddDegree(n));
    }
    Ok(n / 2)
}

fn first_off_level(spectrum: &WalshSpectrum, level: i64) -> Option<(u32, i64)> {
    spectrum.values.iter().enumerate().find(|(_, &v)| v.abs() != level).map(|(l, &v)| (l as u32, v))
}

pub fn is_bent(f: &BooleanFunction) -> Result<bool> {
    let m = require_even(f.ctx())?;
    let spectrum = full_spectrum(f, 1)?;
    Ok(first_off_level(&spectrum, 1 << m).is_none())
}

/// Smallest failing `(t, lambda)` of the extended transform over the given
/// exponents, if any.
fn witness_over(f: &BooleanFunction, exponents: &[u64], limits: Limits) -> Result<Option<SpectrumWitness>> {
    let ctx = f.ctx();
    let m = require_even(ctx)?;
    if ctx.degree() > ORACLE_MAX_DEGREE && !limits.override_guards {
        return Err(Error::GuardExceeded { what: format!("hyper-bent oracle at n={}", ctx.degree()) });
    }
    let level = 1i64 << m;
    let found = exponents.par_iter().find_map_first(|&t| {
        let spectrum = full_spectrum(f, t).expect("exponent is coprime");
        first_off_level(&spectrum, level).map(|(lambda, value)| SpectrumWitness { t, lambda, value })
    });
    Ok(found)
}

/// Definitional check: every coprime `t` in `[1, 2^n - 2]`, every `lambda`.
pub fn hyperbent_witness(f: &BooleanFunction, limits: Limits) -> Result<Option<SpectrumWitness>> {
    witness_over(f, &coprime_exponents(f.ctx()), limits)
}

pub fn is_hyperbent_oracle(f: &BooleanFunction) -> Result<bool> {
    is_hyperbent_oracle_with(f, Limits::STRICT)
}

pub fn is_hyperbent_oracle_with(f: &BooleanFunction, limits: Limits) -> Result<bool> {
    hyperbent_witness(f, limits).map(|w| w.is_none())
}

/// Same verdict as [`is_hyperbent_oracle`], sweeping one exponent per
/// cyclotomic coset: `x -> x^2` permutes the field and commutes with the
/// trace, so `t` and `2t` give the same multiset of spectrum values.
pub fn is_hyperbent_by_cosets(f: &BooleanFunction, limits: Limits) -> Result<bool> {
    witness_over(f, &coset_representatives(f.ctx()), limits).map(|w| w.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::make_field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_function(ctx: &Arc<FieldContext>, rng: &mut ChaCha8Rng) -> BooleanFunction {
        BooleanFunction::from_fn(ctx.clone(), |_| rng.gen())
    }

    #[test]
    fn zero_function_coefficients() {
        let ctx = make_field(4).unwrap();
        let f = BooleanFunction::zero(ctx.clone());
        for t in coprime_exponents(&ctx) {
            assert_eq!(extended_walsh(&f, 0, t).unwrap(), 16);
        }
        for l in 1..16 {
            assert_eq!(extended_walsh(&f, l, 1).unwrap(), 0);
        }
        let s = full_spectrum(&f, 1).unwrap();
        assert_eq!(s.values[0], 16);
        assert!(s.values[1..].iter().all(|&v| v == 0));
    }

    #[test]
    fn exponent_must_be_coprime() {
        let ctx = make_field(4).unwrap();
        let f = BooleanFunction::zero(ctx);
        assert_eq!(extended_walsh(&f, 0, 3).unwrap_err(), Error::ExponentNotCoprime { t: 3, n: 4 });
        assert!(full_spectrum(&f, 5).is_err());
        assert!(full_spectrum(&f, 0).is_err());
    }

    #[test]
    fn table_length_is_checked() {
        let ctx = make_field(4).unwrap();
        assert_eq!(
            BooleanFunction::new(ctx, vec![false; 15]).unwrap_err(),
            Error::TableLength { got: 15, expected: 16 }
        );
    }

    #[test]
    fn fast_spectrum_matches_pointwise_sums_gf16() {
        let ctx = make_field(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let f = random_function(&ctx, &mut rng);
            for t in [1, 7, 2, 11] {
                let s = full_spectrum(&f, t).unwrap();
                for l in 0..16 {
                    assert_eq!(s.values[l as usize], extended_walsh(&f, l, t).unwrap());
                }
            }
        }
    }

    #[test]
    fn parseval_on_random_functions() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [2, 4, 5, 8, 10] {
            let ctx = make_field(n).unwrap();
            for _ in 0..10 {
                let f = random_function(&ctx, &mut rng);
                assert_eq!(full_spectrum(&f, 1).unwrap().parseval_sum(), 1i64 << (2 * n));
            }
        }
    }

    #[test]
    fn bent_checks() {
        let ctx = make_field(4).unwrap();
        assert!(!is_bent(&BooleanFunction::zero(ctx.clone())).unwrap());
        let linear = BooleanFunction::from_fn(ctx.clone(), |x| ctx.trace(x) == 1);
        assert!(!is_bent(&linear).unwrap());
        // x1 x2 + x3 x4 in polynomial-basis coordinates is bent
        let mm =
            BooleanFunction::from_fn(ctx.clone(), |x| ((x & 1) & (x >> 1 & 1)) ^ ((x >> 2 & 1) & (x >> 3 & 1)) == 1);
        assert!(is_bent(&mm).unwrap());
        let odd = make_field(5).unwrap();
        assert_eq!(is_bent(&BooleanFunction::zero(odd)).unwrap_err(), Error::OddDegree(5));
    }

    #[test]
    fn bent_sign_counts() {
        // every bent function on 4 variables: the + count is 8 +- 2
        let ctx = make_field(4).unwrap();
        let mut bent = 0;
        for bits in 0u32..(1 << 16) {
            let f = BooleanFunction::from_fn(ctx.clone(), |x| bits >> x & 1 == 1);
            if is_bent(&f).unwrap() {
                bent += 1;
                let s = full_spectrum(&f, 1).unwrap();
                let plus = s.values.iter().filter(|&&v| v == 4).count();
                assert!(plus == 10 || plus == 6);
            }
        }
        assert_eq!(bent, 896);
    }

    #[test]
    fn oracle_rejects_zero_and_linear() {
        let ctx = make_field(4).unwrap();
        let zero = BooleanFunction::zero(ctx.clone());
        assert_eq!(
            hyperbent_witness(&zero, Limits::STRICT).unwrap(),
            Some(SpectrumWitness { t: 1, lambda: 0, value: 16 })
        );
        let linear = BooleanFunction::from_fn(ctx.clone(), |x| ctx.trace(x) == 1);
        assert!(!is_hyperbent_oracle(&linear).unwrap());
    }

    #[test]
    fn oracle_guard() {
        let ctx = make_field(18).unwrap();
        let f = BooleanFunction::zero(ctx);
        assert!(matches!(is_hyperbent_oracle(&f), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn coset_fast_path_agrees_with_full_sweep() {
        let ctx = make_field(4).unwrap();
        assert_eq!(coset_representatives(&ctx), vec![1, 7]);
        let ctx6 = make_field(6).unwrap();
        assert_eq!(coset_representatives(&ctx6).len(), 6);
        // all 2^16 functions on GF(16)
        for bits in (0u32..(1 << 16)).step_by(7) {
            let f = BooleanFunction::from_fn(ctx.clone(), |x| bits >> x & 1 == 1);
            assert_eq!(is_hyperbent_oracle(&f).unwrap(), is_hyperbent_by_cosets(&f, Limits::STRICT).unwrap());
        }
    }
}
