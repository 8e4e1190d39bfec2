//! Binary Dickson polynomials `D_r` and the construction `D_r(T_u0(x))`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2n::{gcd, FieldContext};
use crate::psap::{lift_g_to_f, t_core, GFunction, UGroup};
use crate::vectorial::VectorialFunction;

pub const DICKSON_MAX_INDEX: u64 = 1 << 20;

/// Polynomial over F_2; bit `i` of the word vector is the coefficient of `x^i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly::default()
    }

    pub fn monomial(e: usize) -> Self {
        let mut p = Gf2Poly { words: vec![0; e / 64 + 1] };
        p.words[e / 64] = 1 << (e % 64);
        p
    }

    pub fn from_exponents(exps: &[usize]) -> Self {
        exps.iter().fold(Gf2Poly::zero(), |acc, &e| acc.add(&Gf2Poly::monomial(e)))
    }

    fn trim(mut self) -> Self {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| 64 * i + 63 - w.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        (0..=self.degree().unwrap_or(0)).filter(|&i| self.coeff(i)).collect()
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let len = self.words.len().max(other.words.len());
        let words = (0..len)
            .map(|i| self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0))
            .collect();
        Gf2Poly { words }.trim()
    }

    /// Multiplication by x.
    pub fn shift_up(&self) -> Gf2Poly {
        let mut words = Vec::with_capacity(self.words.len() + 1);
        let mut carry = 0;
        for &w in &self.words {
            words.push(w << 1 | carry);
            carry = w >> 63;
        }
        words.push(carry);
        Gf2Poly { words }.trim()
    }

    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut acc = Gf2Poly::zero();
        let mut shifted = self.clone();
        for i in 0..=other.degree().unwrap_or(0) {
            if other.coeff(i) {
                acc = acc.add(&shifted);
            }
            shifted = shifted.shift_up();
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Gf2Poly) -> Gf2Poly {
        let Some(d) = self.degree() else {
            return Gf2Poly::zero();
        };
        (0..=d).rev().fold(Gf2Poly::zero(), |acc, i| {
            let acc = acc.mul(inner);
            if self.coeff(i) {
                acc.add(&Gf2Poly::monomial(0))
            } else {
                acc
            }
        })
    }

    /// Horner evaluation at a field point.
    pub fn eval(&self, ctx: &FieldContext, z: u32) -> u32 {
        let Some(d) = self.degree() else {
            return 0;
        };
        (0..=d).rev().fold(0, |acc, i| ctx.mul(acc, z) ^ self.coeff(i) as u32)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicksonPoly {
    pub r: u64,
    pub poly: Gf2Poly,
}

impl DicksonPoly {
    pub fn eval(&self, ctx: &FieldContext, z: u32) -> u32 {
        self.poly.eval(ctx, z)
    }

    /// Exhaustive check that `D_r` permutes the given field.
    pub fn permutes(&self, ctx: &FieldContext) -> bool {
        let mut seen = vec![false; ctx.size()];
        (0..ctx.size() as u32).all(|z| !std::mem::replace(&mut seen[self.eval(ctx, z) as usize], true))
    }
}

/// `D_0 = 0`, `D_1 = x`, `D_(j+2) = x D_(j+1) + D_j`.
pub fn dickson_poly(r: u64) -> Result<DicksonPoly> {
    if r > DICKSON_MAX_INDEX {
        return Err(Error::DicksonIndexTooLarge(r));
    }
    let mut prev = Gf2Poly::zero();
    let mut cur = Gf2Poly::monomial(1);
    if r == 0 {
        return Ok(DicksonPoly { r, poly: prev });
    }
    for _ in 1..r {
        let next = cur.shift_up().add(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(DicksonPoly { r, poly: cur })
}

/// `D_r` permutes F_(2^m) iff `gcd(r, 2^(2m) - 1) = 1`.
pub fn dickson_is_pp(r: u64, m: u32) -> bool {
    gcd(r, (1u64 << (2 * m)) - 1) == 1
}

/// `x -> D_r(T_u0(x))`, evaluated in F_(2^m) and re-encoded as m-bit words.
pub fn dickson_construction(u: &Arc<UGroup>, u0: u32, r: u64) -> Result<VectorialFunction> {
    let m = u.half_degree();
    let g = gcd(r, (1u64 << (2 * m)) - 1);
    if g != 1 {
        return Err(Error::DicksonNotPermutation { r, gcd: g });
    }
    let d = dickson_poly(r)?;
    let core = t_core(u, u0)?;
    let small = u.subfield().small();
    let values = core.values().iter().map(|&w| d.eval(small, w)).collect();
    let composed = GFunction::new(u.clone(), m, values)?;
    Ok(lift_g_to_f(&composed))
}
