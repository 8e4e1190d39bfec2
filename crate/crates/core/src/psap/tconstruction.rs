//! The `T_u0` construction and its balanced compositions.
//!
//! On `U`, `g(u) = Tr_m^n(u0 * sum_{i=1}^{2^(m-1)} u^i)`. For `u0` in
//! `U \ {1}` the map vanishes at `u = 1` and sends `U \ {1}` bijectively onto
//! `F_(2^m)`, so the lifted function hits `0` twice and every other value once
//! on `U`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::psap::{lift_g_to_f, GFunction, UGroup};
use crate::vectorial::VectorialFunction;

fn check_u0(u: &UGroup, u0: u32) -> Result<()> {
    // g(1) = 0 needs an even number of terms in the geometric sum
    if u.half_degree() < 2 {
        return Err(Error::HalfDegreeTooSmall(u.ctx().degree()));
    }
    match u.index_of(u0) {
        Some(j) if j != 0 => Ok(()),
        _ => Err(Error::InvalidU0),
    }
}

/// Core values by the defining geometric sum.
pub fn t_core_direct(u: &Arc<UGroup>, u0: u32) -> Result<GFunction> {
    check_u0(u, u0)?;
    let ctx = u.ctx();
    let m = u.half_degree();
    let terms = 1u32 << (m - 1);
    let values = u
        .elements()
        .iter()
        .map(|&x| {
            let mut power = 1;
            let mut sum = 0;
            for _ in 0..terms {
                power = ctx.mul(power, x);
                sum ^= power;
            }
            let y = ctx.mul(u0, sum);
            let g = ctx.relative_trace_unchecked(y, m);
            u.subfield().to_word(g)
        })
        .collect::<Result<Vec<u32>>>()?;
    GFunction::new(u.clone(), m, values)
}

/// Core values from `g(u)^2 = u0^2 / (1 + u^-1) + u0^-2 / (1 + u)` (u != 1),
/// followed by the square root `z -> z^(2^(m-1))` of F_(2^m).
pub fn t_core_closed_form(u: &Arc<UGroup>, u0: u32) -> Result<GFunction> {
    check_u0(u, u0)?;
    let ctx = u.ctx();
    let m = u.half_degree();
    let a = ctx.square(u0);
    let b = ctx.inv(a);
    let values = u
        .elements()
        .iter()
        .map(|&x| {
            if x == 1 {
                return Ok(0);
            }
            let left = ctx.mul(a, ctx.inv(1 ^ ctx.inv(x)));
            let right = ctx.mul(b, ctx.inv(1 ^ x));
            let g = ctx.frobenius(left ^ right, m - 1);
            u.subfield().to_word(g)
        })
        .collect::<Result<Vec<u32>>>()?;
    GFunction::new(u.clone(), m, values)
}

/// The `T_u0` core on `U` as m-bit words.
pub fn t_core(u: &Arc<UGroup>, u0: u32) -> Result<GFunction> {
    t_core_direct(u, u0)
}

/// `T_u0(x) = Tr_m^n(u0 sum_{i=1}^{2^(m-1)} x^(i (2^m - 1)))`, with `k = m`.
pub fn t_construction(u: &Arc<UGroup>, u0: u32) -> Result<VectorialFunction> {
    t_core(u, u0).map(|g| lift_g_to_f(&g))
}

fn table_degree(len: usize) -> Result<u32> {
    if !len.is_power_of_two() {
        return Err(Error::TableLength { got: len, expected: len.next_power_of_two() });
    }
    Ok(len.trailing_zeros())
}

/// Every word in `F_2^k` has exactly `2^(m-k)` preimages, `2^m = h.len()`.
pub fn is_balanced(h: &[u32], k: u32) -> Result<bool> {
    let m = table_degree(h.len())?;
    if k > m {
        return Err(Error::DimensionExceedsM { k, m });
    }
    let mut counts = vec![0usize; 1 << k];
    for &w in h {
        if w >> k != 0 {
            return Err(Error::WordOutOfRange { word: w as u64, k });
        }
        counts[w as usize] += 1;
    }
    Ok(counts.iter().all(|&c| c == 1 << (m - k)))
}

/// `x -> h(T(x))` for a balanced `h` with `h(0) = 0`.
pub fn balanced_compose(h: &[u32], k: u32, t: &VectorialFunction) -> Result<VectorialFunction> {
    let m = t.ctx().degree() / 2;
    if t.k() != m || !t.ctx().degree().is_multiple_of(2) {
        return Err(Error::DimensionMismatch { expected: m, got: t.k() });
    }
    if h.len() != 1 << m {
        return Err(Error::TableLength { got: h.len(), expected: 1 << m });
    }
    if !is_balanced(h, k)? {
        return Err(Error::NotBalanced);
    }
    if h[0] != 0 {
        return Err(Error::NonZeroAtZero);
    }
    let table = t.table().iter().map(|&w| h[w as usize]).collect();
    VectorialFunction::new(t.ctx().clone(), k, table)
}
