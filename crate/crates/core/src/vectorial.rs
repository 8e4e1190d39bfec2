//! Vectorial functions `F: GF(2^n) -> F_2^k`, the group ring `Z[F_2^k]`, and
//! the three equivalent hyper-bentness conditions for functions of the
//! PS_ap# shape:
//!
//! 1. every nonzero component `<v, F>` is hyper-bent (definitional),
//! 2. `sum_{u in U} (-1)^<v, F(u)> = 1` for every `v != 0`,
//! 3. `sum_{u in U} F(u) = 2^(m-k) H + 0_H` in `Z[H]`, `H = F_2^k`.
//!
//! Words are `k`-bit integers; bit `j` is the coordinate `f_(j+1)`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2n::FieldContext;
use crate::limits::Limits;
use crate::psap::UGroup;
use crate::walsh::{hyperbent_witness, BooleanFunction, SpectrumWitness};

#[inline]
pub(crate) fn dot(v: u32, w: u32) -> u32 {
    (v & w).count_ones() & 1
}

#[inline]
fn character(v: u32, b: u32) -> i64 {
    1 - 2 * dot(v, b) as i64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorialFunction {
    ctx: Arc<FieldContext>,
    k: u32,
    table: Vec<u32>,
}

impl VectorialFunction {
    pub fn new(ctx: Arc<FieldContext>, k: u32, table: Vec<u32>) -> Result<Self> {
        if k == 0 || k > ctx.degree() {
            return Err(Error::DimensionMismatch { expected: ctx.degree(), got: k });
        }
        if table.len() != ctx.size() {
            return Err(Error::TableLength { got: table.len(), expected: ctx.size() });
        }
        if let Some(&w) = table.iter().find(|&&w| w >> k != 0) {
            return Err(Error::WordOutOfRange { word: w as u64, k });
        }
        Ok(VectorialFunction { ctx, k, table })
    }

    pub(crate) fn from_parts(ctx: Arc<FieldContext>, k: u32, table: Vec<u32>) -> Self {
        debug_assert!(table.len() == ctx.size() && table.iter().all(|w| w >> k == 0));
        VectorialFunction { ctx, k, table }
    }

    pub fn ctx(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    #[inline]
    pub fn value(&self, x: u32) -> u32 {
        self.table[x as usize]
    }

    /// `x -> <v, F(x)>`.
    pub fn component(&self, v: u32) -> Result<BooleanFunction> {
        if v == 0 {
            return Err(Error::ZeroCombination);
        }
        if v >> self.k != 0 {
            return Err(Error::WordOutOfRange { word: v as u64, k: self.k });
        }
        let table = self.table.iter().map(|&w| dot(v, w) == 1).collect();
        BooleanFunction::new(self.ctx.clone(), table)
    }
}

/// Element of `Z[H]`, `H` the additive group of `F_2^k`; `coeffs[b]` is the
/// coefficient of the group element `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    pub k: u32,
    pub coeffs: Vec<i64>,
}

impl GroupRingElement {
    pub fn zero(k: u32) -> Self {
        GroupRingElement { k, coeffs: vec![0; 1 << k] }
    }

    /// `scale * H + 0_H`.
    pub fn scaled_group_plus_identity(k: u32, scale: i64) -> Self {
        let mut coeffs = vec![scale; 1 << k];
        coeffs[0] += 1;
        GroupRingElement { k, coeffs }
    }

    /// The target of condition 3: `2^(m-k) H + 0_H`.
    pub fn hyperbent_target(m: u32, k: u32) -> Result<Self> {
        if k > m {
            return Err(Error::DimensionExceedsM { k, m });
        }
        Ok(Self::scaled_group_plus_identity(k, 1 << (m - k)))
    }
}

/// `chi_v(A) = sum_b a_b (-1)^<v, b>`; `v = 0` is the principal character.
pub fn character_sum(a: &GroupRingElement, v: u32) -> i64 {
    a.coeffs.iter().enumerate().map(|(b, &c)| c * character(v, b as u32)).sum()
}

/// Recovers `A` from all of its character values,
/// `a_g = 2^-k sum_v chi_v(A) chi_v(g)`.
pub fn invert_characters(values: &[i64], k: u32) -> Result<GroupRingElement> {
    let size = 1usize << k;
    if values.len() != size {
        return Err(Error::TableLength { got: values.len(), expected: size });
    }
    let coeffs = (0..size as u32)
        .map(|g| {
            let total: i64 = values.iter().enumerate().map(|(v, &x)| x * character(v as u32, g)).sum();
            if total % size as i64 != 0 {
                Err(Error::NonIntegralInversion { element: g })
            } else {
                Ok(total / size as i64)
            }
        })
        .collect::<Result<Vec<i64>>>()?;
    Ok(GroupRingElement { k, coeffs })
}

fn check_context(f: &VectorialFunction, u: &UGroup) -> Result<()> {
    if f.ctx().degree() != u.ctx().degree() {
        return Err(Error::ContextMismatch { left: f.ctx().degree(), right: u.ctx().degree() });
    }
    Ok(())
}

/// `sum_{u in U} F(u)` in `Z[H]`: coefficient of `b` counts `u` with `F(u) = b`.
pub fn restriction_multiset(f: &VectorialFunction, u: &UGroup) -> Result<GroupRingElement> {
    check_context(f, u)?;
    let mut acc = GroupRingElement::zero(f.k());
    for &x in u.elements() {
        acc.coeffs[f.value(x) as usize] += 1;
    }
    Ok(acc)
}

/// Condition 2, computed from signed sums over `U` directly.
pub fn check_condition2(f: &VectorialFunction, u: &UGroup) -> Result<bool> {
    check_context(f, u)?;
    Ok((1u32..1 << f.k()).all(|v| {
        let s: i64 = u.elements().iter().map(|&x| character(v, f.value(x))).sum();
        s == 1
    }))
}

/// Condition 3, by exact comparison of coefficient arrays.
pub fn check_condition3(f: &VectorialFunction, u: &UGroup) -> Result<bool> {
    let target = GroupRingElement::hyperbent_target(u.half_degree(), f.k())?;
    Ok(restriction_multiset(f, u)? == target)
}

/// A failing component and coefficient of the definitional check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VectorialWitness {
    pub v: u32,
    pub spectrum: SpectrumWitness,
}

/// First failing `(v, t, lambda)` in increasing `v`, if any.
pub fn vectorial_hyperbent_witness(f: &VectorialFunction, limits: Limits) -> Result<Option<VectorialWitness>> {
    let vs: Vec<u32> = (1u32..1 << f.k()).collect();
    let results = vs
        .par_iter()
        .map(|&v| {
            let comp = f.component(v)?;
            Ok(hyperbent_witness(&comp, limits)?.map(|spectrum| VectorialWitness { v, spectrum }))
        })
        .collect::<Result<Vec<Option<VectorialWitness>>>>()?;
    Ok(results.into_iter().flatten().next())
}

/// Definitional: every nonzero combination of components is hyper-bent.
pub fn is_vectorial_hyperbent_oracle(f: &VectorialFunction) -> Result<bool> {
    is_vectorial_hyperbent_oracle_with(f, Limits::STRICT)
}

pub fn is_vectorial_hyperbent_oracle_with(f: &VectorialFunction, limits: Limits) -> Result<bool> {
    vectorial_hyperbent_witness(f, limits).map(|w| w.is_none())
}
