//! PS_ap# machinery over GF(2^(2m)).
//!
//! `U` is the cyclic subgroup of order `2^m + 1` generated by
//! `gamma^(2^m - 1)`, indexed so that `u_j = gamma^(j (2^m - 1))`. A function
//! constant on every coset `u F_(2^m)^*` with `F(0) = 0` is determined by its
//! values on `U`; [`lift_g_to_f`] and [`restrict_f_to_g`] convert between the
//! two views.

mod dickson;
mod pi_sigma;
mod tconstruction;
mod trace_form;

use std::sync::Arc;

pub use dickson::{dickson_construction, dickson_is_pp, dickson_poly, DicksonPoly, Gf2Poly, DICKSON_MAX_INDEX};
pub use pi_sigma::{pi_map, sigma_map, FieldValuedFunction};
pub use tconstruction::{balanced_compose, is_balanced, t_construction, t_core, t_core_closed_form, t_core_direct};
pub use trace_form::{trace_form_eval, TraceForm};

use crate::error::{Error, Result};
use crate::gf2n::{mod_inverse, FieldContext, Subfield};
use crate::vectorial::VectorialFunction;
use crate::walsh::BooleanFunction;

#[derive(Debug)]
pub struct UGroup {
    ctx: Arc<FieldContext>,
    half: u32,
    elements: Vec<u32>,
    s: u64,
    subfield: Subfield,
}

pub fn make_ugroup(ctx: Arc<FieldContext>) -> Result<Arc<UGroup>> {
    UGroup::new(ctx).map(Arc::new)
}

impl UGroup {
    pub fn new(ctx: Arc<FieldContext>) -> Result<Self> {
        let n = ctx.degree();
        if !n.is_multiple_of(2) {
            return Err(Error::OddDegree(n));
        }
        let half = n / 2;
        let q = 1u64 << half;
        let generator = ctx.exp(q - 1);
        let elements = (0..=q).map(|j| ctx.pow(generator, j)).collect();
        let s = mod_inverse(q - 1, q + 1).expect("2^m - 1 and 2^m + 1 are coprime");
        let subfield = Subfield::new(ctx.clone(), half)?;
        Ok(UGroup { ctx, half, elements, s, subfield })
    }

    pub fn ctx(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    /// m = n / 2.
    pub fn half_degree(&self) -> u32 {
        self.half
    }

    /// 2^m + 1.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `u_j = gamma^(j (2^m - 1))` for `j = 0..=2^m`.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn generator(&self) -> u32 {
        self.elements[1]
    }

    /// The inverse of 2^m - 1 modulo 2^m + 1.
    pub fn s(&self) -> u64 {
        self.s
    }

    /// F_(2^m) inside the ambient field, with its m-bit word encoding.
    pub fn subfield(&self) -> &Subfield {
        &self.subfield
    }

    /// `j` with `u_j = x`, if `x` is in `U`.
    pub fn index_of(&self, x: u32) -> Option<usize> {
        let q1 = (1u32 << self.half) - 1;
        let l = self.ctx.log(x)?;
        (l % q1 == 0).then(|| (l / q1) as usize)
    }

    /// Index `j` of `x^(2^m - 1)` for nonzero `x`: `log(x) mod (2^m + 1)`.
    #[inline]
    pub fn projection_index(&self, x: u32) -> Option<usize> {
        self.ctx.log(x).map(|l| (l as usize) % self.elements.len())
    }
}

/// A map `g: U -> F_2^k`, `values[j] = g(u_j)`.
#[derive(Clone, Debug)]
pub struct GFunction {
    ugroup: Arc<UGroup>,
    k: u32,
    values: Vec<u32>,
}

impl PartialEq for GFunction {
    fn eq(&self, other: &Self) -> bool {
        self.ugroup.ctx().degree() == other.ugroup.ctx().degree() && self.k == other.k && self.values == other.values
    }
}

impl Eq for GFunction {}

impl GFunction {
    pub fn new(ugroup: Arc<UGroup>, k: u32, values: Vec<u32>) -> Result<Self> {
        if values.len() != ugroup.len() {
            return Err(Error::TableLength { got: values.len(), expected: ugroup.len() });
        }
        if let Some(&w) = values.iter().find(|&&w| w >> k != 0) {
            return Err(Error::WordOutOfRange { word: w as u64, k });
        }
        Ok(GFunction { ugroup, k, values })
    }

    pub fn ugroup(&self) -> &Arc<UGroup> {
        &self.ugroup
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Fiber sizes: `counts[b] = #{u : g(u) = b}`.
    pub fn fiber_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; 1 << self.k];
        for &w in &self.values {
            counts[w as usize] += 1;
        }
        counts
    }
}

/// `sum_{u in U} (-1)^f(u)`.
pub fn restriction_sum(f: &BooleanFunction, u: &UGroup) -> Result<i64> {
    if f.ctx().degree() != u.ctx().degree() {
        return Err(Error::ContextMismatch { left: f.ctx().degree(), right: u.ctx().degree() });
    }
    Ok(u.elements().iter().map(|&x| f.sign(x)).sum())
}

fn symmetric_table<T: PartialEq>(ctx: &FieldContext, table: &[T], zero: &T) -> Result<bool> {
    let n = ctx.degree();
    if !n.is_multiple_of(2) {
        return Err(Error::OddDegree(n));
    }
    let step = ctx.exp((1u64 << (n / 2)) + 1);
    Ok(table[0] == *zero && (1..ctx.size() as u32).all(|x| table[ctx.mul(step, x) as usize] == table[x as usize]))
}

/// `f(gamma^(2^m+1) x) = f(x)` for all `x`, and `f(0) = 0`.
pub fn check_psap_symmetry(f: &BooleanFunction) -> Result<bool> {
    symmetric_table(f.ctx(), f.table(), &false)
}

/// The symmetry condition for every nonzero component at once: two words
/// agree iff all their dot products agree.
pub fn check_psap_symmetry_vectorial(f: &VectorialFunction) -> Result<bool> {
    symmetric_table(f.ctx(), f.table(), &0)
}

/// `F(0) = 0`, `F(x) = g(x^(2^m - 1))`.
pub fn lift_g_to_f(g: &GFunction) -> VectorialFunction {
    let u = g.ugroup();
    let ctx = u.ctx().clone();
    let mut table = vec![0u32; ctx.size()];
    for (x, slot) in table.iter_mut().enumerate().skip(1) {
        *slot = g.values[u.projection_index(x as u32).expect("nonzero")];
    }
    VectorialFunction::from_parts(ctx, g.k(), table)
}

/// `g(u) = F(u^s)`; requires the symmetry precondition on `F`.
pub fn restrict_f_to_g(f: &VectorialFunction, u: &Arc<UGroup>) -> Result<GFunction> {
    if f.ctx().degree() != u.ctx().degree() {
        return Err(Error::ContextMismatch { left: f.ctx().degree(), right: u.ctx().degree() });
    }
    if !check_psap_symmetry_vectorial(f)? {
        return Err(Error::SymmetryFailed);
    }
    let len = u.len() as u64;
    let values = (0..len).map(|j| f.value(u.elements()[((j * u.s()) % len) as usize])).collect();
    GFunction::new(u.clone(), f.k(), values)
}
