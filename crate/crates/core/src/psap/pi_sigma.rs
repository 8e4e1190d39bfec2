//! Conversion between `F_2^k`-valued and `F_(2^k)`-valued functions through a
//! basis `A` and its dual `B`:
//! `pi(f_1, ..., f_k) = sum f_j a_j`, `sigma(G) = (Tr_1^k(b_1 G), ..., Tr_1^k(b_k G))`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2n::{subfield_trace, DualBasisPair, FieldContext};
use crate::vectorial::VectorialFunction;

/// A function on `domain` whose values are elements of `codomain`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldValuedFunction {
    pub domain: Arc<FieldContext>,
    pub codomain: Arc<FieldContext>,
    pub values: Vec<u32>,
}

fn check_pair(pair: &DualBasisPair, codomain: &FieldContext) -> Result<()> {
    if let Some(e) = pair.a.iter().chain(&pair.b).find(|e| e.degree() != codomain.degree()) {
        return Err(Error::ContextMismatch { left: codomain.degree(), right: e.degree() });
    }
    Ok(())
}

pub fn pi_map(
    f: &VectorialFunction,
    pair: &DualBasisPair,
    codomain: &Arc<FieldContext>,
) -> Result<FieldValuedFunction> {
    if f.k() != pair.k {
        return Err(Error::DimensionMismatch { expected: pair.k, got: f.k() });
    }
    check_pair(pair, codomain)?;
    let values = f
        .table()
        .iter()
        .map(|&w| pair.a.iter().enumerate().filter(|(j, _)| w >> j & 1 == 1).fold(0, |acc, (_, a)| acc ^ a.bits()))
        .collect();
    Ok(FieldValuedFunction { domain: f.ctx().clone(), codomain: codomain.clone(), values })
}

pub fn sigma_map(g: &FieldValuedFunction, pair: &DualBasisPair) -> Result<VectorialFunction> {
    let ctx = &g.codomain;
    check_pair(pair, ctx)?;
    let k = pair.k;
    if let Some(&z) = g.values.iter().find(|&&z| !ctx.in_subfield(z, k)) {
        return Err(Error::NotInSubfield { bits: z, k });
    }
    let table = g
        .values
        .iter()
        .map(|&z| {
            pair.b.iter().enumerate().fold(0u32, |w, (j, b)| w | subfield_trace(ctx, ctx.mul(b.bits(), z), k) << j)
        })
        .collect();
    VectorialFunction::new(g.domain.clone(), k, table)
}
