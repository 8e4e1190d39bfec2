use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2n::FieldContext;
use crate::psap::UGroup;
use crate::vectorial::VectorialFunction;

/// Rows `a_(i,0), ..., a_(i,2^m)` of
/// `f_i(x) = Tr_1^n(sum_{j=1}^{2^m} a_(i,j) x^(j (2^m - 1)) + a_(i,0))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceForm {
    pub ctx: Arc<FieldContext>,
    pub rows: Vec<Vec<u32>>,
}

impl TraceForm {
    pub fn new(ctx: Arc<FieldContext>, rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = ctx.degree();
        if !n.is_multiple_of(2) {
            return Err(Error::OddDegree(n));
        }
        let width = (1usize << (n / 2)) + 1;
        if rows.is_empty() || rows.len() > n as usize {
            return Err(Error::DimensionMismatch { expected: n, got: rows.len() as u32 });
        }
        for row in &rows {
            if row.len() != width {
                return Err(Error::TableLength { got: row.len(), expected: width });
            }
            if let Some(&a) = row.iter().find(|&&a| !ctx.contains(a as u64)) {
                return Err(Error::ElementOutOfRange { bits: a as u64, degree: n });
            }
        }
        Ok(TraceForm { ctx, rows })
    }

    pub fn k(&self) -> u32 {
        self.rows.len() as u32
    }
}

/// Evaluates every row. `x^(j (2^m - 1))` only depends on `x^(2^m - 1) in U`,
/// so the sums are formed once per element of `U`; at `x = 0` only the
/// constant `a_(i,0)` survives.
pub fn trace_form_eval(tf: &TraceForm) -> Result<VectorialFunction> {
    let ctx = &tf.ctx;
    let u = UGroup::new(ctx.clone())?;
    let on_u: Vec<u32> = u
        .elements()
        .iter()
        .map(|&y| {
            tf.rows.iter().enumerate().fold(0u32, |word, (i, row)| {
                let mut power = 1;
                let mut sum = row[0];
                for &a in &row[1..] {
                    power = ctx.mul(power, y);
                    sum ^= ctx.mul(a, power);
                }
                word | ctx.trace(sum) << i
            })
        })
        .collect();
    let at_zero = tf.rows.iter().enumerate().fold(0u32, |word, (i, row)| word | ctx.trace(row[0]) << i);
    let mut table = vec![at_zero; ctx.size()];
    for (x, slot) in table.iter_mut().enumerate().skip(1) {
        *slot = on_u[u.projection_index(x as u32).expect("nonzero")];
    }
    VectorialFunction::new(ctx.clone(), tf.k(), table)
}
