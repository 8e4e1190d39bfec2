//! Counting vectorial hyper-bent functions of the PS_ap# trace form.
//!
//! With `F(0) = 0` a function is hyper-bent iff its values on `U` have fiber
//! sizes `2^(m-k) + 1` over `0` and `2^(m-k)` over every nonzero word, so the
//! count is a product of binomials; the `2^k` constant translations give the
//! total.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::binomial;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2n::make_field;
use crate::limits::Limits;
use crate::psap::{lift_g_to_f, make_ugroup, restriction_sum, GFunction, UGroup};
use crate::vectorial::{check_condition3, is_vectorial_hyperbent_oracle};

/// log2 of the number of maps the exhaustive oracle may visit.
pub const EXHAUSTIVE_MAX_LOG2: u32 = 30;
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Formula,
    Exhaustive,
    Generated,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Formula => "formula",
            CountMethod::Exhaustive => "exhaustive",
            CountMethod::Generated => "generated",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub m: u32,
    pub k: u32,
    /// All hyper-bent functions of the form, `core * 2^k`.
    pub total: BigUint,
    /// Those with `F(0) = 0`.
    pub core: BigUint,
    pub method: CountMethod,
}

impl CountReport {
    fn from_core(m: u32, k: u32, core: BigUint, method: CountMethod) -> Self {
        let total = &core << k as usize;
        CountReport { m, k, total, core, method }
    }
}

fn check_dims(m: u32, k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    if k > m {
        return Err(Error::DimensionExceedsM { k, m });
    }
    Ok(())
}

/// `N = 2^k C(2^m+1, 2^(m-k)+1) prod_{i=1}^{2^k-1} C(2^m - i 2^(m-k), 2^(m-k))`.
pub fn count_formula(m: u32, k: u32) -> Result<CountReport> {
    check_dims(m, k)?;
    let q = BigUint::from(1u8) << m as usize;
    let fiber = BigUint::from(1u8) << (m - k) as usize;
    let one = BigUint::from(1u8);
    let mut core = binomial(&q + &one, &fiber + &one);
    let mut remaining = &q - &fiber;
    for _ in 1..(1u64 << k) {
        core *= binomial(remaining.clone(), fiber.clone());
        remaining -= &fiber;
    }
    Ok(CountReport::from_core(m, k, core, CountMethod::Formula))
}

/// Visits every map `g: U -> F_2^k`, counting those with the condition-3
/// multiset. Each hit is re-checked on its lift: with the definitional oracle
/// at `m = 2`, and with the restriction-sum criterion per component above.
pub fn exhaustive_count_oracle(m: u32, k: u32, limits: Limits) -> Result<CountReport> {
    check_dims(m, k)?;
    let len = (1u64 << m) + 1;
    let bits = k as u64 * len;
    if bits > EXHAUSTIVE_MAX_LOG2 as u64 && !limits.override_guards {
        return Err(Error::GuardExceeded { what: format!("exhaustive count over 2^{bits} maps") });
    }
    let u = make_ugroup(make_field(2 * m)?)?;
    let fiber = 1u64 << (m - k);
    let mask = (1u64 << k) - 1;
    let core = (0..1u64 << bits)
        .into_par_iter()
        .map_init(
            || vec![0u64; 1 << k],
            |counts, idx| -> Result<u64> {
                counts.iter_mut().for_each(|c| *c = 0);
                for j in 0..len {
                    counts[(idx >> (k as u64 * j) & mask) as usize] += 1;
                }
                let hit = counts[0] == fiber + 1 && counts[1..].iter().all(|&c| c == fiber);
                if !hit {
                    return Ok(0);
                }
                let values = (0..len).map(|j| (idx >> (k as u64 * j) & mask) as u32).collect();
                recheck(&u, k, values, limits)?;
                Ok(1)
            },
        )
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(CountReport::from_core(m, k, BigUint::from(core), CountMethod::Exhaustive))
}

fn recheck(u: &Arc<UGroup>, k: u32, values: Vec<u32>, limits: Limits) -> Result<()> {
    let g = GFunction::new(u.clone(), k, values)?;
    let f = lift_g_to_f(&g);
    if !check_condition3(&f, u)? {
        return Err(Error::VerificationFailed(format!("lift of {:?} fails condition 3", g.values())));
    }
    let ok = if u.half_degree() <= 2 {
        crate::vectorial::is_vectorial_hyperbent_oracle_with(&f, limits)?
    } else {
        (1u32..1 << k).all(|v| {
            let comp = f.component(v).expect("nonzero v");
            restriction_sum(&comp, u) == Ok(1)
        })
    };
    if !ok {
        return Err(Error::VerificationFailed(format!("lift of {:?} is not hyper-bent", g.values())));
    }
    Ok(())
}

/// Advances `comb` (strictly increasing positions below `n`) to the next
/// combination in lexicographic order.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let r = comb.len();
    for i in (0..r).rev() {
        if comb[i] < n - r + i {
            comb[i] += 1;
            for j in i + 1..r {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

struct Level {
    pool: Vec<usize>,
    comb: Vec<usize>,
}

/// Streams every `g: U -> F_2^k` with the condition-3 fiber sizes, in
/// canonical order: the `0`-fiber first, then the fibers of `1, 2, ...`, each
/// as a lexicographic combination of the remaining `U` indices.
pub struct GEnumerator {
    ugroup: Arc<UGroup>,
    k: u32,
    levels: Vec<Level>,
    sizes: Vec<usize>,
    done: bool,
}

impl GEnumerator {
    fn fill_from(&mut self, start: usize) {
        for level in start..self.sizes.len() {
            let pool = if level == 0 {
                (0..self.ugroup.len()).collect()
            } else {
                let prev = &self.levels[level - 1];
                let taken: Vec<usize> = prev.comb.iter().map(|&p| prev.pool[p]).collect();
                prev.pool.iter().copied().filter(|i| !taken.contains(i)).collect()
            };
            let comb = (0..self.sizes[level]).collect();
            let fresh = Level { pool, comb };
            if level < self.levels.len() {
                self.levels[level] = fresh;
            } else {
                self.levels.push(fresh);
            }
        }
    }

    fn current(&self) -> Vec<u32> {
        let mut values = vec![0u32; self.ugroup.len()];
        for (word, level) in self.levels.iter().enumerate() {
            for &p in &level.comb {
                values[level.pool[p]] = word as u32;
            }
        }
        values
    }
}

impl Iterator for GEnumerator {
    type Item = GFunction;

    fn next(&mut self) -> Option<GFunction> {
        if self.done {
            return None;
        }
        let values = self.current();
        let advanced = (0..self.levels.len()).rev().find(|&l| {
            let n = self.levels[l].pool.len();
            next_combination(&mut self.levels[l].comb, n)
        });
        match advanced {
            Some(l) => self.fill_from(l + 1),
            None => self.done = true,
        }
        Some(GFunction::new(self.ugroup.clone(), self.k, values).expect("words fit in k bits"))
    }
}

pub fn enumerate_g_functions(u: &Arc<UGroup>, k: u32, cap: u64) -> Result<GEnumerator> {
    let m = u.half_degree();
    let count = count_formula(m, k)?.core;
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded { count: count.to_string(), cap });
    }
    let fiber = 1usize << (m - k);
    let mut sizes = vec![fiber; 1 << k];
    sizes[0] += 1;
    let mut e = GEnumerator { ugroup: u.clone(), k, levels: Vec::new(), sizes, done: false };
    e.fill_from(0);
    Ok(e)
}

/// Counts by running the generator to exhaustion.
pub fn count_generated(m: u32, k: u32, cap: u64) -> Result<CountReport> {
    let u = make_ugroup(make_field(2 * m)?)?;
    let core = enumerate_g_functions(&u, k, cap)?.count();
    Ok(CountReport::from_core(m, k, BigUint::from(core), CountMethod::Generated))
}

/// Whether every generated function's lift passes the definitional check.
pub fn generated_all_hyperbent(u: &Arc<UGroup>, k: u32, cap: u64) -> Result<bool> {
    let gs: Vec<GFunction> = enumerate_g_functions(u, k, cap)?.collect();
    gs.par_iter().map(|g| is_vectorial_hyperbent_oracle(&lift_g_to_f(g))).try_reduce(|| true, |a, b| Ok(a && b))
}
