//! Crosscorrelation of binary m-sequences and hyper-bent functions built
//! from three-valued decimations.
//!
//! `C_d(t) = sum_{x != 0} (-1)^Tr(x^d + gamma^t x)` over GF(2^m).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2n::{gcd, FieldContext};
use crate::limits::Limits;
use crate::psap::{lift_g_to_f, restriction_sum, t_core, GFunction, UGroup};
use crate::walsh::{is_hyperbent_oracle_with, BooleanFunction};

/// Largest n at which [`corollary2_search`] re-runs the definitional oracle.
pub const COROLLARY2_ORACLE_MAX_DEGREE: u32 = 12;

fn check_decimation(ctx: &FieldContext, d: u64) -> Result<()> {
    if d == 0 || gcd(d, ctx.order() as u64) != 1 {
        return Err(Error::DecimationNotCoprime { d, m: ctx.degree() });
    }
    Ok(())
}

pub fn crosscorrelation(ctx: &FieldContext, d: u64, t: u64) -> Result<i64> {
    check_decimation(ctx, d)?;
    let c = ctx.exp(t);
    Ok((1..ctx.size() as u32).map(|x| 1 - 2 * (ctx.trace(ctx.pow(x, d) ^ ctx.mul(c, x)) as i64)).sum())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscorrSpectrum {
    pub m: u32,
    pub d: u64,
    /// Value of `C_d(t)` -> number of shifts `t` in `0..2^m-1` taking it.
    pub values: BTreeMap<i64, u64>,
}

impl CrosscorrSpectrum {
    pub fn distinct(&self) -> usize {
        self.values.len()
    }

    pub fn is_three_valued(&self) -> bool {
        self.distinct() == 3
    }

    pub fn contains_minus_one(&self) -> bool {
        self.values.contains_key(&-1)
    }

    /// `sum_t (C_d(t) + 1)`, which equals `2^m`.
    pub fn shifted_total(&self) -> i64 {
        self.values.iter().map(|(&v, &c)| (v + 1) * c as i64).sum()
    }
}

pub fn spectrum(ctx: &FieldContext, d: u64) -> Result<CrosscorrSpectrum> {
    check_decimation(ctx, d)?;
    let signs: Vec<u32> = (0..ctx.size() as u32).map(|x| ctx.trace(ctx.pow(x, d))).collect();
    let mut values = BTreeMap::new();
    for t in 0..ctx.order() as u64 {
        let c = ctx.exp(t);
        let s: i64 =
            (1..ctx.size() as u32).map(|x| 1 - 2 * (signs[x as usize] ^ ctx.trace(ctx.mul(c, x))) as i64).sum();
        *values.entry(s).or_insert(0) += 1;
    }
    Ok(CrosscorrSpectrum { m: ctx.degree(), d, values })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DecimationFamily {
    Gold,
    Kasami,
    CusickDobbertinA,
    CusickDobbertinB,
    CanteautCharpinDobbertin,
    DobbertinHollmannXiang,
}

impl DecimationFamily {
    pub fn tag(self) -> &'static str {
        match self {
            DecimationFamily::Gold => "gold",
            DecimationFamily::Kasami => "kasami",
            DecimationFamily::CusickDobbertinA => "cusick_dobbertin_a",
            DecimationFamily::CusickDobbertinB => "cusick_dobbertin_b",
            DecimationFamily::CanteautCharpinDobbertin => "canteaut_charpin_dobbertin",
            DecimationFamily::DobbertinHollmannXiang => "dobbertin_hollmann_xiang",
        }
    }
}

impl fmt::Display for DecimationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecimationEntry {
    pub family: DecimationFamily,
    /// The family parameter `k` for Gold and Kasami.
    pub param: Option<u32>,
    /// Reduced modulo `2^m - 1`.
    pub d: u64,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcludedDecimation {
    pub family: DecimationFamily,
    pub param: Option<u32>,
    pub d: u64,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecimationCatalogue {
    pub entries: Vec<DecimationEntry>,
    pub excluded: Vec<ExcludedDecimation>,
}

fn pow2(e: u32) -> u128 {
    1u128 << e
}

/// Instantiates every catalogued family whose condition on `m` holds.
///
/// Instances whose reduced `d` is not coprime with `2^m - 1`, or is a power of
/// two modulo `2^m - 1` (a shift of the sequence itself), are moved to
/// `excluded` with the reason.
pub fn known_decimations(m: u32) -> DecimationCatalogue {
    let mut raw: Vec<(DecimationFamily, Option<u32>, u128, String)> = Vec::new();
    if m < 2 {
        return DecimationCatalogue::default();
    }
    for k in 1..m {
        let odd_quotient = (m / gcd(k as u64, m as u64) as u32) % 2 == 1;
        if odd_quotient {
            let note = format!("k={k}, m/gcd(k,m) odd");
            raw.push((DecimationFamily::Gold, Some(k), pow2(k) + 1, note.clone()));
            raw.push((DecimationFamily::Kasami, Some(k), pow2(2 * k) - pow2(k) + 1, note));
        }
    }
    if m % 4 == 2 {
        raw.push((DecimationFamily::CusickDobbertinA, None, pow2(m / 2) + pow2((m + 2) / 4) + 1, "m = 2 mod 4".into()));
        raw.push((DecimationFamily::CusickDobbertinB, None, pow2((m + 2) / 2) + 3, "m = 2 mod 4".into()));
    }
    if m % 2 == 1 {
        raw.push((DecimationFamily::CanteautCharpinDobbertin, None, pow2((m - 1) / 2) + 3, "m odd".into()));
    }
    match m % 4 {
        1 => raw.push((
            DecimationFamily::DobbertinHollmannXiang,
            None,
            pow2((m - 1) / 2) + pow2((m - 1) / 4) - 1,
            "m = 1 mod 4".into(),
        )),
        3 => raw.push((
            DecimationFamily::DobbertinHollmannXiang,
            None,
            pow2((m - 1) / 2) + pow2((3 * m - 1) / 4) - 1,
            "m = 3 mod 4".into(),
        )),
        _ => {}
    }

    let order = (1u128 << m) - 1;
    let mut catalogue = DecimationCatalogue::default();
    for (family, param, d_raw, note) in raw {
        let d = (d_raw % order) as u64;
        let reason = if gcd(d, order as u64) != 1 {
            Some(format!("d={d_raw} reduces to {d}, gcd(d, 2^m-1) = {} != 1", gcd(d, order as u64)))
        } else if (0..m).any(|j| (1u128 << j) % order == d as u128) {
            Some(format!("d={d_raw} reduces to {d}, a power of 2 modulo 2^m-1 (decimation equivalent to 1)"))
        } else {
            None
        };
        match reason {
            Some(reason) => catalogue.excluded.push(ExcludedDecimation { family, param, d, reason }),
            None => catalogue.entries.push(DecimationEntry { family, param, d, note }),
        }
    }
    catalogue
}

#[derive(Clone, Debug)]
pub struct Corollary2Result {
    /// Index of `lambda` in the standalone GF(2^m).
    pub lambda: u32,
    /// `lambda` as an element of the ambient field.
    pub lambda_ambient: u32,
    pub g: GFunction,
    pub function: BooleanFunction,
    /// Outcome of the definitional oracle, run when `n` is small enough.
    pub oracle_verified: Option<bool>,
}

/// Smallest `lambda` in F_(2^m)^* for which
/// `x -> Tr_1^m(T_u0(x)^d) + Tr_1^n(lambda u0 sum x^(i (2^m - 1)))` is
/// hyper-bent. Evaluated on `U` as `g(u) = Tr_1^m(G(u)^d + lambda G(u))` with
/// `G` the `T_u0` core.
pub fn corollary2_search(u: &Arc<UGroup>, u0: u32, d: u64) -> Result<Corollary2Result> {
    let small = u.subfield().small().clone();
    check_decimation(&small, d)?;
    let cc = spectrum(&small, d)?;
    if !cc.is_three_valued() {
        return Err(Error::NotThreeValued { d, distinct: cc.distinct() });
    }
    let core = t_core(u, u0)?;
    let powered: Vec<u32> = core.values().iter().map(|&w| small.pow(w, d)).collect();
    let lambda = (1..small.size() as u32)
        .find(|&lambda| {
            let sum: i64 = core
                .values()
                .iter()
                .zip(&powered)
                .map(|(&w, &p)| 1 - 2 * small.trace(p ^ small.mul(lambda, w)) as i64)
                .sum();
            sum == 1
        })
        .ok_or(Error::SearchExhausted { u0, d })?;

    let values = core.values().iter().zip(&powered).map(|(&w, &p)| small.trace(p ^ small.mul(lambda, w))).collect();
    let g = GFunction::new(u.clone(), 1, values)?;
    let function = lift_g_to_f(&g).component(1)?;
    if restriction_sum(&function, u)? != 1 {
        return Err(Error::VerificationFailed(format!("restriction sum for lambda={lambda} is not 1")));
    }
    let oracle_verified = if u.ctx().degree() <= COROLLARY2_ORACLE_MAX_DEGREE {
        let ok = is_hyperbent_oracle_with(&function, Limits::STRICT)?;
        if !ok {
            return Err(Error::VerificationFailed(format!("lambda={lambda} fails the definitional oracle")));
        }
        Some(ok)
    } else {
        None
    };
    Ok(Corollary2Result { lambda, lambda_ambient: u.subfield().to_ambient(lambda), g, function, oracle_verified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::make_field;
    use crate::psap::{check_psap_symmetry, make_ugroup};

    #[test]
    fn identity_decimation() {
        for m in [3u32, 4, 5] {
            let ctx = make_field(m).unwrap();
            let q1 = (1i64 << m) - 1;
            assert_eq!(crosscorrelation(&ctx, 1, 0).unwrap(), q1);
            for t in 1..q1 as u64 {
                assert_eq!(crosscorrelation(&ctx, 1, t).unwrap(), -1);
            }
        }
        let s = spectrum(&make_field(3).unwrap(), 1).unwrap();
        assert_eq!(s.values, BTreeMap::from([(-1, 6), (7, 1)]));
    }

    #[test]
    fn gold_m3_is_three_valued() {
        let s = spectrum(&make_field(3).unwrap(), 3).unwrap();
        assert!(s.is_three_valued());
        assert!(s.contains_minus_one());
        assert_eq!(s.values, BTreeMap::from([(-5, 1), (-1, 3), (3, 3)]));
        assert_eq!(s.shifted_total(), 8);
    }

    #[test]
    fn kasami_m5_d13() {
        let s = spectrum(&make_field(5).unwrap(), 13).unwrap();
        assert!(s.is_three_valued());
        assert!(s.contains_minus_one());
    }

    #[test]
    fn spectrum_matches_pointwise() {
        let ctx = make_field(5).unwrap();
        let s = spectrum(&ctx, 7).unwrap();
        let mut direct = BTreeMap::new();
        for t in 0..31 {
            *direct.entry(crosscorrelation(&ctx, 7, t).unwrap()).or_insert(0u64) += 1;
        }
        assert_eq!(s.values, direct);
    }

    #[test]
    fn non_coprime_decimation() {
        let ctx = make_field(4).unwrap();
        assert_eq!(crosscorrelation(&ctx, 3, 0).unwrap_err(), Error::DecimationNotCoprime { d: 3, m: 4 });
        assert!(spectrum(&ctx, 5).is_err());
    }

    #[test]
    fn catalogue_m3() {
        let cat = known_decimations(3);
        assert!(cat.entries.iter().any(|e| e.family == DecimationFamily::Gold && e.d == 3));
        assert!(cat.entries.iter().any(|e| e.family == DecimationFamily::CanteautCharpinDobbertin && e.d == 5));
    }

    #[test]
    fn catalogue_m6_has_cusick_dobbertin() {
        let cat = known_decimations(6);
        assert!(cat.entries.iter().any(|e| e.family == DecimationFamily::CusickDobbertinA && e.d == 13));
    }

    #[test]
    fn catalogue_m2_is_degenerate() {
        let cat = known_decimations(2);
        assert!(cat.entries.is_empty());
        assert_eq!(cat.excluded.len(), 2);
    }

    #[test]
    fn cyclotomic_equivalence() {
        for m in 3..=6u32 {
            let ctx = make_field(m).unwrap();
            let order = ctx.order() as u64;
            for d in (1..order).filter(|&d| gcd(d, order) == 1) {
                let a = spectrum(&ctx, d).unwrap();
                let b = spectrum(&ctx, 2 * d % order).unwrap();
                assert_eq!(a.values, b.values, "m={m} d={d}");
            }
        }
    }

    #[test]
    fn corollary2_gold_m3() {
        let u = make_ugroup(make_field(6).unwrap()).unwrap();
        for &u0 in &u.elements()[1..] {
            let r = corollary2_search(&u, u0, 3).unwrap();
            assert_eq!(r.oracle_verified, Some(true));
            assert!(check_psap_symmetry(&r.function).unwrap());
        }
        assert_eq!(corollary2_search(&u, u.elements()[1], 1).unwrap_err(), Error::NotThreeValued { d: 1, distinct: 2 });
        assert!(matches!(corollary2_search(&u, 1, 3), Err(Error::InvalidU0)));
    }
}
