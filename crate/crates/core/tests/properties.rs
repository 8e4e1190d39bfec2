use std::sync::Arc;

use num_bigint::BigUint;
use proptest::prelude::*;

use hyperbent::enumeration::count_formula;
use hyperbent::gf2n::{dual_basis, gcd, make_field, FieldContext};
use hyperbent::msequence::spectrum;
use hyperbent::psap::{
    balanced_compose, dickson_poly, is_balanced, lift_g_to_f, make_ugroup, pi_map, restrict_f_to_g, restriction_sum,
    sigma_map, t_construction, GFunction, UGroup,
};
use hyperbent::vectorial::{check_condition2, check_condition3, VectorialFunction};
use hyperbent::walsh::{extended_walsh, full_spectrum, BooleanFunction};

fn ugroup(m: u32) -> Arc<UGroup> {
    make_ugroup(make_field(2 * m).unwrap()).unwrap()
}

fn naive_mul(ctx: &FieldContext, mut a: u32, mut b: u32) -> u32 {
    let n = ctx.degree();
    let mut acc = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> n & 1 == 1 {
            a ^= ctx.modulus();
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn table_multiplication_matches_shift_and_add(n in 2u32..=24, a in any::<u32>(), b in any::<u32>()) {
        let ctx = make_field(n).unwrap();
        let mask = (1u32 << n) - 1;
        let (a, b) = (a & mask, b & mask);
        prop_assert_eq!(ctx.mul(a, b), naive_mul(&ctx, a, b));
        if a != 0 {
            prop_assert_eq!(ctx.exp(ctx.log(a).unwrap() as u64), a);
            prop_assert_eq!(ctx.mul(a, ctx.inv(a)), 1);
        }
    }

    #[test]
    fn trace_is_transitive(n in prop::sample::select(vec![4u32, 6, 8, 12, 16, 20, 24]), a in any::<u32>()) {
        let ctx = make_field(n).unwrap();
        let a = a & ((1u32 << n) - 1);
        for k in (1..=n).filter(|k| n % k == 0) {
            let rel = ctx.relative_trace(a, k).unwrap();
            prop_assert!(ctx.in_subfield(rel, k));
            // Tr_1^n = Tr_1^k o Tr_k^n, with Tr_1^k computed inside the ambient field
            let inner = (0..k).fold(0, |acc, i| acc ^ ctx.frobenius(rel, i));
            prop_assert_eq!(inner, ctx.trace(a));
        }
    }

    #[test]
    fn fast_spectrum_matches_definition(seed in any::<u64>(), t_pick in any::<prop::sample::Index>()) {
        let ctx = make_field(6).unwrap();
        let f = BooleanFunction::from_fn(ctx.clone(), |x| (seed.rotate_left(x) ^ seed >> (x % 64)) & 1 == 1);
        let ts: Vec<u64> = (1..63).filter(|&t| gcd(t, 63) == 1).collect();
        let t = ts[t_pick.index(ts.len())];
        let fast = full_spectrum(&f, t).unwrap();
        for lambda in 0..64 {
            prop_assert_eq!(fast.values[lambda as usize], extended_walsh(&f, lambda, t).unwrap());
        }
        prop_assert_eq!(fast.parseval_sum(), 1 << 12);
    }

    #[test]
    fn lift_restrict_roundtrip(m in 2u32..=4, k in 1u32..=4, raw in prop::collection::vec(any::<u32>(), 17)) {
        let u = ugroup(m);
        let values = raw[..u.len()].iter().map(|w| w & ((1 << k) - 1)).collect();
        let g = GFunction::new(u.clone(), k, values).unwrap();
        let f = lift_g_to_f(&g);
        prop_assert_eq!(f.value(0), 0);
        prop_assert_eq!(restrict_f_to_g(&f, &u).unwrap(), g.clone());
        let again = lift_g_to_f(&restrict_f_to_g(&f, &u).unwrap());
        prop_assert_eq!(again, f);
    }

    #[test]
    fn conditions_agree_with_componentwise_sums(k in 1u32..=3, raw in prop::collection::vec(any::<u32>(), 9)) {
        let u = ugroup(3);
        let values = raw.iter().map(|w| w & ((1 << k) - 1)).collect();
        let f = lift_g_to_f(&GFunction::new(u.clone(), k, values).unwrap());
        let by_components = (1u32..1 << k).all(|v| restriction_sum(&f.component(v).unwrap(), &u).unwrap() == 1);
        prop_assert_eq!(check_condition2(&f, &u).unwrap(), by_components);
        prop_assert_eq!(check_condition3(&f, &u).unwrap(), by_components);
    }

    #[test]
    fn balanced_compositions_meet_condition3(m in 2u32..=4, k_off in 0u32..4, perm_seed in any::<u64>(), u0_pick in any::<prop::sample::Index>()) {
        let k = 1 + k_off % m;
        let u = ugroup(m);
        // h(0) = 0 and h(x) = p(x) >> (m - k) for a shuffle p of the nonzero points
        let mut points: Vec<u32> = (1..1 << m).collect();
        let mut s = perm_seed | 1;
        for i in (1..points.len()).rev() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            points.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let mut h = vec![0u32; 1 << m];
        for (x, &p) in points.iter().enumerate() {
            h[x + 1] = p >> (m - k);
        }
        prop_assert!(is_balanced(&h, k).unwrap());
        let u0 = u.elements()[1 + u0_pick.index(u.len() - 1)];
        let t = t_construction(&u, u0).unwrap();
        let composed = balanced_compose(&h, k, &t).unwrap();
        prop_assert!(check_condition3(&composed, &u).unwrap());
    }

    #[test]
    fn pi_sigma_roundtrip(seed in any::<u64>(), basis_seed in any::<u64>()) {
        let ctx = make_field(4).unwrap();
        let small = make_field(4).unwrap();
        // a random basis of GF(16) over F_2
        let mut s = basis_seed | 1;
        let basis = loop {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            let cand: Vec<_> = (0..4).map(|i| small.element((s >> (8 * i)) & 15).unwrap()).collect();
            if let Ok(pair) = dual_basis(&small, &cand) {
                break pair;
            }
        };
        let table = (0..16u32).map(|x| ((seed >> (x * 4 % 64)) & 15) as u32).collect();
        let f = VectorialFunction::new(ctx.clone(), 4, table).unwrap();
        let g = pi_map(&f, &basis, &small).unwrap();
        prop_assert_eq!(sigma_map(&g, &basis).unwrap(), f);
        let gg = pi_map(&sigma_map(&g, &basis).unwrap(), &basis, &small).unwrap();
        prop_assert_eq!(gg, g);
    }

    #[test]
    fn dickson_composition_law(r in 0u64..=20, s in 0u64..=10) {
        let outer = dickson_poly(r).unwrap().poly;
        let inner = dickson_poly(s).unwrap().poly;
        prop_assert_eq!(outer.compose(&inner), dickson_poly(r * s).unwrap().poly);
    }

    #[test]
    fn crosscorrelation_conservation(m in 2u32..=8, d in 1u64..255) {
        let ctx = make_field(m).unwrap();
        prop_assume!(gcd(d, ctx.order() as u64) == 1);
        let cc = spectrum(&ctx, d).unwrap();
        prop_assert_eq!(cc.values.values().sum::<u64>(), ctx.order() as u64);
        prop_assert_eq!(cc.shifted_total(), 1 << m);
    }

    #[test]
    fn count_total_is_core_times_translations(m in 1u32..=9, k_off in 0u32..9) {
        let k = 1 + k_off % m;
        let r = count_formula(m, k).unwrap();
        prop_assert_eq!(r.total, r.core << k as usize);
    }
}

#[test]
fn count_for_k_equal_m_reduces_to_factorial_form() {
    for m in 1..=4u32 {
        let q = 1u64 << m;
        let factorial: BigUint = (1..q).map(BigUint::from).product();
        let expected = BigUint::from(q) * BigUint::from(q * (q + 1) / 2) * factorial;
        assert_eq!(count_formula(m, m).unwrap().total, expected, "m={m}");
    }
}
