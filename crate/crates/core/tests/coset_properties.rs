use lcdbch::cosets::{
    adjacent_pair_count, coset_of, coset_partition, gcd_power_plus_minus, is_coset_leader, leader_of,
    minus_one_is_power, multiplicative_order, q_adic_expansion, q_adic_value, scaled_leader_correspondence,
    CosetParams,
};
use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;

fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
    (2u64..14, 1u64..3000).prop_filter("coprime", |&(q, n)| q.gcd(&n) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn partition_covers_z_n((q, n) in coprime_pair()) {
        let p = CosetParams::new(q, n).unwrap();
        let part = coset_partition(&p).unwrap();
        prop_assert_eq!(part.leaders.iter().map(|&(_, s)| s).sum::<u64>(), n);
        prop_assert!(part.leaders.windows(2).all(|w| w[0].0 < w[1].0));
        for &(l, s) in &part.leaders {
            prop_assert_eq!(p.ord() % s, 0);
            let c = coset_of(l, &p).unwrap();
            prop_assert_eq!(c.len() as u64, s);
            prop_assert_eq!(*c.iter().min().unwrap(), l);
        }
    }

    #[test]
    fn walk_agrees_with_partition((q, n) in coprime_pair(), a in 0u64..3000) {
        let p = CosetParams::new(q, n).unwrap();
        let a = a % n;
        let part = coset_partition(&p).unwrap();
        let v = is_coset_leader(a, &p).unwrap();
        prop_assert_eq!(v.is_leader, part.is_leader(a));
        prop_assert_eq!(v.leader, leader_of(a, &p));
        prop_assert_eq!(Some(v.size), part.size_of_leader(v.leader));
        // C_(qa) = C_a
        prop_assert_eq!(leader_of(a * q % n, &p), v.leader);
    }

    #[test]
    fn negation_maps_cosets_to_cosets((q, n) in coprime_pair(), a in 0u64..3000) {
        let p = CosetParams::new(q, n).unwrap();
        let a = a % n;
        let mut neg: Vec<u64> = coset_of(a, &p).unwrap().iter().map(|&x| (n - x) % n).collect();
        neg.sort_unstable();
        let mut direct = coset_of((n - a) % n, &p).unwrap();
        direct.sort_unstable();
        prop_assert_eq!(neg, direct);
        if minus_one_is_power(&p) {
            prop_assert_eq!(leader_of(a, &p), leader_of((n - a) % n, &p));
        }
    }

    #[test]
    fn order_is_least_period((q, n) in coprime_pair()) {
        let t = multiplicative_order(q, n).unwrap();
        let mut x = 1 % n;
        for i in 1..=t {
            x = x * q % n;
            prop_assert_eq!(x == 1 % n, i == t);
        }
    }

    #[test]
    fn gcd_closed_form_matches_euclid(l in 1u64..60, u in 1u64..40, v in 1u64..40) {
        let a = BigUint::from(l).pow(u as u32) + 1u32;
        let b = BigUint::from(l).pow(v as u32) - 1u32;
        prop_assert_eq!(gcd_power_plus_minus(l, u, v), a.gcd(&b));
    }

    #[test]
    fn scaled_leaders_correspond(q in 2u64..6, m in prop::sample::select(vec![3u32, 5]), s in 1u64..4000, pick in 0usize..4) {
        let divisors: Vec<u64> = (1..=q + 1).filter(|d| (q + 1) % d == 0).collect();
        let divisor = divisors[pick % divisors.len()];
        let small_n = (q.pow(m) + 1) / divisor;
        let s = 1 + s % (small_n - 1);
        prop_assert!(scaled_leader_correspondence(s, divisor, q, m).unwrap().agrees());
    }

    #[test]
    fn q_adic_round_trip(q in 2u64..20, width in 1u32..8, a in 0u64..u64::MAX) {
        let a = a % q.pow(width);
        let digits = q_adic_expansion(a, q, width).unwrap();
        prop_assert!(digits.iter().all(|&d| d < q));
        prop_assert_eq!(q_adic_value(&digits, q), a);
    }

    #[test]
    fn adjacent_pairs_are_odd(m in prop::sample::select(vec![15u32, 21, 27, 31, 41]), bits in prop::collection::vec(1usize..3, 1..40)) {
        // alternate runs of length 1 or 2 give a word with no run of three
        let mut s = 0u64;
        let mut len = 0u32;
        let mut bit = 1u64;
        for r in bits.iter().rev() {
            for _ in 0..*r {
                if len < m {
                    s |= bit << len;
                    len += 1;
                }
            }
            bit ^= 1;
        }
        // s must be odd and below 2^(m-1): low bit 1, top bit 0
        prop_assume!(s & 1 == 1 && s < 1u64 << (m - 1) && len == m);
        if let Ok(l) = adjacent_pair_count(s, m) {
            prop_assert_eq!(l % 2, 1, "s={:b}", s);
        }
    }
}

#[test]
fn pair_parity_exhaustive_small_m() {
    for m in (3..=15).step_by(2) {
        let mut checked = 0;
        for s in (1..1u64 << (m - 1)).step_by(2) {
            if let Ok(l) = adjacent_pair_count(s, m) {
                assert_eq!(l % 2, 1, "m={m} s={s:b}");
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}
