use concordance_core::obstruct::{
    admissible_k, minmax_test, obstruction_value, order_pk_subgroups, prime_factors, s_h, subgroup_elements_cyclic,
    verdict, AbelianGroup, Invariant, MinMaxOutcome, SpincFunction, Verdict,
};
use concordance_core::rational::{int, q, Q};
use concordance_core::{tau_and_d, TwoBridgeKnot};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const MODULI: [u64; 8] = [9, 15, 21, 27, 45, 63, 75, 77];

fn rational() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn function() -> impl Strategy<Value = SpincFunction> {
    proptest::sample::select(MODULI.to_vec())
        .prop_flat_map(|n| proptest::collection::vec(rational(), n as usize))
        .prop_map(SpincFunction::cyclic)
}

fn tests_for(n: u64) -> Vec<(u64, u32)> {
    prime_factors(n).into_iter().flat_map(|p| (1..=admissible_k(p, n).max(1)).map(move |k| (p, k))).collect()
}

proptest! {
    #[test]
    fn negation_invariance(f in function()) {
        let n = f.group().order();
        prop_assert_eq!(obstruction_value(&f, 1, 1), obstruction_value(&f.negated(), 1, 1));
        for (p, k) in tests_for(n) {
            prop_assert_eq!(obstruction_value(&f, p, k), obstruction_value(&f.negated(), p, k));
        }
    }

    #[test]
    fn minmax_ignores_sign(f in function()) {
        let n = f.group().order();
        for p in prime_factors(n).into_iter().filter(|&p| n % (p * p) != 0) {
            let a = minmax_test(&f, p).unwrap();
            let b = minmax_test(&f.negated(), p).unwrap();
            prop_assert_eq!(a.outcome, b.outcome);
            prop_assert_eq!(a.max + a.min, -(b.max + b.min));
        }
    }

    #[test]
    fn cyclic_value_is_the_subgroup_sum(f in function()) {
        let n = f.group().order();
        for (p, k) in tests_for(n) {
            let h = subgroup_elements_cyclic(n, p.pow(k)).unwrap();
            prop_assert_eq!(obstruction_value(&f, p, k), s_h(&f, &h).abs());
        }
    }

    #[test]
    fn general_path_agrees_on_a_split_cyclic_group(f in function()) {
        let n = f.group().order();
        let p0 = prime_factors(n)[0];
        let mut a = p0;
        while n % (a * p0) == 0 {
            a *= p0;
        }
        prop_assume!(a != n);
        let b = n / a;
        let split = AbelianGroup::new(vec![a, b]).unwrap();
        let mut values = vec![Q::zero(); n as usize];
        for x in 0..n {
            values[split.index(&[x % a, x % b]) as usize] = f.at(x);
        }
        let g = SpincFunction::new(split, values).unwrap();
        for (p, k) in tests_for(n) {
            prop_assert_eq!(order_pk_subgroups(g.group(), p, k).len(), 1);
            prop_assert_eq!(obstruction_value(&f, p, k), obstruction_value(&g, p, k));
        }
    }

    #[test]
    fn vanishing_on_subgroups_gives_zero(f in function()) {
        let n = f.group().order();
        for p in prime_factors(n) {
            let h = subgroup_elements_cyclic(n, p).unwrap();
            let mut values = f.values().to_vec();
            for &x in &h {
                values[x as usize] = Q::zero();
            }
            prop_assert_eq!(obstruction_value(&SpincFunction::cyclic(values), p, 1), Q::zero());
        }
    }

    #[test]
    fn non_cyclic_minimum(vals in proptest::collection::vec(rational(), 9)) {
        let g = AbelianGroup::new(vec![3, 3]).unwrap();
        let f = SpincFunction::new(g.clone(), vals).unwrap();
        let sums: Vec<Q> = order_pk_subgroups(&g, 3, 1).iter().map(|h| s_h(&f, h)).collect();
        prop_assert_eq!(sums.len(), 4);
        let same_sign = sums.iter().all(|s| s.is_positive()) || sums.iter().all(|s| s.is_negative());
        let expected = if same_sign { sums.iter().map(|s| s.abs()).min().unwrap() } else { Q::zero() };
        prop_assert_eq!(obstruction_value(&f, 3, 1), expected);
    }
}

#[test]
fn subgroup_listing() {
    assert_eq!(subgroup_elements_cyclic(45, 3).unwrap(), [0, 15, 30]);
    assert_eq!(subgroup_elements_cyclic(45, 5).unwrap(), [0, 9, 18, 27, 36]);
    assert_eq!(order_pk_subgroups(&AbelianGroup::cyclic(45), 3, 2).len(), 1);
    assert_eq!(order_pk_subgroups(&AbelianGroup::new(vec![3, 3]).unwrap(), 3, 1).len(), 4);
    assert!(order_pk_subgroups(&AbelianGroup::cyclic(45), 7, 1).is_empty());
    assert_eq!(admissible_k(3, 81), 2);
    assert_eq!(admissible_k(5, 125), 2);
    assert_eq!(admissible_k(3, 45), 1);
}

#[test]
fn spin_value_of_k32() {
    let k = TwoBridgeKnot::new(3, 2).unwrap();
    let s = tau_and_d(&k).unwrap();
    assert_eq!(obstruction_value(&SpincFunction::cyclic(s.d()), 1, 1), q(1, 2));
}

#[test]
fn zero_function_is_consistent() {
    let f = SpincFunction::cyclic(vec![int(0); 77]);
    for p in [7, 11] {
        assert_eq!(minmax_test(&f, p).unwrap().outcome, MinMaxOutcome::Consistent);
    }
}

#[test]
fn finite_order_knots_pass_everything() {
    for (p, q) in [(5, 2), (9, 2)] {
        let k = TwoBridgeKnot::new(p, q).unwrap();
        let s = tau_and_d(&k).unwrap();
        let r = verdict(&k, &s.tau(), &s.d()).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive, "{p}/{q}");
        assert_eq!(r.fired().count(), 0);
        assert!(r.value(Invariant::D, if p == 5 { 5 } else { 3 }, 1).unwrap().is_zero());
    }
}

#[test]
fn verdict_needs_complete_tables() {
    let k = TwoBridgeKnot::new(5, 2).unwrap();
    assert!(verdict(&k, &[int(0); 4], &[int(0); 5]).is_err());
}
