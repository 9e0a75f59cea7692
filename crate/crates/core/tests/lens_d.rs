use concordance_core::lens_d::{
    d_branched_cover_multiset, d_lens, d_lens_table, d_twist_closed, d_twist_obstruction_closed, DCorrectionTable,
};
use concordance_core::obstruct::{obstruction_value, prime_factors, SpincFunction};
use concordance_core::rational::{int, q as rq, sorted, Q};
use concordance_core::TwoBridgeKnot;
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;

fn twist(p: i64) -> TwoBridgeKnot {
    TwoBridgeKnot::new(p, 2).unwrap()
}

fn closed_multiset(p: i64) -> Vec<Q> {
    let h = (p - 1) / 2;
    sorted((-h..=h).map(|k| d_twist_closed(p, k).unwrap()))
}

#[test]
fn closed_form_values() {
    assert_eq!(d_lens(1, 0, 0).unwrap(), int(0));
    assert_eq!(d_twist_closed(9, 0).unwrap(), int(0));
    assert_eq!(d_twist_closed(5, 1).unwrap(), rq(2, 5));
    assert_eq!(d_twist_closed(3, 0).unwrap(), rq(1, 2));
    assert_eq!(closed_multiset(5), [rq(-2, 5), rq(-2, 5), int(0), rq(2, 5), rq(2, 5)]);
}

#[test]
fn recursion_matches_twist_closed_form() {
    for p in (3..=199).step_by(2) {
        assert_eq!(d_branched_cover_multiset(&twist(p)), closed_multiset(p), "p = {p}");
    }
}

#[test]
fn spin_value_vanishes_unless_three_mod_four() {
    for p in (3..=199).step_by(2) {
        let spin = DCorrectionTable::branched_cover(&twist(p)).centered()[0];
        assert_eq!(spin != int(0), p % 4 == 3, "p = {p}");
        assert_eq!(spin, d_twist_closed(p, 0).unwrap());
    }
}

fn recursion_d(p: i64, q: u64) -> Q {
    let f = SpincFunction::cyclic(DCorrectionTable::branched_cover(&twist(p)).centered());
    obstruction_value(&f, q, 1)
}

#[test]
fn twist_obstruction_matches_closed_form() {
    let mut checked = 0;
    for p in (3..=199i64).step_by(2).filter(|p| p % 4 == 1) {
        for q in prime_factors(p as u64) {
            let closed = d_twist_obstruction_closed(q as i64, p / q as i64).unwrap();
            assert_eq!(recursion_d(p, q), closed.abs(), "p = {p}, q = {q}");
            checked += 1;
        }
    }
    assert!(checked > 50);
    assert_eq!(recursion_d(9, 3), int(0));
    assert_eq!(recursion_d(5, 5), int(0));
    assert_ne!(recursion_d(21, 3), int(0));
}

#[test]
fn branched_cover_values_pair_up() {
    for (p, q) in [(3, 1), (5, 2), (29, 11), (45, 17), (81, 14), (125, 33)] {
        let k = TwoBridgeKnot::new(p, q).unwrap();
        let table = DCorrectionTable::branched_cover(&k);
        let centered = table.centered();
        for s in 1..p as usize {
            assert_eq!(centered[s], centered[p as usize - s], "{p}/{q} label {s}");
        }
    }
}

#[test]
fn rejects_bad_arguments() {
    assert!(d_lens(4, 2, 0).is_err());
    assert!(d_lens(5, 2, 5).is_err());
    assert!(d_lens(5, 2, -1).is_err());
    assert!(d_twist_closed(6, 0).is_err());
    assert!(d_twist_obstruction_closed(3, 1).is_err());
    assert!(d_twist_obstruction_closed(15, 1).is_err());
}

fn lens() -> impl Strategy<Value = (i64, i64)> {
    (2i64..300).prop_flat_map(|p| (Just(p), 1..p)).prop_filter("coprime", |(p, q)| p.gcd(q) == 1)
}

proptest! {
    #[test]
    fn denominators_divide_4pq((p, q) in lens()) {
        for v in d_lens_table(p, q).unwrap() {
            prop_assert_eq!((4 * p * q) % v.denom(), 0);
        }
    }

    #[test]
    fn conjugation_fixes_the_table((p, q) in lens()) {
        let t = d_lens_table(p, q).unwrap();
        for i in 0..p {
            prop_assert_eq!(t[i as usize], t[(q - 1 - i).rem_euclid(p) as usize]);
        }
    }

    #[test]
    fn orientation_reversal_negates((p, q) in lens().prop_filter("odd", |(p, _)| p % 2 == 1 && *p > 2)) {
        let k = TwoBridgeKnot::new(p, q).unwrap();
        let direct = sorted(d_lens_table(p, q).unwrap().into_iter().map(|v| -v));
        prop_assert_eq!(d_branched_cover_multiset(&k), direct);
    }
}
