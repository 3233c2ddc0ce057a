use anomalab_core::cyclotomic::root_embed;
use anomalab_core::{CycloLevel, CycloNumber, MuElement};
use num_traits::ToPrimitive;
use proptest::prelude::*;

/// Complex value of `Σ_k c_k ζ_N^k`, computed independently of the power basis.
fn embed(level: u64, counts: &[i64], twist: u64) -> (f64, f64) {
    counts.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
        let t = 2.0 * std::f64::consts::PI * (k as u64 * twist) as f64 / level as f64;
        (re + c as f64 * t.cos(), im + c as f64 * t.sin())
    })
}

/// Complex value of an element from its power-basis coefficients.
fn value(x: &CycloNumber) -> (f64, f64) {
    x.coefficients().iter().enumerate().fold((0.0, 0.0), |(re, im), (k, q)| {
        let c = q.numer().to_f64().unwrap() / q.denom().to_f64().unwrap();
        let t = 2.0 * std::f64::consts::PI * k as f64 / x.level() as f64;
        (re + c * t.cos(), im + c * t.sin())
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-6 * (1.0 + b.0.abs()) && (a.1 - b.1).abs() < 1e-6 * (1.0 + b.1.abs())
}

fn number(level: u64, counts: &[i64]) -> CycloNumber {
    CycloNumber::from_small_power_sum(&CycloLevel::get(level), counts, 1)
}

fn arb_element() -> impl Strategy<Value = (u64, Vec<i64>, Vec<i64>)> {
    prop::sample::select(vec![1u64, 2, 3, 4, 5, 6, 8, 9, 12, 15, 24]).prop_flat_map(|n| {
        (Just(n), prop::collection::vec(-4i64..5, n as usize), prop::collection::vec(-4i64..5, n as usize))
    })
}

#[test]
fn known_reductions() {
    let l12 = CycloLevel::get(12);
    assert_eq!(CycloNumber::zeta_power(&l12, 4).reduce_level().level(), 3);
    assert_eq!(CycloNumber::zeta_power(&l12, 6).reduce_level().level(), 1);
    let l8 = CycloLevel::get(8);
    let sqrt2 = &CycloNumber::zeta_power(&l8, 1) + &CycloNumber::zeta_power(&l8, 7);
    assert_eq!(sqrt2.reduce_level().level(), 8);
    assert_eq!(&sqrt2 * &sqrt2, CycloNumber::from_integer(&CycloLevel::get(1), 2));
    // 1 + ζ₃ + ζ₃² = 0
    assert!(number(3, &[1, 1, 1]).is_zero());
    // −ζ₃ is a primitive sixth root of unity.
    let m = (-&CycloNumber::zeta_power(&CycloLevel::get(3), 1)).as_root_of_unity().unwrap();
    assert_eq!(m, MuElement::new(5, 6));
    assert_eq!(root_embed(MuElement::new(1, 4)), CycloNumber::zeta_power(&l8, 2));
}

#[test]
fn galois_rejects_non_units() {
    let x = CycloNumber::zeta_power(&CycloLevel::get(6), 1);
    assert!(x.galois(3).is_err());
    assert_eq!(x.galois(5).unwrap(), x.conj());
    assert!(CycloNumber::zero(&CycloLevel::get(5)).inverse().is_err());
}

proptest! {
    #[test]
    fn field_operations_match_the_complex_embedding((n, a, b) in arb_element()) {
        let (x, y) = (number(n, &a), number(n, &b));
        let (xa, yb) = (embed(n, &a, 1), embed(n, &b, 1));
        prop_assert!(close(value(&(&x + &y)), (xa.0 + yb.0, xa.1 + yb.1)));
        prop_assert!(close(value(&(&x * &y)), (xa.0 * yb.0 - xa.1 * yb.1, xa.0 * yb.1 + xa.1 * yb.0)));
        prop_assert!(close(value(&x.conj()), (xa.0, -xa.1)));
        prop_assert!(close(value(&x.reduce_level()), xa));
        for t in (1..n.max(2)).filter(|&t| num_integer::gcd(t, n) == 1) {
            prop_assert!(close(value(&x.galois(t as i64).unwrap()), embed(n, &a, t)));
        }
    }

    #[test]
    fn ring_axioms((n, a, b) in arb_element(), c in prop::collection::vec(-3i64..4, 24)) {
        let (x, y) = (number(n, &a), number(n, &b));
        let z = number(n, &c[..n as usize]);
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
        }
        prop_assert_eq!(x.reduce_level(), x.clone());
        for t in (1..n.max(2)).filter(|&t| num_integer::gcd(t, n) == 1) {
            prop_assert_eq!((&x * &y).galois(t as i64).unwrap(), &x.galois(t as i64).unwrap() * &y.galois(t as i64).unwrap());
        }
    }

    #[test]
    fn mixed_levels_compare_in_the_common_field(k in 0i64..12, m in 1u64..5) {
        let a = CycloNumber::zeta_power(&CycloLevel::get(12), k);
        let b = CycloNumber::zeta_power(&CycloLevel::get(12 * m), k * m as i64);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.as_root_of_unity().unwrap(), MuElement::new(k, 12));
    }
}
