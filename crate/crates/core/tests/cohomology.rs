use std::collections::HashSet;
use std::sync::Arc;

use anomalab_core::cohomology::{
    class_add, coboundary, cohomology_group, galois_fixed_exponent, kill_search, mu_trivialization, restrict, slant2,
    slant3, slant_linearity_check, trivialize, Cochain, CohomologyClass, CohomologyGroup,
};
use anomalab_core::group::catalog::named;
use anomalab_core::group::Subgroup;
use anomalab_core::{Caps, FiniteGroup};
use proptest::prelude::*;

/// Every normalized k-cochain on `g` with values mod `m`.
fn all_cochains(g: &FiniteGroup, k: usize, m: u64) -> Vec<Cochain> {
    let e = g.identity();
    let free: Vec<usize> = (0..g.order()).filter(|&x| x != e).collect();
    let positions = free.len().pow(k as u32);
    let total = (m as usize).pow(positions as u32);
    (0..total)
        .map(|mut code| {
            let mut digits = vec![0i64; positions];
            for d in digits.iter_mut() {
                *d = (code % m as usize) as i64;
                code /= m as usize;
            }
            Cochain::from_fn(g, k, m, |args| {
                let mut pos = 0;
                for &a in args {
                    pos = pos * free.len() + free.iter().position(|&x| x == a).unwrap();
                }
                digits[pos]
            })
        })
        .collect()
}

/// `|H[d]|` for each `d | m`, from exhaustive cocycle and coboundary sets.
fn brute_force_torsion(g: &FiniteGroup, k: usize, m: u64) -> Vec<(u64, usize)> {
    let cocycles: Vec<Cochain> = all_cochains(g, k, m).into_iter().filter(Cochain::is_cocycle).collect();
    let boundaries: HashSet<Vec<u64>> = if k == 1 {
        [Cochain::zero(g, 1, m).table().to_vec()].into_iter().collect()
    } else {
        all_cochains(g, k - 1, m).iter().map(|c| coboundary(c).table().to_vec()).collect()
    };
    (1..=m)
        .filter(|d| m % d == 0)
        .map(|d| {
            let killed = cocycles.iter().filter(|z| boundaries.contains(z.scale(d as i64).table())).count();
            (d, killed / boundaries.len())
        })
        .collect()
}

fn torsion_of(factors: &[u64], m: u64) -> Vec<(u64, usize)> {
    (1..=m)
        .filter(|d| m % d == 0)
        .map(|d| (d, factors.iter().map(|&f| num_integer::gcd(f, d) as usize).product()))
        .collect()
}

#[test]
fn engine_matches_exhaustive_enumeration() {
    let caps = Caps::default();
    for (name, k, m) in [
        ("Z/2", 1, 2),
        ("Z/2", 2, 2),
        ("Z/2", 2, 4),
        ("Z/2", 3, 2),
        ("Z/2", 3, 4),
        ("Z/2", 4, 2),
        ("Z/3", 2, 3),
        ("Z/3", 2, 9),
        ("Z/3", 3, 3),
        ("Z/4", 2, 4),
        ("Z/2xZ/2", 2, 2),
    ] {
        let g = named(name).unwrap();
        let h = cohomology_group(&g, k, m, &caps).unwrap();
        assert_eq!(
            torsion_of(h.invariant_factors(), m),
            brute_force_torsion(&g, k, m),
            "H^{k}({name}; Z/{m}) = {:?}",
            h.invariant_factors()
        );
    }
}

#[test]
fn cyclic_groups_in_degree_three() {
    let caps = Caps::default();
    for n in 2..=8u64 {
        let g = named(&format!("Z/{n}")).unwrap();
        let h = cohomology_group(&g, 3, n, &caps).unwrap();
        assert_eq!(h.invariant_factors(), &[n]);
        assert_eq!(h.mu_factors(), &[n]);
    }
}

#[test]
fn literature_values() {
    // H^k(G; Z/m) from the integral cohomology by universal coefficients.
    let caps = Caps::default();
    for (name, k, m, full, mu) in [
        ("S3", 2, 6, vec![2], vec![]),
        ("S3", 3, 6, vec![6], vec![6]),
        ("Q8", 2, 8, vec![2, 2], vec![]),
        ("Q8", 3, 8, vec![8], vec![8]),
        ("D4", 2, 8, vec![2, 2, 2], vec![2]),
        ("D4", 3, 8, vec![2, 2, 2, 4], vec![2, 2, 4]),
        ("Z/2xZ/2", 3, 4, vec![2, 2, 2, 2], vec![2, 2, 2]),
        ("Z/4", 2, 4, vec![4], vec![]),
    ] {
        let h = cohomology_group(&named(name).unwrap(), k, m, &caps).unwrap();
        assert_eq!(h.invariant_factors(), &full[..], "{name} k={k}");
        assert_eq!(h.mu_factors(), &mu[..], "{name} k={k} μ");
    }
}

#[test]
fn basis_cocycles_are_cocycles_and_coordinates_roundtrip() {
    let caps = Caps::default();
    for name in ["Z/6", "S3", "Z/2xZ/2"] {
        let g = named(name).unwrap();
        let h = cohomology_group(&g, 3, g.order() as u64, &caps).unwrap();
        for (i, b) in h.basis().iter().enumerate() {
            assert!(b.is_cocycle());
            let mut unit = vec![0; h.basis().len()];
            unit[i] = 1;
            assert_eq!(h.coordinates(b).unwrap(), unit);
        }
        for coords in CohomologyGroup::enumerate(h.mu_factors()) {
            assert_eq!(h.mu_coordinates(&h.mu_cocycle(&coords).unwrap()).unwrap(), coords);
        }
    }
}

#[test]
fn mu_classes_of_klein_four_mod_four() {
    let caps = Caps::default();
    let g = named("Z/2xZ/2").unwrap();
    let h = cohomology_group(&g, 3, 4, &caps).unwrap();
    assert_eq!(h.mu_order(), 8);
    let distinct: HashSet<Vec<u64>> = CohomologyGroup::enumerate(h.mu_factors())
        .iter()
        .map(|c| h.coordinates(&h.mu_cocycle(c).unwrap()).unwrap())
        .collect();
    assert_eq!(distinct.len(), 8);
}

#[test]
fn cyclic_second_cohomology_has_no_mu_part() {
    let caps = Caps::default();
    for n in 2..=6u64 {
        let g = named(&format!("Z/{n}")).unwrap();
        let h = cohomology_group(&g, 2, n * n, &caps).unwrap();
        assert!(h.mu_factors().is_empty(), "Z/{n}");
        assert_eq!(h.invariant_factors(), &[n]);
    }
}

#[test]
fn trivialize_solves_coboundaries() {
    let g = named("S3").unwrap();
    let lambda = Cochain::from_fn(&g, 2, 6, |a| (a[0] * 3 + a[1]) as i64);
    let c = coboundary(&lambda);
    let t = trivialize(&c).unwrap().expect("a coboundary");
    assert_eq!(coboundary(&t), c);
    let h = cohomology_group(&g, 3, 6, &Caps::default()).unwrap();
    assert!(trivialize(&h.basis()[0]).unwrap().is_none());
}

#[test]
fn mu_trivialization_of_a_mu_trivial_class() {
    let caps = Caps::default();
    // The full H² of S3 with Z/6 coefficients is Z/2, but it dies in H²(S3; μ).
    let g = named("S3").unwrap();
    let h = cohomology_group(&g, 2, 6, &caps).unwrap();
    assert!(mu_trivialization(&h.basis()[0], &caps).unwrap().is_some());
    let h3 = cohomology_group(&g, 3, 6, &caps).unwrap();
    assert!(mu_trivialization(&h3.mu_basis()[0], &caps).unwrap().is_none());
}

#[test]
fn restriction_to_a_subgroup() {
    let caps = Caps::default();
    let g = named("S3").unwrap();
    let h = cohomology_group(&g, 3, 6, &caps).unwrap();
    let gen = &h.mu_basis()[0];
    // Restriction to the 3-cycles detects the 3-part.
    let c3 = Subgroup::generated_by(&g, &[(0..6).find(|&x| g.element_order(x) == 3).unwrap()]).unwrap();
    let r = restrict(gen, &c3).unwrap();
    let hc = cohomology_group(c3.group(), 3, 6, &caps).unwrap();
    assert_eq!(hc.mu_factors(), &[3]);
    assert_ne!(hc.mu_coordinates(&r).unwrap(), vec![0]);
}

#[test]
fn kill_search_finds_the_identity_for_trivial_classes() {
    let caps = Caps::default();
    let g = named("Z/2").unwrap();
    let zero = Cochain::zero(&g, 3, 2);
    let found = kill_search(&zero, 4, 16, &caps).unwrap();
    let (ext, k, _, report) = found.found.expect("trivial class is killed");
    assert_eq!(k, 1);
    assert_eq!(ext.total.order(), 2);
    assert!(report.killed);
    let h = cohomology_group(&g, 3, 2, &caps).unwrap();
    let none = kill_search(&h.mu_basis()[0], 1, 16, &caps).unwrap();
    assert!(none.found.is_none());
}

#[test]
fn generator_of_z2_dies_on_z4() {
    // Inflation along Z/4 → Z/2 kills the generator of H³(Z/2; μ).
    let caps = Caps::default();
    let g = named("Z/2").unwrap();
    let h = cohomology_group(&g, 3, 2, &caps).unwrap();
    let found = kill_search(&h.mu_basis()[0], 2, 16, &caps).unwrap();
    let (ext, k, _, _) = found.found.expect("killed by a Z/2 extension");
    assert_eq!(k, 2);
    assert_eq!(ext.total.exponent(), 4);
}

#[test]
fn fixed_exponents_divide_24() {
    let caps = Caps::default();
    for name in ["Z/2", "Z/3", "Z/4", "Z/6", "Z/2xZ/2", "S3", "D4", "Q8", "A4", "Z/5", "Z/7"] {
        let g = named(name).unwrap();
        let h = cohomology_group(&g, 3, g.order() as u64, &caps).unwrap();
        let f = galois_fixed_exponent(&h, 2);
        assert_eq!(24 % f.exponent, 0, "{name}");
    }
    // Z/5 fixed part under n ↦ n² is trivial, Z/8 ⊂ Q8 is fully fixed (n² ≡ 1 mod 8).
    let z5 = cohomology_group(&named("Z/5").unwrap(), 3, 5, &caps).unwrap();
    assert_eq!(galois_fixed_exponent(&z5, 2).exponent, 1);
    let q8 = cohomology_group(&named("Q8").unwrap(), 3, 8, &caps).unwrap();
    assert_eq!(galois_fixed_exponent(&q8, 2).exponent, 8);
}

#[test]
fn slant_of_zero_is_zero() {
    let g = named("S3").unwrap();
    for x in 0..6 {
        assert!(slant3(&Cochain::zero(&g, 3, 6), x).unwrap().is_zero());
        assert!(slant2(&Cochain::zero(&g, 2, 6), x).unwrap().is_zero());
    }
}

#[test]
fn caps_are_enforced() {
    let g = named("S4").unwrap();
    let err = cohomology_group(&g, 3, 24, &Caps::default()).unwrap_err();
    assert!(matches!(err, anomalab_core::Error::Size(_)));
}

fn klein_cocycles() -> (FiniteGroup, Arc<CohomologyGroup>) {
    let g = named("Z/2xZ/2").unwrap();
    let h = Arc::new(cohomology_group(&g, 3, 4, &Caps::default()).unwrap());
    (g, h)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coboundaries_are_cocycles(values in proptest::collection::vec(0i64..6, 36)) {
        let g = named("S3").unwrap();
        let lambda = Cochain::from_fn(&g, 2, 6, |a| values[a[0] * 6 + a[1]]);
        prop_assert!(coboundary(&lambda).is_cocycle());
    }

    #[test]
    fn class_is_invariant_under_coboundaries(
        coords in proptest::collection::vec(0u64..4, 4),
        values in proptest::collection::vec(0i64..4, 16),
    ) {
        let (g, h) = klein_cocycles();
        let coords: Vec<u64> = coords.iter().zip(h.invariant_factors()).map(|(c, f)| c % f).collect();
        let alpha = h.cocycle(&coords).unwrap();
        let lambda = Cochain::from_fn(&g, 2, 4, |a| values[a[0] * 4 + a[1]]);
        let shifted = alpha.add(&coboundary(&lambda)).unwrap();
        prop_assert_eq!(h.coordinates(&shifted).unwrap(), coords);
    }

    #[test]
    fn class_addition_is_coordinatewise(a in proptest::collection::vec(0u64..2, 3), b in proptest::collection::vec(0u64..2, 3)) {
        let (_, h) = klein_cocycles();
        let ca = CohomologyClass::from_coordinates(&h, &[a[0], a[1], a[2], 0]).unwrap();
        let cb = CohomologyClass::from_coordinates(&h, &[b[0], b[1], b[2], 0]).unwrap();
        let sum = class_add(&ca, &cb).unwrap();
        let expect: Vec<u64> = (0..3).map(|i| (a[i] + b[i]) % 2).chain([0]).collect();
        prop_assert_eq!(sum.coordinates(), &expect[..]);
    }

    #[test]
    fn slant_is_linear_on_abelian_groups(coords in proptest::collection::vec(0u64..12, 8), n in -7i64..8) {
        let g = named("Z/2xZ/6").unwrap();
        let h = cohomology_group(&g, 2, 6, &Caps::default()).unwrap();
        let coords: Vec<u64> = coords.iter().zip(h.invariant_factors()).map(|(c, f)| c % f).collect();
        let beta = h.cocycle(&coords).unwrap();
        prop_assert!(slant_linearity_check(&g, &beta, n).unwrap());
    }
}
