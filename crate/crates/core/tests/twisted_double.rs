use std::sync::Arc;

use anomalab_core::cohomology::{coboundary, cohomology_group, Cochain, CohomologyClass};
use anomalab_core::group::catalog::named;
use anomalab_core::twisted_double::{
    build_double, check_identities, conjugate_modular_data, find_label_equivalence, galois_squared_check, modular_data,
    simple_modules, verlinde_fusion, ModularData,
};
use anomalab_core::{Caps, CycloLevel, CycloNumber, FiniteGroup};
use proptest::prelude::*;

/// Discrete log table for a cyclic group: `log[x] = k` with `x = g^k`.
fn cyclic_log(g: &FiniteGroup) -> Vec<u64> {
    let n = g.order();
    let gen = (0..n).find(|&x| g.element_order(x) == n).unwrap();
    let mut log = vec![0; n];
    for k in 0..n {
        log[g.pow(gen, k as i64)] = k as u64;
    }
    log
}

/// `ω_k(a,b,c) = exp(2πi k a (b + c - [b+c]) / n²)` on `Z/n`, as a cochain mod `n`.
fn cyclic_cocycle(g: &FiniteGroup, k: u64) -> Cochain {
    let n = g.order() as u64;
    let log = cyclic_log(g);
    Cochain::from_fn(g, 3, n, |x| {
        let (a, b, c) = (log[x[0]], log[x[1]], log[x[2]]);
        let carry = (b + c >= n) as u64;
        (k * a * carry) as i64
    })
}

/// Closed-form modular data of `D^{ω_k}(Z/n)`: labels `(a, j)`,
/// `T = e(aj/n + k a²/n²)`, `S = e(-(al + bj)/n - 2kab/n²)/n`.
fn cyclic_oracle(n: u64, k: u64, labels_from: &ModularData) -> ModularData {
    let level = CycloLevel::get(n * n);
    let e = |num: i64| CycloNumber::zeta_power(&level, num.rem_euclid((n * n) as i64));
    let pairs: Vec<(i64, i64)> = (0..n as i64).flat_map(|a| (0..n as i64).map(move |j| (a, j))).collect();
    let (n, k) = (n as i64, k as i64);
    let t = pairs.iter().map(|&(a, j)| e(a * j * n + k * a * a)).collect();
    let s = pairs
        .iter()
        .map(|&(a, j)| {
            pairs
                .iter()
                .map(|&(b, l)| e(-(a * l + b * j) * n - 2 * k * a * b).scale(&1.into(), &n.into()))
                .collect()
        })
        .collect();
    ModularData {
        labels: labels_from.labels.clone(),
        s,
        t,
        level: (n * n) as u64,
        seed: labels_from.seed,
        fusion: labels_from.fusion.clone(),
    }
}

fn data(g: &FiniteGroup, alpha: &Cochain) -> ModularData {
    modular_data(&build_double(g, alpha, &Caps::default()).unwrap()).unwrap()
}

#[test]
fn cyclic_doubles_match_the_closed_form() {
    for n in 2..=5u64 {
        let g = named(&format!("Z/{n}")).unwrap();
        for k in 0..n {
            let md = data(&g, &cyclic_cocycle(&g, k));
            check_identities(&md, true).unwrap();
            let oracle = cyclic_oracle(n, k, &md);
            assert!(find_label_equivalence(&md, &oracle).is_some(), "Z/{n}, k = {k}");
        }
    }
}

#[test]
fn toric_code_and_double_semion_are_distinct() {
    let g = named("Z/2").unwrap();
    let toric = data(&g, &cyclic_cocycle(&g, 0));
    let semion = data(&g, &cyclic_cocycle(&g, 1));
    let quarter = |md: &ModularData| md.labels.iter().filter(|l| l.twist.denominator() == 4).count();
    assert_eq!(quarter(&toric), 0);
    assert_eq!(quarter(&semion), 2);
    assert_eq!(toric.level, 1);
    assert!(find_label_equivalence(&toric, &semion).is_none());
    assert!(find_label_equivalence(&toric, &toric).is_some());
}

#[test]
fn untwisted_double_of_s3() {
    let g = named("S3").unwrap();
    let md = data(&g, &Cochain::zero(&g, 3, 6));
    check_identities(&md, true).unwrap();
    let mut dims: Vec<u64> = md.labels.iter().map(|l| l.quantum_dimension()).collect();
    dims.sort();
    assert_eq!(dims, vec![1, 1, 2, 2, 2, 2, 3, 3]);
    assert_eq!(dims.iter().map(|d| d * d).sum::<u64>(), 36);
    // The two-dimensional pure charge squares to 1 + sign + itself.
    let e = g.identity();
    let c = md.labels.iter().position(|l| l.class_rep == e && l.dimension == 2).unwrap();
    let outputs: Vec<usize> = (0..md.rank()).filter(|&k| md.fusion[c][c][k] > 0).collect();
    assert_eq!(outputs.len(), 3);
    assert!(outputs.contains(&c));
    assert!(outputs.iter().all(|&k| md.fusion[c][c][k] == 1));
    assert_eq!(verlinde_fusion(&md).unwrap(), md.fusion);
}

#[test]
fn every_catalog_twist_passes_the_identity_suite() {
    let caps = Caps::default();
    for name in ["Z/2", "Z/3", "Z/4", "Z/2xZ/2", "S3"] {
        let g = named(name).unwrap();
        let h = Arc::new(cohomology_group(&g, 3, g.order() as u64, &caps).unwrap());
        for coords in anomalab_core::cohomology::CohomologyGroup::enumerate(h.mu_factors()) {
            let alpha = h.mu_cocycle(&coords).unwrap();
            let md = data(&g, &alpha);
            check_identities(&md, true).unwrap_or_else(|e| panic!("{name} {coords:?}: {e}"));
            assert_eq!(verlinde_fusion(&md).unwrap(), md.fusion);
            let total: u64 = md.labels.iter().map(|l| l.quantum_dimension().pow(2)).sum();
            assert_eq!(total, (g.order() * g.order()) as u64);
        }
    }
}

#[test]
fn simple_modules_count_matches_projective_classes() {
    // For the untwisted double the rank is the number of commuting pairs up to
    // conjugacy, which by Burnside is the number of commuting triples over |G|.
    for name in ["Z/3", "S3", "D4", "Q8"] {
        let g = named(name).unwrap();
        let d = build_double(&g, &Cochain::zero(&g, 3, 1), &Caps::default()).unwrap();
        let n = g.order();
        let commutes = |a: usize, b: usize| g.mul(a, b) == g.mul(b, a);
        let triples = (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
            .filter(|&(a, b, c)| commutes(a, b) && commutes(b, c) && commutes(a, c))
            .count();
        assert_eq!(simple_modules(&d).unwrap().len() * n, triples, "{name}");
    }
}

#[test]
fn non_cocycles_are_rejected() {
    let g = named("Z/3").unwrap();
    let mut table = cyclic_cocycle(&g, 1).table().to_vec();
    let i = table.iter().position(|&v| v != 0).unwrap();
    table[i] = (table[i] + 1) % 3;
    let broken = Cochain::new(&g, 3, 3, table).unwrap();
    assert!(!broken.is_cocycle());
    assert!(build_double(&g, &broken, &Caps::default()).is_err());
}

#[test]
fn galois_conjugation_of_modular_data() {
    let g = named("Z/3").unwrap();
    let md = data(&g, &cyclic_cocycle(&g, 1));
    assert_eq!(md.level, 9);
    let same = conjugate_modular_data(&md, 1).unwrap();
    assert_eq!(same.s, md.s);
    assert_eq!(same.t, md.t);
    let bar = conjugate_modular_data(&md, md.level as i64 - 1).unwrap();
    for (row, brow) in md.s.iter().zip(&bar.s) {
        for (x, y) in row.iter().zip(brow) {
            assert_eq!(x.conj(), *y);
        }
    }
    check_identities(&bar, true).unwrap();
    assert!(conjugate_modular_data(&md, 3).is_err());

    let g = named("Z/2xZ/2").unwrap();
    let h = cohomology_group(&g, 3, 4, &Caps::default()).unwrap();
    let md = data(&g, &h.mu_cocycle(&[1, 1, 1]).unwrap());
    let c = conjugate_modular_data(&md, 5 % md.level as i64 + md.level as i64).unwrap();
    check_identities(&c, false).unwrap();
}

#[test]
fn galois_squared_on_cyclic_groups() {
    let caps = Caps::default();
    for (name, n, classes) in [("Z/3", 2, &[0, 1, 2][..]), ("Z/5", 2, &[0, 1, 2, 3, 4]), ("Z/5", 3, &[1]), ("Z/7", 3, &[1])] {
        let g = named(name).unwrap();
        let m = g.order() as u64;
        let h = Arc::new(cohomology_group(&g, 3, m, &caps).unwrap());
        for &k in classes {
            let alpha = CohomologyClass::from_coordinates(&h, &[k]).unwrap();
            let r = galois_squared_check(&alpha, n, &caps).unwrap();
            assert_eq!(r.twisted_class, vec![(k * r.factor) % m]);
            assert!(r.equivalence.is_some(), "{name} α = {k} n = {n}");
            assert!(r.conjugate_identities);
        }
    }
    let g = named("Z/2").unwrap();
    let h = Arc::new(cohomology_group(&g, 3, 2, &caps).unwrap());
    assert!(galois_squared_check(&CohomologyClass::zero(&h), 2, &caps).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn modular_data_is_invariant_under_coboundaries(k in 0u64..4, lambda in proptest::collection::vec(0u64..4, 9)) {
        let g = named("Z/4").unwrap();
        let alpha = cyclic_cocycle(&g, k);
        let l = Cochain::from_fn(&g, 2, 4, |x| {
            if x[0] == g.identity() || x[1] == g.identity() { 0 } else { lambda[(x[0] % 3) * 3 + x[1] % 3] as i64 }
        });
        let shifted = alpha.add(&coboundary(&l)).unwrap();
        let (a, b) = (data(&g, &alpha), data(&g, &shifted));
        prop_assert!(find_label_equivalence(&a, &b).is_some());
    }
}
