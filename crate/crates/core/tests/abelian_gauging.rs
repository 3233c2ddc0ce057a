use anomalab_core::abelian_gauging::{
    campaign, galois_transform, gauged_decomposition, random_cocycle, reindex_check, ConjugationRule, SHAPES,
};
use std::sync::OnceLock;

use anomalab_core::cohomology::{cohomology_group, Cochain, CohomologyGroup};
use anomalab_core::group::catalog::named;
use anomalab_core::{Caps, FiniteGroup};
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

/// `(Z/n)²` with `(a, b)` at index `a·n + b`.
fn square(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n).direct_product(&FiniteGroup::cyclic(n))
}

#[test]
fn klein_four_with_the_off_diagonal_cocycle() {
    // β(x, y) = x₁y₂ / 2: the sector of a carries the character b ↦ (a₁b₂ − b₁a₂)/2.
    let a = square(2);
    let beta = Cochain::from_fn(&a, 2, 2, |x| ((x[0] / 2) * (x[1] % 2)) as i64);
    assert!(beta.is_cocycle());
    let dec = gauged_decomposition(&a, &beta).unwrap();
    for label in &dec.labels {
        let (a1, a2) = (label.sector / 2, label.sector % 2);
        let expected: Vec<u64> = (0..4).map(|b| ((a1 * (b % 2) + 2 - (b / 2) * a2) % 2) as u64).collect();
        assert_eq!(label.twist_character, expected, "sector {}", label.sector);
    }
    // Only the identity sector carries the trivial character.
    assert_eq!(dec.labels.iter().filter(|l| l.twist_character.iter().all(|&v| v == 0)).count(), 1);
}

#[test]
fn cyclic_cocycles_have_trivial_sector_characters() {
    // H²(Z/n; μ) = 0, so every slant of a 2-cocycle on a cyclic group vanishes.
    let caps = Caps::default();
    for n in 2..=8 {
        let a = named(&format!("Z/{n}")).unwrap();
        let h = cohomology_group(&a, 2, n as u64, &caps).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let beta = random_cocycle(&h, &mut rng).unwrap();
        let dec = gauged_decomposition(&a, &beta).unwrap();
        assert!(dec.labels.iter().all(|l| l.twist_character.iter().all(|&v| v == 0)));
    }
}

#[test]
fn conjugation_rules_need_units() {
    assert!(ConjugationRule::new(2, 4, 4).is_err());
    assert!(ConjugationRule::new(3, 3, 3).is_err());
    let r = ConjugationRule::new(-1, 5, 5).unwrap();
    assert_eq!((r.n, r.n_inv), (4, 4));
}

#[test]
fn nonabelian_groups_are_rejected() {
    let g = named("S3").unwrap();
    assert!(gauged_decomposition(&g, &Cochain::zero(&g, 2, 6)).is_err());
}

#[test]
fn campaigns_hold_on_every_shape() {
    let caps = Caps::default();
    for shape in SHAPES {
        let a = named(shape).unwrap();
        let runs = campaign(shape, &a, 10, 7, &caps).unwrap();
        assert_eq!(runs.len(), 10);
        for r in &runs {
            assert!(r.reindex.holds, "{shape} seed {} n {}", r.seed, r.n);
            assert!(r.slant_linear);
        }
        assert_eq!(runs, campaign(shape, &a, 10, 7, &caps).unwrap());
    }
}

fn z4_z8() -> &'static (FiniteGroup, CohomologyGroup) {
    static CELL: OnceLock<(FiniteGroup, CohomologyGroup)> = OnceLock::new();
    CELL.get_or_init(|| {
        let a = named("Z/4xZ/8").unwrap();
        let h = cohomology_group(&a, 2, 8, &Caps::default()).unwrap();
        (a, h)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn galois_transforms_compose(seed in any::<u64>(), i in 0usize..4, j in 0usize..4) {
        let units = [1i64, 2, 4, 7];
        let a = square(3);
        let h = cohomology_group(&a, 2, 3, &Caps::default()).unwrap();
        let beta = random_cocycle(&h, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let dec = gauged_decomposition(&a, &beta).unwrap();
        let (n1, n2) = (units[i], units[j]);
        let r1 = ConjugationRule::for_decomposition(n1, &dec).unwrap();
        let r2 = ConjugationRule::for_decomposition(n2, &dec).unwrap();
        let r12 = ConjugationRule::for_decomposition(n1 * n2, &dec).unwrap();
        let twice = galois_transform(&galois_transform(&dec, &r1), &r2);
        prop_assert_eq!(twice.labels, galois_transform(&dec, &r12).labels);
    }

    #[test]
    fn reindexing_holds_for_random_cocycles(seed in any::<u64>(), n in prop::sample::select(vec![1i64, 3, 7, 9, 11, 13])) {
        let (a, h) = z4_z8();
        let beta = random_cocycle(&h, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let rule = ConjugationRule::new(n, 8, 8).unwrap();
        prop_assert!(reindex_check(a, &beta, &rule).unwrap().holds);
    }
}
