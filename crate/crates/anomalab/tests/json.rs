use anomalab::json::{ActionJson, CochainJson, CycloJson, GroupJson};
use anomalab_core::azumaya::examples::catalog_actions;
use anomalab_core::cohomology::cohomology_group;
use anomalab_core::group::catalog::named;
use anomalab_core::{Caps, CycloLevel, CycloNumber};
use proptest::prelude::*;

#[test]
fn groups_roundtrip() {
    for name in ["Z/4", "S3", "Q8", "Z/2xZ/2"] {
        let g = named(name).unwrap();
        let j = GroupJson::of(&g);
        assert_eq!(j, GroupJson::Name(name.into()));
        assert_eq!(j.resolve(1000).unwrap().table(), g.table());
    }
    let table: GroupJson = serde_json::from_str(r#"{"order": 2, "mult": [[0, 1], [1, 0]]}"#).unwrap();
    assert_eq!(table.resolve(10).unwrap().order(), 2);
    let perms: GroupJson = serde_json::from_str(r#"{"degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}"#).unwrap();
    assert_eq!(perms.resolve(10).unwrap().order(), 6);
    let bad: GroupJson = serde_json::from_str(r#"{"order": 2, "mult": [[0, 1], [0, 1]]}"#).unwrap();
    assert!(bad.resolve(10).is_err());
}

#[test]
fn cochains_roundtrip() {
    let g = named("S3").unwrap();
    let h = cohomology_group(&g, 3, 6, &Caps::default()).unwrap();
    let c = &h.mu_basis()[0];
    let j = CochainJson::of(c);
    let text = serde_json::to_string(&j).unwrap();
    let back: CochainJson = serde_json::from_str(&text).unwrap();
    assert_eq!(&back.to_cochain(1000).unwrap(), c);
}

#[test]
fn actions_roundtrip() {
    for (name, act) in catalog_actions().unwrap() {
        let j = ActionJson::of(&act);
        let back: ActionJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        let act2 = back.to_action(1000, 1000).unwrap();
        assert_eq!(act2.maps(), act.maps(), "{name}");
        assert_eq!(act2.lift(), act.lift(), "{name}");
    }
}

proptest! {
    #[test]
    fn cyclotomic_numbers_roundtrip(level in prop::sample::select(vec![1u64, 3, 4, 8, 12]), counts in prop::collection::vec(-9i64..10, 12), den in 1i64..7) {
        let lv = CycloLevel::get(level);
        let x = CycloNumber::from_small_power_sum(&lv, &counts[..level as usize], den);
        let j = CycloJson::of(&x);
        let back: CycloJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        prop_assert_eq!(back.to_number(1000).unwrap(), x);
    }
}
