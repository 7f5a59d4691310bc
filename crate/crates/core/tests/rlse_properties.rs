use omlkit::corpus::{self, builtin_oml, OML_NAMES};
use omlkit::format::{load_structure, Structure};
use omlkit::lattice::direct_product;
use omlkit::rlse::{
    check_corollary1, check_r4_orthogonal_form, check_r5, check_rlse, check_theorem2,
    derived_lattice, is_boolean_ring, rlse_from_oml, Plus, Rlse, RlseTables,
};
use omlkit::FiniteOml;
use proptest::prelude::*;

fn small_oml() -> impl Strategy<Value = FiniteOml> {
    prop_oneof![
        (1u32..=3).prop_map(corpus::boolean),
        (1usize..=3).prop_map(corpus::mo),
        Just(direct_product(&corpus::boolean(1), &corpus::mo(2))),
    ]
}

fn plus() -> impl Strategy<Value = Plus> {
    prop_oneof![Just(Plus::SymmetricDifference), Just(Plus::Upper)]
}

/// Rewrites `k` entries of either table to arbitrary elements.
fn mutate(t: &RlseTables, edits: &[(bool, usize, usize, usize)]) -> RlseTables {
    let n = t.len();
    edits.iter().fold(t.clone(), |acc, &(times, x, y, v)| {
        let (x, y, v) = (x % n, y % n, v % n);
        if times {
            acc.with_times_entry(x, y, v).unwrap()
        } else {
            acc.with_plus_entry(x, y, v).unwrap()
        }
    })
}

#[test]
fn shipped_example_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/paper-example-2set.rlse");
    let s = load_structure(path.as_ref()).unwrap();
    assert_eq!(s, Structure::Rlse(corpus::paper_example_2set()));
    let Structure::Rlse(t) = s else { unreachable!() };
    let one = t.index("{1}").unwrap();
    assert_eq!(t.label(t.plus(one, one)), "{1,2}");
}

#[test]
fn example_is_boolean_lattice_but_not_ring() {
    let r = Rlse::new(corpus::paper_example_2set()).unwrap();
    assert!(derived_lattice(&r).unwrap().is_boolean());
    let v = is_boolean_ring(&r).unwrap();
    assert!(!v.is_boolean_ring);
    assert_eq!(v.witness().unwrap().render(r.labels()), "x={1}: {1,2} != {}");
}

#[test]
fn corpus_r5_rule() {
    for name in OML_NAMES {
        let o = builtin_oml(name).unwrap();
        let r1 = rlse_from_oml(&o, &Plus::SymmetricDifference).unwrap();
        let r2 = rlse_from_oml(&o, &Plus::Upper).unwrap();
        assert!(check_r5(&r1).passed(), "{name}");
        assert_eq!(check_r5(&r2).passed(), o.is_boolean(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn term_rlses_round_trip(o in small_oml(), k in plus()) {
        let r = rlse_from_oml(&o, &k).unwrap();
        prop_assert!(check_corollary1(&r).passed());
        let eq = check_r4_orthogonal_form(&r);
        prop_assert!(eq.r4_holds() && eq.agree());
        prop_assert_eq!(derived_lattice(&r).unwrap(), o.clone());
        let ring = is_boolean_ring(&r).unwrap();
        prop_assert_eq!(ring.is_boolean_ring, o.is_boolean());
    }

    #[test]
    fn theorem2_verdicts_agree_on_mutations(
        o in small_oml(),
        k in plus(),
        edits in prop::collection::vec((any::<bool>(), 0usize..64, 0usize..64, 0usize..64), 1..4),
    ) {
        let t = mutate(&rlse_from_oml(&o, &k).unwrap(), &edits);
        let report = check_theorem2(&t).unwrap();
        prop_assert_eq!(report.left(), check_rlse(&t).passed());
        if report.left() {
            prop_assert!(check_r4_orthogonal_form(&t).agree());
        }
        if let Ok(r) = Rlse::new(t) {
            prop_assert!(check_corollary1(&r).passed());
            is_boolean_ring(&r).unwrap();
        }
    }
}
