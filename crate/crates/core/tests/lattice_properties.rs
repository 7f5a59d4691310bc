use omlkit::corpus::{self, builtin_oml, OML_NAMES};
use omlkit::format::{parse_structure, serialize_structure, validate, Structure};
use omlkit::lattice::{
    check_oml, direct_product, orthomodular_identity_failure, orthomodular_implication_failure,
    LatticeTables,
};
use omlkit::{FiniteOml, OmlLaw};
use proptest::prelude::*;

fn corpus() -> Vec<FiniteOml> {
    OML_NAMES.iter().map(|n| builtin_oml(n).unwrap()).collect()
}

#[test]
fn de_morgan_on_corpus() {
    for o in corpus() {
        for x in o.elements() {
            for y in o.elements() {
                let c = |e| o.comp(e);
                assert_eq!(c(o.join(x, y)), o.meet(c(x), c(y)));
                assert_eq!(c(o.meet(x, y)), o.join(c(x), c(y)));
            }
        }
    }
}

#[test]
fn orthomodular_forms_agree() {
    for o in corpus() {
        let t = LatticeTables::from_poset(o.poset()).unwrap();
        assert_eq!(orthomodular_identity_failure(o.len(), &t, o.complements()), None);
        assert_eq!(orthomodular_implication_failure(o.poset(), &t, o.complements()), None);
    }
    let (poset, comp) = corpus::benzene();
    let t = LatticeTables::from_poset(&poset).unwrap();
    assert!(orthomodular_identity_failure(poset.len(), &t, &comp).is_some());
    assert!(orthomodular_implication_failure(&poset, &t, &comp).is_some());
    let report = check_oml(&poset, &comp).unwrap();
    assert_eq!(report.failure().unwrap().law, OmlLaw::Orthomodular);
}

#[test]
fn poset_survives_serialization() {
    for o in corpus() {
        let s = Structure::from_oml(&o);
        let back = validate(&parse_structure(&serialize_structure(&s)).unwrap()).unwrap();
        let Structure::Oml { poset, comp, .. } = back else {
            panic!("kind changed")
        };
        assert_eq!(&poset, o.poset());
        assert_eq!(FiniteOml::new(poset, comp).unwrap(), o);
    }
}

fn small_oml() -> impl Strategy<Value = FiniteOml> {
    prop_oneof![
        (1u32..=3).prop_map(corpus::boolean),
        (1usize..=3).prop_map(corpus::mo),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn products_are_orthomodular(a in small_oml(), b in small_oml()) {
        let p = direct_product(&a, &b);
        prop_assert_eq!(p.len(), a.len() * b.len());
        let report = check_oml(p.poset(), p.complements()).unwrap();
        prop_assert!(report.is_valid());
        prop_assert_eq!(p.is_boolean(), a.is_boolean() && b.is_boolean());
    }
}
