use omlkit::corpus::{self, builtin_oml, product_generators};
use omlkit::rlse::check_rlse;
use omlkit::terms::{
    enumerate_canonical_terms, eval_term, filter_symmetric_difference_terms, rlse_from_term, t1,
    t2, t_hat, term_function,
};
use omlkit::{FiniteOml, Term};
use proptest::prelude::*;

fn omls(names: &[&str]) -> Vec<FiniteOml> {
    names.iter().map(|n| builtin_oml(n).unwrap()).collect()
}

fn survivors(names: &[&str]) -> Vec<Vec<u8>> {
    let os = omls(names);
    let corpus: Vec<(&str, &FiniteOml)> = names.iter().copied().zip(&os).collect();
    filter_symmetric_difference_terms(&corpus)
        .unwrap()
        .classes
        .iter()
        .map(|c| c.members.iter().map(|m| m.index_set).collect())
        .collect()
}

#[test]
fn small_corpus_already_stabilizes() {
    let small = survivors(&["boolean_2", "mo2"]);
    assert_eq!(small.len(), 2);
    assert_eq!(small, survivors(&["boolean_2", "mo2", "boolean_3"]));
    assert_eq!(small, survivors(&["boolean_2", "mo2", "boolean_3", "mo3", "product_2p4_mo2"]));
}

#[test]
fn survivors_install_as_rlse() {
    let names = ["boolean_2", "mo2", "boolean_3"];
    let os = omls(&names);
    let corpus: Vec<(&str, &FiniteOml)> = names.iter().copied().zip(&os).collect();
    let result = filter_symmetric_difference_terms(&corpus).unwrap();
    for class in &result.classes {
        for m in &class.members {
            for o in omls(&["mo2", "mo3", "boolean_4", "product_2p4_mo2"]) {
                let r = rlse_from_term(&o, &m.term).unwrap();
                assert!(check_rlse(&r).passed());
            }
        }
    }
}

#[test]
fn boolean_members_have_sixteen_functions() {
    for k in 1..=4 {
        let o = corpus::boolean(k);
        let mut tables: Vec<Vec<usize>> = enumerate_canonical_terms()
            .iter()
            .map(|c| term_function(&c.term, &o).into_table())
            .collect();
        tables.sort();
        tables.dedup();
        assert!(tables.len() <= 16, "boolean_{k}: {}", tables.len());
        let f = term_function(&t1(), &o);
        for x in o.elements() {
            for y in o.elements() {
                assert_eq!(f.get(x, y), x ^ y);
            }
        }
    }
}

#[test]
fn hat_equals_t2_everywhere() {
    for name in corpus::OML_NAMES {
        let o = builtin_oml(name).unwrap();
        assert_eq!(term_function(&t_hat(), &o), term_function(&t2(), &o), "{name}");
    }
}

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![Just(Term::X), Just(Term::Y), Just(Term::Zero), Just(Term::One)];
    leaf.prop_recursive(6, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::comp),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.meet(b)),
            (inner.clone(), inner).prop_map(|(a, b)| a.join(b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Every binary term agrees with the canonical term sharing its value at
    /// the generating pair of the free-algebra surrogate.
    #[test]
    fn random_terms_have_canonical_forms(t in arb_term()) {
        let p = corpus::product_2p4_mo2();
        let (gx, gy) = product_generators(&p);
        let v = eval_term(&t, &p, gx, gy);
        let canon: Vec<_> = enumerate_canonical_terms()
            .into_iter()
            .filter(|c| eval_term(&c.term, &p, gx, gy) == v)
            .collect();
        prop_assert_eq!(canon.len(), 1);
        for o in omls(&["boolean_2", "mo2", "mo3", "boolean_3"]) {
            prop_assert_eq!(term_function(&t, &o), term_function(&canon[0].term, &o));
        }
    }

    #[test]
    fn swapping_variables_transposes(t in arb_term()) {
        let o = corpus::mo(2);
        let (f, g) = (term_function(&t, &o), term_function(&t.swap_vars(), &o));
        for x in o.elements() {
            for y in o.elements() {
                prop_assert_eq!(f.get(x, y), g.get(y, x));
            }
        }
    }
}
