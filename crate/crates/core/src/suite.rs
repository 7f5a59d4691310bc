//! The acceptance suite over the builtin corpus.
//!
//! Each criterion is an exhaustive, exact check returning an [`Outcome`] with
//! a one-line verdict and the first discrepancy found, if any.

use std::fmt;

use crate::corpus::{self, builtin_oml, product_generators, OML_NAMES};
use crate::error::Result;
use crate::lattice::FiniteOml;
use crate::rlse::{
    check_corollary1, check_r4_orthogonal_form, check_r5, check_rlse, check_theorem2,
    derived_lattice, is_boolean_ring, rlse_from_oml, Plus, Rlse, RlseTables,
};
use crate::states::{
    boolean_test_theorem1, check_full, check_s_probability_algebra, check_state,
    events_from_states, find_full_state_set, NumericalEventSet, Theorem1Verdict,
};
use crate::terms::{
    chain_check, enumerate_canonical_terms, eval_term, filter_symmetric_difference_terms, t1, t2,
    term_function, Condition,
};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    /// Summary on success, first discrepancy on failure.
    pub detail: String,
}

impl Outcome {
    fn new(id: &'static str, title: &'static str, check: Result<String, String>) -> Self {
        let (passed, detail) = match check {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Self {
            id,
            title,
            passed,
            detail,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {} {}: {}", self.id, self.title, self.detail)
    }
}

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn corpus_omls() -> Vec<(&'static str, FiniteOml)> {
    OML_NAMES
        .iter()
        .map(|&n| (n, builtin_oml(n).expect("builtin")))
        .collect()
}

const PLUSES: [(&str, Plus); 2] = [("⊕1", Plus::SymmetricDifference), ("⊕2", Plus::Upper)];

/// `rlse_from_oml` for every corpus OML and both term additions, plus the
/// four-element example.
fn corpus_rlses() -> std::result::Result<Vec<(String, Rlse)>, String> {
    let mut out = Vec::new();
    for (name, o) in corpus_omls() {
        for (pname, plus) in &PLUSES {
            let r = rlse_from_oml(&o, plus).map_err(|e| format!("{name} with {pname}: {e}"))?;
            out.push((format!("{name}/{pname}"), r));
        }
    }
    let ex = Rlse::new(corpus::paper_example_2set())
        .map_err(|e| format!("{}: {e}", corpus::PAPER_EXAMPLE))?;
    out.push((corpus::PAPER_EXAMPLE.to_owned(), ex));
    Ok(out)
}

fn full_events(o: &FiniteOml, name: &str) -> std::result::Result<NumericalEventSet<Rational>, String> {
    let found = find_full_state_set::<Rational>(o);
    let states = found.states().ok_or_else(|| format!("{name}: no full state set"))?;
    events_from_states(o, states).map_err(|e| format!("{name}: {e}"))
}

pub fn criterion_1() -> Outcome {
    Outcome::new("1", "term census", (|| -> Check {
        let terms = enumerate_canonical_terms();
        ensure!(terms.len() == 96, "{} canonical terms", terms.len());
        let p = corpus::product_2p4_mo2();
        let (x, y) = product_generators(&p);
        let mut values = Vec::with_capacity(96);
        for c in &terms {
            let tab = term_function(&c.term, &p).get(x, y);
            let direct = eval_term(&c.term, &p, x, y);
            ensure!(tab == direct, "tabulation and evaluation differ on {}", c.index_label());
            values.push(tab);
        }
        values.sort_unstable();
        values.dedup();
        ensure!(values.len() == 96, "only {} distinct values on 2^4 x MO2", values.len());
        Ok("96 terms, 96 distinct values at the generating pair".into())
    })())
}

pub fn criterion_2() -> Outcome {
    Outcome::new("2", "classification", (|| -> Check {
        let names = ["boolean_2", "mo2", "boolean_3", "product_2p4_mo2"];
        let omls: Vec<FiniteOml> = names.iter().map(|n| builtin_oml(n).unwrap()).collect();
        let corpus: Vec<(&str, &FiniteOml)> = names.iter().copied().zip(&omls).collect();
        let result = filter_symmetric_difference_terms(&corpus).map_err(|e| e.to_string())?;
        ensure!(result.classes.len() == 2, "{} classes", result.classes.len());
        let tables = |t: &crate::Term| -> Vec<_> { omls.iter().map(|o| term_function(t, o)).collect() };
        let (f1, f2) = (tables(&t1()), tables(&t2()));
        let got: Vec<_> = result.classes.iter().map(|c| &c.tables).collect();
        ensure!(
            (got[0] == &f1 && got[1] == &f2) || (got[0] == &f2 && got[1] == &f1),
            "surviving classes are not the t1 and t2 tables"
        );
        for last in 5..=8 {
            let set = [2, 3, last];
            let e = result
                .elimination_of(&set)
                .ok_or_else(|| format!("{{2,3,{last}}} survived"))?;
            ensure!(
                e.condition == Condition::Commutative && e.refuted_on == "mo2",
                "{{2,3,{last}}} eliminated by {} on {}",
                e.condition.label(),
                e.refuted_on
            );
        }
        Ok(format!(
            "2 classes (t1, t2), {} candidates eliminated, {{2,3,5..8}} by symmetry on mo2",
            result.eliminated.len()
        ))
    })())
}

/// Every single-entry mutation of both tables.
fn mutations(t: &RlseTables) -> Vec<RlseTables> {
    let n = t.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for v in (0..n).filter(|&v| v != t.plus(x, y)) {
                out.push(t.with_plus_entry(x, y, v).expect("in range"));
            }
            for v in (0..n).filter(|&v| v != t.times(x, y)) {
                out.push(t.with_times_entry(x, y, v).expect("in range"));
            }
        }
    }
    out
}

pub fn criterion_3() -> Outcome {
    Outcome::new("3", "lattice correspondence round trips", (|| -> Check {
        for (name, o) in corpus_omls() {
            for (pname, plus) in &PLUSES {
                let r = rlse_from_oml(&o, plus).map_err(|e| format!("{name}/{pname}: {e}"))?;
                let rep = check_rlse(&r);
                ensure!(rep.passed(), "{name}/{pname}: {}", rep.summary());
                let back = derived_lattice(&r).map_err(|e| format!("{name}/{pname}: {e}"))?;
                ensure!(back == o, "{name}/{pname}: derived lattice differs");
            }
        }
        let rlses = corpus_rlses()?;
        for (name, r) in &rlses {
            let rep = check_theorem2(r).map_err(|e| format!("{name}: {e}"))?;
            ensure!(rep.left() && rep.right(), "{name}: not an RLSE");
        }
        let (mut total, mut corrupted) = (0, 0);
        for name in ["mo2/⊕1", "mo2/⊕2", "boolean_2/⊕1", corpus::PAPER_EXAMPLE] {
            let (_, r) = rlses.iter().find(|(n, _)| n == name).expect("corpus RLSE");
            for m in mutations(r) {
                let rep = check_theorem2(&m).map_err(|e| format!("mutation of {name}: {e}"))?;
                total += 1;
                corrupted += usize::from(!rep.left());
            }
        }
        ensure!(corrupted >= 10, "only {corrupted} corrupted mutations");
        Ok(format!(
            "{} OMLs x 2 additions round trip; verdicts agree on {} corpus RLSEs and {total} mutations ({corrupted} corrupted)",
            OML_NAMES.len(),
            rlses.len()
        ))
    })())
}

pub fn criterion_4() -> Outcome {
    Outcome::new("4", "Boolean-ring characterization", (|| -> Check {
        let rlses = corpus_rlses()?;
        for (name, r) in &rlses {
            is_boolean_ring(r).map_err(|e| format!("{name}: {e}"))?;
        }
        let ex = corpus::paper_example_2set();
        ensure!(check_rlse(&ex).passed(), "example is not an RLSE");
        let ex = Rlse::new(ex).map_err(|e| e.to_string())?;
        let v = is_boolean_ring(&ex).map_err(|e| e.to_string())?;
        ensure!(!v.is_boolean_ring, "example is a Boolean ring");
        let w = v.witness().ok_or("no witness")?;
        let one = ex.index("{1}").unwrap();
        let (onetwo, empty) = (ex.index("{1,2}").unwrap(), ex.index("{}").unwrap());
        ensure!(
            w.axiom == "x⊕x = 0" && w.get("x") == Some(one) && w.sides == Some((onetwo, empty)),
            "witness {} {}",
            w.axiom,
            w.render(ex.labels())
        );
        let l = derived_lattice(&ex).map_err(|e| e.to_string())?;
        ensure!(l.is_boolean(), "derived lattice of the example is not Boolean");
        Ok(format!(
            "procedures agree on {} RLSEs; example: {} {}, derived lattice Boolean",
            rlses.len(),
            w.axiom,
            w.render(ex.labels())
        ))
    })())
}

pub fn criterion_5() -> Outcome {
    Outcome::new("5", "consequences (a)-(e) and (R4'')", (|| -> Check {
        let rlses = corpus_rlses()?;
        for (name, r) in &rlses {
            let rep = check_corollary1(r);
            ensure!(rep.passed(), "{name}: {}", rep.summary());
            let eq = check_r4_orthogonal_form(r);
            ensure!(eq.r4_holds() && eq.r4_orthogonal_holds(), "{name}: (R4) {eq:?}");
        }
        Ok(format!("(a)-(e), (R4) and (R4'') hold on {} RLSEs", rlses.len()))
    })())
}

pub fn criterion_6() -> Outcome {
    Outcome::new("6", "(R5) uniqueness", (|| -> Check {
        for (name, o) in corpus_omls() {
            let r1 = rlse_from_oml(&o, &Plus::SymmetricDifference).map_err(|e| e.to_string())?;
            ensure!(check_r5(&r1).passed(), "{name}/⊕1 fails (R5)");
            let r2 = rlse_from_oml(&o, &Plus::Upper).map_err(|e| e.to_string())?;
            let rep = check_r5(&r2);
            ensure!(
                rep.passed() == o.is_boolean(),
                "{name}/⊕2: (R5) {} but Boolean {}",
                rep.passed(),
                o.is_boolean()
            );
            if name == "mo2" {
                let f = rep.failure("(R5)").ok_or("mo2/⊕2 passes (R5)")?;
                let l = |s: &str| o.index(s).unwrap();
                ensure!(
                    f.get("x") == Some(l("a"))
                        && f.get("y") == Some(l("b"))
                        && f.sides == Some((l("1"), l("0"))),
                    "mo2/⊕2 witness {}",
                    f.render(o.labels())
                );
            }
        }
        Ok("⊕1 passes everywhere; ⊕2 passes exactly on Boolean members; mo2/⊕2: x=a, y=b: 1 != 0".into())
    })())
}

pub fn criterion_7() -> Outcome {
    Outcome::new("7", "states pipeline", (|| -> Check {
        let mut summary = Vec::new();
        for name in ["boolean_2", "boolean_3", "mo2", "product_2p4_mo2"] {
            let o = builtin_oml(name).unwrap();
            let found = find_full_state_set::<Rational>(&o);
            let states = found.states().ok_or_else(|| format!("{name}: {found:?}"))?;
            for m in states {
                let v = check_state(&o, m.values()).map_err(|e| e.to_string())?;
                ensure!(v.is_none(), "{name}: invalid state {v:?}");
            }
            let unseparated = check_full(&o, states).map_err(|e| e.to_string())?;
            ensure!(unseparated.is_none(), "{name}: not full at {unseparated:?}");
            let ev = events_from_states(&o, states).map_err(|e| e.to_string())?;
            let rep = check_s_probability_algebra(&ev);
            ensure!(rep.passed(), "{name}: {}", rep.summary());
            summary.push(format!("{name}: {} states", states.len()));
        }
        Ok(summary.join(", "))
    })())
}

pub fn criterion_8() -> Outcome {
    Outcome::new("8", "pointwise Boolean test", (|| -> Check {
        for (name, o) in corpus_omls() {
            let ev = full_events(&o, name)?;
            let verdict = boolean_test_theorem1(&ev).map_err(|e| format!("{name}: {e}"))?;
            ensure!(
                verdict.is_boolean() == o.is_boolean(),
                "{name}: pointwise test says {} but distributivity says {}",
                verdict.is_boolean(),
                o.is_boolean()
            );
            match verdict {
                Theorem1Verdict::Boolean { plus } => {
                    ensure!(
                        plus == term_function(&t1(), &o).into_table(),
                        "{name}: ⊕̂ differs from t1"
                    );
                }
                Theorem1Verdict::NotBoolean { p, q, state, value } if name == "mo2" => {
                    let two = Rational::from_integer(2.into());
                    ensure!(
                        (o.label(p), o.label(q)) == ("a", "b") && value == two,
                        "mo2 witness p={}, q={}, value {value}",
                        o.label(p),
                        o.label(q)
                    );
                    let a = ev.event(p)[state].clone() + &ev.event(q)[state];
                    ensure!(a == two, "mo2 witness state {state} has q_a+q_b = {a}");
                }
                Theorem1Verdict::NotBoolean { .. } => {}
            }
        }
        Ok("verdict equals distributivity on every corpus OML; ⊕̂ = t1 on Boolean members; mo2: q_a+q_b-2(q_a∧q_b) = 2".into())
    })())
}

pub fn criterion_9() -> Outcome {
    Outcome::new("9", "chain t1 <= t̂ <= t2", (|| -> Check {
        for (name, o) in corpus_omls() {
            let c = chain_check(&o);
            ensure!(c.chain_holds(), "{name}: chain fails {c:?}");
            ensure!(c.hat_equals_t2(), "{name}: t̂ != t2 at {:?}", c.hat_differs_from_t2);
            ensure!(c.biconditional_holds(), "{name}: t1 = t2 is {} but Boolean is {}", c.t1_equals_t2(), c.is_boolean());
        }
        Ok("holds on every corpus OML; t1 = t2 exactly on Boolean members".into())
    })())
}

/// The three concrete values: `{1}⊕{1} = {1,2}`, and `t1(a,b) = 0`,
/// `t2(a,b) = 1` in MO2.
pub fn concrete_values() -> Outcome {
    Outcome::new("P", "concrete values", (|| -> Check {
        let ex = corpus::paper_example_2set();
        let one = ex.index("{1}").unwrap();
        let s = ex.label(ex.plus(one, one));
        ensure!(s == "{1,2}", "{{1}}⊕{{1}} = {s}");
        let o = corpus::mo(2);
        let (a, b) = (o.index("a").unwrap(), o.index("b").unwrap());
        let (v1, v2) = (o.label(eval_term(&t1(), &o, a, b)), o.label(eval_term(&t2(), &o, a, b)));
        ensure!(v1 == "0" && v2 == "1", "t1(a,b) = {v1}, t2(a,b) = {v2}");
        Ok("{1}⊕{1} = {1,2}; t1(a,b) = 0; t2(a,b) = 1".into())
    })())
}

/// Criteria 1–9 followed by the concrete values.
pub fn run_all() -> Vec<Outcome> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        concrete_values(),
    ]
}
