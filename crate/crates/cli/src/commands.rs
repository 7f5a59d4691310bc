use std::path::Path;

use omlkit::format::{read_structure, resolve_table, serialize_structure, Structure};
use omlkit::lattice::{check_oml as check_lattice, OmlReport};
use omlkit::rlse::{
    check_corollary1, check_r4_orthogonal_form, check_rlse as check_tables, check_theorem2,
    derived_lattice, is_boolean_ring, rlse_from_oml, Plus, Rlse, RlseTables,
};
use omlkit::states::{
    boolean_test_theorem1, check_full, check_state, events_from_states, find_full_state_set,
    FullStateSet, NumericalEventSet, Theorem1Verdict,
};
use omlkit::suite;
use omlkit::terms::{enumerate_canonical_terms, filter_symmetric_difference_terms};
use omlkit::{Error, FiniteOml, FinitePoset, Rational, Result};

use crate::report::{Check, Report, Witness};
use crate::resolve;

fn wrong_kind(arg: &str, want: &str) -> Error {
    Error::Validation(format!("`{arg}` is not an {want} structure"))
}

fn lattice_parts(arg: &str) -> Result<(FinitePoset, Vec<usize>, Vec<omlkit::State>)> {
    match resolve::structure(arg)? {
        Structure::Oml {
            poset,
            comp,
            states,
        } => Ok((poset, comp, states)),
        _ => Err(wrong_kind(arg, "oml")),
    }
}

fn rlse_tables(arg: &str) -> Result<RlseTables> {
    match resolve::structure(arg)? {
        Structure::Rlse(t) => Ok(t),
        _ => Err(wrong_kind(arg, "rlse")),
    }
}

/// Pushes the lattice laws; returns the OML when they all hold.
fn push_oml(poset: FinitePoset, comp: Vec<usize>, report: &mut Report) -> Result<Option<FiniteOml>> {
    let labels = poset.labels().to_vec();
    match check_lattice(&poset, &comp)? {
        OmlReport::Valid(o) => {
            report.push(Check::pass("orthomodular lattice"));
            Ok(Some(o))
        }
        OmlReport::Invalid(f) => {
            let (x, y) = f.witness;
            let w = Witness::new(&[("x", &labels[x]), ("y", &labels[y])]);
            report.push(Check::fail("orthomodular lattice", Some(w)).detail(format!("{} fails", f.law)));
            Ok(None)
        }
    }
}

pub fn check_oml(arg: &str, report: &mut Report) -> Result<()> {
    let (poset, comp, _) = lattice_parts(arg)?;
    push_oml(poset, comp, report)?;
    Ok(())
}

pub fn check_rlse(arg: &str, report: &mut Report) -> Result<()> {
    let t = rlse_tables(arg)?;
    let labels = t.labels().to_vec();
    report.push_axioms(&check_tables(&t), &labels);
    if let Ok(r) = Rlse::new(t.clone()) {
        report.push_axioms(&check_corollary1(&r), &labels);
    }
    let eq = check_r4_orthogonal_form(&t);
    let name = "(R4) iff (R4'')";
    let verdict = |ok: bool| if ok { "holds" } else { "fails" };
    let detail = format!("(R4) {}, (R4'') {}", verdict(eq.r4_holds()), verdict(eq.r4_orthogonal_holds()));
    report.push(if eq.agree() {
        Check::pass(name).detail(detail)
    } else {
        Check::fail(name, None).detail(detail)
    });
    let name = "lattice correspondence";
    report.push(match check_theorem2(&t) {
        Ok(rep) => {
            let side = if rep.right() {
                "L(R) is an OML with a compatible ⊕".to_owned()
            } else {
                rep.lattice.summary()
            };
            Check::pass(name).detail(side)
        }
        Err(Error::OracleMismatch(m)) => Check::fail(name, None).detail(m),
        Err(e) => return Err(e),
    });
    Ok(())
}

pub fn derive(arg: &str, report: &mut Report) -> Result<()> {
    let t = rlse_tables(arg)?;
    let labels = t.labels().to_vec();
    let rep = check_tables(&t);
    report.push_axioms(&rep, &labels);
    if rep.passed() {
        let o = derived_lattice(&Rlse::new(t)?)?;
        report.push(Check::pass("derived lattice is orthomodular"));
        report.structure = Some(serialize_structure(&Structure::from_oml(&o)));
    }
    Ok(())
}

fn custom_plus(o: &FiniteOml, path: &str) -> Result<Vec<usize>> {
    let file = read_structure(Path::new(path))?;
    if file.elements != o.labels() {
        return Err(Error::Validation(format!(
            "ELEMENTS of {path} differ from the lattice"
        )));
    }
    resolve_table(o.labels(), &file.oplus, "OPLUS")
}

pub fn construct(arg: &str, plus: &str, report: &mut Report) -> Result<()> {
    let (poset, comp, _) = lattice_parts(arg)?;
    let Some(o) = push_oml(poset, comp, report)? else {
        return Ok(());
    };
    let plus = match plus {
        "t1" => Plus::SymmetricDifference,
        "t2" => Plus::Upper,
        other => match other.strip_prefix("custom=") {
            Some(path) => Plus::Custom(custom_plus(&o, path)?),
            None => {
                return Err(Error::Validation(format!(
                    "--plus must be t1, t2 or custom=FILE, got `{other}`"
                )))
            }
        },
    };
    match rlse_from_oml(&o, &plus) {
        Ok(r) => {
            report.push(Check::pass("RLSE axioms"));
            report.structure = Some(serialize_structure(&Structure::Rlse(r.into_tables())));
        }
        Err(Error::CustomPlusInvalid { law, witness }) => {
            report.push(Check::fail(law, None).detail(witness));
        }
        Err(Error::NotAnRlse(rep)) => report.push_axioms(&rep, o.labels()),
        Err(e) => return Err(e),
    }
    Ok(())
}

pub fn terms_enumerate(report: &mut Report) -> Result<()> {
    for c in enumerate_canonical_terms() {
        report.output.push(format!("{:<14}{}", c.index_label(), c.term));
    }
    Ok(())
}

pub fn terms_filter(names: &[String], report: &mut Report) -> Result<()> {
    let mut omls = Vec::with_capacity(names.len());
    for n in names {
        let (poset, comp, _) = lattice_parts(n)?;
        omls.push(FiniteOml::new(poset, comp)?);
    }
    let corpus: Vec<(&str, &FiniteOml)> = names.iter().map(String::as_str).zip(&omls).collect();
    let result = filter_symmetric_difference_terms(&corpus)?;
    report.output.push(format!("{} surviving classes", result.classes.len()));
    for (i, class) in result.classes.iter().enumerate() {
        let members: Vec<String> = class.members.iter().map(|m| m.index_label()).collect();
        report.output.push(format!(
            "class {}: {} (representative {})",
            i + 1,
            members.join(" "),
            class.members[0].term
        ));
    }
    report.output.push(format!("{} eliminated", result.eliminated.len()));
    if report.witnesses() {
        for e in &result.eliminated {
            report.output.push(format!(
                "  {} by {} on {}: {}",
                e.candidate.index_label(),
                e.condition.label(),
                e.refuted_on,
                e.detail
            ));
        }
    }
    Ok(())
}

fn full_states(o: &FiniteOml, report: &mut Report) -> Option<Vec<omlkit::State>> {
    match find_full_state_set::<Rational>(o) {
        FullStateSet::Full(states) => {
            report.push(Check::pass("full set of states").detail(format!("{} states", states.len())));
            Some(states)
        }
        FullStateSet::Unseparated(x, y) => {
            let w = Witness::new(&[("x", o.label(x)), ("y", o.label(y))]);
            report.push(
                Check::fail("full set of states", Some(w))
                    .detail(format!("no state has m({}) > m({})", o.label(x), o.label(y))),
            );
            None
        }
    }
}

pub fn states_find(arg: &str, report: &mut Report) -> Result<()> {
    let (poset, comp, _) = lattice_parts(arg)?;
    let Some(o) = push_oml(poset, comp, report)? else {
        return Ok(());
    };
    if let Some(states) = full_states(&o, report) {
        report.structure = Some(serialize_structure(&Structure::Oml {
            poset: o.poset().clone(),
            comp: o.complements().to_vec(),
            states,
        }));
    }
    Ok(())
}

pub fn states_check_full(arg: &str, report: &mut Report) -> Result<()> {
    let (poset, comp, states) = lattice_parts(arg)?;
    let Some(o) = push_oml(poset, comp, report)? else {
        return Ok(());
    };
    for (i, m) in states.iter().enumerate() {
        let name = format!("state {}", i + 1);
        report.push(match check_state(&o, m.values())? {
            None => Check::pass(name),
            Some(v) => Check::fail(name, None).detail(v.render(o.labels())),
        });
    }
    if !report.passed {
        return Ok(());
    }
    report.push(match check_full(&o, &states)? {
        None => Check::pass("full").detail(format!("{} states", states.len())),
        Some((x, y)) => {
            let w = Witness::new(&[("x", o.label(x)), ("y", o.label(y))]);
            Check::fail("full", Some(w)).detail(format!(
                "{} is not below {} but no state separates them",
                o.label(x),
                o.label(y)
            ))
        }
    });
    Ok(())
}

fn theorem1(ev: &NumericalEventSet<Rational>, report: &mut Report) -> Result<()> {
    let name = "p + q - 2(p∧q) <= 1";
    match boolean_test_theorem1(ev) {
        Ok(Theorem1Verdict::Boolean { .. }) => {
            report.push(Check::pass(name).detail("Boolean; ⊕̂ equals (p∧q')∨(p'∧q)"))
        }
        Ok(Theorem1Verdict::NotBoolean { p, q, state, value }) => {
            let w = Witness::new(&[("p", ev.label(p)), ("q", ev.label(q))]);
            report.push(Check::fail(name, Some(w)).detail(format!(
                "p={}, q={}: value {value} in state {}",
                ev.label(p),
                ev.label(q),
                state + 1
            )))
        }
        Err(Error::NotLatticeOrdered { op, left, right }) => report.push(
            Check::fail("lattice-ordered", None).detail(format!("no {op} of {left} and {right}")),
        ),
        Err(Error::OracleMismatch(m)) => report.push(Check::fail(name, None).detail(m)),
        Err(e) => return Err(e),
    }
    Ok(())
}

pub fn boolean_test(arg: &str, report: &mut Report) -> Result<()> {
    match resolve::structure(arg)? {
        Structure::Rlse(t) => {
            let labels = t.labels().to_vec();
            let rep = check_tables(&t);
            if !rep.passed() {
                report.push_axioms(&rep, &labels);
                return Ok(());
            }
            report.push(Check::pass("RLSE axioms"));
            match is_boolean_ring(&Rlse::new(t)?) {
                Ok(v) if v.is_boolean_ring => report.push(Check::pass("Boolean ring")),
                Ok(v) => {
                    let f = v.witness().expect("failed verdict has a witness");
                    let detail = f
                        .instantiate(&labels)
                        .unwrap_or_else(|| format!("{} fails", f.axiom));
                    report.push(
                        Check::fail("Boolean ring", Some(Witness::from_failure(f, &labels)))
                            .detail(format!("{}: {detail}", f.axiom)),
                    );
                }
                Err(Error::OracleMismatch(m)) => {
                    report.push(Check::fail("Boolean ring", None).detail(m))
                }
                Err(e) => return Err(e),
            }
        }
        Structure::Events(ev) => theorem1(&ev, report)?,
        Structure::Oml { poset, comp, states } => {
            let Some(o) = push_oml(poset, comp, report)? else {
                return Ok(());
            };
            let states = if states.is_empty() {
                match full_states(&o, report) {
                    Some(s) => s,
                    None => return Ok(()),
                }
            } else {
                states
            };
            match events_from_states(&o, &states) {
                Ok(ev) => theorem1(&ev, report)?,
                Err(Error::NotFull(x, y)) => {
                    let w = Witness::new(&[("x", &x), ("y", &y)]);
                    report.push(Check::fail("full set of states", Some(w)));
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}

pub fn verify_all(report: &mut Report) -> Result<()> {
    for o in suite::run_all() {
        let name = format!("criterion {} {}", o.id, o.title);
        report.push(if o.passed {
            Check::pass(name).detail(o.detail)
        } else {
            Check::fail(name, None).detail(o.detail)
        });
    }
    Ok(())
}
