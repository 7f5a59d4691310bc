//! Families of numerical events (S-probabilities) and the axioms of an
//! algebra of S-probabilities.

use std::collections::BTreeMap;

use super::{check_full, Scalar, State};
use crate::error::{Error, Result};
use crate::identity::{AxiomReport, Element, Failure};
use crate::lattice::{FiniteOml, LatticeTables};
use crate::poset::FinitePoset;
use crate::rlse::Rlse;

/// A finite set of functions from a state list to the scalars, each labelled.
///
/// `events[i][s]` is the value of event `i` in state `s`. Events are pairwise
/// distinct as functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalEventSet<T> {
    labels: Vec<String>,
    states: usize,
    events: Vec<Vec<T>>,
}

impl<T: Scalar> NumericalEventSet<T> {
    pub fn new(labels: Vec<String>, events: Vec<Vec<T>>) -> Result<Self> {
        if labels.len() != events.len() {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                found: events.len(),
            });
        }
        let states = events.first().map_or(0, Vec::len);
        if let Some(bad) = events.iter().find(|e| e.len() != states) {
            return Err(Error::DimensionMismatch {
                expected: states,
                found: bad.len(),
            });
        }
        let mut seen = BTreeMap::new();
        for (i, e) in events.iter().enumerate() {
            if let Some(j) = seen.insert(e, i) {
                return Err(Error::Validation(format!(
                    "events `{}` and `{}` are the same function",
                    labels[j], labels[i]
                )));
            }
        }
        let mut names = BTreeMap::new();
        for l in &labels {
            if names.insert(l, ()).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self {
            labels,
            states,
            events,
        })
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: Element) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Result<Element> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    pub fn event(&self, i: Element) -> &[T] {
        &self.events[i]
    }

    pub fn events(&self) -> &[Vec<T>] {
        &self.events
    }

    /// Index of the member equal to `values`, if any.
    pub fn find(&self, values: &[T]) -> Option<Element> {
        self.events.iter().position(|e| e.as_slice() == values)
    }

    /// Pointwise order.
    pub fn leq(&self, i: Element, j: Element) -> bool {
        self.events[i].iter().zip(&self.events[j]).all(|(a, b)| a <= b)
    }

    /// `p ⊥ q` iff `p <= 1 - q` pointwise.
    pub fn orthogonal(&self, i: Element, j: Element) -> bool {
        self.events[i]
            .iter()
            .zip(&self.events[j])
            .all(|(a, b)| a.clone() + b <= T::one())
    }

    /// Copy without the named event.
    pub fn without(&self, label: &str) -> Result<Self> {
        let i = self.index(label)?;
        let mut labels = self.labels.clone();
        let mut events = self.events.clone();
        labels.remove(i);
        events.remove(i);
        Self::new(labels, events)
    }

    /// Meets and joins with respect to the pointwise order inside the set.
    pub fn lattice(&self) -> Result<EventLattice> {
        let n = self.len();
        let rel = (0..n * n).map(|k| self.leq(k / n, k % n)).collect();
        let poset = FinitePoset::from_relation(self.labels.clone(), rel).map_err(|_| {
            Error::NotLatticeOrdered {
                op: "bounds",
                left: String::new(),
                right: String::new(),
            }
        })?;
        let tables = LatticeTables::from_poset(&poset).map_err(|f| {
            let (x, y) = f.witness;
            Error::NotLatticeOrdered {
                op: if f.law == crate::lattice::OmlLaw::MeetExists {
                    "meet"
                } else {
                    "join"
                },
                left: self.labels[x].clone(),
                right: self.labels[y].clone(),
            }
        })?;
        Ok(EventLattice { tables })
    }
}

/// In-set lattice operations of a lattice-ordered event set.
#[derive(Debug, Clone)]
pub struct EventLattice {
    tables: LatticeTables,
}

impl EventLattice {
    pub fn meet(&self, i: Element, j: Element) -> Element {
        self.tables.meet(i, j)
    }

    pub fn join(&self, i: Element, j: Element) -> Element {
        self.tables.join(i, j)
    }
}

/// `q_x(m) = m(x)` for every element `x` and state `m` of a full set.
pub fn events_from_states<T: Scalar>(
    o: &FiniteOml,
    states: &[State<T>],
) -> Result<NumericalEventSet<T>> {
    if let Some((x, y)) = check_full(o, states)? {
        return Err(Error::NotFull(o.label(x).into(), o.label(y).into()));
    }
    let events = o
        .elements()
        .map(|x| states.iter().map(|m| m.get(x).clone()).collect())
        .collect();
    NumericalEventSet::new(o.labels().to_vec(), events)
}

fn add<T: Scalar>(p: &[T], q: &[T]) -> Vec<T> {
    p.iter().zip(q).map(|(a, b)| a.clone() + b).collect()
}

/// Checks (A1)–(A3) and the pairwise consequence `p ⊥ q ⇒ p+q = p∨q ∈ P`.
pub fn check_s_probability_algebra<T: Scalar>(ev: &NumericalEventSet<T>) -> AxiomReport {
    let n = ev.len();
    let k = ev.state_count();
    let members: BTreeMap<&[T], Element> = ev
        .events()
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_slice(), i))
        .collect();
    let find = |v: &[T]| members.get(v).copied();
    let mut rep = AxiomReport::new();

    rep.record(
        "values in [0,1]",
        (0..n)
            .find(|&i| ev.event(i).iter().any(|v| v.is_negative() || *v > T::one()))
            .map(|i| Failure::new("values in [0,1]", vec![("p", i)])),
    );
    rep.record(
        "(A1) 0 ∈ P",
        find(&vec![T::zero(); k])
            .is_none()
            .then(|| Failure::new("(A1) 0 ∈ P", vec![])),
    );
    rep.record(
        "(A1) 1 ∈ P",
        find(&vec![T::one(); k])
            .is_none()
            .then(|| Failure::new("(A1) 1 ∈ P", vec![])),
    );
    rep.record(
        "(A2)",
        (0..n)
            .find(|&i| {
                let c: Vec<T> = ev.event(i).iter().map(|v| T::one() - v).collect();
                find(&c).is_none()
            })
            .map(|i| Failure::new("(A2)", vec![("p", i)])),
    );

    let orth: Vec<bool> = (0..n * n).map(|i| ev.orthogonal(i / n, i % n)).collect();
    let o = |i: Element, j: Element| orth[i * n + j];
    let mut a3 = None;
    'a3: for p in 0..n {
        for q in (0..n).filter(|&q| o(p, q)) {
            let pq = add(ev.event(p), ev.event(q));
            for r in (0..n).filter(|&r| o(q, r) && o(r, p)) {
                if find(&add(&pq, ev.event(r))).is_none() {
                    a3 = Some(Failure::new("(A3)", vec![("p", p), ("q", q), ("r", r)]));
                    break 'a3;
                }
            }
        }
    }
    rep.record("(A3)", a3);

    let mut sum_is_join = None;
    'pairs: for p in 0..n {
        for q in (0..n).filter(|&q| o(p, q)) {
            let sum = find(&add(ev.event(p), ev.event(q)));
            let least_upper = sum.is_some_and(|s| {
                (0..n)
                    .filter(|&u| ev.leq(p, u) && ev.leq(q, u))
                    .all(|u| ev.leq(s, u))
            });
            if !least_upper {
                sum_is_join = Some(Failure::new("p ⊥ q ⇒ p+q = p∨q", vec![("p", p), ("q", q)]));
                break 'pairs;
            }
        }
    }
    rep.record("p ⊥ q ⇒ p+q = p∨q", sum_is_join);
    rep
}

/// `p + q - 2·meet`, pointwise.
pub fn hat_plus<T: Scalar>(p: &[T], q: &[T], meet: &[T]) -> Vec<T> {
    let two = T::one() + T::one();
    p.iter()
        .zip(q)
        .zip(meet)
        .map(|((a, b), m)| a.clone() + b - two.clone() * m)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Theorem1Verdict<T> {
    /// `p + q - 2(p∧q) <= 1` everywhere; `plus[i * n + j]` is the member
    /// `p_i ⊕̂ p_j`, which coincides with `(p∧q')∨(p'∧q)`.
    Boolean { plus: Vec<Element> },
    /// `p + q - 2(p∧q)` exceeds 1 at `state`.
    NotBoolean {
        p: Element,
        q: Element,
        state: usize,
        value: T,
    },
}

impl<T> Theorem1Verdict<T> {
    pub fn is_boolean(&self) -> bool {
        matches!(self, Theorem1Verdict::Boolean { .. })
    }
}

/// Decides Booleanness of a lattice-ordered event set by the pointwise test
/// `p + q - 2(p∧q) <= 1`, and in the Boolean case cross-checks `⊕̂` against
/// `(p∧q')∨(p'∧q)` computed with the in-set lattice operations.
pub fn boolean_test_theorem1<T: Scalar>(ev: &NumericalEventSet<T>) -> Result<Theorem1Verdict<T>> {
    let lattice = ev.lattice()?;
    let n = ev.len();
    for p in 0..n {
        for q in 0..n {
            let h = hat_plus(ev.event(p), ev.event(q), ev.event(lattice.meet(p, q)));
            if let Some(state) = h.iter().position(|v| *v > T::one()) {
                return Ok(Theorem1Verdict::NotBoolean {
                    p,
                    q,
                    state,
                    value: h[state].clone(),
                });
            }
        }
    }
    let comp: Vec<Element> = (0..n)
        .map(|i| {
            let c: Vec<T> = ev.event(i).iter().map(|v| T::one() - v).collect();
            ev.find(&c).ok_or_else(|| {
                Error::Validation(format!("complement of `{}` is missing", ev.label(i)))
            })
        })
        .collect::<Result<_>>()?;
    let mut plus = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let h = hat_plus(ev.event(p), ev.event(q), ev.event(lattice.meet(p, q)));
            let sym = lattice.join(lattice.meet(p, comp[q]), lattice.meet(comp[p], q));
            match ev.find(&h) {
                Some(s) if s == sym => plus.push(s),
                _ => {
                    return Err(Error::OracleMismatch(format!(
                        "p ⊕̂ q differs from (p∧q')∨(p'∧q) at p={}, q={}",
                        ev.label(p),
                        ev.label(q)
                    )))
                }
            }
        }
    }
    Ok(Theorem1Verdict::Boolean { plus })
}

/// Which hypothesis of the RLSE-to-events correspondence failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RaHypothesis {
    Bijection,
    /// `x <= y` and `f(x) <= f(y)` disagree.
    OrderIsomorphism(Element, Element),
    /// `x ⊥ y` but `f(x⊕y) != f(x) + f(y)`.
    Additivity(Element, Element),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremRaReport {
    pub hypothesis_failure: Option<RaHypothesis>,
    /// Axioms of the image; only evaluated when the hypotheses hold.
    pub algebra: Option<AxiomReport>,
    pub lattice_ordered: bool,
}

impl TheoremRaReport {
    pub fn verified(&self) -> bool {
        self.hypothesis_failure.is_none()
            && self.lattice_ordered
            && self.algebra.as_ref().is_some_and(AxiomReport::passed)
    }
}

/// Checks that `f` is an order isomorphism additive on orthogonal pairs, and
/// that its image is then a lattice-ordered algebra of S-probabilities.
pub fn check_theorem_ra<T: Scalar>(
    r: &Rlse,
    ev: &NumericalEventSet<T>,
    f: &[Element],
) -> TheoremRaReport {
    let n = r.len();
    let fail = |h| TheoremRaReport {
        hypothesis_failure: Some(h),
        algebra: None,
        lattice_ordered: false,
    };
    let mut hit = vec![false; ev.len()];
    let bijective = f.len() == n
        && ev.len() == n
        && f.iter().all(|&i| i < n && !std::mem::replace(&mut hit[i], true));
    if !bijective {
        return fail(RaHypothesis::Bijection);
    }
    for x in 0..n {
        for y in 0..n {
            if r.leq(x, y) != ev.leq(f[x], f[y]) {
                return fail(RaHypothesis::OrderIsomorphism(x, y));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if r.orthogonal(x, y) && ev.event(f[r.plus(x, y)]) != add(ev.event(f[x]), ev.event(f[y])) {
                return fail(RaHypothesis::Additivity(x, y));
            }
        }
    }
    TheoremRaReport {
        hypothesis_failure: None,
        algebra: Some(check_s_probability_algebra(ev)),
        lattice_ordered: ev.lattice().is_ok(),
    }
}
