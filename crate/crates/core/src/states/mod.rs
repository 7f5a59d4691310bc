//! States on finite OMLs, full state sets and algebras of numerical events.
//!
//! A state is a valuation `m` with `m(1) = 1`, values in `[0, 1]`, and
//! `m(x∨y) = m(x) + m(y)` whenever `x ⊥ y`. All arithmetic is exact; states
//! are searched with an exact simplex over the affine hull cut out by the
//! additivity equations.

mod events;
mod scalar;
pub mod simplex;

pub use events::{
    boolean_test_theorem1, check_s_probability_algebra, check_theorem_ra, events_from_states,
    hat_plus, EventLattice, NumericalEventSet, RaHypothesis, Theorem1Verdict, TheoremRaReport,
};
pub use scalar::Scalar;

use crate::error::{Error, Result};
use crate::identity::Element;
use crate::lattice::FiniteOml;
use simplex::Polytope;

/// Values of a valuation, indexed by lattice element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State<T> {
    values: Vec<T>,
}

impl<T: Scalar> State<T> {
    pub fn new(values: Vec<T>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, e: Element) -> &T {
        &self.values[e]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateViolation {
    OutOfRange(Element),
    TopNotOne,
    NotAdditive(Element, Element),
}

impl StateViolation {
    pub fn render(&self, labels: &[String]) -> String {
        match *self {
            StateViolation::OutOfRange(e) => format!("m({}) is outside [0,1]", labels[e]),
            StateViolation::TopNotOne => "m(1) != 1".to_string(),
            StateViolation::NotAdditive(x, y) => format!(
                "m({x} v {y}) != m({x}) + m({y}) although {x} ⊥ {y}",
                x = labels[x],
                y = labels[y]
            ),
        }
    }
}

/// Verifies range, normalization and additivity on orthogonal pairs, in that
/// order. Returns the first violation, if any.
pub fn check_state<T: Scalar>(o: &FiniteOml, m: &[T]) -> Result<Option<StateViolation>> {
    let n = o.len();
    if m.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.len(),
        });
    }
    if let Some(e) = (0..n).find(|&e| m[e].is_negative() || m[e] > T::one()) {
        return Ok(Some(StateViolation::OutOfRange(e)));
    }
    if !m[o.top()].is_one() {
        return Ok(Some(StateViolation::TopNotOne));
    }
    for x in 0..n {
        for y in 0..n {
            if o.orthogonal(x, y) && m[o.join(x, y)] != m[x].clone() + &m[y] {
                return Ok(Some(StateViolation::NotAdditive(x, y)));
            }
        }
    }
    Ok(None)
}

/// The state polytope of an OML, parametrized by the free coordinates of the
/// reduced additivity system.
#[derive(Debug, Clone)]
pub struct StateSpace<T> {
    n: usize,
    /// `m = offset + basis · z`
    offset: Vec<T>,
    basis: Vec<Vec<T>>,
    polytope: Option<Polytope<T>>,
}

impl<T: Scalar> StateSpace<T> {
    pub fn new(o: &FiniteOml) -> Self {
        let n = o.len();
        // rows [coefficients..., rhs]
        let mut equations: Vec<Vec<T>> = Vec::new();
        let mut normalization = vec![T::zero(); n + 1];
        normalization[o.top()] = T::one();
        normalization[n] = T::one();
        equations.push(normalization);
        for u in 0..n {
            for v in u..n {
                if o.orthogonal(u, v) {
                    let mut row = vec![T::zero(); n + 1];
                    row[u] += T::one();
                    row[v] += T::one();
                    row[o.join(u, v)] -= T::one();
                    equations.push(row);
                }
            }
        }
        let Some((pivots, reduced)) = row_reduce(equations, n) else {
            return Self {
                n,
                offset: vec![T::zero(); n],
                basis: vec![Vec::new(); n],
                polytope: None,
            };
        };
        let free: Vec<Element> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let k = free.len();
        let mut offset = vec![T::zero(); n];
        let mut basis = vec![vec![T::zero(); k]; n];
        for (j, &f) in free.iter().enumerate() {
            basis[f][j] = T::one();
        }
        for (row, &p) in reduced.iter().zip(&pivots) {
            offset[p] = row[n].clone();
            for (j, &f) in free.iter().enumerate() {
                basis[p][j] = -row[f].clone();
            }
        }
        // 0 <= m(e) <= 1 for every element, in terms of z >= 0
        let mut a = Vec::new();
        let mut b = Vec::new();
        for e in 0..n {
            if free.contains(&e) {
                let mut row = vec![T::zero(); k];
                row[free.iter().position(|&f| f == e).unwrap()] = T::one();
                a.push(row);
                b.push(T::one());
            } else {
                a.push(basis[e].iter().map(|v| -v.clone()).collect());
                b.push(offset[e].clone());
                a.push(basis[e].clone());
                b.push(T::one() - &offset[e]);
            }
        }
        let polytope = Polytope::new(&a, &b, k);
        Self {
            n,
            offset,
            basis,
            polytope,
        }
    }

    /// Whether the OML admits any state at all.
    pub fn is_empty(&self) -> bool {
        self.polytope.is_none()
    }

    /// Dimension of the affine hull of the state space.
    pub fn dimension(&self) -> usize {
        self.basis.first().map_or(0, Vec::len)
    }

    fn point(&self, z: &[T]) -> State<T> {
        let values = (0..self.n)
            .map(|e| {
                let mut v = self.offset[e].clone();
                for (c, zj) in self.basis[e].iter().zip(z) {
                    if !c.is_zero() && !zj.is_zero() {
                        v += c.clone() * zj;
                    }
                }
                v
            })
            .collect();
        State::new(values)
    }

    /// A vertex state maximizing `m(x) - m(y)`, with the optimal value.
    pub fn maximize_difference(&self, x: Element, y: Element) -> Option<(State<T>, T)> {
        let polytope = self.polytope.as_ref()?;
        let c: Vec<T> = self.basis[x]
            .iter()
            .zip(&self.basis[y])
            .map(|(a, b)| a.clone() - b)
            .collect();
        let opt = polytope.maximize(&c)?;
        let state = self.point(&opt.point);
        let value = state.get(x).clone() - state.get(y);
        Some((state, value))
    }
}

/// Gauss-Jordan elimination of `[A | b]` rows with `n` coefficient columns.
/// Returns pivot columns and the nonzero reduced rows, or `None` if the
/// system is inconsistent.
fn row_reduce<T: Scalar>(rows: Vec<Vec<T>>, n: usize) -> Option<(Vec<usize>, Vec<Vec<T>>)> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut reduced: Vec<Vec<T>> = Vec::new();
    for mut row in rows {
        for (p, prow) in pivots.iter().zip(&reduced) {
            if !row[*p].is_zero() {
                let f = row[*p].clone();
                for (r, v) in row.iter_mut().zip(prow) {
                    if !v.is_zero() {
                        *r -= f.clone() * v;
                    }
                }
            }
        }
        let Some(p) = (0..n).find(|&c| !row[c].is_zero()) else {
            if row[n].is_zero() {
                continue;
            }
            return None;
        };
        let inv = T::one() / &row[p];
        for v in row.iter_mut() {
            *v *= &inv;
        }
        for prow in reduced.iter_mut() {
            if !prow[p].is_zero() {
                let f = prow[p].clone();
                for (r, v) in prow.iter_mut().zip(&row) {
                    if !v.is_zero() {
                        *r -= f.clone() * v;
                    }
                }
            }
        }
        pivots.push(p);
        reduced.push(row);
    }
    Some((pivots, reduced))
}

/// Outcome of a separation query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Separation<T> {
    /// A state with `m(x) > m(y)`.
    Separated(State<T>),
    /// Every state has `m(x) <= m(y)`.
    Infeasible(Element, Element),
}

/// Searches for a state with `m(x) > m(y)` by maximizing `m(x) - m(y)`.
pub fn find_separating_state<T: Scalar>(
    o: &FiniteOml,
    x: Element,
    y: Element,
) -> Result<Separation<T>> {
    if o.leq(x, y) {
        return Err(Error::NotUncomparable(o.label(x).into(), o.label(y).into()));
    }
    Ok(separate(&StateSpace::new(o), x, y))
}

fn separate<T: Scalar>(space: &StateSpace<T>, x: Element, y: Element) -> Separation<T> {
    match space.maximize_difference(x, y) {
        Some((state, value)) if value.is_positive() => Separation::Separated(state),
        _ => Separation::Infeasible(x, y),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FullStateSet<T> {
    Full(Vec<State<T>>),
    /// `x ≰ y` but every state has `m(x) <= m(y)`.
    Unseparated(Element, Element),
}

impl<T> FullStateSet<T> {
    pub fn states(&self) -> Option<&[State<T>]> {
        match self {
            FullStateSet::Full(s) => Some(s),
            FullStateSet::Unseparated(..) => None,
        }
    }
}

/// Collects states separating every pair `x ≰ y`, in lexicographic pair order.
///
/// A pair already separated by a collected state is not solved again, so
/// every state in the result separates at least one pair none of its
/// predecessors did; the set is duplicate-free but not minimized.
pub fn find_full_state_set<T: Scalar>(o: &FiniteOml) -> FullStateSet<T> {
    let space = StateSpace::new(o);
    let mut states: Vec<State<T>> = Vec::new();
    for x in o.elements() {
        for y in o.elements() {
            if o.leq(x, y) || states.iter().any(|m| m.get(x) > m.get(y)) {
                continue;
            }
            match separate(&space, x, y) {
                Separation::Separated(m) => states.push(m),
                Separation::Infeasible(x, y) => return FullStateSet::Unseparated(x, y),
            }
        }
    }
    FullStateSet::Full(states)
}

/// Checks `x <= y  <=>  m(x) <= m(y) for all m` over all ordered pairs and
/// returns the first pair where the two sides differ.
pub fn check_full<T: Scalar>(
    o: &FiniteOml,
    states: &[State<T>],
) -> Result<Option<(Element, Element)>> {
    for (index, m) in states.iter().enumerate() {
        if let Some(v) = check_state(o, m.values())? {
            return Err(Error::InvalidState {
                index,
                reason: v.render(o.labels()),
            });
        }
    }
    for x in o.elements() {
        for y in o.elements() {
            let below_everywhere = states.iter().all(|m| m.get(x) <= m.get(y));
            if o.leq(x, y) != below_everywhere {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}
