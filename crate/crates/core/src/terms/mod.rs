//! Binary lattice terms: evaluation, the ninety-six canonical terms of the
//! free two-generated OML, and the classification of terms that can serve as
//! an RLSE addition.

mod syntax;

pub use syntax::Term;

use crate::error::{Error, Result};
use crate::identity::Element;
use crate::lattice::FiniteOml;
use crate::rlse::{rlse_from_oml, Plus, Rlse};

/// Value of `t(x, y)` in `o`.
pub fn eval_term(t: &Term, o: &FiniteOml, x: Element, y: Element) -> Element {
    match t {
        Term::X => x,
        Term::Y => y,
        Term::Zero => o.bottom(),
        Term::One => o.top(),
        Term::Comp(a) => o.comp(eval_term(a, o, x, y)),
        Term::Meet(a, b) => o.meet(eval_term(a, o, x, y), eval_term(b, o, x, y)),
        Term::Join(a, b) => o.join(eval_term(a, o, x, y), eval_term(b, o, x, y)),
    }
}

/// A term tabulated on one lattice: `table[x * n + y] = t(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermFunction {
    n: usize,
    table: Vec<Element>,
}

impl TermFunction {
    #[inline]
    pub fn get(&self, x: Element, y: Element) -> Element {
        self.table[x * self.n + y]
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn into_table(self) -> Vec<Element> {
        self.table
    }
}

/// Tabulates `t` over all pairs of `o`.
pub fn term_function(t: &Term, o: &FiniteOml) -> TermFunction {
    let n = o.len();
    TermFunction {
        n,
        table: tabulate(t, o),
    }
}

fn tabulate(t: &Term, o: &FiniteOml) -> Vec<Element> {
    let n = o.len();
    match t {
        Term::X => (0..n * n).map(|i| i / n).collect(),
        Term::Y => (0..n * n).map(|i| i % n).collect(),
        Term::Zero => vec![o.bottom(); n * n],
        Term::One => vec![o.top(); n * n],
        Term::Comp(a) => tabulate(a, o).into_iter().map(|e| o.comp(e)).collect(),
        Term::Meet(a, b) => {
            let (a, b) = (tabulate(a, o), tabulate(b, o));
            a.iter().zip(&b).map(|(&u, &v)| o.meet(u, v)).collect()
        }
        Term::Join(a, b) => {
            let (a, b) = (tabulate(a, o), tabulate(b, o));
            a.iter().zip(&b).map(|(&u, &v)| o.join(u, v)).collect()
        }
    }
}

fn x() -> Term {
    Term::X
}

fn y() -> Term {
    Term::Y
}

/// `(x'∧y)∨(x∧y')`
pub fn t1() -> Term {
    x().comp().meet(y()).join(x().meet(y().comp()))
}

/// `(x∧(x'∨y'))∨(y∧(x'∨y'))`
pub fn t_hat() -> Term {
    let nand = || x().comp().join(y().comp());
    x().meet(nand()).join(y().meet(nand()))
}

/// `(x∨y)∧(x'∨y')`
pub fn t2() -> Term {
    x().join(y()).meet(x().comp().join(y().comp()))
}

/// The eight basis terms `b1..b8`; every canonical term is a join of some.
pub fn basis_terms() -> [Term; 8] {
    let (xc, yc) = (|| x().comp(), || y().comp());
    [
        x().meet(y()),
        x().meet(yc()),
        xc().meet(y()),
        xc().meet(yc()),
        Term::meet_all([x(), xc().join(y()), xc().join(yc())]),
        Term::meet_all([xc(), x().join(y()), x().join(yc())]),
        Term::meet_all([y(), x().join(yc()), xc().join(yc())]),
        Term::meet_all([yc(), x().join(y()), xc().join(y())]),
    ]
}

/// A join `⋁_{i∈I} b_i`; bit `i-1` of `index_set` marks `b_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalTerm {
    pub index_set: u8,
    pub term: Term,
}

impl CanonicalTerm {
    /// The join of the basis terms with the given 1-based indices.
    pub fn from_indices(indices: &[usize]) -> Self {
        let index_set = indices.iter().fold(0u8, |m, &i| {
            assert!((1..=8).contains(&i), "basis index {i} out of range");
            m | 1 << (i - 1)
        });
        Self::from_mask(index_set)
    }

    fn from_mask(index_set: u8) -> Self {
        let basis = basis_terms();
        let term = Term::join_all(
            basis
                .into_iter()
                .enumerate()
                .filter(|(i, _)| index_set >> i & 1 == 1)
                .map(|(_, t)| t),
        );
        Self { index_set, term }
    }

    /// The 1-based indices in `I`.
    pub fn indices(&self) -> Vec<usize> {
        (1..=8).filter(|i| self.index_set >> (i - 1) & 1 == 1).collect()
    }

    /// `I` rendered as `{2,3,5}`.
    pub fn index_label(&self) -> String {
        let parts: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// All `⋁_{i∈I} b_i` with `|I ∩ {5..8}| ∈ {0, 1, 4}`, ordered by the bitmask
/// of `I`. There are `16 × 6 = 96` of them.
pub fn enumerate_canonical_terms() -> Vec<CanonicalTerm> {
    (0..=u8::MAX)
        .filter(|m| matches!((m >> 4).count_ones(), 0 | 1 | 4))
        .map(CanonicalTerm::from_mask)
        .collect()
}

/// Condition a term must meet to serve as an RLSE addition on every OML.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// (i) `t(x,y) = t(y,x)`
    Commutative,
    /// (ii) `t(x,1) = x'`
    UnitComplements,
    /// (iii) `t(x,y) = x∨y` whenever `x <= y'`
    OrthogonalJoin,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::Commutative => "(i) t(x,y) = t(y,x)",
            Condition::UnitComplements => "(ii) t(x,1) = x'",
            Condition::OrthogonalJoin => "(iii) t(x,y) = x v y for x <= y'",
        }
    }
}

/// First violated condition of `f` on `o`, with its witness pair.
pub fn first_violated_condition(
    f: &TermFunction,
    o: &FiniteOml,
) -> Option<(Condition, (Element, Element))> {
    let n = o.len();
    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    if let Some(w) = pairs().find(|&(x, y)| f.get(x, y) != f.get(y, x)) {
        return Some((Condition::Commutative, w));
    }
    if let Some(x) = (0..n).find(|&x| f.get(x, o.top()) != o.comp(x)) {
        return Some((Condition::UnitComplements, (x, o.top())));
    }
    pairs()
        .find(|&(x, y)| o.orthogonal(x, y) && f.get(x, y) != o.join(x, y))
        .map(|w| (Condition::OrthogonalJoin, w))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub candidate: CanonicalTerm,
    pub condition: Condition,
    /// Name of the corpus member that refutes the candidate.
    pub refuted_on: String,
    pub witness: (Element, Element),
    /// Witness rendered with labels, e.g. `x=a, y=b: t(x,y)=a, t(y,x)=b`.
    pub detail: String,
}

/// Surviving terms that agree on every corpus member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermClass {
    pub members: Vec<CanonicalTerm>,
    /// One table per corpus member, in corpus order.
    pub tables: Vec<TermFunction>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterResult {
    pub classes: Vec<TermClass>,
    pub eliminated: Vec<Elimination>,
}

impl FilterResult {
    pub fn elimination_of(&self, indices: &[usize]) -> Option<&Elimination> {
        let target = CanonicalTerm::from_indices(indices).index_set;
        self.eliminated
            .iter()
            .find(|e| e.candidate.index_set == target)
    }
}

/// Keeps the canonical terms satisfying (i)–(iii) on every corpus member and
/// groups the survivors by their tables.
pub fn filter_symmetric_difference_terms(corpus: &[(&str, &FiniteOml)]) -> Result<FilterResult> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut classes: Vec<TermClass> = Vec::new();
    let mut eliminated = Vec::new();
    'candidates: for candidate in enumerate_canonical_terms() {
        let mut tables = Vec::with_capacity(corpus.len());
        for (name, o) in corpus {
            let f = term_function(&candidate.term, o);
            if let Some((condition, (x, y))) = first_violated_condition(&f, o) {
                let l = |e: Element| o.label(e);
                let detail = match condition {
                    Condition::Commutative => format!(
                        "x={}, y={}: t(x,y)={}, t(y,x)={}",
                        l(x),
                        l(y),
                        l(f.get(x, y)),
                        l(f.get(y, x))
                    ),
                    Condition::UnitComplements => format!(
                        "x={}: t(x,1)={}, x'={}",
                        l(x),
                        l(f.get(x, y)),
                        l(o.comp(x))
                    ),
                    Condition::OrthogonalJoin => format!(
                        "x={}, y={}: t(x,y)={}, x v y={}",
                        l(x),
                        l(y),
                        l(f.get(x, y)),
                        l(o.join(x, y))
                    ),
                };
                eliminated.push(Elimination {
                    candidate,
                    condition,
                    refuted_on: name.to_string(),
                    witness: (x, y),
                    detail,
                });
                continue 'candidates;
            }
            tables.push(f);
        }
        match classes.iter_mut().find(|c| c.tables == tables) {
            Some(class) => class.members.push(candidate),
            None => classes.push(TermClass {
                members: vec![candidate],
                tables,
            }),
        }
    }
    Ok(FilterResult {
        classes,
        eliminated,
    })
}

/// Installs a term as `⊕` on `o`.
pub fn rlse_from_term(o: &FiniteOml, t: &Term) -> Result<Rlse> {
    rlse_from_oml(o, &Plus::Custom(term_function(t, o).into_table()))
}

/// Pointwise comparison of `t1`, `t̂` and `t2` on one OML.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    /// First pair with `t1 ≰ t̂`.
    pub t1_not_below_hat: Option<(Element, Element)>,
    /// First pair with `t̂ ≰ t2`.
    pub hat_not_below_t2: Option<(Element, Element)>,
    /// First pair with `t̂ ≠ t2`.
    pub hat_differs_from_t2: Option<(Element, Element)>,
    /// First pair with `t1 ≠ t2`.
    pub t1_differs_from_t2: Option<(Element, Element)>,
    /// First triple breaking distributivity.
    pub distributivity_failure: Option<(Element, Element, Element)>,
}

impl ChainReport {
    pub fn chain_holds(&self) -> bool {
        self.t1_not_below_hat.is_none() && self.hat_not_below_t2.is_none()
    }

    pub fn hat_equals_t2(&self) -> bool {
        self.hat_differs_from_t2.is_none()
    }

    pub fn t1_equals_t2(&self) -> bool {
        self.t1_differs_from_t2.is_none()
    }

    pub fn is_boolean(&self) -> bool {
        self.distributivity_failure.is_none()
    }

    /// `t1 = t2` exactly when the lattice is Boolean.
    pub fn biconditional_holds(&self) -> bool {
        self.t1_equals_t2() == self.is_boolean()
    }

    pub fn all_hold(&self) -> bool {
        self.chain_holds() && self.hat_equals_t2() && self.biconditional_holds()
    }
}

pub fn chain_check(o: &FiniteOml) -> ChainReport {
    let n = o.len();
    let (f1, fh, f2) = (
        term_function(&t1(), o),
        term_function(&t_hat(), o),
        term_function(&t2(), o),
    );
    let first = |bad: &dyn Fn(Element, Element) -> bool| {
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| bad(x, y))
    };
    ChainReport {
        t1_not_below_hat: first(&|x, y| !o.leq(f1.get(x, y), fh.get(x, y))),
        hat_not_below_t2: first(&|x, y| !o.leq(fh.get(x, y), f2.get(x, y))),
        hat_differs_from_t2: first(&|x, y| fh.get(x, y) != f2.get(x, y)),
        t1_differs_from_t2: first(&|x, y| f1.get(x, y) != f2.get(x, y)),
        distributivity_failure: o.distributivity_failure(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn mo2_values_of_t1_t2() {
        let mo2 = corpus::mo(2);
        let (a, b) = (mo2.index("a").unwrap(), mo2.index("b").unwrap());
        assert_eq!(mo2.label(eval_term(&t1(), &mo2, a, b)), "0");
        assert_eq!(mo2.label(eval_term(&t2(), &mo2, a, b)), "1");
        for e in mo2.elements() {
            assert_eq!(eval_term(&t_hat(), &mo2, e, e), mo2.bottom());
        }
    }

    #[test]
    fn tabulation_matches_pointwise_evaluation() {
        let o = corpus::mo(3);
        for c in enumerate_canonical_terms().iter().step_by(7) {
            let f = term_function(&c.term, &o);
            for x in o.elements() {
                for y in o.elements() {
                    assert_eq!(f.get(x, y), eval_term(&c.term, &o, x, y));
                }
            }
        }
    }

    #[test]
    fn basis_table_columns() {
        for name in corpus::OML_NAMES {
            let o = corpus::builtin_oml(name).unwrap();
            let b = basis_terms();
            let top = o.top();
            for x in o.elements() {
                let at_one: Vec<_> = b.iter().map(|t| eval_term(t, &o, x, top)).collect();
                let zero = o.bottom();
                assert_eq!(at_one, [x, zero, o.comp(x), zero, zero, zero, zero, zero], "{name}");
                for y in o.elements().filter(|&y| o.orthogonal(x, y)) {
                    let v: Vec<_> = b.iter().map(|t| eval_term(t, &o, x, y)).collect();
                    let expected = [zero, x, y, o.meet(o.comp(x), o.comp(y)), zero, zero, zero, zero];
                    assert_eq!(v, expected, "{name} at ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn canonical_terms_census() {
        let all = enumerate_canonical_terms();
        assert_eq!(all.len(), 96);
        assert_eq!(all[0].term, Term::Zero);
        let c23 = CanonicalTerm::from_indices(&[2, 3]);
        assert!(all.contains(&c23));
        assert_eq!(c23.term.to_string(), "x ^ y' v x' ^ y");
        assert_eq!(c23.index_label(), "{2,3}");
        assert!(!all.iter().any(|c| c.index_set == CanonicalTerm::from_indices(&[5, 6]).index_set));
    }

    #[test]
    fn upper_join_of_i_is_t2_on_mo2() {
        let o = corpus::mo(2);
        let c = CanonicalTerm::from_indices(&[2, 3, 5, 6, 7, 8]);
        assert_eq!(term_function(&c.term, &o), term_function(&t2(), &o));
    }

    #[test]
    fn filter_on_boolean_and_mo2() {
        let (b2, mo2) = (corpus::boolean(2), corpus::mo(2));
        let res = filter_symmetric_difference_terms(&[("boolean_2", &b2), ("mo2", &mo2)]).unwrap();
        assert_eq!(res.classes.len(), 2);
        assert_eq!(res.classes[0].tables[1], term_function(&t1(), &mo2));
        assert_eq!(res.classes[1].tables[1], term_function(&t2(), &mo2));
        let e = res.elimination_of(&[2, 3, 5]).unwrap();
        assert_eq!(e.condition, Condition::Commutative);
        assert_eq!(e.refuted_on, "mo2");
    }

    #[test]
    fn filter_on_boolean_alone_collapses() {
        let b2 = corpus::boolean(2);
        let res = filter_symmetric_difference_terms(&[("boolean_2", &b2)]).unwrap();
        assert_eq!(res.classes.len(), 1);
        assert_eq!(res.classes[0].tables[0], term_function(&t1(), &b2));
        assert!(res.classes[0].members.len() > 1);
    }

    #[test]
    fn empty_corpus() {
        assert_eq!(
            filter_symmetric_difference_terms(&[]).unwrap_err(),
            Error::EmptyCorpus
        );
    }

    #[test]
    fn chain_on_mo2_and_boolean_3() {
        let mo2 = corpus::mo(2);
        let r = chain_check(&mo2);
        assert!(r.chain_holds() && r.hat_equals_t2());
        let (x, y) = r.t1_differs_from_t2.unwrap();
        assert_eq!((mo2.label(x), mo2.label(y)), ("a", "b"));
        assert!(!r.is_boolean() && r.biconditional_holds());
        let r = chain_check(&corpus::boolean(3));
        assert!(r.t1_equals_t2() && r.is_boolean() && r.all_hold());
    }

    #[test]
    fn surviving_terms_induce_rlses() {
        let o = corpus::mo(3);
        for t in [t1(), t2()] {
            assert!(rlse_from_term(&o, &t).is_ok());
        }
        assert!(rlse_from_term(&o, &CanonicalTerm::from_indices(&[2, 3, 5]).term).is_err());
    }
}
