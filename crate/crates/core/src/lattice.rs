//! Finite ortholattices and orthomodular lattices (OMLs).

use std::fmt;

use crate::error::{Error, Result};
use crate::identity::Element;
use crate::poset::FinitePoset;

/// Law checked by [`check_oml`], in checking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OmlLaw {
    MeetExists,
    JoinExists,
    Involution,
    Antitone,
    Complementation,
    Orthomodular,
}

impl OmlLaw {
    pub fn name(self) -> &'static str {
        match self {
            OmlLaw::MeetExists => "meet exists",
            OmlLaw::JoinExists => "join exists",
            OmlLaw::Involution => "complement is an involution",
            OmlLaw::Antitone => "complement is antitone",
            OmlLaw::Complementation => "complementation",
            OmlLaw::Orthomodular => "orthomodular law",
        }
    }
}

impl fmt::Display for OmlLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First failing law and a witness pair `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OmlFailure {
    pub law: OmlLaw,
    pub witness: (Element, Element),
}

impl OmlFailure {
    pub fn render(&self, labels: &[String]) -> String {
        let (x, y) = self.witness;
        format!("{} fails at x={}, y={}", self.law, labels[x], labels[y])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OmlReport {
    Valid(FiniteOml),
    Invalid(OmlFailure),
}

impl OmlReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, OmlReport::Valid(_))
    }

    pub fn into_oml(self) -> Option<FiniteOml> {
        match self {
            OmlReport::Valid(o) => Some(o),
            OmlReport::Invalid(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&OmlFailure> {
        match self {
            OmlReport::Valid(_) => None,
            OmlReport::Invalid(f) => Some(f),
        }
    }
}

/// Meet and join tables of a finite lattice, computed from its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeTables {
    n: usize,
    meet: Vec<Element>,
    join: Vec<Element>,
}

impl LatticeTables {
    /// Computes infima and suprema for every pair, or returns the first pair
    /// lacking one.
    pub fn from_poset(poset: &FinitePoset) -> std::result::Result<Self, OmlFailure> {
        let n = poset.len();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                meet[x * n + y] = greatest(poset, |z| poset.leq(z, x) && poset.leq(z, y), false)
                    .ok_or(OmlFailure {
                        law: OmlLaw::MeetExists,
                        witness: (x, y),
                    })?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                join[x * n + y] = greatest(poset, |z| poset.leq(x, z) && poset.leq(y, z), true)
                    .ok_or(OmlFailure {
                        law: OmlLaw::JoinExists,
                        witness: (x, y),
                    })?;
            }
        }
        Ok(Self { n, meet, join })
    }

    #[inline]
    pub fn meet(&self, x: Element, y: Element) -> Element {
        self.meet[x * self.n + y]
    }

    #[inline]
    pub fn join(&self, x: Element, y: Element) -> Element {
        self.join[x * self.n + y]
    }
}

/// The greatest element of `{z | member(z)}` (or least when `dual`), if any.
fn greatest(poset: &FinitePoset, member: impl Fn(Element) -> bool, dual: bool) -> Option<Element> {
    let n = poset.len();
    let above = |a: Element, b: Element| if dual { poset.leq(a, b) } else { poset.leq(b, a) };
    let set: Vec<Element> = (0..n).filter(|&z| member(z)).collect();
    let candidate = *set
        .iter()
        .max_by_key(|&&z| set.iter().filter(|&&w| above(z, w)).count())?;
    set.iter().all(|&w| above(candidate, w)).then_some(candidate)
}

/// First pair violating `((x∧y)∨x')∧x = x∧y`.
pub fn orthomodular_identity_failure(
    n: usize,
    tables: &LatticeTables,
    comp: &[Element],
) -> Option<(Element, Element)> {
    for x in 0..n {
        for y in 0..n {
            let xy = tables.meet(x, y);
            if tables.meet(tables.join(xy, comp[x]), x) != xy {
                return Some((x, y));
            }
        }
    }
    None
}

/// First pair violating `x <= y  =>  y = x ∨ (x'∧y)`.
pub fn orthomodular_implication_failure(
    poset: &FinitePoset,
    tables: &LatticeTables,
    comp: &[Element],
) -> Option<(Element, Element)> {
    let n = poset.len();
    for x in 0..n {
        for y in 0..n {
            if poset.leq(x, y) && tables.join(x, tables.meet(comp[x], y)) != y {
                return Some((x, y));
            }
        }
    }
    None
}

/// Validates `(poset, comp)` as an orthomodular lattice.
///
/// Laws are checked in the order of [`OmlLaw`]; the first failing law is
/// reported with its lexicographically first witness pair.
pub fn check_oml(poset: &FinitePoset, comp: &[Element]) -> Result<OmlReport> {
    let n = poset.len();
    if comp.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: comp.len(),
        });
    }
    if let Some(&bad) = comp.iter().find(|&&c| c >= n) {
        return Err(Error::MalformedTable(format!("complement entry {bad} out of range")));
    }
    let tables = match LatticeTables::from_poset(poset) {
        Ok(t) => t,
        Err(f) => return Ok(OmlReport::Invalid(f)),
    };
    let fail = |law, witness| Ok(OmlReport::Invalid(OmlFailure { law, witness }));

    if let Some(x) = (0..n).find(|&x| comp[comp[x]] != x) {
        return fail(OmlLaw::Involution, (x, comp[x]));
    }
    for x in 0..n {
        for y in 0..n {
            if poset.leq(x, y) && !poset.leq(comp[y], comp[x]) {
                return fail(OmlLaw::Antitone, (x, y));
            }
        }
    }
    if let Some(x) = (0..n)
        .find(|&x| tables.meet(x, comp[x]) != poset.bottom() || tables.join(x, comp[x]) != poset.top())
    {
        return fail(OmlLaw::Complementation, (x, comp[x]));
    }
    if let Some(w) = orthomodular_identity_failure(n, &tables, comp) {
        return fail(OmlLaw::Orthomodular, w);
    }
    Ok(OmlReport::Valid(FiniteOml {
        poset: poset.clone(),
        meet: tables.meet,
        join: tables.join,
        comp: comp.to_vec(),
    }))
}

/// A validated finite orthomodular lattice with O(1) table operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOml {
    poset: FinitePoset,
    meet: Vec<Element>,
    join: Vec<Element>,
    comp: Vec<Element>,
}

impl FiniteOml {
    /// Like [`check_oml`], but turns a failed law into [`Error::NotOml`].
    pub fn new(poset: FinitePoset, comp: Vec<Element>) -> Result<Self> {
        match check_oml(&poset, &comp)? {
            OmlReport::Valid(o) => Ok(o),
            OmlReport::Invalid(f) => Err(Error::NotOml(f.render(poset.labels()))),
        }
    }

    /// Builds an OML from labels, order pairs and complement label pairs.
    pub fn from_labels(labels: &[&str], pairs: &[(&str, &str)], comp: &[(&str, &str)]) -> Result<Self> {
        let poset = FinitePoset::build(labels, pairs)?;
        let mut map = vec![usize::MAX; poset.len()];
        for (a, b) in comp {
            let (a, b) = (poset.index(a)?, poset.index(b)?);
            map[a] = b;
            map[b] = a;
        }
        if let Some(e) = map.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Validation(format!(
                "no complement given for `{}`",
                poset.label(e)
            )));
        }
        Self::new(poset, map)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn label(&self, e: Element) -> &str {
        self.poset.label(e)
    }

    pub fn index(&self, label: &str) -> Result<Element> {
        self.poset.index(label)
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.len()
    }

    pub fn bottom(&self) -> Element {
        self.poset.bottom()
    }

    pub fn top(&self) -> Element {
        self.poset.top()
    }

    #[inline]
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.poset.leq(x, y)
    }

    #[inline]
    pub fn meet(&self, x: Element, y: Element) -> Element {
        self.meet[x * self.len() + y]
    }

    #[inline]
    pub fn join(&self, x: Element, y: Element) -> Element {
        self.join[x * self.len() + y]
    }

    #[inline]
    pub fn comp(&self, x: Element) -> Element {
        self.comp[x]
    }

    pub fn complements(&self) -> &[Element] {
        &self.comp
    }

    /// `x ⊥ y` iff `x <= y'`.
    #[inline]
    pub fn orthogonal(&self, x: Element, y: Element) -> bool {
        self.leq(x, self.comp[y])
    }

    /// Lattice meet by label.
    pub fn meet_of(&self, x: &str, y: &str) -> Result<&str> {
        Ok(self.label(self.meet(self.index(x)?, self.index(y)?)))
    }

    /// Lattice join by label.
    pub fn join_of(&self, x: &str, y: &str) -> Result<&str> {
        Ok(self.label(self.join(self.index(x)?, self.index(y)?)))
    }

    /// First triple violating `x∧(y∨z) = (x∧y)∨(x∧z)`, by brute force.
    pub fn distributivity_failure(&self) -> Option<(Element, Element, Element)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Whether the lattice is a Boolean algebra (an OML is Boolean iff it is
    /// distributive).
    pub fn is_boolean(&self) -> bool {
        self.distributivity_failure().is_none()
    }
}

/// Componentwise product; labels are `(a,b)` and index `i * |B| + j`.
pub fn direct_product(a: &FiniteOml, b: &FiniteOml) -> FiniteOml {
    let (na, nb) = (a.len(), b.len());
    let n = na * nb;
    let split = |e: Element| (e / nb, e % nb);
    let pair = |x: Element, y: Element| x * nb + y;

    let labels: Vec<String> = (0..n)
        .map(|e| {
            let (x, y) = split(e);
            format!("({},{})", a.label(x), b.label(y))
        })
        .collect();
    let mut leq = vec![false; n * n];
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for e in 0..n {
        let (x1, y1) = split(e);
        for f in 0..n {
            let (x2, y2) = split(f);
            leq[e * n + f] = a.leq(x1, x2) && b.leq(y1, y2);
            meet[e * n + f] = pair(a.meet(x1, x2), b.meet(y1, y2));
            join[e * n + f] = pair(a.join(x1, x2), b.join(y1, y2));
        }
    }
    let comp = (0..n)
        .map(|e| {
            let (x, y) = split(e);
            pair(a.comp(x), b.comp(y))
        })
        .collect();
    let poset = FinitePoset::from_relation(labels, leq)
        .expect("product of bounded posets is a bounded poset");
    FiniteOml {
        poset,
        meet,
        join,
        comp,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn mo2_meets_and_joins() {
        let mo2 = corpus::mo(2);
        assert_eq!(mo2.meet_of("a", "b").unwrap(), "0");
        assert_eq!(mo2.join_of("a", "b").unwrap(), "1");
        for x in mo2.elements() {
            assert_eq!(mo2.meet(x, mo2.top()), x);
        }
        assert!(matches!(mo2.meet_of("a", "z"), Err(Error::UnknownLabel(_))));
        assert!(!mo2.is_boolean());
    }

    #[test]
    fn boolean_2_is_valid() {
        let b = corpus::boolean(2);
        assert!(check_oml(b.poset(), b.complements()).unwrap().is_valid());
        assert!(b.is_boolean());
    }

    #[test]
    fn benzene_fails_orthomodularity() {
        let (poset, comp) = corpus::benzene();
        let report = check_oml(&poset, &comp).unwrap();
        let f = report.failure().expect("O6 is not orthomodular");
        assert_eq!(f.law, OmlLaw::Orthomodular);
        let (x, y) = f.witness;
        // exhaustive oracle: recompute the identity on the witness by hand
        let tables = LatticeTables::from_poset(&poset).unwrap();
        let xy = tables.meet(x, y);
        assert_ne!(tables.meet(tables.join(xy, comp[x]), x), xy);
    }

    #[test]
    fn bad_complements_are_reported() {
        let b = corpus::boolean(2);
        // identity map: an involution, but not antitone
        let id: Vec<Element> = b.elements().collect();
        let f = *check_oml(b.poset(), &id).unwrap().failure().unwrap();
        assert_eq!(f.law, OmlLaw::Antitone);

        // swap the atoms' complements: {1}' = {1}
        let mut comp = b.complements().to_vec();
        comp.swap(1, 2);
        let f = *check_oml(b.poset(), &comp).unwrap().failure().unwrap();
        assert_eq!(f.law, OmlLaw::Complementation);

        let mut comp = b.complements().to_vec();
        comp[1] = 0;
        let f = *check_oml(b.poset(), &comp).unwrap().failure().unwrap();
        assert_eq!(f.law, OmlLaw::Involution);

        assert!(check_oml(b.poset(), &[0, 1]).is_err());
    }

    #[test]
    fn non_lattice_is_reported() {
        // two incomparable elements with two incomparable upper bounds below 1
        let p = FinitePoset::build(
            &["0", "a", "b", "c", "d", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "1"),
                ("d", "1"),
            ],
        )
        .unwrap();
        let f = *check_oml(&p, &[5, 3, 4, 1, 2, 0]).unwrap().failure().unwrap();
        assert_eq!(f.law, OmlLaw::MeetExists);
        assert_eq!(f.witness, (3, 4));
    }

    #[test]
    fn product_of_chains_is_boolean_square() {
        let two = corpus::boolean(1);
        let p = direct_product(&two, &two);
        assert_eq!(p.len(), 4);
        assert!(check_oml(p.poset(), p.complements()).unwrap().is_valid());
        assert!(p.is_boolean());
        assert_eq!(p.label(0), "({},{})");
    }

    #[test]
    fn product_tables_match_recomputation() {
        let p = direct_product(&corpus::boolean(1), &corpus::mo(2));
        let checked = check_oml(p.poset(), p.complements()).unwrap().into_oml().unwrap();
        assert_eq!(checked, p);
    }
}
