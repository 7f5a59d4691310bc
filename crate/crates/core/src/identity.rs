//! Exhaustive identity checking over finite carriers.
//!
//! Every search walks assignments in lexicographic order (first variable
//! outermost), so the reported witness is always the lexicographically first
//! failing assignment.

use std::fmt::Write as _;

/// Dense index of an element in a finite carrier.
pub type Element = usize;

/// A failed law together with the assignment that breaks it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub axiom: &'static str,
    pub assignment: Vec<(&'static str, Element)>,
    /// Left- and right-hand side values for equational laws.
    pub sides: Option<(Element, Element)>,
}

impl Failure {
    pub fn new(axiom: &'static str, assignment: Vec<(&'static str, Element)>) -> Self {
        Self {
            axiom,
            assignment,
            sides: None,
        }
    }

    pub fn with_sides(mut self, lhs: Element, rhs: Element) -> Self {
        self.sides = Some((lhs, rhs));
        self
    }

    /// Value bound to `var` in the witness assignment.
    pub fn get(&self, var: &str) -> Option<Element> {
        self.assignment
            .iter()
            .find(|(name, _)| *name == var)
            .map(|&(_, e)| e)
    }

    /// Renders the witness with element labels, e.g. `x={1}, y={1}: {1,2} != {}`.
    pub fn render(&self, labels: &[String]) -> String {
        let mut out = String::new();
        for (i, (var, e)) in self.assignment.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{var}={}", labels[*e]);
        }
        if let Some((lhs, rhs)) = self.sides {
            let _ = write!(out, ": {} != {}", labels[lhs], labels[rhs]);
        }
        out
    }

    /// For an equational law named like `x⊕x = 0`, its left side with the
    /// witness substituted and evaluated: `{1}⊕{1}={1,2} ≠ {}`.
    pub fn instantiate(&self, labels: &[String]) -> Option<String> {
        let (lhs, rhs) = self.sides?;
        let name = self.axiom.rsplit(") ").next().unwrap_or(self.axiom);
        let (left, _) = name.split_once(" = ")?;
        let mut term = String::new();
        for c in left.chars() {
            let mut buf = [0; 4];
            match self.get(c.encode_utf8(&mut buf)) {
                Some(e) => term.push_str(&labels[e]),
                None => term.push(c),
            }
        }
        Some(format!("{term}={} ≠ {}", labels[lhs], labels[rhs]))
    }
}

/// Outcome of checking a list of named laws.
///
/// `passed()` is derived from the failure list, so a report passes exactly
/// when it records no failures.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    checked: Vec<&'static str>,
    failures: Vec<Failure>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn checked(&self) -> &[&'static str] {
        &self.checked
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn failure(&self, axiom: &str) -> Option<&Failure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }

    pub fn holds(&self, axiom: &str) -> bool {
        self.checked.contains(&axiom) && self.failure(axiom).is_none()
    }

    /// Records the outcome of one law.
    pub fn record(&mut self, axiom: &'static str, outcome: Option<Failure>) {
        self.checked.push(axiom);
        if let Some(f) = outcome {
            debug_assert_eq!(f.axiom, axiom);
            self.failures.push(f);
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.checked.extend(other.checked);
        self.failures.extend(other.failures);
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("all {} laws hold", self.checked.len())
        } else {
            let names: Vec<_> = self.failures.iter().map(|f| f.axiom).collect();
            format!("failed {}", names.join(", "))
        }
    }
}

pub fn first_failure1(
    n: usize,
    axiom: &'static str,
    sides: impl Fn(Element) -> (Element, Element),
) -> Option<Failure> {
    (0..n).find_map(|x| {
        let (l, r) = sides(x);
        (l != r).then(|| Failure::new(axiom, vec![("x", x)]).with_sides(l, r))
    })
}

pub fn first_failure2(
    n: usize,
    axiom: &'static str,
    sides: impl Fn(Element, Element) -> (Element, Element),
) -> Option<Failure> {
    for x in 0..n {
        for y in 0..n {
            let (l, r) = sides(x, y);
            if l != r {
                return Some(Failure::new(axiom, vec![("x", x), ("y", y)]).with_sides(l, r));
            }
        }
    }
    None
}

pub fn first_failure3(
    n: usize,
    axiom: &'static str,
    sides: impl Fn(Element, Element, Element) -> (Element, Element),
) -> Option<Failure> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (l, r) = sides(x, y, z);
                if l != r {
                    return Some(
                        Failure::new(axiom, vec![("x", x), ("y", y), ("z", z)]).with_sides(l, r),
                    );
                }
            }
        }
    }
    None
}

/// First pair for which `holds` is false; for laws that are not equations.
pub fn first_violation2(
    n: usize,
    axiom: &'static str,
    holds: impl Fn(Element, Element) -> bool,
) -> Option<Failure> {
    for x in 0..n {
        for y in 0..n {
            if !holds(x, y) {
                return Some(Failure::new(axiom, vec![("x", x), ("y", y)]));
            }
        }
    }
    None
}
