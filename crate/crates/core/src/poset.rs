//! Finite bounded posets stored as dense boolean order matrices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::identity::Element;

/// A finite bounded poset.
///
/// Elements are indexed `0..n` in label order. The order is stored as a full
/// `n * n` matrix that is reflexive, antisymmetric and transitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    index: HashMap<String, Element>,
    leq: Vec<bool>,
    bottom: Element,
    top: Element,
}

impl FinitePoset {
    /// Builds a poset from labels and arbitrary order pairs `(a, b)` meaning
    /// `a <= b`. Cover lists work as well; the reflexive-transitive closure is
    /// taken.
    pub fn build<L, P>(labels: &[L], pairs: &[(P, P)]) -> Result<Self>
    where
        L: AsRef<str>,
        P: AsRef<str>,
    {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        let index = label_index(&labels)?;
        let n = labels.len();
        let mut rel = vec![false; n * n];
        for (a, b) in pairs {
            let a = lookup(&index, a.as_ref())?;
            let b = lookup(&index, b.as_ref())?;
            rel[a * n + b] = true;
        }
        Self::from_relation(labels, rel)
    }

    /// Builds a poset from an `n * n` relation (row-major, `rel[a*n+b]` means
    /// `a <= b`), closing it reflexively and transitively.
    pub fn from_relation(labels: Vec<String>, mut rel: Vec<bool>) -> Result<Self> {
        let n = labels.len();
        if rel.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: rel.len(),
            });
        }
        label_index(&labels)?;
        for a in 0..n {
            rel[a * n + a] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if rel[i * n + k] {
                    for j in 0..n {
                        if rel[k * n + j] {
                            rel[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if rel[a * n + b] && rel[b * n + a] {
                    return Err(Error::Cycle(labels[a].clone(), labels[b].clone()));
                }
            }
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|y| rel[b * n + y]))
            .ok_or(Error::NoBounds("bottom"))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|y| rel[y * n + t]))
            .ok_or(Error::NoBounds("top"))?;
        if n < 2 {
            // 0 = 1 is not a bounded poset in our sense
            return Err(Error::NoBounds("distinct top"));
        }

        let index = label_index(&labels)?;
        Ok(Self {
            labels,
            index,
            leq: rel,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Element) -> &str {
        &self.labels[e]
    }

    pub fn index(&self, label: &str) -> Result<Element> {
        lookup(&self.index, label)
    }

    #[inline]
    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.leq[a * self.labels.len() + b]
    }

    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    /// Cover pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(Element, Element)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = (0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

fn label_index(labels: &[String]) -> Result<HashMap<String, Element>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

fn lookup(index: &HashMap<String, Element>, label: &str) -> Result<Element> {
    index
        .get(label)
        .copied()
        .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_element_chain() {
        let p = FinitePoset::build(&["0", "1"], &[("0", "1")]).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.leq(0, 1));
        assert!(!p.leq(1, 0));
        assert_eq!(p.top(), 1);
    }

    #[test]
    fn mo2_has_four_incomparable_middles() {
        let labels = ["0", "a", "a'", "b", "b'", "1"];
        let mut pairs = vec![];
        for m in &labels[1..5] {
            pairs.push(("0", *m));
            pairs.push((*m, "1"));
        }
        let p = FinitePoset::build(&labels, &pairs).unwrap();
        for x in 1..5 {
            for y in 1..5 {
                assert_eq!(p.leq(x, y), x == y);
            }
        }
        assert_eq!(p.covers().len(), 8);
    }

    #[test]
    fn cycle_is_rejected() {
        let err = FinitePoset::build(&["0", "a", "b", "1"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert_eq!(err, Error::Cycle("a".into(), "b".into()));
    }

    #[test]
    fn missing_bounds_and_labels() {
        let err = FinitePoset::build(&["a", "b"], &[] as &[(&str, &str)]).unwrap_err();
        assert!(matches!(err, Error::NoBounds(_)));
        let err = FinitePoset::build(&["0", "1"], &[("0", "z")]).unwrap_err();
        assert_eq!(err, Error::UnknownLabel("z".into()));
        let err = FinitePoset::build(&["0", "0"], &[] as &[(&str, &str)]).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("0".into()));
    }

    #[test]
    fn label_order_is_kept() {
        let p = FinitePoset::build(&["1", "0"], &[("0", "1")]).unwrap();
        assert_eq!(p.labels(), &["1".to_string(), "0".to_string()]);
        assert_eq!(p.bottom(), 1);
        assert_eq!(p.top(), 0);
    }

    #[test]
    fn closure_is_transitive() {
        let p = FinitePoset::build(&["0", "m", "1"], &[("0", "m"), ("m", "1")]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }
}
