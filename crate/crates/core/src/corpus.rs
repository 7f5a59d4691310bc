//! Builtin structures: Boolean algebras, the horizontal sums `MO_n`, the
//! 96-element product `2^4 × MO2`, the hexagon ortholattice and the
//! four-element RLSE that is not a Boolean ring.

use crate::error::{Error, Result};
use crate::identity::Element;
use crate::lattice::{direct_product, FiniteOml};
use crate::poset::FinitePoset;
use crate::rlse::RlseTables;

/// OMLs iterated by "every corpus OML" checks.
pub const OML_NAMES: &[&str] = &[
    "boolean_1",
    "boolean_2",
    "boolean_3",
    "boolean_4",
    "boolean_5",
    "mo1",
    "mo2",
    "mo3",
    "mo4",
    "product_2p4_mo2",
];

pub const PAPER_EXAMPLE: &str = "paper-example-2set";
pub const BENZENE: &str = "o6";

#[derive(Debug, Clone, PartialEq)]
pub enum Builtin {
    Oml(FiniteOml),
    Rlse(RlseTables),
    /// An ortholattice that is not orthomodular.
    Ortholattice {
        poset: FinitePoset,
        comp: Vec<Element>,
    },
}

/// Looks up a builtin by name. Accepts `boolean_N` (1..=5), `moN` or `mo_N`
/// (1..=4), `product_2p4_mo2`, `paper-example-2set` and `o6`/`benzene`.
pub fn builtin(name: &str) -> Result<Builtin> {
    let unknown = || Error::UnknownName(name.to_owned());
    let small = |digits: &str, max: u32| -> Result<u32> {
        match digits.parse::<u32>() {
            Ok(k) if (1..=max).contains(&k) => Ok(k),
            _ => Err(unknown()),
        }
    };
    if let Some(k) = name.strip_prefix("boolean_") {
        return Ok(Builtin::Oml(boolean(small(k, 5)?)));
    }
    if let Some(k) = name.strip_prefix("mo_").or_else(|| name.strip_prefix("mo")) {
        return Ok(Builtin::Oml(mo(small(k, 4)? as usize)));
    }
    match name {
        "product_2p4_mo2" => Ok(Builtin::Oml(product_2p4_mo2())),
        PAPER_EXAMPLE => Ok(Builtin::Rlse(paper_example_2set())),
        BENZENE | "benzene" => {
            let (poset, comp) = benzene();
            Ok(Builtin::Ortholattice { poset, comp })
        }
        _ => Err(unknown()),
    }
}

/// Looks up a builtin that must be an OML.
pub fn builtin_oml(name: &str) -> Result<FiniteOml> {
    match builtin(name)? {
        Builtin::Oml(o) => Ok(o),
        _ => Err(Error::Validation(format!("`{name}` is not an orthomodular lattice"))),
    }
}

fn subset_label(mask: usize) -> String {
    let members: Vec<String> = (0..usize::BITS as usize)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

/// The Boolean algebra `2^{1..k}`; element `m` is the subset with bitmask `m`.
pub fn boolean(k: u32) -> FiniteOml {
    let n = 1usize << k;
    let labels = (0..n).map(subset_label).collect();
    let leq = (0..n * n).map(|i| (i / n) & !(i % n) == 0).collect();
    let poset = FinitePoset::from_relation(labels, leq).expect("subset order");
    let comp = (0..n).map(|m| (n - 1) ^ m).collect();
    FiniteOml::new(poset, comp).expect("Boolean algebras are orthomodular")
}

/// `MO_k`: `0`, then `a, a', b, b', ...` (k pairs), then `1`.
pub fn mo(k: usize) -> FiniteOml {
    assert!((1..=13).contains(&k), "MO_k needs 1 <= k <= 13");
    let mut labels = vec!["0".to_string()];
    for c in ('a'..='z').take(k) {
        labels.push(c.to_string());
        labels.push(format!("{c}'"));
    }
    labels.push("1".to_string());
    let n = labels.len();
    let top = n - 1;
    let leq = (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            x == y || x == 0 || y == top
        })
        .collect();
    let poset = FinitePoset::from_relation(labels, leq).expect("MO_k order");
    let comp = (0..n)
        .map(|e| match e {
            0 => top,
            e if e == top => 0,
            e if e % 2 == 1 => e + 1,
            e => e - 1,
        })
        .collect();
    FiniteOml::new(poset, comp).expect("MO_k is orthomodular")
}

/// `2^4 × MO2`, 96 elements.
pub fn product_2p4_mo2() -> FiniteOml {
    direct_product(&boolean(4), &mo(2))
}

/// Generating pair of [`product_2p4_mo2`]: the Boolean coordinates of
/// `(x, y)` run through `(0,0), (0,1), (1,0), (1,1)` on the four atoms and the
/// `MO2` coordinate is `(a, b)`.
pub fn product_generators(product: &FiniteOml) -> (Element, Element) {
    let x = product.index("({3,4},a)").expect("generator x");
    let y = product.index("({2,4},b)").expect("generator y");
    (x, y)
}

/// The hexagon `O6`: `0 < a < b < 1`, `0 < b' < a' < 1`.
pub fn benzene() -> (FinitePoset, Vec<Element>) {
    let labels = ["0", "a", "b", "b'", "a'", "1"];
    let poset = FinitePoset::build(
        &labels,
        &[
            ("0", "a"),
            ("a", "b"),
            ("b", "1"),
            ("0", "b'"),
            ("b'", "a'"),
            ("a'", "1"),
        ],
    )
    .expect("hexagon order");
    (poset, vec![5, 4, 3, 2, 1, 0])
}

/// `2^{1,2}` with `A⊕B = {1,2}` when `A = B` is a singleton and symmetric
/// difference otherwise; `·` is intersection.
pub fn paper_example_2set() -> RlseTables {
    let labels = (0..4).map(subset_label).collect();
    RlseTables::from_fns(
        labels,
        |a, b| {
            if a == b && a.count_ones() == 1 {
                3
            } else {
                a ^ b
            }
        },
        |a, b| a & b,
        0,
        3,
    )
    .expect("well-formed tables")
}
