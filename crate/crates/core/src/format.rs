//! Line-oriented structure files.
//!
//! ```text
//! # MO2
//! KIND oml
//! ELEMENTS 0 a a' b b' 1
//! COVERS
//! 0 a
//! 0 a'
//! ...
//! COMPLEMENT
//! 0 1
//! a a'
//! b b'
//! STATES
//! 0 1 0 0 1 1
//! ```
//!
//! A section starts with a keyword at the start of a line; tokens after the
//! keyword on the same line belong to the section. `LEQ` takes arbitrary
//! order pairs, `COVERS` takes cover pairs; both are closed transitively.
//! `COMPLEMENT` pairs are symmetric. RLSE files carry `ZERO`, `ONE`, and
//! `OPLUS`/`TIMES` tables with one row per element, written `x | v1 v2 ...`
//! in element order. Event files carry `EVENTS` rows `label | v1 v2 ...`.
//! Scalars are integers or `p/q`. `#` starts a comment.

use std::fmt::Write as _;
use std::path::Path;

use crate::corpus::Builtin;
use crate::error::{Error, Result};
use crate::identity::Element;
use crate::lattice::FiniteOml;
use crate::poset::FinitePoset;
use crate::rlse::RlseTables;
use crate::states::{NumericalEventSet, State};
use crate::Rational;

const KEYWORDS: &[&str] = &[
    "KIND",
    "ELEMENTS",
    "LEQ",
    "COVERS",
    "COMPLEMENT",
    "ZERO",
    "ONE",
    "OPLUS",
    "TIMES",
    "STATES",
    "EVENTS",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Oml,
    Rlse,
    Events,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Oml => "oml",
            Kind::Rlse => "rlse",
            Kind::Events => "events",
        }
    }
}

/// A syntactically valid structure file; labels are not yet resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFile {
    pub kind: Kind,
    pub elements: Vec<String>,
    pub leq: Vec<(String, String)>,
    pub covers: Vec<(String, String)>,
    pub complement: Vec<(String, String)>,
    pub zero: Option<String>,
    pub one: Option<String>,
    pub oplus: Vec<(String, Vec<String>)>,
    pub times: Vec<(String, Vec<String>)>,
    pub states: Vec<Vec<Rational>>,
    pub events: Vec<(String, Vec<Rational>)>,
}

/// A structure with every label resolved.
#[derive(Debug, Clone, PartialEq)]
pub enum Structure {
    /// An orthocomplemented poset, not yet checked for orthomodularity.
    Oml {
        poset: FinitePoset,
        comp: Vec<Element>,
        states: Vec<State<Rational>>,
    },
    Rlse(RlseTables),
    Events(NumericalEventSet<Rational>),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Oml { .. } => Kind::Oml,
            Structure::Rlse(_) => Kind::Rlse,
            Structure::Events(_) => Kind::Events,
        }
    }

    pub fn from_oml(o: &FiniteOml) -> Self {
        Structure::Oml {
            poset: o.poset().clone(),
            comp: o.complements().to_vec(),
            states: Vec::new(),
        }
    }
}

impl From<Builtin> for Structure {
    fn from(b: Builtin) -> Self {
        match b {
            Builtin::Oml(o) => Structure::from_oml(&o),
            Builtin::Rlse(t) => Structure::Rlse(t),
            Builtin::Ortholattice { poset, comp } => Structure::Oml {
                poset,
                comp,
                states: Vec::new(),
            },
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Kind,
    Elements,
    Leq,
    Covers,
    Complement,
    Zero,
    One,
    Oplus,
    Times,
    States,
    Events,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in content.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &content[s..i],
                    column: content[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &content[s..],
            column: content[..s].chars().count() + 1,
        });
    }
    out
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn scalar(t: &Token, line: usize) -> Result<Rational> {
    t.text
        .parse::<Rational>()
        .map_err(|_| parse_err(line, t.column, format!("`{}` is not a rational", t.text)))
}

fn pair(ts: &[Token], line: usize) -> Result<(String, String)> {
    match ts {
        [a, b] => Ok((a.text.to_owned(), b.text.to_owned())),
        _ => Err(parse_err(
            line,
            ts.first().map_or(1, |t| t.column),
            "expected two labels",
        )),
    }
}

/// Splits `head | v1 v2 ...`.
fn row<'a, 'b>(ts: &'b [Token<'a>], line: usize) -> Result<(&'b Token<'a>, &'b [Token<'a>])> {
    match ts {
        [head, bar, rest @ ..] if bar.text == "|" => Ok((head, rest)),
        _ => Err(parse_err(
            line,
            ts.get(1).map_or(1, |t| t.column),
            "expected `label | values`",
        )),
    }
}

/// Parses the text of a structure file.
pub fn parse_structure(text: &str) -> Result<StructureFile> {
    let mut kind = None;
    let mut file = StructureFile {
        kind: Kind::Oml,
        elements: Vec::new(),
        leq: Vec::new(),
        covers: Vec::new(),
        complement: Vec::new(),
        zero: None,
        one: None,
        oplus: Vec::new(),
        times: Vec::new(),
        states: Vec::new(),
        events: Vec::new(),
    };
    let mut section = Section::None;
    let mut seen = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let ts = tokens(raw);
        let Some(first) = ts.first() else { continue };
        let mut body = &ts[..];
        if KEYWORDS.contains(&first.text) {
            if seen.contains(&first.text) {
                return Err(parse_err(line, first.column, format!("repeated section {}", first.text)));
            }
            seen.push(first.text);
            section = match first.text {
                "KIND" => Section::Kind,
                "ELEMENTS" => Section::Elements,
                "LEQ" => Section::Leq,
                "COVERS" => Section::Covers,
                "COMPLEMENT" => Section::Complement,
                "ZERO" => Section::Zero,
                "ONE" => Section::One,
                "OPLUS" => Section::Oplus,
                "TIMES" => Section::Times,
                "STATES" => Section::States,
                _ => Section::Events,
            };
            body = &ts[1..];
            if body.is_empty() {
                continue;
            }
        }
        match section {
            Section::None => {
                return Err(parse_err(line, first.column, "content before the first section"))
            }
            Section::Kind => {
                if kind.is_some() || body.len() != 1 {
                    return Err(parse_err(line, body[0].column, "KIND takes one word"));
                }
                kind = Some(match body[0].text {
                    "oml" => Kind::Oml,
                    "rlse" => Kind::Rlse,
                    "events" => Kind::Events,
                    other => {
                        return Err(parse_err(line, body[0].column, format!("unknown kind `{other}`")))
                    }
                });
            }
            Section::Elements => file.elements.extend(body.iter().map(|t| t.text.to_owned())),
            Section::Leq => file.leq.push(pair(body, line)?),
            Section::Covers => file.covers.push(pair(body, line)?),
            Section::Complement => file.complement.push(pair(body, line)?),
            Section::Zero | Section::One => {
                let slot = if section == Section::Zero { &mut file.zero } else { &mut file.one };
                if slot.is_some() || body.len() != 1 {
                    return Err(parse_err(line, body[0].column, "expected a single label"));
                }
                *slot = Some(body[0].text.to_owned());
            }
            Section::Oplus | Section::Times => {
                let (head, rest) = row(body, line)?;
                let entry = (head.text.to_owned(), rest.iter().map(|t| t.text.to_owned()).collect());
                if section == Section::Oplus {
                    file.oplus.push(entry);
                } else {
                    file.times.push(entry);
                }
            }
            Section::States => file
                .states
                .push(body.iter().map(|t| scalar(t, line)).collect::<Result<_>>()?),
            Section::Events => {
                let (head, rest) = row(body, line)?;
                let values = rest.iter().map(|t| scalar(t, line)).collect::<Result<_>>()?;
                file.events.push((head.text.to_owned(), values));
            }
        }
    }
    file.kind = kind.ok_or_else(|| parse_err(1, 1, "missing KIND"))?;
    Ok(file)
}

/// Reads and parses a structure file.
pub fn read_structure(path: &Path) -> Result<StructureFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    parse_structure(&text)
}

fn resolve(labels: &[String], l: &str) -> Result<Element> {
    labels
        .iter()
        .position(|x| x == l)
        .ok_or_else(|| Error::Validation(format!("unknown label `{l}`")))
}

/// Resolves a row-major table written with labels, rows in `labels` order.
pub fn resolve_table(labels: &[String], rows: &[(String, Vec<String>)], name: &str) -> Result<Vec<Element>> {
    let n = labels.len();
    if rows.len() != n {
        return Err(Error::Validation(format!(
            "{name} has {} rows, expected {n}",
            rows.len()
        )));
    }
    let mut out = Vec::with_capacity(n * n);
    for (i, (head, values)) in rows.iter().enumerate() {
        if *head != labels[i] {
            return Err(Error::Validation(format!(
                "{name} row {} is labelled `{head}`, expected `{}`",
                i + 1,
                labels[i]
            )));
        }
        if values.len() != n {
            return Err(Error::Validation(format!(
                "{name} row `{head}` has {} entries, expected {n}",
                values.len()
            )));
        }
        for v in values {
            out.push(resolve(labels, v)?);
        }
    }
    Ok(out)
}

fn reject(present: bool, what: &str, kind: Kind) -> Result<()> {
    if present {
        Err(Error::Validation(format!("{what} is not allowed in a {} file", kind.name())))
    } else {
        Ok(())
    }
}

/// Resolves labels and checks shapes.
pub fn validate(file: &StructureFile) -> Result<Structure> {
    let labels = &file.elements;
    match file.kind {
        Kind::Oml => {
            reject(file.zero.is_some() || file.one.is_some(), "ZERO/ONE", file.kind)?;
            reject(!file.oplus.is_empty() || !file.times.is_empty(), "OPLUS/TIMES", file.kind)?;
            reject(!file.events.is_empty(), "EVENTS", file.kind)?;
            let pairs: Vec<(String, String)> =
                file.leq.iter().chain(&file.covers).cloned().collect();
            for (a, b) in &pairs {
                resolve(labels, a)?;
                resolve(labels, b)?;
            }
            let poset = FinitePoset::build(labels, &pairs)?;
            let mut comp: Vec<Option<Element>> = vec![None; labels.len()];
            for (a, b) in &file.complement {
                let (x, y) = (resolve(labels, a)?, resolve(labels, b)?);
                for (u, v) in [(x, y), (y, x)] {
                    match comp[u] {
                        Some(w) if w != v => {
                            return Err(Error::Validation(format!(
                                "`{}` has two complements",
                                labels[u]
                            )))
                        }
                        _ => comp[u] = Some(v),
                    }
                }
            }
            let comp = comp
                .into_iter()
                .enumerate()
                .map(|(i, c)| {
                    c.ok_or_else(|| {
                        Error::Validation(format!("`{}` has no complement", labels[i]))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let states = file
                .states
                .iter()
                .map(|s| {
                    if s.len() == labels.len() {
                        Ok(State::new(s.clone()))
                    } else {
                        Err(Error::DimensionMismatch {
                            expected: labels.len(),
                            found: s.len(),
                        })
                    }
                })
                .collect::<Result<_>>()?;
            Ok(Structure::Oml {
                poset,
                comp,
                states,
            })
        }
        Kind::Rlse => {
            reject(
                !file.leq.is_empty() || !file.covers.is_empty() || !file.complement.is_empty(),
                "LEQ/COVERS/COMPLEMENT",
                file.kind,
            )?;
            reject(!file.states.is_empty() || !file.events.is_empty(), "STATES/EVENTS", file.kind)?;
            let need = |s: &Option<String>, what: &str| {
                s.as_deref()
                    .ok_or_else(|| Error::Validation(format!("missing {what}")))
                    .and_then(|l| resolve(labels, l))
            };
            let zero = need(&file.zero, "ZERO")?;
            let one = need(&file.one, "ONE")?;
            let oplus = resolve_table(labels, &file.oplus, "OPLUS")?;
            let times = resolve_table(labels, &file.times, "TIMES")?;
            Ok(Structure::Rlse(RlseTables::new(
                labels.clone(),
                oplus,
                times,
                zero,
                one,
            )?))
        }
        Kind::Events => {
            reject(!file.elements.is_empty(), "ELEMENTS", file.kind)?;
            let (l, v) = file.events.iter().cloned().unzip();
            Ok(Structure::Events(NumericalEventSet::new(l, v)?))
        }
    }
}

/// Parses and validates a file on disk.
pub fn load_structure(path: &Path) -> Result<Structure> {
    validate(&read_structure(path)?)
}

/// Text form of a structure; orders are written as covers.
pub fn serialize_structure(s: &Structure) -> String {
    let mut out = String::new();
    writeln!(out, "KIND {}", s.kind().name()).unwrap();
    match s {
        Structure::Oml {
            poset,
            comp,
            states,
        } => {
            writeln!(out, "ELEMENTS {}", poset.labels().join(" ")).unwrap();
            out.push_str("COVERS\n");
            for (a, b) in poset.covers() {
                writeln!(out, "{} {}", poset.label(a), poset.label(b)).unwrap();
            }
            out.push_str("COMPLEMENT\n");
            for (x, &c) in comp.iter().enumerate() {
                if x <= c {
                    writeln!(out, "{} {}", poset.label(x), poset.label(c)).unwrap();
                }
            }
            if !states.is_empty() {
                out.push_str("STATES\n");
                for m in states {
                    out.push_str(&join(m.values()));
                    out.push('\n');
                }
            }
        }
        Structure::Rlse(t) => {
            writeln!(out, "ELEMENTS {}", t.labels().join(" ")).unwrap();
            writeln!(out, "ZERO {}", t.label(t.zero())).unwrap();
            writeln!(out, "ONE {}", t.label(t.one())).unwrap();
            for (name, op) in [("OPLUS", 0), ("TIMES", 1)] {
                writeln!(out, "{name}").unwrap();
                for x in 0..t.len() {
                    let row: Vec<&str> = (0..t.len())
                        .map(|y| t.label(if op == 0 { t.plus(x, y) } else { t.times(x, y) }))
                        .collect();
                    writeln!(out, "{} | {}", t.label(x), row.join(" ")).unwrap();
                }
            }
        }
        Structure::Events(ev) => {
            out.push_str("EVENTS\n");
            for i in 0..ev.len() {
                writeln!(out, "{} | {}", ev.label(i), join(ev.event(i))).unwrap();
            }
        }
    }
    out
}

fn join(values: &[Rational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn round_trip(s: &Structure) -> Structure {
        validate(&parse_structure(&serialize_structure(s)).unwrap()).unwrap()
    }

    #[test]
    fn mo2_round_trip() {
        let s = Structure::from(corpus::builtin("mo2").unwrap());
        assert_eq!(round_trip(&s), s);
    }

    #[test]
    fn corpus_round_trips() {
        for name in corpus::OML_NAMES.iter().chain(&[corpus::PAPER_EXAMPLE, corpus::BENZENE]) {
            let s = Structure::from(corpus::builtin(name).unwrap());
            assert_eq!(round_trip(&s), s, "{name}");
        }
    }

    #[test]
    fn unknown_complement_label() {
        let text = "KIND oml\nELEMENTS 0 1\nLEQ\n0 1\nCOMPLEMENT\n0 z\n";
        let err = validate(&parse_structure(text).unwrap()).unwrap_err();
        assert_eq!(err, Error::Validation("unknown label `z`".into()));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_structure("KIND oml\nELEMENTS 0 1\nSTATES\n0 1/x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, column: 3, .. }), "{err:?}");
        let err = parse_structure("KIND lattice\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 6, .. }));
        let err = parse_structure("0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 1, .. }));
        let err = parse_structure("KIND rlse\nOPLUS\n0 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 3, .. }));
    }

    #[test]
    fn comments_and_states() {
        let text = "# two elements\nKIND oml   # trailing\nELEMENTS 0 1\nCOVERS\n0 1\nCOMPLEMENT\n0 1\nSTATES\n0 1\n";
        let Structure::Oml { states, .. } = validate(&parse_structure(text).unwrap()).unwrap() else {
            panic!()
        };
        assert_eq!(states.len(), 1);
        assert_eq!(states[0].get(1), &Rational::from_integer(1.into()));
    }

    #[test]
    fn table_shape_is_checked() {
        let text = "KIND rlse\nELEMENTS 0 1\nZERO 0\nONE 1\nOPLUS\n0 | 0 1\n1 | 1\nTIMES\n0 | 0 0\n1 | 0 1\n";
        let err = validate(&parse_structure(text).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Validation(m) if m.contains("row `1`")));
    }

    #[test]
    fn events_round_trip() {
        let half = Rational::new(1.into(), 2.into());
        let one = Rational::from_integer(1.into());
        let zero = Rational::from_integer(0.into());
        let ev = NumericalEventSet::new(
            vec!["p".into(), "q".into()],
            vec![vec![half.clone(), zero], vec![half, one]],
        )
        .unwrap();
        let s = Structure::Events(ev);
        let text = serialize_structure(&s);
        assert!(text.contains("p | 1/2 0"));
        assert_eq!(round_trip(&s), s);
    }
}
