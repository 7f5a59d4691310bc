//! Binary terms over `{∨, ∧, ', 0, 1}` and their text form.
//!
//! Text form: variables `x`, `y`, constants `0`, `1`, infix `^` (meet) and
//! `v` (join), postfix `'` (complement), parentheses. `^` binds tighter than
//! `v`; both associate to the left.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    X,
    Y,
    Zero,
    One,
    Comp(Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
}

impl Term {
    pub fn comp(self) -> Term {
        Term::Comp(Box::new(self))
    }

    pub fn meet(self, other: Term) -> Term {
        Term::Meet(Box::new(self), Box::new(other))
    }

    pub fn join(self, other: Term) -> Term {
        Term::Join(Box::new(self), Box::new(other))
    }

    /// Left-nested join of all terms; the empty join is `0`.
    pub fn join_all(terms: impl IntoIterator<Item = Term>) -> Term {
        terms.into_iter().reduce(Term::join).unwrap_or(Term::Zero)
    }

    /// Left-nested meet of all terms; the empty meet is `1`.
    pub fn meet_all(terms: impl IntoIterator<Item = Term>) -> Term {
        terms.into_iter().reduce(Term::meet).unwrap_or(Term::One)
    }

    /// The term with `x` and `y` exchanged.
    pub fn swap_vars(&self) -> Term {
        match self {
            Term::X => Term::Y,
            Term::Y => Term::X,
            Term::Zero => Term::Zero,
            Term::One => Term::One,
            Term::Comp(a) => a.swap_vars().comp(),
            Term::Meet(a, b) => a.swap_vars().meet(b.swap_vars()),
            Term::Join(a, b) => a.swap_vars().join(b.swap_vars()),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::X | Term::Y | Term::Zero | Term::One => 1,
            Term::Comp(a) => 1 + a.size(),
            Term::Meet(a, b) | Term::Join(a, b) => 1 + a.size() + b.size(),
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        match self {
            Term::X => f.write_str("x"),
            Term::Y => f.write_str("y"),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Comp(a) => {
                a.write(f, 3)?;
                f.write_str("'")
            }
            Term::Meet(a, b) => bracketed(f, prec > 2, |f| {
                a.write(f, 2)?;
                f.write_str(" ^ ")?;
                b.write(f, 3)
            }),
            Term::Join(a, b) => bracketed(f, prec > 1, |f| {
                a.write(f, 1)?;
                f.write_str(" v ")?;
                b.write(f, 2)
            }),
        }
    }
}

fn bracketed(
    f: &mut fmt::Formatter<'_>,
    parens: bool,
    body: impl FnOnce(&mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    if parens {
        f.write_str("(")?;
    }
    body(f)?;
    if parens {
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Term, Error> {
        let mut p = Parser {
            chars: s.chars().collect(),
            pos: 0,
        };
        let t = p.join()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(t)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: message.to_owned(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn join(&mut self) -> Result<Term, Error> {
        let mut t = self.meet()?;
        while matches!(self.peek(), Some('v' | '∨')) {
            self.pos += 1;
            t = t.join(self.meet()?);
        }
        Ok(t)
    }

    fn meet(&mut self) -> Result<Term, Error> {
        let mut t = self.postfix()?;
        while matches!(self.peek(), Some('^' | '∧')) {
            self.pos += 1;
            t = t.meet(self.postfix()?);
        }
        Ok(t)
    }

    fn postfix(&mut self) -> Result<Term, Error> {
        let mut t = self.atom()?;
        while matches!(self.chars.get(self.pos), Some('\'' | '′')) {
            self.pos += 1;
            t = t.comp();
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, Error> {
        let t = match self.peek() {
            Some('x') => Term::X,
            Some('y') => Term::Y,
            Some('0') => Term::Zero,
            Some('1') => Term::One,
            Some('(') => {
                self.pos += 1;
                let inner = self.join()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                inner
            }
            Some(_) => return Err(self.error("expected x, y, 0, 1 or `(`")),
            None => return Err(self.error("unexpected end of term")),
        };
        self.pos += 1;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prints_symmetric_difference() {
        let t1 = Term::X.meet(Term::Y.comp()).join(Term::X.comp().meet(Term::Y));
        assert_eq!(t1.to_string(), "x ^ y' v x' ^ y");
        assert_eq!("(x ^ y') v (x' ^ y)".parse::<Term>().unwrap(), t1);
    }

    #[test]
    fn parentheses_where_needed() {
        let t = Term::X.join(Term::Y).meet(Term::X.comp().join(Term::Y.comp()));
        assert_eq!(t.to_string(), "(x v y) ^ (x' v y')");
        let t = Term::X.join(Term::Y.join(Term::One));
        assert_eq!(t.to_string(), "x v (y v 1)");
        let t = Term::X.meet(Term::Y).comp().comp();
        assert_eq!(t.to_string(), "(x ^ y)''");
    }

    #[test]
    fn parse_errors_carry_columns() {
        match "x ^ (y v 0".parse::<Term>() {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 11),
            other => panic!("{other:?}"),
        }
        assert!("x z".parse::<Term>().is_err());
        assert!("".parse::<Term>().is_err());
        assert!("x ^".parse::<Term>().is_err());
    }

    #[test]
    fn unicode_operators() {
        assert_eq!(
            "x∧y′ ∨ x′∧y".parse::<Term>().unwrap(),
            "x ^ y' v x' ^ y".parse::<Term>().unwrap()
        );
    }

    fn arb_term() -> impl Strategy<Value = Term> {
        let leaf = prop_oneof![
            Just(Term::X),
            Just(Term::Y),
            Just(Term::Zero),
            Just(Term::One)
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Term::comp),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.meet(b)),
                (inner.clone(), inner).prop_map(|(a, b)| a.join(b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(t in arb_term()) {
            prop_assert_eq!(t.to_string().parse::<Term>().unwrap(), t);
        }

        #[test]
        fn swap_is_an_involution(t in arb_term()) {
            prop_assert_eq!(t.swap_vars().swap_vars(), t);
        }
    }
}
