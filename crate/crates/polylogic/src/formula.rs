//! Intuitionistic propositional formulas.
//!
//! The surface syntax is ASCII: `~`, `&`, `|`, `->` and the keywords `true`
//! and `false`, with precedence `~` > `&` > `|` > `->` and a right-associative
//! arrow. Negation is sugar: `~p` parses to `p -> false` and never appears as
//! its own node, so evaluation and validity checking have one connective
//! fewer to handle.
//!
//! ```
//! use polylogic::formula::Formula;
//! let f = Formula::parse("~~p -> p").unwrap();
//! assert_eq!(f.to_string(), "~~p -> p");
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Formula {
    Atom(String),
    Top,
    Bot,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_owned())
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    /// `~f`, desugared to `f -> false`.
    pub fn not(f: Formula) -> Formula {
        Formula::implies(f, Formula::Bot)
    }

    pub fn iff(l: Formula, r: Formula) -> Formula {
        Formula::and(
            Formula::implies(l.clone(), r.clone()),
            Formula::implies(r, l),
        )
    }

    pub fn parse(text: &str) -> Result<Formula, ParseError> {
        Parser::new(text)?.parse()
    }

    /// Atom names occurring in the formula, sorted.
    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.as_str());
            }
            Formula::Top | Formula::Bot => {}
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bot => 5,
            Formula::Implies(_, r) if **r == Formula::Bot => 4, // negation sugar
            Formula::And(..) => 3,
            Formula::Or(..) => 2,
            Formula::Implies(..) => 1,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let prec = self.precedence();
        if prec < min {
            write!(f, "(")?;
            self.fmt_prec(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Top => write!(f, "true"),
            Formula::Bot => write!(f, "false"),
            Formula::Implies(l, r) if **r == Formula::Bot => {
                write!(f, "~")?;
                l.fmt_prec(f, 4)
            }
            Formula::And(l, r) => {
                l.fmt_prec(f, 3)?;
                write!(f, " & ")?;
                r.fmt_prec(f, 4)
            }
            Formula::Or(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, " | ")?;
                r.fmt_prec(f, 3)
            }
            Formula::Implies(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, " -> ")?;
                r.fmt_prec(f, 1)
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {position}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::True => "`true`".into(),
            Token::False => "`false`".into(),
            Token::Not => "`~`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Arrow => "`->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::End => "end of input".into(),
        }
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, ParseError> {
        let bytes = text.as_bytes();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\n' | '\r' => i += 1,
                '~' => {
                    tokens.push((i, Token::Not));
                    i += 1;
                }
                '&' => {
                    tokens.push((i, Token::And));
                    i += 1;
                }
                '|' => {
                    tokens.push((i, Token::Or));
                    i += 1;
                }
                '(' => {
                    tokens.push((i, Token::LParen));
                    i += 1;
                }
                ')' => {
                    tokens.push((i, Token::RParen));
                    i += 1;
                }
                '-' => {
                    if i + 1 < bytes.len() && bytes[i + 1] == b'>' {
                        tokens.push((i, Token::Arrow));
                        i += 2;
                    } else {
                        return Err(ParseError {
                            position: i,
                            expected: vec!["`->`"],
                            found: "`-`".into(),
                        });
                    }
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < bytes.len()
                        && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    let word = &text[start..i];
                    let tok = match word {
                        "true" => Token::True,
                        "false" => Token::False,
                        _ => Token::Ident(word.to_owned()),
                    };
                    tokens.push((start, tok));
                }
                other => {
                    return Err(ParseError {
                        position: i,
                        expected: vec!["a token"],
                        found: format!("`{other}`"),
                    })
                }
            }
        }
        tokens.push((bytes.len(), Token::End));
        Ok(Parser { tokens, pos: 0 })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].1.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let (position, tok) = &self.tokens[self.pos];
        ParseError {
            position: *position,
            expected,
            found: tok.describe(),
        }
    }

    fn parse(&mut self) -> Result<Formula, ParseError> {
        let f = self.implies()?;
        match self.peek() {
            Token::End => Ok(f),
            _ => Err(self.error(vec!["`&`", "`|`", "`->`", "end of input"])),
        }
    }

    fn implies(&mut self) -> Result<Formula, ParseError> {
        let left = self.or()?;
        if *self.peek() == Token::Arrow {
            self.bump();
            let right = self.implies()?; // right-associative
            Ok(Formula::implies(left, right))
        } else {
            Ok(left)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.and()?;
        while *self.peek() == Token::Or {
            self.bump();
            f = Formula::or(f, self.and()?);
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.not()?;
        while *self.peek() == Token::And {
            self.bump();
            f = Formula::and(f, self.not()?);
        }
        Ok(f)
    }

    fn not(&mut self) -> Result<Formula, ParseError> {
        if *self.peek() == Token::Not {
            self.bump();
            Ok(Formula::not(self.not()?))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.bump() {
            Token::Ident(name) => Ok(Formula::Atom(name)),
            Token::True => Ok(Formula::Top),
            Token::False => Ok(Formula::Bot),
            Token::LParen => {
                let f = self.implies()?;
                if self.bump() == Token::RParen {
                    Ok(f)
                } else {
                    self.pos -= 1;
                    Err(self.error(vec!["`)`"]))
                }
            }
            _ => {
                self.pos -= 1;
                Err(self.error(vec!["identifier", "`true`", "`false`", "`~`", "`(`"]))
            }
        }
    }
}

/// A finite Heyting algebra, the structure formulas are evaluated in.
///
/// `implies` is the relative pseudo-complement: `implies(a, b)` is the largest
/// `c` with `meet(c, a) <= b`.
pub trait HeytingAlgebra {
    type Elem: Clone + Eq + Ord;

    fn top(&self) -> Self::Elem;
    fn bot(&self) -> Self::Elem;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn implies(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.meet(a, b) == *a
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unbound atom `{0}`")]
pub struct UnboundAtom(pub String);

/// Bottom-up evaluation of `phi` under `valuation`.
pub fn eval<A: HeytingAlgebra>(
    phi: &Formula,
    algebra: &A,
    valuation: &BTreeMap<String, A::Elem>,
) -> Result<A::Elem, UnboundAtom> {
    match phi {
        Formula::Atom(a) => valuation
            .get(a)
            .cloned()
            .ok_or_else(|| UnboundAtom(a.clone())),
        Formula::Top => Ok(algebra.top()),
        Formula::Bot => Ok(algebra.bot()),
        Formula::And(l, r) => Ok(algebra.meet(&eval(l, algebra, valuation)?, &eval(r, algebra, valuation)?)),
        Formula::Or(l, r) => Ok(algebra.join(&eval(l, algebra, valuation)?, &eval(r, algebra, valuation)?)),
        Formula::Implies(l, r) => {
            Ok(algebra.implies(&eval(l, algebra, valuation)?, &eval(r, algebra, valuation)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p() -> Formula {
        Formula::atom("p")
    }

    #[test]
    fn parses_identity() {
        assert_eq!(
            Formula::parse("p -> p").unwrap(),
            Formula::implies(p(), p())
        );
    }

    #[test]
    fn negation_desugars() {
        // ~~p -> p is (((p -> false) -> false) -> p)
        let parsed = Formula::parse("~~p -> p").unwrap();
        let expected = Formula::implies(Formula::not(Formula::not(p())), p());
        assert_eq!(parsed, expected);
    }

    #[test]
    fn arrow_binds_loosest() {
        // Confirmed by re-printing with explicit parentheses and re-parsing.
        let parsed = Formula::parse("p | q -> r").unwrap();
        let explicit = Formula::parse("(p | q) -> r").unwrap();
        assert_eq!(parsed, explicit);
        assert_eq!(
            parsed,
            Formula::implies(Formula::or(p(), Formula::atom("q")), Formula::atom("r"))
        );
    }

    #[test]
    fn arrow_is_right_associative() {
        assert_eq!(
            Formula::parse("p -> q -> r").unwrap(),
            Formula::parse("p -> (q -> r)").unwrap()
        );
    }

    #[test]
    fn and_binds_tighter_than_or() {
        assert_eq!(
            Formula::parse("p & q | r").unwrap(),
            Formula::parse("(p & q) | r").unwrap()
        );
    }

    #[test]
    fn error_reports_position_and_expectations() {
        let err = Formula::parse("p -> ").unwrap_err();
        assert_eq!(err.position, 5);
        assert!(err.expected.contains(&"identifier"));
        let err = Formula::parse("(p").unwrap_err();
        assert_eq!(err.expected, vec!["`)`"]);
        let err = Formula::parse("p q").unwrap_err();
        assert_eq!(err.position, 2);
    }

    #[test]
    fn printer_uses_minimal_parentheses() {
        for (input, printed) in [
            ("p & (q | r)", "p & (q | r)"),
            ("(p & q) | r", "p & q | r"),
            ("(p -> q) -> r", "(p -> q) -> r"),
            ("p -> (q -> r)", "p -> q -> r"),
            ("~(p & q)", "~(p & q)"),
            ("~~p", "~~p"),
            ("~p & q", "~p & q"),
        ] {
            assert_eq!(Formula::parse(input).unwrap().to_string(), printed);
        }
    }

    /// Two-element Boolean algebra, enough to exercise `eval` in isolation.
    struct TwoPoint;

    impl HeytingAlgebra for TwoPoint {
        type Elem = bool;
        fn top(&self) -> bool {
            true
        }
        fn bot(&self) -> bool {
            false
        }
        fn meet(&self, a: &bool, b: &bool) -> bool {
            *a && *b
        }
        fn join(&self, a: &bool, b: &bool) -> bool {
            *a || *b
        }
        fn implies(&self, a: &bool, b: &bool) -> bool {
            !*a || *b
        }
    }

    #[test]
    fn eval_on_the_two_point_algebra() {
        let val = BTreeMap::from([("p".to_owned(), false)]);
        assert_eq!(eval(&Formula::Top, &TwoPoint, &val), Ok(true));
        let phi = Formula::parse("~p -> (p -> q)").unwrap();
        assert_eq!(
            eval(&phi, &TwoPoint, &val),
            Err(UnboundAtom("q".to_owned()))
        );
        let phi = Formula::parse("p | ~p").unwrap();
        assert_eq!(eval(&phi, &TwoPoint, &val), Ok(true));
    }

    fn formula_strategy() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            "[a-z][a-z0-9_]{0,2}".prop_map(Formula::Atom),
            Just(Formula::Top),
            Just(Formula::Bot),
        ];
        leaf.prop_recursive(6, 48, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::implies(l, r)),
                inner.prop_map(Formula::not),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in formula_strategy()) {
            let printed = f.to_string();
            let reparsed = Formula::parse(&printed).unwrap();
            prop_assert_eq!(reparsed, f);
        }
    }
}
