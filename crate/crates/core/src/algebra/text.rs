//! Text form of polynomials: `3/2*x0^2*x1 - x2 + 1`.
//!
//! The printer lists terms from the largest to the smallest monomial under
//! grlex, writes coefficients as reduced `p/q`, drops unit coefficients and
//! prints the zero polynomial as `0`. Its output parses back to the same
//! polynomial and printing that again gives the same string.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Polynomial, Rational};
use crate::error::{Error, Result};

/// Names of the indeterminates of a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarNames {
    names: Vec<String>,
}

impl VarNames {
    /// `x0, x1, ..., x(n-1)`
    pub fn indexed(n: usize) -> Self {
        VarNames {
            names: (0..n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        VarNames {
            names: names.into_iter().map(Into::into).collect(),
        }
    }

    /// Comma-separated list such as `x,y,z`.
    pub fn parse_list(list: &str) -> Result<Self> {
        let names: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::parse(1, 1, format!("bad variable name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::parse(1, 1, format!("variable {n:?} declared twice")));
            }
        }
        Ok(VarNames { names })
    }

    /// Variables of a text with no declared list: `x<i>` names give the
    /// indexed ring up to the largest index, anything else is taken in order
    /// of first appearance.
    pub fn infer(text: &str) -> Self {
        let mut seen: Vec<String> = Vec::new();
        let body: String = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join("\n");
        let mut lexer = Lexer::new(&body);
        while let Ok(tok) = lexer.next_token() {
            match tok.kind {
                Tok::Ident(name) if !seen.contains(&name) => seen.push(name),
                Tok::End => break,
                _ => {}
            }
        }
        let indexed: Option<Vec<usize>> = seen.iter().map(|s| index_of(s)).collect();
        match indexed {
            Some(idx) => VarNames::indexed(idx.into_iter().max().map_or(0, |m| m + 1)),
            None => VarNames { names: seen },
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn index_of(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses `7`, `-3/4` or a terminating decimal such as `0.125`, exactly.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        return (!d.is_zero()).then(|| Rational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("0{int}{frac}").parse().ok()?;
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    let v = Rational::new(digits, scale);
    Some(if neg { -v } else { v })
}

fn format_monomial(m: &Monomial, names: Option<&VarNames>) -> String {
    let mut parts = Vec::new();
    for v in m.support() {
        let name = names.map_or_else(|| format!("x{v}"), |n| n.name(v).to_string());
        match m.exponent(v) {
            1 => parts.push(name),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Canonical text form. Without `names`, variables print as `x<i>`.
pub fn format_polynomial(p: &Polynomial, names: Option<&VarNames>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let order = MonomialOrder::grlex(p.nvars());
    let mut out = String::new();
    for (i, (m, c)) in p.sorted_terms(&order).into_iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let mono = format_monomial(m, names);
        if mono.is_empty() {
            out.push_str(&format_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rational(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

/// Text form after clearing denominators: `2*z^4 - 3*z^2 + 1`.
pub fn format_primitive(p: &Polynomial, order: &MonomialOrder, names: Option<&VarNames>) -> String {
    format_polynomial(&p.primitive(order), names)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    kind: Tok,
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn next_token(&mut self) -> Result<Token> {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
        let (line, column) = (self.line, self.column);
        let tok = |kind| Ok(Token { kind, line, column });
        let Some(&c) = self.chars.peek() else {
            return tok(Tok::End);
        };
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = self.chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                self.bump();
            }
            return tok(Tok::Num(s.parse().expect("digits")));
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = self.chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                self.bump();
            }
            return tok(Tok::Ident(s));
        }
        self.bump();
        match c {
            '+' => tok(Tok::Plus),
            '-' => tok(Tok::Minus),
            '*' => tok(Tok::Star),
            '/' => tok(Tok::Slash),
            '^' => tok(Tok::Caret),
            '(' => tok(Tok::LParen),
            ')' => tok(Tok::RParen),
            other => Err(Error::parse(line, column, format!("unexpected character {other:?}"))),
        }
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    current: Token,
    names: &'a VarNames,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, names: &'a VarNames) -> Result<Self> {
        let mut lexer = Lexer::new(text);
        let current = lexer.next_token()?;
        Ok(Parser {
            lexer,
            current,
            names,
        })
    }

    fn advance(&mut self) -> Result<Token> {
        let next = self.lexer.next_token()?;
        Ok(std::mem::replace(&mut self.current, next))
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.current.line, self.current.column, message))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.product()?;
        loop {
            match self.current.kind {
                Tok::Plus => {
                    self.advance()?;
                    acc = &acc + &self.product()?;
                }
                Tok::Minus => {
                    self.advance()?;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.current.kind == Tok::Star {
            self.advance()?;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.current.kind {
            Tok::Minus => {
                self.advance()?;
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.advance()?;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.current.kind != Tok::Caret {
            return Ok(base);
        }
        self.advance()?;
        match self.advance()?.kind {
            Tok::Num(e) => match u32::try_from(e) {
                Ok(e) => Ok(base.pow(e)),
                Err(_) => self.error("exponent too large"),
            },
            _ => self.error("expected a non-negative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.names.len();
        let tok = self.current.clone();
        match tok.kind {
            Tok::Num(num) => {
                self.advance()?;
                let mut value = Rational::from_integer(num);
                if self.current.kind == Tok::Slash {
                    self.advance()?;
                    let den = match self.advance()?.kind {
                        Tok::Num(d) => d,
                        _ => return Err(Error::parse(tok.line, tok.column, "expected a denominator")),
                    };
                    if den.is_zero() {
                        return Err(Error::parse(tok.line, tok.column, "zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(n, value))
            }
            Tok::Ident(name) => match self.names.position(&name) {
                Some(i) => {
                    self.advance()?;
                    Ok(Polynomial::var(n, i))
                }
                None => Err(Error::parse(tok.line, tok.column, format!("unknown variable {name:?}"))),
            },
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.current.kind != Tok::RParen {
                    return self.error("expected ')'");
                }
                self.advance()?;
                Ok(inner)
            }
            Tok::End => self.error("unexpected end of input"),
            other => self.error(format!("unexpected token {other:?}")),
        }
    }
}

/// Parse one polynomial; trailing input is an error.
pub fn parse_polynomial(text: &str, names: &VarNames) -> Result<Polynomial> {
    let mut parser = Parser::new(text, names)?;
    let p = parser.expr()?;
    if parser.current.kind != Tok::End {
        return parser.error("trailing input after polynomial");
    }
    Ok(p)
}

/// Parse a `.poly` document: one polynomial per line, `#` starts a comment,
/// blank lines are skipped. Error positions refer to the whole document.
pub fn parse_polynomial_list(text: &str, names: &VarNames) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        match parse_polynomial(line, names) {
            Ok(p) => out.push(p),
            Err(Error::Parse { column, message, .. }) => return Err(Error::parse(i + 1, column, message)),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prints_canonical_form() {
        let names = VarNames::indexed(3);
        let p = parse_polynomial("1 - x2 + x0^2*x1*3/2", &names).unwrap();
        assert_eq!(p.to_string(), "3/2*x0^2*x1 - x2 + 1");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        let q = parse_polynomial("-x0 - 1/3", &names).unwrap();
        assert_eq!(q.to_string(), "-x0 - 1/3");
    }

    #[test]
    fn named_variables_and_parentheses() {
        let names = VarNames::parse_list("x, y, z").unwrap();
        let p = parse_polynomial("(x - y)*(x + y) - -z^2", &names).unwrap();
        assert_eq!(format_polynomial(&p, Some(&names)), "x^2 - y^2 + z^2");
    }

    #[test]
    fn primitive_display() {
        let names = VarNames::new(["x", "y", "z"]);
        let p = parse_polynomial("z^4 - 3/2*z^2 + 1/2", &names).unwrap();
        assert_eq!(
            format_primitive(&p, &MonomialOrder::lex(3), Some(&names)),
            "2*z^4 - 3*z^2 + 1"
        );
    }

    #[test]
    fn errors_carry_positions() {
        let names = VarNames::indexed(2);
        match parse_polynomial("x0 + x1 )", &names) {
            Err(Error::Parse { line: 1, column: 9, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_polynomial_list("x0\n\nx0 + w", &names) {
            Err(Error::Parse { line: 3, column: 6, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("", &names).is_err());
        assert!(parse_polynomial("1/0", &names).is_err());
        assert!(parse_polynomial("x0^-1", &names).is_err());
        assert!(parse_polynomial("x0 $", &names).is_err());
    }

    #[test]
    fn inferred_names() {
        assert_eq!(VarNames::infer("x3 + x0*x1"), VarNames::indexed(4));
        assert_eq!(VarNames::infer("b*a + c"), VarNames::new(["b", "a", "c"]));
        assert_eq!(
            VarNames::infer("# y first\nx^2 - y # tail\nz"),
            VarNames::new(["x", "y", "z"])
        );
        assert!(VarNames::parse_list("x,x").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (prop::collection::vec(0u32..4, 4), -20i64..20, 1i64..7),
            0..6,
        )
        .prop_map(|ts| {
            Polynomial::from_terms(
                4,
                ts.into_iter()
                    .map(|(e, a, b)| (Monomial::from_exponents(e), super::super::ratio(a, b))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn printer_and_parser_round_trip(p in arb_poly()) {
            let names = VarNames::indexed(4);
            let text = p.to_string();
            let back = parse_polynomial(&text, &names).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), text);
        }
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("7"), Some(crate::algebra::rational(7)));
        assert_eq!(parse_rational("-3/4"), Some(crate::algebra::ratio(-3, 4)));
        assert_eq!(parse_rational("0.125"), Some(crate::algebra::ratio(1, 8)));
        assert_eq!(parse_rational("-.5"), Some(crate::algebra::ratio(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("."), None);
        assert_eq!(parse_rational("1e3"), None);
    }
}
