//! Recursive-descent parser.
//!
//! ```text
//! formula := add ("-o" formula)?
//! add     := mul (("&" | "(+)") mul)*
//! mul     := unary (("*" | "@") unary)*
//! unary   := primary "^"*
//! primary := atom | "1" | "bot" | "top" | "0" | "(" formula ")"
//! atom    := [a-z][a-z0-9_]*
//! ```
//!
//! `^` binds tightest, then `*`/`@`, then `&`/`(+)`, then `-o`, which
//! associates to the right. The other binary connectives associate to the
//! left.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::ast::{Constant, Formula};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Const(Constant),
    Star,
    At,
    Lolli,
    Caret,
    Amp,
    Plus,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Atom(name) => alloc::format!("atom `{name}`"),
            Tok::Const(Constant::One) => "`1`".to_string(),
            Tok::Const(Constant::Bottom) => "`bot`".to_string(),
            Tok::Const(Constant::Top) => "`top`".to_string(),
            Tok::Const(Constant::Zero) => "`0`".to_string(),
            Tok::Star => "`*`".to_string(),
            Tok::At => "`@`".to_string(),
            Tok::Lolli => "`-o`".to_string(),
            Tok::Caret => "`^`".to_string(),
            Tok::Amp => "`&`".to_string(),
            Tok::Plus => "`(+)`".to_string(),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
            Tok::Eof => "end of input".to_string(),
        }
    }
}

/// A syntax error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub found: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: unexpected {}", self.line, self.column, self.found)?;
        if !self.expected.is_empty() {
            write!(f, ", expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        let (tok, len) = match c {
            '*' => (Tok::Star, 1),
            '@' => (Tok::At, 1),
            '^' => (Tok::Caret, 1),
            '&' => (Tok::Amp, 1),
            ')' => (Tok::RParen, 1),
            '(' if chars.get(i + 1) == Some(&'+') && chars.get(i + 2) == Some(&')') => (Tok::Plus, 3),
            '(' => (Tok::LParen, 1),
            '-' if chars.get(i + 1) == Some(&'o') => (Tok::Lolli, 2),
            'a'..='z' => {
                let mut j = i + 1;
                while j < chars.len() && (chars[j].is_ascii_lowercase() || chars[j].is_ascii_digit() || chars[j] == '_')
                {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                let tok = match word.as_str() {
                    "bot" => Tok::Const(Constant::Bottom),
                    "top" => Tok::Const(Constant::Top),
                    _ => Tok::Atom(word),
                };
                (tok, j - i)
            }
            '0' | '1' if !chars.get(i + 1).is_some_and(|d| d.is_ascii_alphanumeric()) => {
                let k = if c == '1' { Constant::One } else { Constant::Zero };
                (Tok::Const(k), 1)
            }
            _ => {
                return Err(ParseError { line, column, found: alloc::format!("character `{c}`"), expected: Vec::new() })
            }
        };
        out.push((tok, pos));
        i += len;
        column += len;
    }
    out.push((Tok::Eof, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    expected: Vec<&'static str>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        self.expected.clear();
        t
    }

    fn eat(&mut self, tok: &Tok, label: &'static str) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            if !self.expected.contains(&label) {
                self.expected.push(label);
            }
            false
        }
    }

    fn error(&self) -> ParseError {
        let (tok, pos) = &self.toks[self.at];
        ParseError { line: pos.line, column: pos.column, found: tok.describe(), expected: self.expected.clone() }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.additive()?;
        if self.eat(&Tok::Lolli, "-o") {
            let rhs = self.formula()?;
            return Ok(Formula::lollipop(lhs, rhs));
        }
        Ok(lhs)
    }

    fn additive(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.multiplicative()?;
        loop {
            if self.eat(&Tok::Amp, "&") {
                lhs = Formula::with(lhs, self.multiplicative()?);
            } else if self.eat(&Tok::Plus, "(+)") {
                lhs = Formula::plus(lhs, self.multiplicative()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn multiplicative(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star, "*") {
                lhs = Formula::tensor(lhs, self.unary()?);
            } else if self.eat(&Tok::At, "@") {
                lhs = Formula::par(lhs, self.unary()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.primary()?;
        while self.eat(&Tok::Caret, "^") {
            f = Formula::dual(f);
        }
        Ok(f)
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Atom(name) => {
                self.bump();
                Ok(Formula::Atom(name))
            }
            Tok::Const(c) => {
                self.bump();
                Ok(Formula::Const(c))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                if !self.eat(&Tok::RParen, ")") {
                    return Err(self.error());
                }
                Ok(inner)
            }
            _ => {
                for label in ["atom", "1", "bot", "top", "0", "("] {
                    if !self.expected.contains(&label) {
                        self.expected.push(label);
                    }
                }
                Err(self.error())
            }
        }
    }
}

/// Parses a formula. Unbound atom names are not an error here.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0, expected: Vec::new() };
    let f = p.formula()?;
    if !p.eat(&Tok::Eof, "end of input") {
        return Err(p.error());
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn x() -> Formula {
        Formula::atom("x")
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(parse("x * x^").unwrap(), Formula::tensor(x(), Formula::dual(x())));
        assert_eq!(parse("x -o x").unwrap(), Formula::lollipop(x(), x()));
        assert_eq!(
            parse("x * y -o z").unwrap(),
            Formula::lollipop(Formula::tensor(x(), Formula::atom("y")), Formula::atom("z"))
        );
    }

    #[test]
    fn precedence_and_associativity() {
        let (a, b, c) = (Formula::atom("a"), Formula::atom("b"), Formula::atom("c"));
        assert_eq!(
            parse("a -o b -o c").unwrap(),
            Formula::lollipop(a.clone(), Formula::lollipop(b.clone(), c.clone()))
        );
        assert_eq!(parse("a * b @ c").unwrap(), Formula::par(Formula::tensor(a.clone(), b.clone()), c.clone()));
        assert_eq!(parse("a * b & c").unwrap(), Formula::with(Formula::tensor(a.clone(), b.clone()), c.clone()));
        assert_eq!(parse("a (+) b & c").unwrap(), Formula::with(Formula::plus(a.clone(), b.clone()), c.clone()));
        assert_eq!(parse("(a * b)^^").unwrap(), Formula::dual(Formula::dual(Formula::tensor(a, b))));
        assert_eq!(parse("1 @ bot & top (+) 0").unwrap().to_string(), "1 @ bot & top (+) 0");
    }

    #[test]
    fn error_reports_position_and_expected() {
        let err = parse("x *\n  -o y").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        assert!(err.expected.contains(&"atom"));
        assert!(err.expected.contains(&"("));

        let err = parse("(x").unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
        assert!(err.expected.contains(&")"));
        assert!(err.expected.contains(&"-o"));

        let err = parse("x y").unwrap_err();
        assert_eq!(err.found, "atom `y`");
        assert!(err.expected.contains(&"end of input"));

        assert!(parse("X").is_err());
        assert!(parse("2").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn atom_names() {
        assert_eq!(parse("a_1b").unwrap(), Formula::atom("a_1b"));
        assert_eq!(parse("bottom").unwrap(), Formula::atom("bottom"));
        assert!(parse("1x").is_err());
    }
}
