//! Recursive-descent parser for the ASCII/Unicode formula grammar.
//!
//! Precedence, tightest first: `~ box dia boxs dias`, `&`, `|`, `->`, `<->`.
//! Binary connectives associate to the right.

use std::fmt;

use super::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the offending token in the input.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at byte {}: expected {}, found {}",
            self.offset,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Top,
    Bot,
    Not,
    And,
    Or,
    Imp,
    Iff,
    Box,
    Dia,
    BoxStar,
    DiaStar,
    LParen,
    RParen,
    // Only meaningful to the universal-sentence grammar.
    Eq,
    Bang,
    Dot,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Eof => "end of input".to_string(),
            other => format!("`{}`", other.spelling()),
        }
    }

    fn spelling(&self) -> &'static str {
        match self {
            Tok::Ident(_) => "identifier",
            Tok::Top => "top",
            Tok::Bot => "bot",
            Tok::Not => "~",
            Tok::And => "&",
            Tok::Or => "|",
            Tok::Imp => "->",
            Tok::Iff => "<->",
            Tok::Box => "box",
            Tok::Dia => "dia",
            Tok::BoxStar => "boxs",
            Tok::DiaStar => "dias",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Eq => "=",
            Tok::Bang => "!",
            Tok::Dot => ".",
            Tok::Eof => "end of input",
        }
    }
}

pub(crate) fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    end = i + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let word = &input[pos..end];
            let tok = match word {
                "top" => Tok::Top,
                "bot" => Tok::Bot,
                "box" => Tok::Box,
                "dia" => Tok::Dia,
                "boxs" => Tok::BoxStar,
                "dias" => Tok::DiaStar,
                _ => Tok::Ident(word.to_string()),
            };
            out.push((tok, pos));
            continue;
        }
        chars.next();
        let tok = match c {
            '~' | '¬' => Tok::Not,
            '&' | '∧' => Tok::And,
            '|' | '∨' => Tok::Or,
            '→' => Tok::Imp,
            '↔' => Tok::Iff,
            '□' => Tok::Box,
            '◇' => Tok::Dia,
            '⊤' => Tok::Top,
            '⊥' => Tok::Bot,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '=' => Tok::Eq,
            '!' => Tok::Bang,
            '.' => Tok::Dot,
            '-' if chars.peek().map(|&(_, d)| d) == Some('>') => {
                chars.next();
                Tok::Imp
            }
            '<' if input[pos..].starts_with("<->") => {
                chars.next();
                chars.next();
                Tok::Iff
            }
            _ => {
                return Err(ParseError {
                    offset: pos,
                    expected: vec!["formula token"],
                    found: format!("character `{c}`"),
                })
            }
        };
        out.push((tok, pos));
    }
    out.push((Tok::Eof, input.len()));
    Ok(out)
}

pub(crate) struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    pub(crate) fn new(input: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(input)?,
            pos: 0,
        })
    }

    pub(crate) fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    pub(crate) fn mark(&self) -> usize {
        self.pos
    }

    pub(crate) fn reset(&mut self, mark: usize) {
        self.pos = mark;
    }

    pub(crate) fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn error(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected,
            found: self.peek().describe(),
        }
    }

    pub(crate) fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(vec![tok.spelling()]))
        }
    }

    pub(crate) fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.implication()?;
        if *self.peek() == Tok::Iff {
            self.bump();
            let rhs = self.formula()?;
            return Ok(Formula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            let rhs = self.implication()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.conjunction()?;
        if *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.disjunction()?;
            return Ok(Formula::or(lhs, rhs));
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.unary()?;
        if *self.peek() == Tok::And {
            self.bump();
            let rhs = self.conjunction()?;
            return Ok(Formula::and(lhs, rhs));
        }
        Ok(lhs)
    }

    pub(crate) fn unary(&mut self) -> Result<Formula, ParseError> {
        let build: fn(Formula) -> Formula = match self.peek() {
            Tok::Not => Formula::not,
            Tok::Box => Formula::boxed,
            Tok::Dia => Formula::dia,
            Tok::BoxStar => Formula::box_star,
            Tok::DiaStar => Formula::dia_star,
            _ => return self.atom(),
        };
        self.bump();
        Ok(build(self.unary()?))
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::var(&name))
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::bot())
            }
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            _ => Err(self.error(vec![
                "variable", "top", "bot", "~", "box", "dia", "boxs", "dias", "(",
            ])),
        }
    }
}

/// Parses a complete formula.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(vec!["&", "|", "->", "<->", "end of input"]));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(i: usize) -> Formula {
        Formula::p(i)
    }

    #[test]
    fn axiom_four_shape() {
        assert_eq!(
            parse("box p0 -> box box p0").unwrap(),
            Formula::imp(Formula::boxed(p(0)), Formula::boxed(Formula::boxed(p(0))))
        );
    }

    #[test]
    fn negated_conjunction() {
        assert_eq!(
            parse("~(p0 & p1)").unwrap(),
            Formula::not(Formula::and(p(0), p(1)))
        );
    }

    #[test]
    fn p1_path_formula() {
        assert_eq!(
            parse("dia (p1 & dia p0)").unwrap(),
            Formula::dia(Formula::and(p(1), Formula::dia(p(0))))
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("p0 & p1 | p2 -> p3 -> p4 <-> p5").unwrap(),
            Formula::iff(
                Formula::imp(
                    Formula::or(Formula::and(p(0), p(1)), p(2)),
                    Formula::imp(p(3), p(4))
                ),
                p(5)
            )
        );
        assert_eq!(
            parse("~box p0 & dia p1").unwrap(),
            Formula::and(Formula::not(Formula::boxed(p(0))), Formula::dia(p(1)))
        );
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(
            parse("□(¬p0 ∨ ⊥) → ◇⊤ ∧ p1 ↔ q").unwrap(),
            parse("box (~p0 | bot) -> dia top & p1 <-> q").unwrap()
        );
    }

    #[test]
    fn star_modalities() {
        assert_eq!(parse("boxs p0").unwrap(), Formula::box_star(p(0)));
        assert_eq!(parse("dias p0").unwrap(), Formula::dia_star(p(0)));
    }

    #[test]
    fn error_reports_offset_and_expectations() {
        let err = parse("p0 & ").unwrap_err();
        assert_eq!(err.offset, 5);
        assert!(err.expected.contains(&"variable"));

        let err = parse("(p0 & p1").unwrap_err();
        assert_eq!(err.offset, 8);
        assert_eq!(err.expected, vec![")"]);

        let err = parse("p0 p1").unwrap_err();
        assert_eq!(err.offset, 3);

        let err = parse("p0 # p1").unwrap_err();
        assert_eq!(err.offset, 3);
    }
}
