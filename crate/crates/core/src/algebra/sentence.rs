use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{eval_terms, for_each_tuple, ModalAlgebra};
use crate::error::{Error, Result};
use crate::eval::Program;
use crate::formula::parse::{Parser, Tok};
use crate::formula::{Formula, Var};
use crate::worlds::WorldSet;

/// `lhs ≈ rhs`, or its negation when `positive` is false.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub positive: bool,
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Literal {
    pub fn eq(lhs: Formula, rhs: Formula) -> Literal {
        Literal {
            positive: true,
            lhs,
            rhs,
        }
    }

    pub fn neq(lhs: Formula, rhs: Formula) -> Literal {
        Literal {
            positive: false,
            lhs,
            rhs,
        }
    }

    /// `lhs ↔ rhs`, valid exactly when the equation holds.
    pub fn biconditional(&self) -> Formula {
        Formula::iff(self.lhs.clone(), self.rhs.clone())
    }
}

/// A disjunction of literals. The empty clause is false.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Clause {
    pub literals: Vec<Literal>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalSentence {
    vars: Vec<Var>,
    clauses: Vec<Clause>,
}

impl UniversalSentence {
    /// Rejects repeated quantified variables and free matrix variables.
    pub fn new(vars: Vec<Var>, clauses: Vec<Clause>) -> Result<UniversalSentence> {
        let bound: BTreeSet<&Var> = vars.iter().collect();
        if bound.len() != vars.len() {
            return Err(Error::InvalidSentence(
                "a variable is quantified twice".into(),
            ));
        }
        for lit in clauses.iter().flat_map(|c| &c.literals) {
            for v in lit.lhs.vars().into_iter().chain(lit.rhs.vars()) {
                if !bound.contains(&v) {
                    return Err(Error::InvalidSentence(format!(
                        "variable `{v}` is not quantified"
                    )));
                }
            }
        }
        Ok(UniversalSentence { vars, clauses })
    }

    /// `∀p̄ (φ ≈ ⊤)` over the variables of `phi`.
    pub fn equation(phi: Formula) -> UniversalSentence {
        let vars = phi.vars().into_iter().collect();
        let clause = Clause {
            literals: vec![Literal::eq(phi, Formula::Top)],
        };
        UniversalSentence {
            vars,
            clauses: vec![clause],
        }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }
}

// A term as it must appear beside `=`: bracketed unless it already reads
// back as a single unary-level formula.
fn term(t: &Formula) -> String {
    let text = t.to_string();
    let bare = Parser::new(&text)
        .ok()
        .and_then(|mut p| p.unary().ok().filter(|g| g == t && *p.peek() == Tok::Eof));
    if bare.is_some() {
        text
    } else {
        format!("({text})")
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{} = {}", term(&self.lhs), term(&self.rhs))
        } else {
            write!(f, "!({} = {})", term(&self.lhs), term(&self.rhs))
        }
    }
}

impl fmt::Display for UniversalSentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("forall")?;
        for v in &self.vars {
            write!(f, " {v}")?;
        }
        f.write_str(" .")?;
        if self.clauses.is_empty() {
            // The empty conjunction; `top = top` keeps it parseable.
            return f.write_str(" top = top");
        }
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(" &")?;
            }
            f.write_str(" (")?;
            if c.literals.is_empty() {
                // No literal syntax for false; `~top = top` never holds.
                f.write_str("~top = top")?;
            }
            for (j, l) in c.literals.iter().enumerate() {
                if j > 0 {
                    f.write_str(" | ")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for UniversalSentence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sentence(s)
    }
}

/// Parses `forall p0 p1 . C & C & ...` where each clause `C` is a literal
/// or a parenthesized `|`-list of literals, and a literal is `t = t` or
/// `!(t = t)`. Terms are unary formulas, so binary terms need parentheses.
/// Without the `forall` prefix the variables of the matrix are quantified.
pub fn parse_sentence(text: &str) -> Result<UniversalSentence> {
    let mut p = Parser::new(text)?;
    let mut vars = None;
    if matches!(p.peek(), Tok::Ident(w) if w == "forall") {
        p.bump();
        let mut vs = Vec::new();
        while let Tok::Ident(name) = p.peek().clone() {
            p.bump();
            vs.push(Var::new(&name));
        }
        p.expect(Tok::Dot)?;
        vars = Some(vs);
    }
    let mut clauses = vec![clause(&mut p)?];
    while *p.peek() == Tok::And {
        p.bump();
        clauses.push(clause(&mut p)?);
    }
    if *p.peek() != Tok::Eof {
        return Err(p.error(vec!["&", "end of input"]).into());
    }
    let vars = vars.unwrap_or_else(|| {
        let free: BTreeSet<Var> = clauses
            .iter()
            .flat_map(|c| &c.literals)
            .flat_map(|l| l.lhs.vars().into_iter().chain(l.rhs.vars()))
            .collect();
        free.into_iter().collect()
    });
    UniversalSentence::new(vars, clauses)
}

fn clause(p: &mut Parser) -> Result<Clause> {
    if *p.peek() == Tok::LParen {
        let mark = p.mark();
        p.bump();
        if let Ok(literals) = literal_list(p) {
            if *p.peek() == Tok::RParen {
                p.bump();
                return Ok(Clause { literals });
            }
        }
        // Not a bracketed clause; the parenthesis opens a term.
        p.reset(mark);
    }
    Ok(Clause {
        literals: vec![literal(p)?],
    })
}

fn literal_list(p: &mut Parser) -> Result<Vec<Literal>> {
    let mut out = vec![literal(p)?];
    while *p.peek() == Tok::Or {
        p.bump();
        out.push(literal(p)?);
    }
    Ok(out)
}

fn literal(p: &mut Parser) -> Result<Literal> {
    if *p.peek() == Tok::Bang {
        p.bump();
        p.expect(Tok::LParen)?;
        let (lhs, rhs) = equation(p)?;
        p.expect(Tok::RParen)?;
        return Ok(Literal::neq(lhs, rhs));
    }
    let (lhs, rhs) = equation(p)?;
    Ok(Literal::eq(lhs, rhs))
}

fn equation(p: &mut Parser) -> Result<(Formula, Formula)> {
    let lhs = p.unary()?;
    p.expect(Tok::Eq)?;
    let rhs = p.unary()?;
    Ok((lhs, rhs))
}

/// A tuple (one element per quantified variable) and the index of a clause
/// none of whose literals holds there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<WorldSet>,
    pub clause: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub holds: bool,
    pub witness: Option<Witness>,
}

// All terms of a sentence compiled into one program.
pub(crate) struct Compiled {
    prog: Program,
    // Position in the quantifier list of each program variable.
    slot: Vec<usize>,
    // Per clause, per literal: (positive, lhs root, rhs root).
    clauses: Vec<Vec<(bool, usize, usize)>>,
}

impl Compiled {
    pub(crate) fn new(s: &UniversalSentence) -> Compiled {
        let terms: Vec<&Formula> = s
            .clauses
            .iter()
            .flat_map(|c| &c.literals)
            .flat_map(|l| [&l.lhs, &l.rhs])
            .collect();
        let prog = Program::compile(&terms);
        let slot = prog
            .vars()
            .iter()
            .map(|v| {
                s.vars
                    .iter()
                    .position(|q| q == v)
                    .expect("matrix variables are quantified")
            })
            .collect();
        let mut roots = prog.roots().iter().copied();
        let clauses = s
            .clauses
            .iter()
            .map(|c| {
                c.literals
                    .iter()
                    .map(|l| (l.positive, roots.next().unwrap(), roots.next().unwrap()))
                    .collect()
            })
            .collect();
        Compiled {
            prog,
            slot,
            clauses,
        }
    }

    fn values(&self, a: &ModalAlgebra, tuple: &[WorldSet]) -> Vec<WorldSet> {
        let values: Vec<WorldSet> = self.slot.iter().map(|&i| tuple[i]).collect();
        eval_terms(a, &self.prog, &values)
    }

    fn fails(lits: &[(bool, usize, usize)], v: &[WorldSet]) -> bool {
        lits.iter().all(|&(pos, l, r)| (v[l] == v[r]) != pos)
    }

    /// Index of the first clause failing at `tuple`.
    pub(crate) fn failing_clause(&self, a: &ModalAlgebra, tuple: &[WorldSet]) -> Option<usize> {
        let v = self.values(a, tuple);
        self.clauses.iter().position(|lits| Self::fails(lits, &v))
    }

    pub(crate) fn clause_fails(&self, a: &ModalAlgebra, tuple: &[WorldSet], clause: usize) -> bool {
        Self::fails(&self.clauses[clause], &self.values(a, tuple))
    }
}

/// Evaluates `s` on `a`, reporting the first failing tuple and clause in
/// enumeration order.
pub fn eval_universal(a: &ModalAlgebra, s: &UniversalSentence, cap: u128) -> Result<Outcome> {
    let compiled = Compiled::new(s);
    let mut witness = None;
    for_each_tuple(a, s.vars.len(), cap, |t| {
        if let Some(clause) = compiled.failing_clause(a, t) {
            witness = Some(Witness {
                tuple: t.to_vec(),
                clause,
            });
            return false;
        }
        true
    })?;
    Ok(Outcome {
        holds: witness.is_none(),
        witness,
    })
}
