//! Modal formulas over the primitives `⊤ ¬ ∧ □`.
//!
//! Every other connective (`⊥ ∨ → ↔ ◇ □* ◇*`) is expanded into primitives
//! by its constructor, so the rest of the crate only ever sees the five
//! node kinds of [`Formula`].

mod closure;
pub(crate) mod parse;
mod print;
mod schemes;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use closure::{subformula_closure, FormulaSet};
pub use parse::{parse, ParseError};
pub use schemes::{fresh_args, named_axiom, scheme_c, scheme_d, scheme_instance, scheme_p, Axiom};

/// Propositional variable name (`p0`, `p1`, ... or any identifier).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    /// The indexed variable `p<i>`.
    pub fn indexed(i: usize) -> Self {
        Var(Arc::from(format!("p{i}").as_str()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(Var),
    Top,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Box(Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Self {
        Formula::Var(Var::new(name))
    }

    /// `p<i>`.
    pub fn p(i: usize) -> Self {
        Formula::Var(Var::indexed(i))
    }

    pub fn top() -> Self {
        Formula::Top
    }

    pub fn bot() -> Self {
        Formula::not(Formula::Top)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn boxed(f: Formula) -> Self {
        Formula::Box(Box::new(f))
    }

    /// `¬(¬a ∧ ¬b)`
    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::not(Formula::and(Formula::not(a), Formula::not(b)))
    }

    /// `¬(a ∧ ¬b)`
    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::not(Formula::and(a, Formula::not(b)))
    }

    /// `(a → b) ∧ (b → a)`
    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    /// `¬□¬f`
    pub fn dia(f: Formula) -> Self {
        Formula::not(Formula::boxed(Formula::not(f)))
    }

    /// `f ∧ □f`
    pub fn box_star(f: Formula) -> Self {
        Formula::and(f.clone(), Formula::boxed(f))
    }

    /// `f ∨ ◇f`
    pub fn dia_star(f: Formula) -> Self {
        Formula::or(f.clone(), Formula::dia(f))
    }

    /// Right-nested conjunction; `⊤` when empty.
    pub fn conj(items: impl IntoIterator<Item = Formula>) -> Self {
        let items: Vec<Formula> = items.into_iter().collect();
        items
            .into_iter()
            .rev()
            .reduce(|acc, f| Formula::and(f, acc))
            .unwrap_or(Formula::Top)
    }

    /// Right-nested disjunction; `⊥` when empty.
    pub fn disj(items: impl IntoIterator<Item = Formula>) -> Self {
        let items: Vec<Formula> = items.into_iter().collect();
        items
            .into_iter()
            .rev()
            .reduce(|acc, f| Formula::or(f, acc))
            .unwrap_or_else(Formula::bot)
    }

    /// Number of nodes of the (primitive) tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Top => 1,
            Formula::Not(f) | Formula::Box(f) => 1 + f.size(),
            Formula::And(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Top => 0,
            Formula::Not(f) => f.depth(),
            Formula::Box(f) => 1 + f.depth(),
            Formula::And(a, b) => a.depth().max(b.depth()),
        }
    }

    /// Immediate subformulas.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Var(_) | Formula::Top => vec![],
            Formula::Not(f) | Formula::Box(f) => vec![f],
            Formula::And(a, b) => vec![a, b],
        }
    }

    /// Variables occurring in the formula, sorted by name.
    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Top => {}
            Formula::Not(f) | Formula::Box(f) => f.collect_vars(out),
            Formula::And(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Uniform substitution of formulas for variables.
    pub fn substitute(&self, sub: &impl Fn(&Var) -> Option<Formula>) -> Formula {
        match self {
            Formula::Var(v) => sub(v).unwrap_or_else(|| self.clone()),
            Formula::Top => Formula::Top,
            Formula::Not(f) => Formula::not(f.substitute(sub)),
            Formula::Box(f) => Formula::boxed(f.substitute(sub)),
            Formula::And(a, b) => Formula::and(a.substitute(sub), b.substitute(sub)),
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse(s)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", print::primitive(self))
    }
}

/// Prints with derived connectives restored where the tree matches their
/// expansion; re-parsing yields the identical tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::sugared(self))
    }
}

impl Formula {
    /// Canonical primitive-only rendering (`top ~ & box`).
    pub fn to_primitive_string(&self) -> String {
        print::primitive(self)
    }
}
