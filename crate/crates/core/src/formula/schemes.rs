//! Axiom schemes used throughout the crate, instantiated at formulas.

use std::fmt;
use std::str::FromStr;

use super::Formula;
use crate::error::{Error, Result};

fn check_arity(n: usize, args: &[Formula]) -> Result<()> {
    if args.len() == n + 1 {
        Ok(())
    } else {
        Err(Error::ArityMismatch {
            expected: n + 1,
            found: args.len(),
        })
    }
}

/// Pairwise disjointness `⋀_{i<j≤n} ¬(argsᵢ ∧ argsⱼ)`, conjuncts in
/// lexicographic `(i, j)` order, nested to the right; `⊤` for `n = 0`.
pub fn scheme_d(n: usize, args: &[Formula]) -> Result<Formula> {
    check_arity(n, args)?;
    let mut conjuncts = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            conjuncts.push(Formula::not(Formula::and(args[i].clone(), args[j].clone())));
        }
    }
    Ok(Formula::conj(conjuncts))
}

/// Path formula: `P₀(a₀) = ◇a₀` and
/// `Pₙ(a₀, a₁, …, aₙ) = ◇(a₁ ∧ Pₙ₋₁(a₀, a₂, …, aₙ))`.
pub fn scheme_p(n: usize, args: &[Formula]) -> Result<Formula> {
    check_arity(n, args)?;
    Ok(path(&args[0], &args[1..]))
}

fn path(last: &Formula, middle: &[Formula]) -> Formula {
    match middle.split_first() {
        None => Formula::dia(last.clone()),
        Some((head, rest)) => Formula::dia(Formula::and(head.clone(), path(last, rest))),
    }
}

/// Cycle-bounding axiom `□*Dₙ → (◇a₀ → ◇(a₀ ∧ ¬Pₙ))`; with `star` the
/// outermost `◇` of the consequent becomes `◇*`.
pub fn scheme_c(n: usize, args: &[Formula], star: bool) -> Result<Formula> {
    let d = scheme_d(n, args)?;
    let p = scheme_p(n, args)?;
    let escape = Formula::and(args[0].clone(), Formula::not(p));
    let consequent = if star {
        Formula::dia_star(escape)
    } else {
        Formula::dia(escape)
    };
    Ok(Formula::imp(
        Formula::box_star(d),
        Formula::imp(Formula::dia(args[0].clone()), consequent),
    ))
}

/// Named schemes, instantiated at `p0`, `p1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    K,
    Four,
    WFour,
    T,
    D,
    Lob,
    LobDual,
    Grz,
    GrzBox,
    DiGrz,
    M,
    MEquiv,
    E,
    Point3,
}

impl Axiom {
    pub const ALL: [Axiom; 14] = [
        Axiom::K,
        Axiom::Four,
        Axiom::WFour,
        Axiom::T,
        Axiom::D,
        Axiom::Lob,
        Axiom::LobDual,
        Axiom::Grz,
        Axiom::GrzBox,
        Axiom::DiGrz,
        Axiom::M,
        Axiom::MEquiv,
        Axiom::E,
        Axiom::Point3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::K => "k",
            Axiom::Four => "four",
            Axiom::WFour => "wfour",
            Axiom::T => "t",
            Axiom::D => "d",
            Axiom::Lob => "lob",
            Axiom::LobDual => "lobdual",
            Axiom::Grz => "grz",
            Axiom::GrzBox => "grzbox",
            Axiom::DiGrz => "digrz",
            Axiom::M => "m",
            Axiom::MEquiv => "mequiv",
            Axiom::E => "e",
            Axiom::Point3 => "point3",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['_', '-', '.'], "");
        let alias = match key.as_str() {
            "4" => "four",
            "w4" => "wfour",
            "3" => "point3",
            "lobdual" | "duallob" => "lobdual",
            other => other,
        };
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == alias)
            .ok_or_else(|| Error::UnknownAxiom(s.to_string()))
    }
}

pub fn named_axiom(axiom: Axiom) -> Formula {
    use Formula as F;
    let p = F::p(0);
    let q = F::p(1);
    let bx = F::boxed;
    let dia = F::dia;
    match axiom {
        Axiom::K => F::imp(bx(F::imp(p.clone(), q.clone())), F::imp(bx(p), bx(q))),
        Axiom::Four => F::imp(bx(p.clone()), bx(bx(p))),
        Axiom::WFour => F::imp(dia(dia(p.clone())), F::dia_star(p)),
        Axiom::T => F::imp(bx(p.clone()), p),
        Axiom::D => dia(F::Top),
        Axiom::Lob => F::imp(bx(F::imp(bx(p.clone()), p.clone())), bx(p)),
        Axiom::LobDual => F::imp(dia(p.clone()), dia(F::and(p.clone(), F::not(dia(p))))),
        Axiom::Grz => F::imp(
            bx(F::imp(bx(F::imp(p.clone(), bx(p.clone()))), p.clone())),
            p,
        ),
        Axiom::GrzBox => F::imp(
            bx(F::imp(bx(F::imp(p.clone(), bx(p.clone()))), p.clone())),
            bx(p),
        ),
        Axiom::DiGrz => F::imp(
            dia(p.clone()),
            dia(F::and(
                p.clone(),
                F::not(dia(F::and(F::not(p.clone()), dia(p)))),
            )),
        ),
        Axiom::M => F::imp(bx(dia(p.clone())), dia(bx(p))),
        Axiom::MEquiv => dia(F::or(bx(p.clone()), bx(F::not(p)))),
        Axiom::E => F::or(bx(F::bot()), dia(bx(F::bot()))),
        Axiom::Point3 => F::or(
            bx(F::imp(F::and(p.clone(), bx(p.clone())), q.clone())),
            bx(F::imp(F::and(q.clone(), bx(q.clone())), p)),
        ),
    }
}

/// Fresh variables `p0 … pn`.
pub fn fresh_args(n: usize) -> Vec<Formula> {
    (0..=n).map(Formula::p).collect()
}

/// A scheme by name (`d`, `p`, `c`, `cstar`) at `p0 … pn`.
pub fn scheme_instance(name: &str, n: usize) -> Result<Formula> {
    let args = fresh_args(n);
    match name.to_ascii_lowercase().as_str() {
        "d" => scheme_d(n, &args),
        "p" => scheme_p(n, &args),
        "c" => scheme_c(n, &args, false),
        "cstar" | "c*" => scheme_c(n, &args, true),
        _ => Err(Error::UnknownAxiom(name.to_string())),
    }
}
