use std::collections::BTreeMap;

use super::Frame;
use crate::error::{Error, Result};
use crate::eval::Program;
use crate::formula::{scheme_p, Formula, Var};
use crate::worlds::WorldSet;

/// A frame with a valuation. Variables missing from the map denote `∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    frame: Frame,
    valuation: BTreeMap<Var, WorldSet>,
}

impl Model {
    pub fn new(frame: Frame, valuation: BTreeMap<Var, WorldSet>) -> Result<Model> {
        for set in valuation.values() {
            set.check_within(frame.worlds())?;
        }
        Ok(Model { frame, valuation })
    }

    /// Model with the empty valuation.
    pub fn bare(frame: Frame) -> Model {
        Model {
            frame,
            valuation: BTreeMap::new(),
        }
    }

    pub fn with(mut self, var: &str, worlds: impl IntoIterator<Item = usize>) -> Result<Model> {
        let set: WorldSet = worlds.into_iter().collect();
        set.check_within(self.frame.worlds())?;
        self.valuation.insert(Var::new(var), set);
        Ok(self)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn valuation(&self) -> &BTreeMap<Var, WorldSet> {
        &self.valuation
    }

    pub fn value(&self, var: &Var) -> WorldSet {
        self.valuation.get(var).copied().unwrap_or_default()
    }

    pub fn truth_set(&self, f: &Formula) -> WorldSet {
        truth_set(self, f)
    }

    /// Truth sets of several formulas, sharing common subformulas.
    pub fn truth_sets(&self, fs: &[&Formula]) -> Vec<WorldSet> {
        let prog = Program::compile(fs);
        let vals = self.eval_program(&prog);
        prog.roots().iter().map(|&r| vals[r]).collect()
    }

    pub(crate) fn eval_program(&self, prog: &Program) -> Vec<WorldSet> {
        let valuation: Vec<WorldSet> = prog.vars().iter().map(|v| self.value(v)).collect();
        prog.eval_sets(self.frame.universe(), &valuation, |s| self.frame.box_op(s))
    }

    pub fn is_true(&self, f: &Formula) -> bool {
        self.truth_set(f) == self.frame.universe()
    }
}

pub fn truth_set(m: &Model, f: &Formula) -> WorldSet {
    let prog = Program::single(f);
    m.eval_program(&prog)[prog.root()]
}

/// Decides `x ⊨ Pₙ(args)` by searching for an explicit path
/// `x = x₀ R x₁ R … R xₙ₊₁` with `argsᵢ` at `xᵢ` for `1 ≤ i ≤ n` and
/// `args₀` at `xₙ₊₁`.
pub fn pn_path_oracle(m: &Model, n: usize, args: &[Formula], x: usize) -> Result<bool> {
    // Arity check shared with the scheme itself.
    scheme_p(n, args)?;
    if x >= m.frame().worlds() {
        return Err(Error::WorldOutOfRange {
            world: x,
            size: m.frame().worlds(),
        });
    }
    let mut targets: Vec<WorldSet> = args[1..].iter().map(|a| m.truth_set(a)).collect();
    targets.push(m.truth_set(&args[0]));
    Ok(walk(m.frame(), &targets, x))
}

fn walk(f: &Frame, targets: &[WorldSet], at: usize) -> bool {
    let Some((first, rest)) = targets.split_first() else {
        return true;
    };
    (0..f.worlds()).any(|y| f.has_edge(at, y) && first.contains(y) && walk(f, rest, y))
}
