use std::collections::BTreeMap;

use super::FiniteSpace;
use crate::error::Result;
use crate::eval::Program;
use crate::formula::{Formula, Var};
use crate::worlds::WorldSet;

/// Which operator interprets `◇`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Semantics {
    /// `◇` is closure, `□` interior.
    Closure,
    /// `◇` is the derived set.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceModel {
    space: FiniteSpace,
    valuation: BTreeMap<Var, WorldSet>,
}

impl SpaceModel {
    pub fn new(space: FiniteSpace, valuation: BTreeMap<Var, WorldSet>) -> Result<SpaceModel> {
        for s in valuation.values() {
            s.check_within(space.points())?;
        }
        Ok(SpaceModel { space, valuation })
    }

    pub fn bare(space: FiniteSpace) -> SpaceModel {
        SpaceModel {
            space,
            valuation: BTreeMap::new(),
        }
    }

    pub fn with(
        mut self,
        var: &str,
        points: impl IntoIterator<Item = usize>,
    ) -> Result<SpaceModel> {
        let set: WorldSet = points.into_iter().collect();
        set.check_within(self.space.points())?;
        self.valuation.insert(Var::new(var), set);
        Ok(self)
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn valuation(&self) -> &BTreeMap<Var, WorldSet> {
        &self.valuation
    }

    pub fn truth_set(&self, f: &Formula, sem: Semantics) -> WorldSet {
        let prog = Program::single(f);
        let vals: Vec<WorldSet> = prog
            .vars()
            .iter()
            .map(|v| self.valuation.get(v).copied().unwrap_or_default())
            .collect();
        let s = &self.space;
        let out = match sem {
            Semantics::Closure => prog.eval_sets(s.universe(), &vals, |y| s.interior(y)),
            Semantics::Derived => prog.eval_sets(s.universe(), &vals, |y| s.co_derived(y)),
        };
        out[prog.root()]
    }
}

pub fn truth_set_c(m: &SpaceModel, f: &Formula) -> WorldSet {
    m.truth_set(f, Semantics::Closure)
}

pub fn truth_set_d(m: &SpaceModel, f: &Formula) -> WorldSet {
    m.truth_set(f, Semantics::Derived)
}

/// On a finite space both `□` operators quantify over a set of points:
/// the least neighbourhood, punctured for the derived-set reading.
fn scopes(s: &FiniteSpace, sem: Semantics) -> Vec<WorldSet> {
    match sem {
        Semantics::Closure => s.neighbourhoods().to_vec(),
        Semantics::Derived => s.punctured_neighbourhoods(),
    }
}

pub fn space_countermodel(
    s: &FiniteSpace,
    f: &Formula,
    sem: Semantics,
    cap: u128,
) -> Result<Option<SpaceModel>> {
    let prog = Program::single(f);
    let Some(vals) = prog.find_falsifying_valuation(&scopes(s, sem), cap)? else {
        return Ok(None);
    };
    let valuation = prog.vars().iter().cloned().zip(vals).collect();
    Ok(Some(SpaceModel::new(s.clone(), valuation)?))
}

pub fn valid_c(s: &FiniteSpace, f: &Formula, cap: u128) -> Result<bool> {
    Ok(space_countermodel(s, f, Semantics::Closure, cap)?.is_none())
}

pub fn valid_d(s: &FiniteSpace, f: &Formula, cap: u128) -> Result<bool> {
    Ok(space_countermodel(s, f, Semantics::Derived, cap)?.is_none())
}
