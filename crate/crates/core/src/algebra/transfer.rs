use std::collections::BTreeMap;

use super::sentence::Compiled;
use super::{
    complex_algebra, eval_universal, ModalAlgebra, UniversalSentence, Witness, DEFAULT_TUPLE_CAP,
};
use crate::decision::LogicSpec;
use crate::error::{Error, Result};
use crate::filtration::{filter, refine, ClusterRefinement, FiltrationResult, Variant};
use crate::formula::{subformula_closure, FormulaSet};
use crate::kripke::{circumference, require_transitive, validates_logic, Model};
use crate::worlds::WorldSet;

/// Output of [`transfer_countermodel`].
#[derive(Clone, Debug)]
pub struct Transfer {
    /// Complex algebra of the refined frame.
    pub algebra: ModalAlgebra,
    /// Tuple falsifying the same clause in `algebra`.
    pub witness: Witness,
    /// The model built from the input witness.
    pub source: Model,
    pub filtration: FiltrationResult,
    pub refinement: ClusterRefinement,
}

/// Moves a failure of `s` in an algebra over a frame of circumference at
/// most `n` to a failure in the complex algebra of a finite frame of
/// circumference at most `n`, through filtration and cluster refinement.
pub fn transfer_countermodel(
    a: &ModalAlgebra,
    n: usize,
    s: &UniversalSentence,
    witness: &Witness,
) -> Result<Transfer> {
    let f = a.base();
    require_transitive(f)?;
    if f.worlds() == 0 {
        return Err(Error::Precondition("the base frame has no worlds".into()));
    }
    let circ = circumference(f)?;
    if circ > n {
        return Err(Error::Precondition(format!(
            "base frame has circumference {circ}, more than n = {n}"
        )));
    }
    if witness.tuple.len() != s.vars().len() {
        return Err(Error::WitnessInvalid(format!(
            "{} values for {} quantified variables",
            witness.tuple.len(),
            s.vars().len()
        )));
    }
    if let Some(e) = witness.tuple.iter().find(|&&e| !a.contains(e)) {
        return Err(Error::WitnessInvalid(format!(
            "{e:?} is not in the carrier"
        )));
    }
    let Some(clause) = s.clauses().get(witness.clause) else {
        return Err(Error::WitnessInvalid(format!(
            "no clause {}",
            witness.clause
        )));
    };
    let compiled = Compiled::new(s);
    if !compiled.clause_fails(a, &witness.tuple, witness.clause) {
        return Err(Error::WitnessInvalid(format!(
            "clause {} holds at the given tuple",
            witness.clause
        )));
    }

    let valuation: BTreeMap<_, _> = s
        .vars()
        .iter()
        .cloned()
        .zip(witness.tuple.iter().copied())
        .collect();
    let source = Model::new(f.clone(), valuation)?;
    let phi: FormulaSet =
        subformula_closure(&clause.literals.iter().map(|l| l.biconditional()).collect());
    let filtration = filter(&source, &phi)?;
    let (refinement, refined) = refine(&filtration, n, Variant::Base)?;

    let algebra = complex_algebra(refined.frame())?;
    let tuple: Vec<WorldSet> = s.vars().iter().map(|v| refined.value(v)).collect();
    let new_witness = Witness {
        tuple,
        clause: witness.clause,
    };
    if !compiled.clause_fails(&algebra, &new_witness.tuple, new_witness.clause) {
        return Err(Error::Invariant(
            "transferred tuple satisfies the clause".into(),
        ));
    }
    if !validates_logic(algebra.base(), &LogicSpec::plain(n))? {
        return Err(Error::Invariant(
            "refined frame is outside the class".into(),
        ));
    }
    if eval_universal(&algebra, s, DEFAULT_TUPLE_CAP).is_ok_and(|o| o.holds) {
        return Err(Error::Invariant(
            "sentence holds in the transferred algebra".into(),
        ));
    }
    Ok(Transfer {
        algebra,
        witness: new_witness,
        source,
        filtration,
        refinement,
    })
}
