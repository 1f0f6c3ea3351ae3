//! Transitive filtration through a subformula-closed set and the
//! cluster refinements that cut circumference down to `n`.

mod refine;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::eval::Program;
use crate::formula::{Formula, FormulaSet};
use crate::kripke::{require_transitive, Frame, Model};
use crate::worlds::WorldSet;

pub use refine::{critical_point, refine, ClusterRefinement, CriticalRecord, LinearOrder, Variant};

/// Quotient of a model by agreement on `Φ`.
#[derive(Clone, Debug)]
pub struct FiltrationResult {
    source: Model,
    phi: FormulaSet,
    class_of: Vec<usize>,
    classes: Vec<WorldSet>,
    r_phi: Frame,
    // phi_truth[i]: classes at which the i-th member of Φ holds.
    phi_truth: Vec<WorldSet>,
}

impl FiltrationResult {
    pub fn source(&self) -> &Model {
        &self.source
    }

    pub fn phi(&self) -> &FormulaSet {
        &self.phi
    }

    pub fn class_of(&self, world: usize) -> usize {
        self.class_of[world]
    }

    pub fn classes(&self) -> &[WorldSet] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Least world of a class.
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class].first().expect("classes are non-empty")
    }

    /// `R_Φ` as a frame on class indices.
    pub fn r_phi(&self) -> &Frame {
        &self.r_phi
    }

    /// Classes at which the `i`-th member of `Φ` is true.
    pub fn phi_truth(&self, i: usize) -> WorldSet {
        self.phi_truth[i]
    }

    pub fn class_truth(&self, class: usize, f: &Formula) -> Option<bool> {
        self.phi
            .index_of(f)
            .map(|i| self.phi_truth[i].contains(class))
    }

    /// Image of a world set under `x ↦ [x]`.
    pub fn image(&self, worlds: WorldSet) -> WorldSet {
        worlds.iter().map(|x| self.class_of[x]).collect()
    }

    /// `V_Φ`: variables of `Φ` are true at the classes where they hold.
    pub fn valuation(&self) -> BTreeMap<crate::formula::Var, WorldSet> {
        self.phi
            .iter()
            .enumerate()
            .filter_map(|(i, f)| match f {
                Formula::Var(v) => Some((v.clone(), self.phi_truth[i])),
                _ => None,
            })
            .collect()
    }

    /// The filtered model `(W_Φ, R_Φ, V_Φ)`.
    pub fn model(&self) -> Model {
        Model::new(self.r_phi.clone(), self.valuation()).expect("classes index the frame")
    }
}

/// Filters `m` through `phi` with the transitive filtration:
/// `[x] R_Φ [y]` iff `φ` and `□φ` hold at `y` whenever `□φ ∈ Φ` holds at `x`.
pub fn filter(m: &Model, phi: &FormulaSet) -> Result<FiltrationResult> {
    require_transitive(m.frame())?;
    if let Some(missing) = phi.first_unclosed() {
        return Err(Error::PhiNotClosed(missing.to_string()));
    }
    let members: Vec<&Formula> = phi.iter().collect();
    let prog = Program::compile(&members);
    let vals = m.eval_program(&prog);
    let truth: Vec<WorldSet> = prog.roots().iter().map(|&r| vals[r]).collect();

    let n = m.frame().worlds();
    let signature = |x: usize| -> Vec<bool> { truth.iter().map(|t| t.contains(x)).collect() };
    let mut class_of = vec![0; n];
    let mut classes: Vec<WorldSet> = Vec::new();
    let mut seen: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
    for (x, slot) in class_of.iter_mut().enumerate() {
        let c = *seen.entry(signature(x)).or_insert_with(|| {
            classes.push(WorldSet::EMPTY);
            classes.len() - 1
        });
        classes[c].insert(x);
        *slot = c;
    }
    let k = classes.len();
    let phi_truth: Vec<WorldSet> = truth
        .iter()
        .map(|t| {
            (0..k)
                .filter(|&c| t.contains(classes[c].first().unwrap()))
                .collect()
        })
        .collect();

    // Pairs (□φ, φ) by index into Φ.
    let boxes: Vec<(usize, usize)> = members
        .iter()
        .enumerate()
        .filter_map(|(i, f)| match f {
            Formula::Box(g) => Some((i, phi.index_of(g).expect("Φ is closed"))),
            _ => None,
        })
        .collect();
    let mut rows = vec![WorldSet::EMPTY; k];
    for (a, row) in rows.iter_mut().enumerate() {
        for b in 0..k {
            let ok = boxes.iter().all(|&(bi, gi)| {
                !phi_truth[bi].contains(a)
                    || (phi_truth[gi].contains(b) && phi_truth[bi].contains(b))
            });
            if ok {
                row.insert(b);
            }
        }
    }
    let r_phi = Frame::from_rows(rows)?;
    if !r_phi.is_transitive() {
        return Err(Error::Invariant(
            "filtered relation is not transitive".into(),
        ));
    }
    Ok(FiltrationResult {
        source: m.clone(),
        phi: phi.clone(),
        class_of,
        classes,
        r_phi,
        phi_truth,
    })
}

/// Conjunction of the members of `Φ` true on the class and the negations of
/// those false on it, in `Φ` order.
pub fn class_formula(fr: &FiltrationResult, class: usize) -> Formula {
    Formula::conj(fr.phi.iter().enumerate().map(|(i, f)| {
        if fr.phi_truth[i].contains(class) {
            f.clone()
        } else {
            Formula::not(f.clone())
        }
    }))
}
