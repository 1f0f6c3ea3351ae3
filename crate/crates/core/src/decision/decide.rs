use serde::{Deserialize, Serialize};

use super::{enumerate_frames, Extension, LogicSpec};
use crate::error::{Error, Result};
use crate::formula::{scheme_c, subformula_closure, Formula, FormulaSet};
use crate::kripke::{frame_countermodel, validates_logic, Frame, Model, DEFAULT_VALUATION_CAP};

fn pow2(k: usize) -> u128 {
    if k >= 128 {
        u128::MAX
    } else {
        1u128 << k
    }
}

/// `2^k` for `k` the number of primitive subformulas of `φ`, saturating.
pub fn completeness_bound(phi: &Formula) -> u128 {
    pow2(subformula_closure(&FormulaSet::from_iter([phi.clone()])).len())
}

/// Closure under subformulas of `{□ψ, □¬ψ : ψ ∈ sub(Σ)}`.
pub fn m_closure(sigma: &FormulaSet) -> FormulaSet {
    let base = subformula_closure(sigma);
    let mut seeds = FormulaSet::new();
    for psi in &base {
        seeds.insert(Formula::boxed(psi.clone()));
        seeds.insert(Formula::boxed(Formula::not(psi.clone())));
    }
    subformula_closure(&seeds)
}

/// The formula set whose filtrations bound countermodel size for `spec`.
pub fn bound_formulas(spec: &LogicSpec, phi: &Formula) -> FormulaSet {
    let sigma = FormulaSet::from_iter([phi.clone()]);
    let mut set = if spec.has(Extension::M) {
        m_closure(&sigma)
    } else {
        subformula_closure(&sigma)
    };
    if spec.has(Extension::E) {
        set.insert(Formula::dia(Formula::boxed(Formula::bot())));
        set = subformula_closure(&set);
    }
    set
}

/// How the number of filtration classes is bounded.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundMode {
    /// `2^k`, `k` the size of the primitive subformula set.
    #[default]
    Primitive,
    /// `2^(v + b)` with `v` variables and `b` boxed formulas in the set:
    /// the truth of every member is a Boolean function of those, so that many
    /// bits already determine a class.
    Reduced,
}

pub fn completeness_bound_for(spec: &LogicSpec, phi: &Formula, mode: BoundMode) -> u128 {
    let set = bound_formulas(spec, phi);
    match mode {
        BoundMode::Primitive => pow2(set.len()),
        BoundMode::Reduced => pow2(
            set.iter()
                .filter(|f| matches!(f, Formula::Var(_) | Formula::Box(_)))
                .count(),
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_worlds: usize,
    pub max_frames: usize,
    pub valuation_cap: u128,
    pub bound_mode: BoundMode,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_worlds: 5,
            max_frames: 1_000_000,
            valuation_cap: DEFAULT_VALUATION_CAP,
            bound_mode: BoundMode::Primitive,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    Theorem,
    NonTheorem,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub countermodel: Option<Model>,
    /// Largest frame size the search covered.
    pub searched_bound: usize,
    /// The search covered every frame up to the completeness bound.
    pub exhaustive: bool,
    pub completeness_bound: u128,
    pub frames_checked: usize,
    /// Frames whose valuation space exceeded the cap.
    pub frames_skipped: usize,
}

/// Searches the frames of `spec` for a countermodel to `φ`, smallest first.
///
/// Without `exhaustive` the search stops at `budget.max_worlds` and never
/// claims theoremhood. With it, a `Theorem` verdict is returned only when
/// every frame up to the completeness bound was checked in full.
pub fn decide(
    spec: &LogicSpec,
    phi: &Formula,
    budget: &Budget,
    exhaustive: bool,
) -> Result<Verdict> {
    if budget.max_worlds == 0 || budget.max_frames == 0 || budget.valuation_cap == 0 {
        return Err(Error::Precondition("budget limits must be positive".into()));
    }
    let bound = completeness_bound_for(spec, phi, budget.bound_mode);
    let limit = if exhaustive {
        budget
            .max_worlds
            .min(usize::try_from(bound).unwrap_or(usize::MAX))
    } else {
        budget.max_worlds
    };
    let mut verdict = Verdict {
        kind: VerdictKind::Unknown,
        countermodel: None,
        searched_bound: 0,
        exhaustive: false,
        completeness_bound: bound,
        frames_checked: 0,
        frames_skipped: 0,
    };
    let mut stopped = false;
    for frame in enumerate_frames(limit, spec) {
        if verdict.frames_checked == budget.max_frames {
            stopped = true;
            verdict.searched_bound = frame.worlds() - 1;
            break;
        }
        verdict.frames_checked += 1;
        match frame_countermodel(&frame, phi, budget.valuation_cap) {
            Ok(Some(model)) => {
                check_countermodel(spec, phi, &model)?;
                verdict.searched_bound = frame.worlds();
                verdict.kind = VerdictKind::NonTheorem;
                verdict.countermodel = Some(model);
                return Ok(verdict);
            }
            Ok(None) => {}
            Err(Error::BudgetExceeded { .. }) => verdict.frames_skipped += 1,
            Err(e) => return Err(e),
        }
    }
    if !stopped {
        verdict.searched_bound = limit;
    }
    let covered = !stopped && verdict.frames_skipped == 0 && (limit as u128) >= bound;
    if exhaustive && covered {
        verdict.kind = VerdictKind::Theorem;
        verdict.exhaustive = true;
    }
    Ok(verdict)
}

fn check_countermodel(spec: &LogicSpec, phi: &Formula, m: &Model) -> Result<()> {
    if !validates_logic(m.frame(), spec)? {
        return Err(Error::Invariant(
            "countermodel frame is outside the logic".into(),
        ));
    }
    if m.is_true(phi) {
        return Err(Error::Invariant(
            "countermodel does not falsify the formula".into(),
        ));
    }
    Ok(())
}

/// A `Cₙ` instance with a falsifying model on a single `(n+1)`-cluster, whose
/// frame belongs to `K4Cₘ`.
pub fn separate_logics(n: usize, m: usize) -> Result<(Formula, Model)> {
    if n >= m {
        return Err(Error::Precondition(format!(
            "need n < m, got n = {n}, m = {m}"
        )));
    }
    let args: Vec<Formula> = (0..=n).map(Formula::p).collect();
    let phi = scheme_c(n, &args, false)?;
    let mut model = Model::bare(Frame::cluster(n + 1));
    for i in 0..=n {
        model = model.with(&format!("p{i}"), [i])?;
    }
    if model.is_true(&phi) {
        return Err(Error::Invariant(
            "cycle labelling does not falsify the scheme".into(),
        ));
    }
    if !validates_logic(model.frame(), &LogicSpec::plain(m))? {
        return Err(Error::Invariant(
            "separating frame is outside the larger logic".into(),
        ));
    }
    Ok((phi, model))
}
