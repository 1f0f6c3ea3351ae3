//! Seeded random frames, models, formulas and formula sets for tests,
//! benches and the command line.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::formula::{subformula_closure, Formula, FormulaSet, Var};
use crate::kripke::{clusters, Frame, Model};
use crate::worlds::WorldSet;

/// What final clusters must look like.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum Finals {
    #[default]
    Any,
    /// No degenerate final cluster, so the frame is serial.
    NonDegenerate,
    /// Every final cluster is a reflexive point.
    Simple,
    /// Every final cluster is an irreflexive point.
    Degenerate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FrameParams {
    /// Upper bound on the number of worlds; at least one world is produced.
    pub max_worlds: usize,
    /// Largest cluster, hence the circumference bound.
    pub max_cluster: usize,
    pub all_reflexive: bool,
    /// Chain of clusters rather than a random poset.
    pub linear: bool,
    /// Chance of an edge between two clusters before closing transitively.
    pub edge_prob: f64,
    pub finals: Finals,
}

impl Default for FrameParams {
    fn default() -> Self {
        FrameParams {
            max_worlds: 6,
            max_cluster: 2,
            all_reflexive: false,
            linear: false,
            edge_prob: 0.4,
            finals: Finals::Any,
        }
    }
}

/// A random transitive frame with circumference at most `p.max_cluster`,
/// worlds shuffled.
pub fn random_frame(rng: &mut impl Rng, p: &FrameParams) -> Result<Frame> {
    if p.max_worlds == 0 {
        return Err(Error::Precondition("need at least one world".into()));
    }
    if p.max_cluster == 0
        && (p.all_reflexive || matches!(p.finals, Finals::NonDegenerate | Finals::Simple))
    {
        return Err(Error::Precondition(
            "reflexive worlds need a cluster bound of at least 1".into(),
        ));
    }
    if p.all_reflexive && p.finals == Finals::Degenerate {
        return Err(Error::Precondition(
            "reflexive frames have no degenerate clusters".into(),
        ));
    }
    let target = rng.gen_range(1..=p.max_worlds);
    let mut sizes = Vec::new();
    let mut total = 0;
    while total < target {
        let s = rng.gen_range(1..=p.max_cluster.max(1).min(target - total));
        sizes.push(s);
        total += s;
    }
    let k = sizes.len();
    // above[i]: clusters strictly above cluster i, later in the order.
    let mut above = vec![WorldSet::EMPTY; k];
    for i in (0..k).rev() {
        for j in i + 1..k {
            if p.linear || rng.gen_bool(p.edge_prob) {
                above[i] = above[i].union(above[j]).with(j);
            }
        }
    }
    let mut reflexive: Vec<bool> = sizes
        .iter()
        .map(|&s| s > 1 || (p.max_cluster > 0 && (p.all_reflexive || rng.gen_bool(0.5))))
        .collect();
    for i in (0..k).filter(|&i| above[i].is_empty()) {
        match p.finals {
            Finals::Any => {}
            Finals::NonDegenerate => reflexive[i] = true,
            Finals::Simple => {
                sizes[i] = 1;
                reflexive[i] = true;
            }
            Finals::Degenerate => {
                sizes[i] = 1;
                reflexive[i] = false;
            }
        }
    }
    let mut start = vec![0; k];
    let mut n = 0;
    for i in 0..k {
        start[i] = n;
        n += sizes[i];
    }
    let block = |i: usize| -> WorldSet { (start[i]..start[i] + sizes[i]).collect() };
    let mut rows = vec![WorldSet::EMPTY; n];
    for i in 0..k {
        let mut row = above[i]
            .iter()
            .fold(WorldSet::EMPTY, |acc, j| acc.union(block(j)));
        if reflexive[i] {
            row = row.union(block(i));
        }
        for x in block(i) {
            rows[x] = row;
        }
    }
    let frame = Frame::from_rows(rows)?;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let shuffled = frame.permute(&perm);
    debug_assert!(shuffled.is_transitive());
    debug_assert!(clusters(&shuffled).is_ok());
    Ok(shuffled)
}

/// A random subset of the worlds of `f`.
pub fn random_set(rng: &mut impl Rng, worlds: usize) -> WorldSet {
    (0..worlds).filter(|_| rng.gen_bool(0.5)).collect()
}

/// Each of `vars` true on a random set of worlds.
pub fn random_model(rng: &mut impl Rng, frame: Frame, vars: &[Var]) -> Model {
    let valuation: BTreeMap<Var, WorldSet> = vars
        .iter()
        .map(|v| (v.clone(), random_set(rng, frame.worlds())))
        .collect();
    Model::new(frame, valuation).expect("sets lie inside the frame")
}

/// `p0 .. p{k-1}`.
pub fn vars(k: usize) -> Vec<Var> {
    (0..k).map(Var::indexed).collect()
}

/// A random formula over `vars` of depth at most `depth`, using every
/// connective of the surface syntax.
pub fn random_formula(rng: &mut impl Rng, vars: &[Var], depth: usize) -> Formula {
    let leaf = |rng: &mut dyn rand::RngCore| -> Formula {
        match rng.gen_range(0..10) {
            0 => Formula::Top,
            1 => Formula::bot(),
            _ => Formula::Var(vars[rng.gen_range(0..vars.len())].clone()),
        }
    };
    if depth == 0 || vars.is_empty() || rng.gen_bool(0.25) {
        if vars.is_empty() {
            return Formula::Top;
        }
        return leaf(rng);
    }
    let d = depth - 1;
    match rng.gen_range(0..8) {
        0 => Formula::not(random_formula(rng, vars, d)),
        1 => Formula::and(random_formula(rng, vars, d), random_formula(rng, vars, d)),
        2 => Formula::or(random_formula(rng, vars, d), random_formula(rng, vars, d)),
        3 => Formula::imp(random_formula(rng, vars, d), random_formula(rng, vars, d)),
        4 | 5 => Formula::boxed(random_formula(rng, vars, d)),
        _ => Formula::dia(random_formula(rng, vars, d)),
    }
}

/// A subformula-closed set of at most `max_size` members, grown from random
/// formulas over `vars`. Always contains at least one variable or `⊤`.
pub fn random_phi(rng: &mut impl Rng, vars: &[Var], max_size: usize) -> FormulaSet {
    let mut phi = FormulaSet::new();
    for _ in 0..8 {
        let depth = rng.gen_range(1..=3);
        let f = random_formula(rng, vars, depth);
        let mut grown = phi.clone();
        grown.insert(f);
        let closed = subformula_closure(&grown);
        if closed.len() <= max_size {
            phi = closed;
        }
    }
    if phi.is_empty() {
        let f = vars
            .first()
            .map_or(Formula::Top, |v| Formula::Var(v.clone()));
        phi = subformula_closure(&[f].into_iter().collect());
    }
    phi
}
