//! Slow, obviously-correct reference implementations used as oracles.
#![allow(dead_code)]

use std::collections::BTreeMap;

use k4c_core::topology::FiniteSpace;
use k4c_core::{Formula, Frame, Var, WorldSet};

pub type Valuation = BTreeMap<Var, WorldSet>;

/// Truth of `f` at `x`, by direct recursion on the definition.
pub fn holds_at(frame: &Frame, val: &Valuation, f: &Formula, x: usize) -> bool {
    match f {
        Formula::Var(v) => val.get(v).is_some_and(|s| s.contains(x)),
        Formula::Top => true,
        Formula::Not(g) => !holds_at(frame, val, g, x),
        Formula::And(a, b) => holds_at(frame, val, a, x) && holds_at(frame, val, b, x),
        Formula::Box(g) => (0..frame.worlds())
            .filter(|&y| frame.has_edge(x, y))
            .all(|y| holds_at(frame, val, g, y)),
    }
}

pub fn naive_truth_set(frame: &Frame, val: &Valuation, f: &Formula) -> WorldSet {
    (0..frame.worlds())
        .filter(|&x| holds_at(frame, val, f, x))
        .collect()
}

/// Calls `visit` on every valuation of the variables of `f` over `worlds`
/// worlds; stops at the first `false`.
pub fn for_each_valuation(worlds: usize, f: &Formula, mut visit: impl FnMut(&Valuation) -> bool) {
    let vars: Vec<Var> = f.vars().into_iter().collect();
    let bits = worlds * vars.len();
    assert!(bits <= 24, "naive valuation space too large");
    for code in 0..1u64 << bits {
        let val: Valuation = vars
            .iter()
            .enumerate()
            .map(|(i, v)| {
                (
                    v.clone(),
                    WorldSet::from_bits(code >> (i * worlds) & ((1 << worlds) - 1)),
                )
            })
            .collect();
        if !visit(&val) {
            return;
        }
    }
}

pub fn naive_frame_valid(frame: &Frame, f: &Formula) -> bool {
    let mut ok = true;
    for_each_valuation(frame.worlds(), f, |val| {
        ok = (0..frame.worlds()).all(|x| holds_at(frame, val, f, x));
        ok
    });
    ok
}

/// Length of a longest simple cycle, loops counting as 1; by exhaustive
/// path search from each cycle's least world.
pub fn longest_cycle(f: &Frame) -> usize {
    fn walk(f: &Frame, start: usize, at: usize, seen: u64, len: usize, best: &mut usize) {
        for y in 0..f.worlds() {
            if !f.has_edge(at, y) {
                continue;
            }
            if y == start {
                *best = (*best).max(len);
            } else if y > start && seen >> y & 1 == 0 {
                walk(f, start, y, seen | 1 << y, len + 1, best);
            }
        }
    }
    let mut best = 0;
    for s in 0..f.worlds() {
        walk(f, s, s, 1 << s, 1, &mut best);
    }
    best
}

/// Interior as the union of the open sets inside `y`.
pub fn naive_interior(s: &FiniteSpace, y: WorldSet) -> WorldSet {
    s.opens()
        .iter()
        .filter(|o| o.is_subset(y))
        .fold(WorldSet::EMPTY, |acc, o| acc.union(*o))
}

/// Truth set under the closure reading, interior computed from the opens.
pub fn naive_truth_c(s: &FiniteSpace, val: &Valuation, f: &Formula) -> WorldSet {
    let all = s.universe();
    match f {
        Formula::Var(v) => val.get(v).copied().unwrap_or_default(),
        Formula::Top => all,
        Formula::Not(g) => all.difference(naive_truth_c(s, val, g)),
        Formula::And(a, b) => naive_truth_c(s, val, a).intersection(naive_truth_c(s, val, b)),
        Formula::Box(g) => naive_interior(s, naive_truth_c(s, val, g)),
    }
}

pub fn naive_valid_c(s: &FiniteSpace, f: &Formula) -> bool {
    let mut ok = true;
    for_each_valuation(s.points(), f, |val| {
        ok = naive_truth_c(s, val, f) == s.universe();
        ok
    });
    ok
}

/// Derived set from the definition: `x` is a limit point of `y` when every
/// open set around `x` meets `y` outside `x`.
pub fn naive_derived(s: &FiniteSpace, y: WorldSet) -> WorldSet {
    (0..s.points())
        .filter(|&x| {
            s.opens()
                .iter()
                .filter(|o| o.contains(x))
                .all(|o| o.without(x).intersects(y))
        })
        .collect()
}

/// `Cₙ` at fresh variables `p0 … pn`.
pub fn c_instance(n: usize, star: bool) -> Formula {
    let args: Vec<Formula> = (0..=n).map(Formula::p).collect();
    k4c_core::formula::scheme_c(n, &args, star).unwrap()
}

/// Canonical forms of all transitive relations on `1..=5` worlds, found by
/// listing every relation and minimizing over all relabellings.
pub fn brute_transitive_classes() -> &'static std::collections::BTreeSet<Frame> {
    static CLASSES: std::sync::OnceLock<std::collections::BTreeSet<Frame>> =
        std::sync::OnceLock::new();
    CLASSES.get_or_init(|| {
        let mut seen = std::collections::BTreeSet::new();
        for n in 1..=5usize {
            for code in 0..1u64 << (n * n) {
                let rows = (0..n)
                    .map(|x| WorldSet::from_bits(code >> (x * n) & ((1 << n) - 1)))
                    .collect();
                let f = Frame::from_rows(rows).unwrap();
                if f.is_transitive() {
                    seen.insert(k4c_core::kripke::brute_canonical(&f));
                }
            }
        }
        seen
    })
}
