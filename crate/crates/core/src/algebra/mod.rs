//! Finite modal algebras, always held concretely as a family of world sets
//! of some base frame closed under complement, intersection and `[R]`.

mod sentence;
mod transfer;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::eval::Program;
use crate::formula::Formula;
use crate::kripke::Frame;
use crate::worlds::WorldSet;

pub use sentence::{
    eval_universal, parse_sentence, Clause, Literal, Outcome, UniversalSentence, Witness,
};
pub use transfer::{transfer_countermodel, Transfer};

/// Largest base frame whose full powerset is materialized.
pub const MAX_COMPLEX_WORLDS: usize = 20;

/// Default cap on tuples visited when quantifying over a carrier.
pub const DEFAULT_TUPLE_CAP: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModalAlgebra {
    base: Frame,
    // Sorted ascending by bit pattern.
    carrier: Vec<WorldSet>,
    // Atoms ordered by least world.
    atoms: Vec<WorldSet>,
}

impl ModalAlgebra {
    /// Checks that `carrier` contains `∅`, `W` and is closed under the
    /// Boolean operations and `[R]` of `base`.
    pub fn new(base: Frame, carrier: impl IntoIterator<Item = WorldSet>) -> Result<ModalAlgebra> {
        let set: BTreeSet<WorldSet> = carrier.into_iter().collect();
        let w = base.universe();
        for e in &set {
            e.check_within(base.worlds())?;
        }
        let bad = |msg: String| Err(Error::InvalidAlgebra(msg));
        if !set.contains(&WorldSet::EMPTY) || !set.contains(&w) {
            return bad("carrier must contain the empty set and the full set".into());
        }
        for &e in &set {
            if !set.contains(&w.difference(e)) {
                return bad(format!("complement of {e:?} is missing"));
            }
        }
        let atoms = atoms_of(w, set.iter().copied());
        // Closed under complement and containing exactly the unions of its
        // atoms means closed under intersection too.
        if atoms.len() >= 64 || set.len() as u128 != 1u128 << atoms.len() {
            return bad("carrier is not closed under intersection".into());
        }
        for &e in &set {
            let fe = base.box_op(e);
            if !set.contains(&fe) {
                return bad(format!("[R]{e:?} = {fe:?} is missing"));
            }
        }
        Ok(ModalAlgebra {
            base,
            carrier: set.into_iter().collect(),
            atoms,
        })
    }

    pub fn base(&self) -> &Frame {
        &self.base
    }

    pub fn carrier(&self) -> &[WorldSet] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn contains(&self, e: WorldSet) -> bool {
        self.carrier.binary_search(&e).is_ok()
    }

    pub fn top(&self) -> WorldSet {
        self.base.universe()
    }

    /// `f = [R]`.
    pub fn op(&self, e: WorldSet) -> WorldSet {
        self.base.box_op(e)
    }

    /// Minimal non-empty elements, ordered by least world.
    pub fn atoms(&self) -> &[WorldSet] {
        &self.atoms
    }

    /// `f(1) = 1` and `f(a ∧ b) = f(a) ∧ f(b)` over all pairs, when at most
    /// `cap` pairs.
    pub fn check_normal(&self, cap: u128) -> Result<bool> {
        let pairs = (self.len() as u128).pow(2);
        if pairs > cap {
            return Err(Error::BudgetExceeded {
                what: "normality pairs",
                required: pairs,
                cap,
            });
        }
        if self.op(self.top()) != self.top() {
            return Ok(false);
        }
        Ok(self.carrier.iter().all(|&a| {
            self.carrier
                .iter()
                .all(|&b| self.op(a.intersection(b)) == self.op(a).intersection(self.op(b)))
        }))
    }

    /// Set of atoms below `e`, as a world set of the dual frame.
    pub fn embed(&self, e: WorldSet) -> WorldSet {
        (0..self.atoms.len())
            .filter(|&i| self.atoms[i].is_subset(e))
            .collect()
    }
}

// Coarsest partition of `w` refined by every set in `family`.
fn atoms_of(w: WorldSet, family: impl IntoIterator<Item = WorldSet>) -> Vec<WorldSet> {
    let mut parts = if w.is_empty() { Vec::new() } else { vec![w] };
    for e in family {
        parts = parts
            .into_iter()
            .flat_map(|p| [p.intersection(e), p.difference(e)])
            .filter(|p| !p.is_empty())
            .collect();
    }
    parts.sort_by_key(|p| p.first());
    parts
}

fn unions_of(atoms: &[WorldSet]) -> Vec<WorldSet> {
    let mut out: Vec<WorldSet> = (0..1u64 << atoms.len())
        .map(|mask| {
            (0..atoms.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(WorldSet::EMPTY, |acc, i| acc.union(atoms[i]))
        })
        .collect();
    out.sort();
    out
}

fn check_complex_size(f: &Frame) -> Result<()> {
    if f.worlds() > MAX_COMPLEX_WORLDS {
        return Err(Error::TooManyWorlds {
            found: f.worlds(),
            max: MAX_COMPLEX_WORLDS,
        });
    }
    Ok(())
}

/// The full powerset of `W` with `[R]`.
pub fn complex_algebra(f: &Frame) -> Result<ModalAlgebra> {
    check_complex_size(f)?;
    let atoms: Vec<WorldSet> = (0..f.worlds()).map(WorldSet::singleton).collect();
    let carrier = (0..1u64 << f.worlds()).map(WorldSet::from_bits).collect();
    Ok(ModalAlgebra {
        base: f.clone(),
        carrier,
        atoms,
    })
}

/// Least subalgebra of the complex algebra of `f` containing `generators`.
pub fn subalgebra_generated(
    f: &Frame,
    generators: impl IntoIterator<Item = WorldSet>,
) -> Result<ModalAlgebra> {
    check_complex_size(f)?;
    let w = f.universe();
    let gens: Vec<WorldSet> = generators.into_iter().collect();
    for g in &gens {
        g.check_within(f.worlds())?;
    }
    let mut atoms = atoms_of(w, gens);
    loop {
        let elements = unions_of(&atoms);
        let refined = atoms_of(
            w,
            atoms
                .iter()
                .copied()
                .chain(elements.iter().map(|&e| f.box_op(e))),
        );
        if refined.len() == atoms.len() {
            return Ok(ModalAlgebra {
                base: f.clone(),
                carrier: elements,
                atoms,
            });
        }
        atoms = refined;
    }
}

fn tuple_count(carrier: usize, arity: usize) -> u128 {
    (carrier as u128)
        .checked_pow(arity as u32)
        .unwrap_or(u128::MAX)
}

/// Calls `visit` on every tuple of carrier elements of length `arity`, last
/// position varying fastest, until it returns `false`.
pub(crate) fn for_each_tuple(
    a: &ModalAlgebra,
    arity: usize,
    cap: u128,
    mut visit: impl FnMut(&[WorldSet]) -> bool,
) -> Result<()> {
    let required = tuple_count(a.len(), arity);
    if required > cap {
        return Err(Error::BudgetExceeded {
            what: "carrier tuples",
            required,
            cap,
        });
    }
    let mut idx = vec![0usize; arity];
    let mut tuple = vec![a.carrier[0]; arity];
    loop {
        if !visit(&tuple) {
            return Ok(());
        }
        let mut pos = arity;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < a.len() {
                tuple[pos] = a.carrier[idx[pos]];
                break;
            }
            idx[pos] = 0;
            tuple[pos] = a.carrier[0];
        }
    }
}

/// Values of the compiled terms at one assignment of the program variables.
pub(crate) fn eval_terms(a: &ModalAlgebra, prog: &Program, values: &[WorldSet]) -> Vec<WorldSet> {
    prog.eval_sets(a.top(), values, |e| a.op(e))
}

/// `φ^A(ā) = 1` for every tuple `ā` over the carrier.
pub fn algebra_validates(a: &ModalAlgebra, phi: &Formula, cap: u128) -> Result<bool> {
    Ok(algebra_counter_tuple(a, phi, cap)?.is_none())
}

/// First tuple (indexed by the sorted variables of `phi`) at which `phi`
/// evaluates below `1`.
pub fn algebra_counter_tuple(
    a: &ModalAlgebra,
    phi: &Formula,
    cap: u128,
) -> Result<Option<Vec<WorldSet>>> {
    let prog = Program::single(phi);
    let mut found = None;
    for_each_tuple(a, prog.vars().len(), cap, |t| {
        if eval_terms(a, &prog, t)[prog.root()] != a.top() {
            found = Some(t.to_vec());
            return false;
        }
        true
    })?;
    Ok(found)
}

/// Atom structure: atoms `x R y` iff `x ≤ ¬f(¬y)`.
pub fn dual_frame(a: &ModalAlgebra) -> Frame {
    let w = a.top();
    let rows = a
        .atoms()
        .iter()
        .map(|&x| {
            (0..a.atoms().len())
                .filter(|&j| x.is_subset(w.difference(a.op(w.difference(a.atoms()[j])))))
                .collect()
        })
        .collect();
    Frame::from_rows(rows).expect("atoms index the dual frame")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, scheme_c};
    use crate::kripke::{frame_valid, is_isomorphic, DEFAULT_VALUATION_CAP};

    #[test]
    fn complex_algebras_of_points() {
        let r = complex_algebra(&Frame::reflexive_point()).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r.op(WorldSet::EMPTY), WorldSet::EMPTY);
        assert_eq!(r.op(r.top()), r.top());
        let i = complex_algebra(&Frame::irreflexive_point()).unwrap();
        assert_eq!(i.op(WorldSet::EMPTY), i.top());
        assert_eq!(complex_algebra(&Frame::strict_chain(3)).unwrap().len(), 8);
    }

    #[test]
    fn generated_subalgebras() {
        let chain = Frame::strict_chain(2);
        assert_eq!(subalgebra_generated(&chain, []).unwrap().len(), 4);
        let c = Frame::cluster(3);
        assert_eq!(
            subalgebra_generated(&c, []).unwrap().carrier(),
            &[WorldSet::EMPTY, c.universe()]
        );
        let a = subalgebra_generated(&c, [WorldSet::singleton(0)]).unwrap();
        assert_eq!(a.len(), 4);
        let full = subalgebra_generated(&c, (0..3).map(WorldSet::singleton)).unwrap();
        assert_eq!(full, complex_algebra(&c).unwrap());
        // fixpoint result passes the validating constructor
        let again = ModalAlgebra::new(
            chain.clone(),
            subalgebra_generated(&chain, [WorldSet::singleton(1)])
                .unwrap()
                .carrier()
                .to_vec(),
        );
        assert!(again.is_ok());
        assert!(a.check_normal(1 << 20).unwrap());
    }

    #[test]
    fn constructor_rejects_open_families() {
        let c = Frame::cluster(2);
        let one = WorldSet::singleton(0);
        assert!(matches!(
            ModalAlgebra::new(c.clone(), [WorldSet::EMPTY, one, c.universe()]),
            Err(Error::InvalidAlgebra(_))
        ));
        // [R]∅ is the dead end {1}, which is missing
        let chain = Frame::strict_chain(2);
        let w = chain.universe();
        assert!(ModalAlgebra::new(chain, [WorldSet::EMPTY, w]).is_err());
    }

    #[test]
    fn agreement_with_frames() {
        let c2 = Frame::cluster(2);
        let a = complex_algebra(&c2).unwrap();
        let args1: Vec<Formula> = (0..2).map(Formula::p).collect();
        let args2: Vec<Formula> = (0..3).map(Formula::p).collect();
        let c1 = scheme_c(1, &args1, false).unwrap();
        let c2f = scheme_c(2, &args2, false).unwrap();
        assert!(!algebra_validates(&a, &c1, DEFAULT_TUPLE_CAP).unwrap());
        assert!(algebra_validates(&a, &c2f, DEFAULT_TUPLE_CAP).unwrap());
        for s in ["box p0 -> box box p0", "box p0 -> p0", "top", "dia top"] {
            let f = parse(s).unwrap();
            for fr in [
                Frame::strict_chain(2),
                Frame::cluster(2),
                Frame::irreflexive_point(),
            ] {
                let alg = complex_algebra(&fr).unwrap();
                assert_eq!(
                    algebra_validates(&alg, &f, DEFAULT_TUPLE_CAP).unwrap(),
                    frame_valid(&fr, &f, DEFAULT_VALUATION_CAP).unwrap()
                );
            }
        }
    }

    #[test]
    fn duals() {
        for fr in [
            Frame::strict_chain(3),
            Frame::cluster(2),
            Frame::from_edges(3, &[(0, 1), (1, 0), (2, 2)]).unwrap(),
        ] {
            assert!(is_isomorphic(
                &dual_frame(&complex_algebra(&fr).unwrap()),
                &fr
            ));
        }
        let id = complex_algebra(&Frame::reflexive_point()).unwrap();
        assert_eq!(dual_frame(&id), Frame::reflexive_point());
        let vac = complex_algebra(&Frame::irreflexive_point()).unwrap();
        assert_eq!(dual_frame(&vac), Frame::irreflexive_point());
    }

    #[test]
    fn embedding_commutes_with_the_operator() {
        let f = Frame::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 2)])
            .unwrap();
        let a = subalgebra_generated(&f, [WorldSet::from_iter([0, 2])]).unwrap();
        let d = dual_frame(&a);
        for &e in a.carrier() {
            assert_eq!(a.embed(a.op(e)), d.box_op(a.embed(e)));
        }
    }
}
