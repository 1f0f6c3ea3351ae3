use std::collections::BTreeMap;

use super::{check_property, clusters, ClusterKind, Frame, Model, Property};
use crate::decision::{Extension, LogicSpec};
use crate::error::{Error, Result};
use crate::eval::Program;
use crate::formula::Formula;

/// Default cap on the number of valuations one validity check may visit.
pub const DEFAULT_VALUATION_CAP: u128 = 1 << 24;

/// A model on `f` falsifying `φ` somewhere, if there is one. Valuations are
/// searched in a fixed order, so the answer is deterministic.
pub fn frame_countermodel(f: &Frame, phi: &Formula, cap: u128) -> Result<Option<Model>> {
    let prog = Program::single(phi);
    let Some(vals) = prog.find_falsifying_valuation(f.rows(), cap)? else {
        return Ok(None);
    };
    let valuation: BTreeMap<_, _> = prog.vars().iter().cloned().zip(vals).collect();
    Ok(Some(Model::new(f.clone(), valuation)?))
}

pub fn frame_valid(f: &Frame, phi: &Formula, cap: u128) -> Result<bool> {
    Ok(frame_countermodel(f, phi, cap)?.is_none())
}

/// Whether `f` is a finite frame for the logic: transitive, circumference at
/// most `n`, and satisfying the frame condition of each extension.
pub fn validates_logic(f: &Frame, spec: &LogicSpec) -> Result<bool> {
    let dec = clusters(f)?;
    let circumference = dec
        .clusters()
        .iter()
        .filter(|c| !c.is_degenerate())
        .map(|c| c.len())
        .max()
        .unwrap_or(0);
    if circumference > spec.n() {
        return Ok(false);
    }
    for ext in spec.extensions() {
        let ok = match ext {
            Extension::D => dec.finals().all(|c| !c.is_degenerate()),
            Extension::T => check_property(f, Property::Reflexive),
            Extension::Three => {
                check_property(f, Property::WeaklyConnected)
                    && (0..f.worlds())
                        .all(|x| f.restrict(f.generated_by(x)).check(Property::Connected))
            }
            Extension::M => dec.finals().all(|c| c.kind == ClusterKind::Simple),
            Extension::E => dec.finals().all(|c| c.kind == ClusterKind::Degenerate),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Brute-force isomorphism test by backtracking over bijections.
pub fn is_isomorphic(f: &Frame, g: &Frame) -> bool {
    find_isomorphism(f, g).is_some()
}

/// A bijection `perm` with `f.permute(perm) == g`.
pub fn find_isomorphism(f: &Frame, g: &Frame) -> Option<Vec<usize>> {
    let n = f.worlds();
    if n != g.worlds() || f.edge_count() != g.edge_count() {
        return None;
    }
    let sig = |h: &Frame, x: usize| (h.succ(x).len(), h.pred(x).len(), h.has_edge(x, x));
    let fs: Vec<_> = (0..n).map(|x| sig(f, x)).collect();
    let gs: Vec<_> = (0..n).map(|x| sig(g, x)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        x: usize,
        f: &Frame,
        g: &Frame,
        fs: &[(usize, usize, bool)],
        gs: &[(usize, usize, bool)],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if x == f.worlds() {
            return true;
        }
        for y in 0..g.worlds() {
            if used[y] || fs[x] != gs[y] {
                continue;
            }
            let consistent = (0..x).all(|z| {
                f.has_edge(x, z) == g.has_edge(y, perm[z])
                    && f.has_edge(z, x) == g.has_edge(perm[z], y)
            }) && f.has_edge(x, x) == g.has_edge(y, y);
            if !consistent {
                continue;
            }
            perm[x] = y;
            used[y] = true;
            if extend(x + 1, f, g, fs, gs, perm, used) {
                return true;
            }
            used[y] = false;
        }
        false
    }
    if extend(0, f, g, &fs, &gs, &mut perm, &mut used) {
        debug_assert_eq!(&f.permute(&perm), g);
        Some(perm)
    } else {
        None
    }
}

/// Errors unless `f` is transitive.
pub fn require_transitive(f: &Frame) -> Result<()> {
    if f.is_transitive() {
        Ok(())
    } else {
        Err(Error::NotTransitive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{named_axiom, parse, scheme_c, Axiom};

    fn spec(n: usize, exts: &[Extension]) -> LogicSpec {
        LogicSpec::new(n, exts.iter().copied()).unwrap()
    }

    fn c(n: usize) -> Formula {
        let args: Vec<Formula> = (0..=n).map(Formula::p).collect();
        scheme_c(n, &args, false).unwrap()
    }

    #[test]
    fn frame_validity_examples() {
        let cap = DEFAULT_VALUATION_CAP;
        assert!(frame_valid(&Frame::irreflexive_point(), &named_axiom(Axiom::Lob), cap).unwrap());
        let two = Frame::cluster(2);
        assert!(!frame_valid(&two, &c(1), cap).unwrap());
        assert!(frame_valid(&two, &c(2), cap).unwrap());
        assert!(frame_valid(&Frame::strict_chain(3), &named_axiom(Axiom::Four), cap).unwrap());
    }

    #[test]
    fn countermodel_falsifies() {
        let f = Frame::reflexive_point();
        let phi = parse("dia p0 -> dia (p0 & ~dia p0)").unwrap();
        let m = frame_countermodel(&f, &phi, DEFAULT_VALUATION_CAP)
            .unwrap()
            .unwrap();
        assert!(!m.is_true(&phi));
    }

    #[test]
    fn logic_membership_examples() {
        assert!(validates_logic(&Frame::reflexive_point(), &spec(1, &[Extension::T])).unwrap());
        assert!(!validates_logic(&Frame::strict_chain(2), &spec(0, &[Extension::D])).unwrap());
        // a 2-cluster below a simple final point
        let mut f = Frame::cluster(2)
            .disjoint_union(&Frame::reflexive_point())
            .unwrap();
        f.add_edge(0, 2);
        f.add_edge(1, 2);
        let m = spec(2, &[Extension::M]);
        assert!(validates_logic(&f, &m).unwrap());
        assert!(frame_valid(&f, &named_axiom(Axiom::M), DEFAULT_VALUATION_CAP).unwrap());
    }

    #[test]
    fn non_transitive_frames_are_rejected() {
        let f = Frame::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            validates_logic(&f, &spec(0, &[])),
            Err(Error::NotTransitive)
        ));
    }

    #[test]
    fn isomorphism_search() {
        let f = Frame::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let g = f.permute(&[2, 0, 1]);
        assert!(is_isomorphic(&f, &g));
        assert!(!is_isomorphic(
            &f,
            &Frame::from_edges(3, &[(0, 1), (0, 2)]).unwrap()
        ));
    }
}
