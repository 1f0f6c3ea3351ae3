use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::kripke::{check_property, Frame, Property};
use crate::worlds::{WorldSet, MAX_WORLDS};

/// Finite topological space given by its complete family of open sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    points: usize,
    opens: Vec<WorldSet>,
    // Least open neighbourhood of each point.
    nbhd: Vec<WorldSet>,
}

impl FiniteSpace {
    /// Validates that `opens` contains `∅` and `X` and is closed under binary
    /// unions and intersections.
    pub fn new(points: usize, opens: impl IntoIterator<Item = WorldSet>) -> Result<FiniteSpace> {
        if points > MAX_WORLDS {
            return Err(Error::TooManyWorlds {
                found: points,
                max: MAX_WORLDS,
            });
        }
        let family: BTreeSet<WorldSet> = opens.into_iter().collect();
        for o in &family {
            o.check_within(points)?;
        }
        let all = WorldSet::full(points);
        for required in [WorldSet::EMPTY, all] {
            if !family.contains(&required) {
                return Err(Error::InvalidTopology(format!("{required:?} must be open")));
            }
        }
        for a in &family {
            for b in &family {
                if !family.contains(&a.union(*b)) {
                    return Err(Error::InvalidTopology(format!(
                        "union of {a:?} and {b:?} is not open"
                    )));
                }
                if !family.contains(&a.intersection(*b)) {
                    return Err(Error::InvalidTopology(format!(
                        "intersection of {a:?} and {b:?} is not open"
                    )));
                }
            }
        }
        Ok(Self::from_closed_family(points, family))
    }

    fn from_closed_family(points: usize, family: BTreeSet<WorldSet>) -> FiniteSpace {
        let opens: Vec<WorldSet> = family.into_iter().collect();
        let nbhd = (0..points)
            .map(|x| {
                opens
                    .iter()
                    .filter(|o| o.contains(x))
                    .fold(WorldSet::full(points), |acc, o| acc.intersection(*o))
            })
            .collect();
        FiniteSpace {
            points,
            opens,
            nbhd,
        }
    }

    /// Least topology containing `subbasis`.
    pub fn generate_topology(
        points: usize,
        subbasis: impl IntoIterator<Item = WorldSet>,
    ) -> Result<FiniteSpace> {
        if points > MAX_WORLDS {
            return Err(Error::TooManyWorlds {
                found: points,
                max: MAX_WORLDS,
            });
        }
        let mut family: HashSet<WorldSet> = [WorldSet::EMPTY, WorldSet::full(points)].into();
        let mut work: Vec<WorldSet> = Vec::new();
        for s in subbasis {
            s.check_within(points)?;
            if family.insert(s) {
                work.push(s);
            }
        }
        work.extend([WorldSet::EMPTY, WorldSet::full(points)]);
        while let Some(a) = work.pop() {
            let current: Vec<WorldSet> = family.iter().copied().collect();
            for b in current {
                for c in [a.union(b), a.intersection(b)] {
                    if family.insert(c) {
                        work.push(c);
                    }
                }
            }
        }
        Ok(Self::from_closed_family(
            points,
            family.into_iter().collect(),
        ))
    }

    pub fn discrete(points: usize) -> FiniteSpace {
        Self::generate_topology(points, (0..points).map(WorldSet::singleton)).expect("small space")
    }

    pub fn indiscrete(points: usize) -> FiniteSpace {
        Self::generate_topology(points, []).expect("small space")
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn universe(&self) -> WorldSet {
        WorldSet::full(self.points)
    }

    /// Open sets in ascending bit order.
    pub fn opens(&self) -> &[WorldSet] {
        &self.opens
    }

    pub fn is_open(&self, s: WorldSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: WorldSet) -> bool {
        self.is_open(self.universe().difference(s))
    }

    /// Least open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> WorldSet {
        self.nbhd[x]
    }

    pub fn neighbourhoods(&self) -> &[WorldSet] {
        &self.nbhd
    }

    /// Least neighbourhoods with the point itself removed.
    pub fn punctured_neighbourhoods(&self) -> Vec<WorldSet> {
        self.nbhd
            .iter()
            .enumerate()
            .map(|(x, u)| u.without(x))
            .collect()
    }

    pub fn interior(&self, y: WorldSet) -> WorldSet {
        (0..self.points)
            .filter(|&x| self.nbhd[x].is_subset(y))
            .collect()
    }

    pub fn closure(&self, y: WorldSet) -> WorldSet {
        (0..self.points)
            .filter(|&x| self.nbhd[x].intersects(y))
            .collect()
    }

    /// Limit points: `x` with every punctured neighbourhood meeting `y`.
    pub fn derived_set(&self, y: WorldSet) -> WorldSet {
        (0..self.points)
            .filter(|&x| self.nbhd[x].without(x).intersects(y))
            .collect()
    }

    /// Dual of the derived set, `X ∖ de(X ∖ y)`.
    pub fn co_derived(&self, y: WorldSet) -> WorldSet {
        (0..self.points)
            .filter(|&x| self.nbhd[x].without(x).is_subset(y))
            .collect()
    }

    /// Points `x` with `{x}` open.
    pub fn isolated_points(&self) -> WorldSet {
        (0..self.points)
            .filter(|&x| self.nbhd[x] == WorldSet::singleton(x))
            .collect()
    }
}

/// The space whose opens are the up-sets of a quasi-order.
pub fn alexandroff(f: &Frame) -> Result<FiniteSpace> {
    if !check_property(f, Property::Reflexive) || !f.is_transitive() {
        return Err(Error::NotQuasiOrder);
    }
    FiniteSpace::generate_topology(f.worlds(), (0..f.worlds()).map(|x| f.succ(x)))
}

/// `x R y` iff `x ∈ cl{y}`, i.e. `y` lies in every open set around `x`.
pub fn specialization(s: &FiniteSpace) -> Frame {
    Frame::from_rows(s.neighbourhoods().to_vec()).expect("neighbourhoods lie inside the space")
}
