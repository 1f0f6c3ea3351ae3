use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::worlds::{WorldSet, MAX_WORLDS};

/// Finite frame `(W, R)` with `W = {0, …, n-1}`, stored as successor rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frame {
    succ: Vec<WorldSet>,
}

impl Frame {
    /// `worlds` points and no edges.
    pub fn empty(worlds: usize) -> Result<Frame> {
        if worlds > MAX_WORLDS {
            return Err(Error::TooManyWorlds {
                found: worlds,
                max: MAX_WORLDS,
            });
        }
        Ok(Frame {
            succ: vec![WorldSet::EMPTY; worlds],
        })
    }

    pub fn from_edges(worlds: usize, edges: &[(usize, usize)]) -> Result<Frame> {
        let mut f = Frame::empty(worlds)?;
        for &(x, y) in edges {
            for w in [x, y] {
                if w >= worlds {
                    return Err(Error::WorldOutOfRange {
                        world: w,
                        size: worlds,
                    });
                }
            }
            f.succ[x].insert(y);
        }
        Ok(f)
    }

    pub fn from_rows(rows: Vec<WorldSet>) -> Result<Frame> {
        let n = rows.len();
        if n > MAX_WORLDS {
            return Err(Error::TooManyWorlds {
                found: n,
                max: MAX_WORLDS,
            });
        }
        for r in &rows {
            r.check_within(n)?;
        }
        Ok(Frame { succ: rows })
    }

    /// One irreflexive point.
    pub fn irreflexive_point() -> Frame {
        Frame {
            succ: vec![WorldSet::EMPTY],
        }
    }

    /// One reflexive point.
    pub fn reflexive_point() -> Frame {
        Frame::cluster(1)
    }

    /// A single non-degenerate cluster: every world sees every world.
    pub fn cluster(size: usize) -> Frame {
        assert!(size <= MAX_WORLDS);
        Frame {
            succ: vec![WorldSet::full(size); size],
        }
    }

    /// Strict chain `0 R 1 R … R size-1`, transitively closed.
    pub fn strict_chain(size: usize) -> Frame {
        assert!(size <= MAX_WORLDS);
        let succ = (0..size)
            .map(|x| WorldSet::full(size).difference(WorldSet::full(x + 1)))
            .collect();
        Frame { succ }
    }

    pub fn worlds(&self) -> usize {
        self.succ.len()
    }

    pub fn universe(&self) -> WorldSet {
        WorldSet::full(self.worlds())
    }

    pub fn succ(&self, x: usize) -> WorldSet {
        self.succ[x]
    }

    pub fn rows(&self) -> &[WorldSet] {
        &self.succ
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.succ[x].contains(y)
    }

    pub fn add_edge(&mut self, x: usize, y: usize) {
        assert!(x < self.worlds() && y < self.worlds());
        self.succ[x].insert(y);
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(|s| s.len()).sum()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(x, s)| s.iter().map(move |y| (x, y)))
            .collect()
    }

    pub fn pred(&self, y: usize) -> WorldSet {
        (0..self.worlds())
            .filter(|&x| self.succ[x].contains(y))
            .collect()
    }

    /// Successors under `R*`, the reflexive closure.
    pub fn succ_star(&self, x: usize) -> WorldSet {
        self.succ[x].with(x)
    }

    /// `[R]s = {x : R(x) ⊆ s}`.
    pub fn box_op(&self, s: WorldSet) -> WorldSet {
        self.succ
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_subset(s))
            .map(|(x, _)| x)
            .collect()
    }

    /// `⟨R⟩s = R⁻¹s`.
    pub fn dia_op(&self, s: WorldSet) -> WorldSet {
        self.succ
            .iter()
            .enumerate()
            .filter(|(_, r)| r.intersects(s))
            .map(|(x, _)| x)
            .collect()
    }

    pub fn transitive_closure(&self) -> Frame {
        let mut succ = self.succ.clone();
        // Warshall over bit rows.
        for k in 0..succ.len() {
            let row_k = succ[k];
            for row in succ.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        Frame { succ }
    }

    /// Worlds reachable from `x` in zero or more steps.
    pub fn generated_by(&self, x: usize) -> WorldSet {
        let mut seen = WorldSet::singleton(x);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = WorldSet::EMPTY;
            for y in frontier {
                next = next.union(self.succ[y]);
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen
    }

    /// Subframe on `keep`, renumbered in increasing order.
    pub fn restrict(&self, keep: WorldSet) -> Frame {
        let old: Vec<usize> = keep.iter().collect();
        let succ = old
            .iter()
            .map(|&x| {
                old.iter()
                    .enumerate()
                    .filter(|&(_, &y)| self.succ[x].contains(y))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Frame { succ }
    }

    /// The frame with world `x` renamed to `perm[x]`.
    pub fn permute(&self, perm: &[usize]) -> Frame {
        assert_eq!(perm.len(), self.worlds());
        let mut succ = vec![WorldSet::EMPTY; self.worlds()];
        for (x, row) in self.succ.iter().enumerate() {
            succ[perm[x]] = row.map(|y| perm[y]);
        }
        Frame { succ }
    }

    /// Disjoint union; the worlds of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Frame) -> Result<Frame> {
        let shift = self.worlds();
        let mut rows = self.succ.clone();
        rows.extend(other.succ.iter().map(|r| r.map(|y| y + shift)));
        Frame::from_rows(rows)
    }

    pub fn check(&self, prop: Property) -> bool {
        check_property(self, prop)
    }

    pub fn is_transitive(&self) -> bool {
        check_property(self, Property::Transitive)
    }

    /// Writes the frame in Graphviz DOT syntax.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph frame {\n");
        for x in 0..self.worlds() {
            out.push_str(&format!("  {x};\n"));
        }
        for (x, y) in self.edges() {
            out.push_str(&format!("  {x} -> {y};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frame({}, {:?})", self.worlds(), self.edges())
    }
}

/// First-order frame conditions.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Transitive,
    WeaklyTransitive,
    Reflexive,
    Irreflexive,
    Serial,
    Antisymmetric,
    WeaklyConnected,
    Connected,
    PointGenerated,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::Transitive,
        Property::WeaklyTransitive,
        Property::Reflexive,
        Property::Irreflexive,
        Property::Serial,
        Property::Antisymmetric,
        Property::WeaklyConnected,
        Property::Connected,
        Property::PointGenerated,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Transitive => "transitive",
            Property::WeaklyTransitive => "weaklyTransitive",
            Property::Reflexive => "reflexive",
            Property::Irreflexive => "irreflexive",
            Property::Serial => "serial",
            Property::Antisymmetric => "antisymmetric",
            Property::WeaklyConnected => "weaklyConnected",
            Property::Connected => "connected",
            Property::PointGenerated => "pointGenerated",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['_', '-'], "");
        Property::ALL
            .into_iter()
            .find(|p| p.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::Precondition(format!("unknown frame property `{s}`")))
    }
}

pub fn check_property(f: &Frame, prop: Property) -> bool {
    let n = f.worlds();
    let all = f.universe();
    match prop {
        Property::Transitive => {
            (0..n).all(|x| f.succ(x).iter().all(|y| f.succ(y).is_subset(f.succ(x))))
        }
        Property::WeaklyTransitive => (0..n).all(|x| {
            let star = f.succ_star(x);
            f.succ(x).iter().all(|y| f.succ(y).is_subset(star))
        }),
        Property::Reflexive => (0..n).all(|x| f.has_edge(x, x)),
        Property::Irreflexive => (0..n).all(|x| !f.has_edge(x, x)),
        Property::Serial => (0..n).all(|x| !f.succ(x).is_empty()),
        Property::Antisymmetric => {
            (0..n).all(|x| f.succ(x).iter().all(|y| y == x || !f.has_edge(y, x)))
        }
        Property::WeaklyConnected => (0..n).all(|x| {
            let s = f.succ(x);
            s.iter()
                .all(|y| s.is_subset(f.succ_star(y).union(f.pred(y))))
        }),
        Property::Connected => (0..n).all(|y| all.is_subset(f.succ_star(y).union(f.pred(y)))),
        Property::PointGenerated => (0..n).any(|x| f.succ_star(x) == all),
    }
}
