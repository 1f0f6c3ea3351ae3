use std::fmt;

use serde::{Deserialize, Serialize};

use super::Frame;
use crate::error::{Error, Result};
use crate::worlds::WorldSet;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ClusterKind {
    Degenerate,
    Simple,
    NonDegenerate,
}

impl fmt::Display for ClusterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClusterKind::Degenerate => "degenerate",
            ClusterKind::Simple => "simple",
            ClusterKind::NonDegenerate => "nonDegenerate",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub worlds: WorldSet,
    pub kind: ClusterKind,
    /// No world of the cluster sees outside it.
    pub is_final: bool,
}

impl Cluster {
    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    /// Degenerate clusters are irreflexive singletons; every other cluster
    /// contains a cycle.
    pub fn is_degenerate(&self) -> bool {
        self.kind == ClusterKind::Degenerate
    }
}

/// Clusters of a transitive frame, numbered by least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterDecomposition {
    clusters: Vec<Cluster>,
    cluster_of: Vec<usize>,
    // Strict lifted order; bit j of above[i] means cluster i sees cluster j.
    above: Vec<WorldSet>,
}

impl ClusterDecomposition {
    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn cluster_of(&self, world: usize) -> usize {
        self.cluster_of[world]
    }

    /// Clusters strictly above cluster `i` in the lifted order.
    pub fn above(&self, i: usize) -> WorldSet {
        self.above[i]
    }

    pub fn lifted_edges(&self) -> Vec<(usize, usize)> {
        self.above
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |j| (i, j)))
            .collect()
    }

    pub fn finals(&self) -> impl Iterator<Item = &Cluster> {
        self.clusters.iter().filter(|c| c.is_final)
    }

    /// The lifted order is a strict chain.
    pub fn is_linear(&self) -> bool {
        let k = self.clusters.len();
        (0..k).all(|i| {
            (0..k).all(|j| i == j || self.above[i].contains(j) || self.above[j].contains(i))
        })
    }
}

pub fn clusters(f: &Frame) -> Result<ClusterDecomposition> {
    if !f.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = f.worlds();
    let pred: Vec<WorldSet> = (0..n).map(|y| f.pred(y)).collect();
    let mut cluster_of = vec![usize::MAX; n];
    let mut clusters = Vec::new();
    for x in 0..n {
        if cluster_of[x] != usize::MAX {
            continue;
        }
        let members = f.succ(x).intersection(pred[x]).with(x);
        let kind = if members.len() > 1 {
            ClusterKind::NonDegenerate
        } else if f.has_edge(x, x) {
            ClusterKind::Simple
        } else {
            ClusterKind::Degenerate
        };
        let is_final = members.iter().all(|y| f.succ(y).is_subset(members));
        for y in members {
            cluster_of[y] = clusters.len();
        }
        clusters.push(Cluster {
            worlds: members,
            kind,
            is_final,
        });
    }
    let above = clusters
        .iter()
        .enumerate()
        .map(|(i, c)| {
            // All members see the same worlds outside the cluster.
            let x = c.worlds.first().expect("clusters are non-empty");
            f.succ(x)
                .iter()
                .map(|y| cluster_of[y])
                .filter(|&j| j != i)
                .collect()
        })
        .collect();
    Ok(ClusterDecomposition {
        clusters,
        cluster_of,
        above,
    })
}

/// Largest non-degenerate cluster size; `0` for irreflexive frames.
pub fn circumference(f: &Frame) -> Result<usize> {
    Ok(clusters(f)?
        .clusters()
        .iter()
        .filter(|c| !c.is_degenerate())
        .map(Cluster::len)
        .max()
        .unwrap_or(0))
}
