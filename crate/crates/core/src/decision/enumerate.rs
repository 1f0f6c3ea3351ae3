//! Transitive frames up to isomorphism, as labelled posets of clusters.
//!
//! A finite transitive frame is determined up to isomorphism by its cluster
//! poset with each node labelled by its cluster: `0` for a degenerate point,
//! `t ≥ 1` for a reflexive cluster of `t` worlds. Every poset arises from a
//! smaller one by adding a new minimal node whose strict successors form an
//! up-set, so posets are grown one node at a time and deduplicated by a
//! canonical form (colour refinement plus individualization, keeping the
//! least certificate).

use std::collections::{HashMap, VecDeque};

use super::{Extension, LogicSpec};
use crate::kripke::{check_property, validates_logic, Frame, Property};
use crate::worlds::{WorldSet, MAX_WORLDS};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClusterPoset {
    labels: Vec<u8>,
    // up[i]: strict successors of node i, transitively closed.
    up: Vec<u64>,
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    WorldSet::from_bits(mask).iter()
}

impl ClusterPoset {
    pub fn empty() -> Self {
        ClusterPoset {
            labels: Vec::new(),
            up: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn weight(&self) -> usize {
        self.labels.iter().map(|&t| label_weight(t)).sum()
    }

    fn down(&self, i: usize) -> u64 {
        (0..self.len())
            .filter(|&j| self.up[j] >> i & 1 == 1)
            .fold(0, |m, j| m | 1 << j)
    }

    fn is_upset(&self, s: u64) -> bool {
        bits(s).all(|i| self.up[i] & !s == 0)
    }

    fn add_minimal(&self, label: u8, upset: u64) -> ClusterPoset {
        let mut next = self.clone();
        next.labels.push(label);
        next.up.push(upset);
        next
    }

    pub fn is_chain(&self) -> bool {
        let k = self.len();
        (0..k)
            .all(|i| (0..k).all(|j| i == j || self.up[i] >> j & 1 == 1 || self.up[j] >> i & 1 == 1))
    }

    /// The frame with the nodes' worlds laid out consecutively in node order.
    pub fn to_frame(&self) -> Frame {
        let mut start = Vec::with_capacity(self.len());
        let mut total = 0;
        for &t in &self.labels {
            start.push(total);
            total += label_weight(t);
        }
        let block = |i: usize| {
            WorldSet::full(start[i] + label_weight(self.labels[i]))
                .difference(WorldSet::full(start[i]))
        };
        let mut rows = vec![WorldSet::EMPTY; total];
        for i in 0..self.len() {
            let mut row = bits(self.up[i]).fold(WorldSet::EMPTY, |acc, j| acc.union(block(j)));
            if self.labels[i] > 0 {
                row = row.union(block(i));
            }
            for x in block(i) {
                rows[x] = row;
            }
        }
        Frame::from_rows(rows).expect("weight checked against the world limit")
    }

    fn relabel(&self, order: &[usize]) -> ClusterPoset {
        let mut pos = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        ClusterPoset {
            labels: order.iter().map(|&old| self.labels[old]).collect(),
            up: order
                .iter()
                .map(|&old| bits(self.up[old]).fold(0u64, |m, u| m | 1 << pos[u]))
                .collect(),
        }
    }

    fn certificate(&self) -> Vec<u64> {
        let mut cert = Vec::with_capacity(1 + 2 * self.len());
        cert.push(self.len() as u64);
        cert.extend(self.labels.iter().map(|&t| t as u64));
        cert.extend(self.up.iter().copied());
        cert
    }

    /// Canonical representative of the isomorphism class and its
    /// certificate.
    pub fn canonical(&self) -> (ClusterPoset, Vec<u64>) {
        let mut best: Option<(Vec<u64>, ClusterPoset)> = None;
        let colours: Vec<u32> = self.labels.iter().map(|&t| t as u32).collect();
        self.search(colours, &mut best);
        let (cert, poset) = best.unwrap_or_else(|| (self.certificate(), self.clone()));
        (poset, cert)
    }

    fn refine(&self, colours: &mut [u32]) {
        let k = self.len();
        let downs: Vec<u64> = (0..k).map(|i| self.down(i)).collect();
        let mut classes = distinct(colours);
        loop {
            let keys: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..k)
                .map(|v| {
                    let mut ups: Vec<u32> = bits(self.up[v]).map(|u| colours[u]).collect();
                    let mut dns: Vec<u32> = bits(downs[v]).map(|u| colours[u]).collect();
                    ups.sort_unstable();
                    dns.sort_unstable();
                    (colours[v], ups, dns)
                })
                .collect();
            let mut ranked = keys.clone();
            ranked.sort();
            ranked.dedup();
            for v in 0..k {
                colours[v] = ranked.binary_search(&keys[v]).expect("key present") as u32;
            }
            let now = ranked.len();
            if now == classes {
                break;
            }
            classes = now;
        }
    }

    fn search(&self, mut colours: Vec<u32>, best: &mut Option<(Vec<u64>, ClusterPoset)>) {
        self.refine(&mut colours);
        let k = self.len();
        let mut counts: HashMap<u32, usize> = HashMap::new();
        for &c in &colours {
            *counts.entry(c).or_default() += 1;
        }
        let target = counts.iter().filter(|(_, &n)| n > 1).map(|(&c, _)| c).min();
        let Some(target) = target else {
            let mut order: Vec<usize> = (0..k).collect();
            order.sort_by_key(|&v| colours[v]);
            let candidate = self.relabel(&order);
            let cert = candidate.certificate();
            if best.as_ref().is_none_or(|(b, _)| cert < *b) {
                *best = Some((cert, candidate));
            }
            return;
        };
        // Swapping two twins (same label, same up- and down-sets) is an
        // automorphism fixing everything else, so one twin per class suffices.
        let mut tried: Vec<(u64, u64)> = Vec::new();
        for v in (0..k).filter(|&v| colours[v] == target) {
            let key = (self.up[v], self.down(v));
            if tried.contains(&key) {
                continue;
            }
            tried.push(key);
            let next = colours
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + u32::from(c == target && u != v))
                .collect();
            self.search(next, best);
        }
    }
}

fn distinct(colours: &[u32]) -> usize {
    let mut v = colours.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn label_weight(t: u8) -> usize {
    usize::from(t).max(1)
}

/// Lazy stream of the frames of a logic, smallest first; frames of equal
/// size come in certificate order.
pub struct FrameEnumerator {
    spec: LogicSpec,
    max_worlds: usize,
    labels: Vec<u8>,
    // layers[w]: canonical posets of total weight w, sorted by certificate.
    layers: Vec<Vec<ClusterPoset>>,
    pending: VecDeque<Frame>,
}

impl FrameEnumerator {
    fn new(max_worlds: usize, spec: &LogicSpec) -> Self {
        let max_worlds = max_worlds.min(MAX_WORLDS);
        let top = spec.n().min(max_worlds).min(u8::MAX as usize) as u8;
        let first = if spec.has(Extension::T) { 1 } else { 0 };
        FrameEnumerator {
            spec: spec.clone(),
            max_worlds,
            labels: (first..=top).collect(),
            layers: vec![vec![ClusterPoset::empty()]],
            pending: VecDeque::new(),
        }
    }

    /// World count of the frames currently being produced.
    pub fn current_size(&self) -> usize {
        self.layers.len() - 1
    }

    fn grow(&mut self) {
        let w = self.layers.len();
        let mut found: HashMap<Vec<u64>, ClusterPoset> = HashMap::new();
        for &t in &self.labels {
            let wt = label_weight(t);
            if wt > w {
                continue;
            }
            for p in &self.layers[w - wt] {
                for upset in 0..1u64 << p.len() {
                    if !p.is_upset(upset) {
                        continue;
                    }
                    let (canon, cert) = p.add_minimal(t, upset).canonical();
                    found.entry(cert).or_insert(canon);
                }
            }
        }
        let mut layer: Vec<(Vec<u64>, ClusterPoset)> = found.into_iter().collect();
        layer.sort_by(|a, b| a.0.cmp(&b.0));
        for (_, p) in &layer {
            if self.spec.has(Extension::Three) && !p.is_chain() {
                continue;
            }
            let frame = p.to_frame();
            if validates_logic(&frame, &self.spec).expect("generated frames are transitive") {
                debug_assert!(
                    !self.spec.has(Extension::Three) || check_property(&frame, Property::Connected)
                );
                self.pending.push_back(frame);
            }
        }
        self.layers
            .push(layer.into_iter().map(|(_, p)| p).collect());
    }
}

impl Iterator for FrameEnumerator {
    type Item = Frame;

    fn next(&mut self) -> Option<Frame> {
        while self.pending.is_empty() {
            if self.layers.len() > self.max_worlds {
                return None;
            }
            self.grow();
        }
        self.pending.pop_front()
    }
}

/// Every frame of `spec` with at most `max_worlds` worlds, once per
/// isomorphism class, in ascending size. For `Three` only connected frames
/// are produced.
pub fn enumerate_frames(max_worlds: usize, spec: &LogicSpec) -> FrameEnumerator {
    FrameEnumerator::new(max_worlds, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kripke::is_isomorphic;

    fn spec(n: usize, exts: &[Extension]) -> LogicSpec {
        LogicSpec::new(n, exts.iter().copied()).unwrap()
    }

    #[test]
    fn tiny_cases() {
        let one: Vec<Frame> = enumerate_frames(1, &spec(0, &[])).collect();
        assert_eq!(one, vec![Frame::irreflexive_point()]);
        let one: Vec<Frame> = enumerate_frames(1, &spec(1, &[Extension::T])).collect();
        assert_eq!(one, vec![Frame::reflexive_point()]);

        let two: Vec<Frame> = enumerate_frames(2, &spec(0, &[])).collect();
        assert_eq!(two.len(), 3);
        let pairs: Vec<&Frame> = two.iter().filter(|f| f.worlds() == 2).collect();
        assert_eq!(pairs.len(), 2);
        assert!(pairs.iter().any(|f| f.edge_count() == 0));
        assert!(pairs
            .iter()
            .any(|f| is_isomorphic(f, &Frame::strict_chain(2))));
    }

    #[test]
    fn canonical_form_is_invariant() {
        // a V shape: 0 below 1 and 2, with different labels on top
        let p = ClusterPoset {
            labels: vec![0, 1, 2],
            up: vec![0b110, 0, 0],
        };
        let q = p.relabel(&[2, 0, 1]);
        assert_eq!(p.canonical().1, q.canonical().1);
        let r = ClusterPoset {
            labels: vec![0, 2, 2],
            up: vec![0b110, 0, 0],
        };
        assert_ne!(p.canonical().1, r.canonical().1);
    }

    #[test]
    fn frames_are_transitive_and_sized() {
        for f in enumerate_frames(4, &spec(2, &[])) {
            assert!(f.is_transitive());
            assert!(f.worlds() <= 4);
        }
    }
}
