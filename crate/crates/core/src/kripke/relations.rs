use std::collections::BTreeSet;

use super::Frame;
use crate::worlds::WorldSet;

/// Every binary relation on `worlds` worlds, in order of the row bits.
/// There are `2^(worlds²)` of them, so keep `worlds` at 4 or below.
pub fn all_relations(worlds: usize) -> impl Iterator<Item = Frame> {
    assert!(worlds <= 5, "too many relations to list");
    let cells = worlds * worlds;
    (0..1u64 << cells).map(move |code| {
        let rows = (0..worlds)
            .map(|x| WorldSet::from_bits(code >> (x * worlds) & ((1 << worlds) - 1)))
            .collect();
        Frame::from_rows(rows).expect("rows stay inside the frame")
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least relabelling of `f` under the derived order on frames.
pub fn brute_canonical(f: &Frame) -> Frame {
    permutations(f.worlds())
        .iter()
        .map(|p| f.permute(p))
        .min()
        .expect("at least one permutation")
}

/// One representative per isomorphism class of relations on `worlds` worlds.
pub fn relations_up_to_iso(worlds: usize) -> Vec<Frame> {
    let perms = permutations(worlds);
    let mut seen = BTreeSet::new();
    for f in all_relations(worlds) {
        let canon = perms.iter().map(|p| f.permute(p)).min().expect("non-empty");
        seen.insert(canon);
    }
    seen.into_iter().collect()
}
