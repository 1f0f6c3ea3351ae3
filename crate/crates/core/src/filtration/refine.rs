use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::FiltrationResult;
use crate::error::{Error, Result};
use crate::kripke::{check_property, circumference, clusters, Frame, Model, Property};
use crate::worlds::WorldSet;

/// Order imposed on the classes of a cluster outside its core.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinearOrder {
    /// Ascending class index, i.e. ascending least world.
    Ascending,
    /// A shuffle driven by the given seed.
    Shuffled(u64),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Classes outside the core become irreflexive points seeing the core.
    Base,
    /// As `Base`, but those points are made reflexive.
    Reflexive,
    /// Classes outside the core form a strict chain below the core.
    Linear(LinearOrder),
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Base => "base",
            Variant::Reflexive => "reflexive",
            Variant::Linear(_) => "linear",
        }
    }
}

/// The critical point chosen for one `R_Φ`-cluster.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalRecord {
    /// Classes of the cluster.
    pub cluster: WorldSet,
    /// A world of the source model.
    pub critical_world: usize,
    /// Classes of the cluster the critical world sees.
    pub core: WorldSet,
    /// For the linear variant, the classes outside the core, lowest first.
    pub chain: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterRefinement {
    pub variant: Variant,
    pub records: Vec<CriticalRecord>,
    /// `R′` on class indices.
    pub r_prime: Frame,
}

/// Picks the source world `x*` with `[x*]` in `cluster` seeing the fewest
/// classes of the cluster. Ties go to the least class, then the least world.
pub fn critical_point(
    fr: &FiltrationResult,
    cluster: WorldSet,
    n: usize,
) -> Result<(usize, WorldSet)> {
    let src = fr.source().frame();
    let sees = |x: usize| fr.image(src.succ(x)).intersection(cluster);
    let mut best: Option<(usize, WorldSet)> = None;
    for class in cluster {
        for x in fr.classes()[class] {
            let cx = sees(x);
            if best.is_none_or(|(_, b)| cx.len() < b.len()) {
                best = Some((x, cx));
            }
        }
    }
    let (x_star, core) = best.ok_or_else(|| Error::Precondition("empty cluster".into()))?;
    // Every successor of x* inside the cluster sees the whole core.
    for y in src.succ(x_star) {
        if cluster.contains(fr.class_of(y)) && !core.is_subset(sees(y)) {
            return Err(Error::Invariant(format!(
                "successor {y} of critical world {x_star} misses part of the core"
            )));
        }
    }
    if core.len() > n {
        return Err(Error::CoreTooLarge {
            cluster: cluster.first().unwrap_or(0),
            size: core.len(),
            n,
        });
    }
    Ok((x_star, core))
}

/// Replaces each `R_Φ`-cluster by its core preceded by the remaining
/// classes, arranged according to `variant`, and checks that every formula
/// of `Φ` keeps its truth set.
pub fn refine(
    fr: &FiltrationResult,
    n: usize,
    variant: Variant,
) -> Result<(ClusterRefinement, Model)> {
    let r_phi = fr.r_phi();
    match variant {
        Variant::Reflexive if n == 0 || !check_property(r_phi, Property::Reflexive) => {
            return Err(Error::Precondition(
                "the reflexive variant needs n >= 1 and a reflexive filtered relation".into(),
            ))
        }
        Variant::Linear(_) if !check_property(r_phi, Property::Connected) => {
            return Err(Error::Precondition(
                "the linear variant needs a connected filtered relation".into(),
            ))
        }
        _ => {}
    }
    let dec = clusters(r_phi)?;
    let k = fr.class_count();
    let mut rows: Vec<WorldSet> = (0..k)
        .map(|a| {
            r_phi
                .succ(a)
                .iter()
                .filter(|&b| dec.cluster_of(a) != dec.cluster_of(b))
                .collect()
        })
        .collect();
    let mut rng = match variant {
        Variant::Linear(LinearOrder::Shuffled(seed)) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut records = Vec::with_capacity(dec.len());
    for (i, c) in dec.clusters().iter().enumerate() {
        let (critical_world, core) = critical_point(fr, c.worlds, n).map_err(|e| match e {
            Error::CoreTooLarge { size, n, .. } => Error::CoreTooLarge {
                cluster: i,
                size,
                n,
            },
            other => other,
        })?;
        let rest = c.worlds.difference(core);
        let mut chain = Vec::new();
        match variant {
            Variant::Base | Variant::Reflexive => {
                for a in c.worlds {
                    rows[a] = rows[a].union(core);
                }
                if variant == Variant::Reflexive {
                    for a in rest {
                        rows[a].insert(a);
                    }
                }
            }
            Variant::Linear(_) => {
                chain = rest.to_vec();
                if let Some(rng) = rng.as_mut() {
                    chain.shuffle(rng);
                }
                for (j, &a) in chain.iter().enumerate() {
                    let later: WorldSet = chain[j + 1..].iter().copied().collect();
                    rows[a] = rows[a].union(core).union(later);
                }
                for a in core {
                    rows[a] = rows[a].union(core);
                }
            }
        }
        records.push(CriticalRecord {
            cluster: c.worlds,
            critical_world,
            core,
            chain,
        });
    }
    let r_prime = Frame::from_rows(rows)?;
    let model = Model::new(r_prime.clone(), fr.valuation())?;
    verify(fr, n, variant, &model)?;
    Ok((
        ClusterRefinement {
            variant,
            records,
            r_prime,
        },
        model,
    ))
}

fn verify(fr: &FiltrationResult, n: usize, variant: Variant, m: &Model) -> Result<()> {
    let fail = |what: &str| Err(Error::Invariant(format!("refined model: {what}")));
    let r = m.frame();
    if !r.is_transitive() {
        return fail("relation is not transitive");
    }
    if (0..r.worlds()).any(|a| !r.succ(a).is_subset(fr.r_phi().succ(a))) {
        return fail("relation is not contained in the filtered relation");
    }
    if circumference(r)? > n {
        return fail("circumference exceeds n");
    }
    let members: Vec<_> = fr.phi().iter().collect();
    for (i, got) in m.truth_sets(&members).into_iter().enumerate() {
        if got != fr.phi_truth(i) {
            return fail(&format!("truth set of `{}` changed", members[i]));
        }
    }
    let shape_ok = match variant {
        Variant::Base => n > 0 || check_property(r, Property::Irreflexive),
        Variant::Reflexive => check_property(r, Property::Reflexive),
        Variant::Linear(_) => check_property(r, Property::Connected),
    };
    if !shape_ok {
        return fail(&format!(
            "{} variant output has the wrong shape",
            variant.name()
        ));
    }
    Ok(())
}
