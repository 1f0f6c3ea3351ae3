//! JSON shapes for frames, models, spaces, algebras and the results built
//! on them. World sets are written as ascending lists of indices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{subalgebra_generated, ModalAlgebra, Witness};
use crate::decision::{Verdict, VerdictKind};
use crate::error::{Error, Result};
use crate::filtration::{ClusterRefinement, FiltrationResult};
use crate::formula::Var;
use crate::kripke::{ClusterDecomposition, ClusterKind, Frame, Model};
use crate::topology::FiniteSpace;
use crate::worlds::WorldSet;

pub fn set_to_json(s: WorldSet) -> Vec<usize> {
    s.to_vec()
}

pub fn set_from_json(xs: &[usize], size: usize) -> Result<WorldSet> {
    let s: WorldSet = xs
        .iter()
        .map(|&x| {
            if x >= size {
                Err(Error::WorldOutOfRange { world: x, size })
            } else {
                Ok(x)
            }
        })
        .collect::<Result<_>>()?;
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameJson {
    pub worlds: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Frame> for FrameJson {
    fn from(f: &Frame) -> Self {
        FrameJson {
            worlds: f.worlds(),
            edges: f.edges(),
        }
    }
}

impl TryFrom<&FrameJson> for Frame {
    type Error = Error;

    fn try_from(j: &FrameJson) -> Result<Frame> {
        Frame::from_edges(j.worlds, &j.edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelJson {
    pub worlds: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default)]
    pub valuation: BTreeMap<String, Vec<usize>>,
}

impl From<&Model> for ModelJson {
    fn from(m: &Model) -> Self {
        ModelJson {
            worlds: m.frame().worlds(),
            edges: m.frame().edges(),
            valuation: m
                .valuation()
                .iter()
                .map(|(v, s)| (v.name().to_string(), set_to_json(*s)))
                .collect(),
        }
    }
}

impl TryFrom<&ModelJson> for Model {
    type Error = Error;

    fn try_from(j: &ModelJson) -> Result<Model> {
        let frame = Frame::from_edges(j.worlds, &j.edges)?;
        let valuation = j
            .valuation
            .iter()
            .map(|(v, xs)| Ok((Var::new(v), set_from_json(xs, j.worlds)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Model::new(frame, valuation)
    }
}

/// A space given by all its open sets, or by a subbasis to generate from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub points: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subbasis: Option<Vec<Vec<usize>>>,
}

impl From<&FiniteSpace> for SpaceJson {
    fn from(s: &FiniteSpace) -> Self {
        SpaceJson {
            points: s.points(),
            opens: Some(s.opens().iter().map(|&o| set_to_json(o)).collect()),
            subbasis: None,
        }
    }
}

impl TryFrom<&SpaceJson> for FiniteSpace {
    type Error = Error;

    fn try_from(j: &SpaceJson) -> Result<FiniteSpace> {
        let sets = |xs: &Vec<Vec<usize>>| -> Result<Vec<WorldSet>> {
            xs.iter().map(|x| set_from_json(x, j.points)).collect()
        };
        match (&j.opens, &j.subbasis) {
            (Some(opens), None) => FiniteSpace::new(j.points, sets(opens)?),
            (None, Some(sub)) => FiniteSpace::generate_topology(j.points, sets(sub)?),
            _ => Err(Error::InvalidTopology(
                "give exactly one of `opens` and `subbasis`".into(),
            )),
        }
    }
}

/// An algebra over `frame`, given by its whole carrier or by generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub frame: FrameJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<usize>>>,
}

impl From<&ModalAlgebra> for AlgebraJson {
    fn from(a: &ModalAlgebra) -> Self {
        AlgebraJson {
            frame: a.base().into(),
            carrier: Some(a.carrier().iter().map(|&e| set_to_json(e)).collect()),
            generators: None,
        }
    }
}

impl TryFrom<&AlgebraJson> for ModalAlgebra {
    type Error = Error;

    fn try_from(j: &AlgebraJson) -> Result<ModalAlgebra> {
        let frame = Frame::try_from(&j.frame)?;
        let sets = |xs: &Vec<Vec<usize>>| -> Result<Vec<WorldSet>> {
            xs.iter()
                .map(|x| set_from_json(x, frame.worlds()))
                .collect()
        };
        match (&j.carrier, &j.generators) {
            (Some(c), None) => ModalAlgebra::new(frame.clone(), sets(c)?),
            (None, Some(g)) => subalgebra_generated(&frame, sets(g)?),
            (None, None) => crate::algebra::complex_algebra(&frame),
            _ => Err(Error::InvalidAlgebra(
                "give at most one of `carrier` and `generators`".into(),
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub tuple: Vec<Vec<usize>>,
    pub clause: usize,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            tuple: w.tuple.iter().map(|&e| set_to_json(e)).collect(),
            clause: w.clause,
        }
    }
}

impl WitnessJson {
    pub fn to_witness(&self, worlds: usize) -> Result<Witness> {
        Ok(Witness {
            tuple: self
                .tuple
                .iter()
                .map(|x| set_from_json(x, worlds))
                .collect::<Result<_>>()?,
            clause: self.clause,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClusterJson {
    pub worlds: Vec<usize>,
    pub kind: ClusterKind,
    pub is_final: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClustersJson {
    pub clusters: Vec<ClusterJson>,
    /// Strict order between clusters, by cluster index.
    pub order: Vec<(usize, usize)>,
    pub circumference: usize,
}

impl From<&ClusterDecomposition> for ClustersJson {
    fn from(d: &ClusterDecomposition) -> Self {
        ClustersJson {
            clusters: d
                .clusters()
                .iter()
                .map(|c| ClusterJson {
                    worlds: set_to_json(c.worlds),
                    kind: c.kind,
                    is_final: c.is_final,
                })
                .collect(),
            order: d.lifted_edges(),
            circumference: d
                .clusters()
                .iter()
                .filter(|c| !c.is_degenerate())
                .map(|c| c.len())
                .max()
                .unwrap_or(0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CriticalJson {
    pub cluster: Vec<usize>,
    pub critical_world: usize,
    pub core: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chain: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RefinementJson {
    pub variant: String,
    pub critical: Vec<CriticalJson>,
    pub r_prime: FrameJson,
}

impl From<&ClusterRefinement> for RefinementJson {
    fn from(r: &ClusterRefinement) -> Self {
        RefinementJson {
            variant: r.variant.name().to_string(),
            critical: r
                .records
                .iter()
                .map(|c| CriticalJson {
                    cluster: set_to_json(c.cluster),
                    critical_world: c.critical_world,
                    core: set_to_json(c.core),
                    chain: c.chain.clone(),
                })
                .collect(),
            r_prime: (&r.r_prime).into(),
        }
    }
}

/// Trace of a filtration: classes, `R_Φ`, and the truth of each member of
/// `Φ` on classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FiltrationJson {
    pub phi: Vec<String>,
    pub classes: Vec<Vec<usize>>,
    pub r_phi: FrameJson,
    pub truth: BTreeMap<String, Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refinement: Option<RefinementJson>,
}

impl FiltrationJson {
    pub fn new(fr: &FiltrationResult, refinement: Option<&ClusterRefinement>) -> Self {
        FiltrationJson {
            phi: fr.phi().iter().map(|f| f.to_string()).collect(),
            classes: fr.classes().iter().map(|&c| set_to_json(c)).collect(),
            r_phi: fr.r_phi().into(),
            truth: fr
                .phi()
                .iter()
                .enumerate()
                .map(|(i, f)| (f.to_string(), set_to_json(fr.phi_truth(i))))
                .collect(),
            refinement: refinement.map(Into::into),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerdictJson {
    pub verdict: VerdictKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub countermodel: Option<ModelJson>,
    pub searched_bound: usize,
    pub exhaustive: bool,
    /// Decimal, since the bound can exceed 64 bits.
    pub completeness_bound: String,
    pub frames_checked: usize,
    pub frames_skipped: usize,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson {
            verdict: v.kind,
            countermodel: v.countermodel.as_ref().map(Into::into),
            searched_bound: v.searched_bound,
            exhaustive: v.exhaustive,
            completeness_bound: v.completeness_bound.to_string(),
            frames_checked: v.frames_checked,
            frames_skipped: v.frames_skipped,
        }
    }
}
