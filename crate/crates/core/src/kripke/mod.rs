//! Finite Kripke frames and models.

mod clusters;
mod frame;
mod model;
mod relations;
mod validity;

pub use clusters::{circumference, clusters, Cluster, ClusterDecomposition, ClusterKind};
pub use frame::{check_property, Frame, Property};
pub use model::{pn_path_oracle, truth_set, Model};
pub use relations::{all_relations, brute_canonical, relations_up_to_iso};
pub use validity::{
    find_isomorphism, frame_countermodel, frame_valid, is_isomorphic, require_transitive,
    validates_logic, DEFAULT_VALUATION_CAP,
};
