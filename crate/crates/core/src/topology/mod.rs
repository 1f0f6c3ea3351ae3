//! Finite topological spaces, read either with `◇` as closure or with `◇`
//! as the derived-set operator.

mod props;
mod semantics;
mod space;

pub use props::{
    is_hered_n_irresolvable, is_n_resolvable, separation, Separation, DEFAULT_SEARCH_CAP,
};
pub use semantics::{
    space_countermodel, truth_set_c, truth_set_d, valid_c, valid_d, Semantics, SpaceModel,
};
pub use space::{alexandroff, specialization, FiniteSpace};
