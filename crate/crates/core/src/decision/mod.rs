//! Bounded theoremhood for `K4Cₙ` and its extensions by countermodel search.

mod decide;
mod enumerate;
mod spec;

pub use decide::{
    bound_formulas, completeness_bound, completeness_bound_for, decide, m_closure, separate_logics,
    BoundMode, Budget, Verdict, VerdictKind,
};
pub use enumerate::{enumerate_frames, ClusterPoset, FrameEnumerator};
pub use spec::{Extension, LogicSpec};
