//! Transitive modal logics with bounded cluster size: Kripke semantics,
//! filtration and cluster refinement, bounded decision, topological
//! semantics on finite spaces, and finite modal algebras.
//!
//! World sets are 64-bit masks, so every structure has at most 64 worlds.

pub mod algebra;
pub mod decision;
pub mod error;
pub mod eval;
pub mod filtration;
pub mod formula;
pub mod gen;
pub mod json;
pub mod kripke;
pub mod topology;
pub mod worlds;

pub use error::{Error, Result};
pub use formula::{parse, Formula, FormulaSet, Var};
pub use kripke::{Frame, Model};
pub use worlds::WorldSet;
