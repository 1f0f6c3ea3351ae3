use thiserror::Error;

use crate::formula::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("expected {expected} arguments, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("unknown axiom name `{0}`")]
    UnknownAxiom(String),

    #[error("relation is not transitive")]
    NotTransitive,

    #[error("relation is not a quasi-order (reflexive and transitive)")]
    NotQuasiOrder,

    #[error("{what} needs {required} cases, over the cap of {cap}")]
    BudgetExceeded {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    #[error("{found} worlds requested; at most {max} are supported")]
    TooManyWorlds { found: usize, max: usize },

    #[error("world {world} out of range for a structure with {size} worlds")]
    WorldOutOfRange { world: usize, size: usize },

    #[error("formula set is not closed under subformulas: `{0}` is missing")]
    PhiNotClosed(String),

    #[error("cluster {cluster}: critical core has {size} classes, more than n = {n}")]
    CoreTooLarge {
        cluster: usize,
        size: usize,
        n: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("T with circumference bound 0 axiomatizes the inconsistent logic")]
    ReflexiveWithZeroCircumference,

    #[error("invalid logic: {0}")]
    InvalidLogic(String),

    #[error("subspace must be non-empty")]
    EmptySubspace,

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid sentence: {0}")]
    InvalidSentence(String),

    #[error("witness does not falsify the sentence: {0}")]
    WitnessInvalid(String),

    #[error("internal invariant failed: {0}")]
    Invariant(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
