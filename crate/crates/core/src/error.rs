use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a lattice needs at least one element")]
    EmptyLattice,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("order contains a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("not a lattice: `{0}` and `{1}` have no unique {2}")]
    NotALattice(String, String, &'static str),
    #[error("not a partial order: {0}")]
    NotAnOrder(String),
    #[error("operation needs a nonempty subset")]
    EmptyInput,
    #[error("relation sizes differ ({0} vs {1})")]
    HostMismatch(usize, usize),
    #[error("relation is not a reflexive weak ordered relation")]
    NotAWor,
    #[error("relation is not a tolerance")]
    NotATolerance,
    #[error("map is not a join-endomorphism: f({0} v {1}) != f({0}) v f({1})")]
    NotAJoinEndomorphism(String, String),
    #[error("size {size} exceeds the bound {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("blocks of the tolerance do not form a lattice: {0}")]
    FactorNotALattice(String),
    #[error("block/concept correspondence violated: {0}")]
    CorrespondenceViolation(String),
    #[error("block embedding violated: {0}")]
    EmbeddingViolation(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("unknown check id `{0}`")]
    UnknownCheckId(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
