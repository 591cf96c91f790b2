use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("order relation has a cycle through `{0}`")]
    Cycle(String),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("poset is empty")]
    Empty,
    #[error("poset has no global minimum")]
    NoMinimum,
    #[error("elements `{0}` and `{1}` have no unique greatest lower bound")]
    NoMeet(String, String),
    #[error("meet of an empty set is undefined")]
    EmptyMeet,
    #[error("`{0}` is not below `{1}`")]
    NotComparable(String, String),
    #[error("operation not defined at the bottom element")]
    AtBottom,
    #[error("semilattice is not atomic: `{0}` is not a join of atoms")]
    NotAtomic(String),
    #[error("semilattice has no unique maximum")]
    NoMaximum,
    #[error("set contains `{0}`, which is not in the building set")]
    NotInBuildingSet(String),
    #[error("`{0}` is not a building set: {1}")]
    NotBuilding(String, String),
    #[error("size {size} exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("crosscut must be the set of atoms")]
    NotAtomCrosscut,
    #[error("building set H is not contained in G")]
    NotSubset,
    #[error("vertex `{0}` is not in the complex")]
    UnknownVertex(String),
    #[error("cone {0:?} is not in the fan")]
    ConeNotInFan(Vec<usize>),
    #[error("vector is not in the relative interior of the cone")]
    NotInRelativeInterior,
    #[error("rays {0:?} are linearly dependent")]
    LinearlyDependent(Vec<usize>),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("graph is not simple: {0}")]
    NotSimpleGraph(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("verification failed: {0}")]
    Falsified(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
