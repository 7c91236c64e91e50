use thiserror::Error;

/// Errors shared by every crate in the workspace.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a generalized Cartan matrix: entry ({row},{col}): {reason}")]
    NotGcm {
        row: usize,
        col: usize,
        reason: String,
    },
    #[error("matrix is not symmetrizable: inconsistent ratio on edge ({row},{col})")]
    NotSymmetrizable { row: usize, col: usize },
    #[error("matrix is not of finite type")]
    NotFiniteType,
    #[error("Cartan matrix is singular; weights cannot be converted to root coordinates")]
    SingularCartanMatrix,
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("not a diagram automorphism: a[{i}][{j}] != a[w({i})][w({j})]")]
    NotDiagramAutomorphism { i: usize, j: usize },
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("linking condition fails on orbit {orbit:?}: orbit sum s = {sum}")]
    LinkingConditionFailed { orbit: Vec<usize>, sum: i64 },
    #[error("orbit {0:?} is not a disjoint union of A1 and A2 components")]
    UnsupportedOrbitShape(Vec<usize>),
    #[error("weight {0} is not fixed by the automorphism")]
    NotSymmetricWeight(String),
    #[error("Weyl word {0} does not commute with the automorphism")]
    NotInWTilde(String),
    #[error("no descent found while peeling {0}")]
    NoDescentFound(String),
    #[error("Weyl word {0} is not reduced")]
    NotReduced(String),
    #[error("Demazure subspaces are not stable under the twining map: {0}")]
    NotTauStable(String),
    #[error("content {0} is not fixed by the automorphism")]
    ContentNotSymmetric(String),
    #[error("content {content} needs {words} words, above the cap of {cap}")]
    TooLarge {
        content: String,
        words: String,
        cap: u64,
    },
    #[error("unknown Cartan label {0:?}")]
    UnknownLabel(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
