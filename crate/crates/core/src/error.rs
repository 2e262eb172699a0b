use thiserror::Error;

/// Errors raised by the combinatorial and polynomial operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A window that is not a bijection of {1, ..., n}.
    #[error("invalid permutation window: {0}")]
    InvalidPermutation(String),

    /// A Lehmer code entry out of range for its role.
    #[error("invalid Lehmer code: {0}")]
    InvalidLehmerCode(String),

    /// Two objects that must live in the same symmetric group do not.
    #[error("size mismatch: expected n = {expected}, got n = {got}")]
    SizeMismatch { expected: usize, got: usize },

    /// A box outside the staircase {(i, j) : 1 <= i < j <= n}.
    #[error("box ({i}, {j}) is outside the staircase for n = {n}")]
    BoxOutOfRange { i: usize, j: usize, n: usize },

    /// A pipe dream cross outside the region r + c <= n.
    #[error("cross ({r}, {c}) is outside the pipe dream region for n = {n}")]
    CrossOutOfRange { r: usize, c: usize, n: usize },

    /// A box set that is not the inversion set of any permutation.
    #[error("box set is not a valid inversions diagram")]
    InvalidDiagram,

    /// A filling that breaks a structural rule of inversions tableaux.
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    /// No cover of the requested kind exists.
    #[error("no cover: {0}")]
    NoCover(String),

    /// A sequence of permutations that is not a saturated weak-order chain.
    #[error("invalid chain: {0}")]
    InvalidChain(String),

    /// A pipe dream in which some pair of pipes crosses more than once.
    #[error("pipe dream is not reduced: {0}")]
    NotReduced(String),

    /// A word/weights pair violating one of the compatibility conditions.
    #[error("incompatible word and weights: {0}")]
    IncompatiblePair(String),

    /// Row flags that are not weakly increasing or do not cover the shape.
    #[error("invalid flags: {0}")]
    InvalidFlags(String),

    /// The permutation does not have the single descent required here.
    #[error("permutation is not {k}-Grassmannian")]
    NotGrassmannian { k: usize },

    /// A pair that must be comparable (u <= w) is not.
    #[error("permutations are not nested: {0}")]
    NotNested(String),

    /// Polynomial arities disagree.
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),

    /// A variable index outside 1..arity (or 1..arity-1 for divided differences).
    #[error("variable index {i} out of range for arity {arity}")]
    VariableOutOfRange { i: usize, arity: usize },

    /// A sequence that is not a valid partition (weakly decreasing, positive parts).
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Schur expansion failed (input not symmetric or not an integer combination).
    #[error("Schur expansion failed: {0}")]
    Expansion(String),

    /// The requested chute move is not available.
    #[error("no chute move: {0}")]
    NoChuteMove(String),

    /// A JSON payload that does not match the expected schema.
    #[error("serialization: {0}")]
    Serialization(String),

    /// An internal consistency guarantee failed; indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
