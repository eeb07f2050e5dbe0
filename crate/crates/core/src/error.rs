use thiserror::Error;

/// Errors surfaced by construction, enumeration, and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {n} exceeds the supported maximum {max}")]
    GroundSetTooLarge { n: usize, max: usize },

    #[error("{what} enumeration at n = {n} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("invalid permutation: {reason}")]
    InvalidPermutation { reason: String },

    #[error("invalid ordered partition: {reason}")]
    InvalidPartition { reason: String },

    #[error("invalid matching: {reason}")]
    InvalidMatching { reason: String },

    #[error("invalid composition: {reason}")]
    InvalidComposition { reason: String },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("block index {index} out of range for partition with {blocks} blocks")]
    BlockIndexOutOfRange { index: usize, blocks: usize },

    #[error("index {index} out of range (valid range 1..={max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("block is a singleton and cannot be split")]
    SingletonBlock,

    #[error("subset is not a nonempty proper subset of the chosen block")]
    NotProperSubset,

    #[error("ordered partition is not a face of the weighted complex")]
    NotAFace,

    #[error("permutation does not satisfy the paired-ascent conditions")]
    NotPairedAscending,

    #[error("matching on an even ground set cannot be lifted")]
    EvenGroundSet,

    #[error("skew matrix order {order} is odd; an even order is required")]
    OddOrder { order: usize },

    #[error("weights are not weakly increasing")]
    NotWeaklyIncreasing,

    #[error("weights are not weakly decreasing")]
    NotWeaklyDecreasing,

    #[error("weights contain repeated entries")]
    RepeatedWeights,

    #[error("total weight is not strictly positive")]
    NonpositiveTotal,

    #[error("subset with zero weight sum exists (mask {mask:#b}); perturbation would change the complex")]
    ZeroSubsetSum { mask: u32 },

    #[error("facet order does not enumerate the facets exactly once")]
    NotAFacetOrder,

    #[error("decomposition into facet intervals failed: {detail}")]
    DecompositionViolation { detail: String },

    #[error("arithmetic overflow while normalizing weights")]
    WeightOverflow,
}

pub type Result<T> = std::result::Result<T, Error>;
