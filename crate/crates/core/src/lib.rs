//! Weighted Coxeter complexes of the symmetric group.
//!
//! Given a vector of exact rational weights, the ordered partitions of
//! the ground set whose prefix block sums are all strictly positive
//! form a subcomplex of the Coxeter complex of the symmetric group.
//! This crate constructs that complex, certifies its shellability and
//! its ball-or-sphere type, and verifies the alternating-sum identity
//! relating the face side to a signed sum over maximal matchings, by
//! several independent computation routes and with exact arithmetic
//! throughout.

pub mod caps;
pub mod complex;
pub mod composition;
pub mod cube;
pub mod error;
pub mod homology;
pub mod identity;
pub mod matching;
pub mod ordered_partition;
pub mod perm;
pub mod pfaffian;
pub mod sample;
pub mod shelling;
pub mod weight;

pub use caps::{EnumerationCaps, MAX_GROUND_SET};
pub use complex::{Classification, WeightedComplex};
pub use composition::Composition;
pub use cube::CubePoset;
pub use error::{Error, Result};
pub use homology::BettiNumbers;
pub use identity::{IdentityCheck, IdentityReport, RecursionCheck};
pub use matching::Matching;
pub use ordered_partition::OrderedPartition;
pub use perm::Permutation;
pub use pfaffian::SkewMatrix;
pub use shelling::{ShellingCertificate, ShellingReport};
pub use weight::{Rat, WeightVector};
