//! Seeded random weight vectors for the sweep drivers and test
//! populations. Numerators are uniform in [-9, 9] and denominators in
//! {1, 2, 3}; every sampler is deterministic given its RNG state, so a
//! recorded seed reproduces a population exactly.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use num::Zero;

use crate::weight::{Rat, WeightVector};

/// The RNG used everywhere a seed is accepted.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Constraint shapes for sampled weight vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaShape {
    /// No constraint.
    Any,
    /// Resampled until the total is nonzero.
    NonzeroTotal,
    /// Every entry strictly positive.
    AllPositive,
    /// First entry nonpositive.
    FirstNonpositive,
    /// Entries sorted weakly increasing.
    WeaklyIncreasing,
    /// Entries sorted weakly decreasing.
    WeaklyDecreasing,
    /// Weakly decreasing with strictly positive total.
    WeaklyDecreasingPositiveTotal,
    /// Pairwise distinct entries.
    Distinct,
    /// Pairwise distinct entries with strictly positive total.
    DistinctPositiveTotal,
}

fn random_entry<R: Rng>(rng: &mut R) -> Rat {
    Rat::new(rng.random_range(-9..=9), rng.random_range(1..=3))
}

fn random_positive_entry<R: Rng>(rng: &mut R) -> Rat {
    Rat::new(rng.random_range(1..=9), rng.random_range(1..=3))
}

/// Draws one weight vector of length `n` with the requested shape.
pub fn random_lambda<R: Rng>(rng: &mut R, n: usize, shape: LambdaShape) -> WeightVector {
    loop {
        let mut entries: Vec<Rat> = match shape {
            LambdaShape::AllPositive => (0..n).map(|_| random_positive_entry(rng)).collect(),
            LambdaShape::FirstNonpositive => {
                let mut v: Vec<Rat> = (0..n).map(|_| random_entry(rng)).collect();
                if let Some(first) = v.first_mut() {
                    if *first > Rat::zero() {
                        *first = -*first;
                    }
                }
                v
            }
            _ => (0..n).map(|_| random_entry(rng)).collect(),
        };
        match shape {
            LambdaShape::WeaklyIncreasing => entries.sort(),
            LambdaShape::WeaklyDecreasing | LambdaShape::WeaklyDecreasingPositiveTotal => {
                entries.sort_by(|a, b| b.cmp(a))
            }
            _ => {}
        }
        let lambda = WeightVector::new(entries).expect("n is within the ground set bound");
        let ok = match shape {
            LambdaShape::Any
            | LambdaShape::AllPositive
            | LambdaShape::FirstNonpositive
            | LambdaShape::WeaklyIncreasing
            | LambdaShape::WeaklyDecreasing => true,
            LambdaShape::NonzeroTotal => !lambda.total().is_zero(),
            LambdaShape::WeaklyDecreasingPositiveTotal => {
                lambda.total() > Rat::zero()
            }
            LambdaShape::Distinct => !lambda.has_repeated_entries(),
            LambdaShape::DistinctPositiveTotal => {
                !lambda.has_repeated_entries() && lambda.total() > Rat::zero()
            }
        };
        if ok {
            return lambda;
        }
    }
}

/// All vectors over a value grid, in odometer order: the first entry
/// varies fastest.
pub fn grid_lambdas(n: usize, values: &[Rat]) -> Vec<WeightVector> {
    assert!(!values.is_empty());
    let mut out = Vec::with_capacity(values.len().pow(n as u32));
    let mut idx = vec![0usize; n];
    loop {
        out.push(
            WeightVector::new(idx.iter().map(|&i| values[i]).collect())
                .expect("n is within the ground set bound"),
        );
        let mut k = 0;
        while k < n {
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    out
}
