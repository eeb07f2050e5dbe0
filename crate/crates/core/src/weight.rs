//! Weight vectors over exact rationals. Every positivity test in the
//! crate is an exact comparison; floating point never enters.

use num::rational::Ratio;
use num::{Signed, Zero};

use crate::caps::check_ground_set;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Exact rational scalar used for all weights.
pub type Rat = Ratio<i64>;

/// A sequence of `n` exact rational weights. Entries may be zero,
/// negative, or repeated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    entries: Vec<Rat>,
}

impl WeightVector {
    pub fn new(entries: Vec<Rat>) -> Result<Self> {
        check_ground_set(entries.len())?;
        Ok(WeightVector { entries })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        WeightVector::new(values.iter().map(|&v| Rat::from_integer(v)).collect())
    }

    /// The empty weight vector; useful for the length-reduction
    /// identities, which shrink vectors two entries at a time.
    pub fn empty() -> Self {
        WeightVector { entries: vec![] }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    /// Entry at 1-based index.
    pub fn get(&self, i: usize) -> Rat {
        self.entries[i - 1]
    }

    /// Exact sum over the subset encoded by `mask`.
    pub fn subset_weight(&self, mask: u32) -> Rat {
        let mut sum = Rat::zero();
        let mut m = mask;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            sum += self.entries[e];
            m &= m - 1;
        }
        sum
    }

    pub fn total(&self) -> Rat {
        self.entries.iter().sum()
    }

    pub fn all_positive(&self) -> bool {
        self.entries.iter().all(|w| w.is_positive())
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn has_repeated_entries(&self) -> bool {
        let mut sorted = self.entries.clone();
        sorted.sort();
        sorted.windows(2).any(|w| w[0] == w[1])
    }

    /// The reversed sequence; an involution.
    pub fn reversed(&self) -> WeightVector {
        WeightVector {
            entries: self.entries.iter().rev().copied().collect(),
        }
    }

    /// Applies `tau`: position `i` of the result holds the entry at
    /// position `tau^{-1}(i)`, so `relabeled(tau)` sums over `tau(B)`
    /// exactly as `self` sums over `B`.
    pub fn relabeled(&self, tau: &Permutation) -> WeightVector {
        assert_eq!(self.n(), tau.n());
        let inv = tau.inverse();
        WeightVector {
            entries: (1..=self.n())
                .map(|i| self.entries[inv.apply(i as u8) as usize - 1])
                .collect(),
        }
    }

    /// A permutation `tau` with `relabeled(tau)` weakly decreasing;
    /// ties are broken by original position, so the result is
    /// deterministic.
    pub fn sorting_permutation_decreasing(&self) -> Permutation {
        let mut idx: Vec<usize> = (0..self.n()).collect();
        idx.sort_by(|&a, &b| self.entries[b].cmp(&self.entries[a]).then(a.cmp(&b)));
        // Position i of the sorted vector takes the original entry
        // idx[i], i.e. tau^{-1}(i + 1) = idx[i] + 1.
        let mut entries = vec![0u8; self.n()];
        for (i, &orig) in idx.iter().enumerate() {
            entries[orig] = i as u8 + 1;
        }
        Permutation::new(entries).expect("index sort is a bijection")
    }

    /// Swaps entries `i` and `i+1` (1-based).
    pub fn swapped(&self, i: usize) -> Result<WeightVector> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n().saturating_sub(1),
            });
        }
        let mut entries = self.entries.clone();
        entries.swap(i - 1, i);
        Ok(WeightVector { entries })
    }

    /// Removes entries `i` and `i+1` (1-based), producing the length
    /// `n - 2` vector of the reduction identities.
    pub fn without_pair(&self, i: usize) -> Result<WeightVector> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n().saturating_sub(1),
            });
        }
        let mut entries = Vec::with_capacity(self.n() - 2);
        entries.extend_from_slice(&self.entries[..i - 1]);
        entries.extend_from_slice(&self.entries[i + 1..]);
        Ok(WeightVector { entries })
    }

    /// Rescales all entries by the least common denominator, yielding
    /// integers whose subset sums have exactly the signs of the
    /// rational subset sums. The hot enumeration loops run on these.
    pub(crate) fn scaled_integers(&self) -> Result<Vec<i64>> {
        let lcm = self
            .entries
            .iter()
            .map(|w| *w.denom())
            .try_fold(1i64, |acc, d| {
                let g = num::integer::gcd(acc, d);
                (acc / g).checked_mul(d)
            })
            .ok_or(Error::WeightOverflow)?;
        self.entries
            .iter()
            .map(|w| {
                w.numer()
                    .checked_mul(lcm / w.denom())
                    .filter(|v| v.abs() <= i64::MAX / 32)
                    .ok_or(Error::WeightOverflow)
            })
            .collect()
    }

    /// Returns a mask of a nonempty subset whose weights sum to zero,
    /// if one exists.
    pub fn zero_subset(&self) -> Option<u32> {
        let n = self.n();
        (1u32..(1u32 << n)).find(|&mask| self.subset_weight(mask).is_zero())
    }

    /// Replaces `w_i` by `w_i + i * eps` for an explicit rational
    /// `eps > 0` small enough that no subset sum changes sign. The
    /// result has pairwise distinct entries and defines the same
    /// weighted complex. Fails when some nonempty subset sums to zero,
    /// since any perturbation would then change the complex.
    pub fn perturbed_distinct(&self) -> Result<WeightVector> {
        if let Some(mask) = self.zero_subset() {
            return Err(Error::ZeroSubsetSum { mask });
        }
        let n = self.n();
        if n == 0 {
            return Ok(self.clone());
        }
        let mut min_abs: Option<Rat> = None;
        for mask in 1u32..(1u32 << n) {
            let a = self.subset_weight(mask).abs();
            min_abs = Some(match min_abs {
                Some(m) if m <= a => m,
                _ => a,
            });
        }
        let index_total = (n as i64) * (n as i64 + 1) / 2;
        let eps = min_abs.unwrap() / Rat::from_integer(2 * index_total);
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &w)| w + eps * Rat::from_integer(i as i64 + 1))
            .collect();
        Ok(WeightVector { entries })
    }
}
