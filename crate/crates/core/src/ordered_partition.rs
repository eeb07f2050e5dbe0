//! Ordered partitions of `[n]`: sequences of disjoint nonempty blocks
//! covering the ground set. These are the faces of the Coxeter complex
//! of the symmetric group; merging two adjacent blocks is the cover
//! relation of the face order.

use std::fmt;

use crate::caps::{check_ground_set, EnumerationCaps};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An ordered partition `(C_1, ..., C_k)` of `[n]`; each block is a bit
/// mask over the ground set (bit `e-1` for element `e`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedPartition {
    n: u8,
    blocks: Vec<u32>,
}

pub fn full_mask(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}

impl OrderedPartition {
    pub fn new(n: usize, blocks: Vec<u32>) -> Result<Self> {
        check_ground_set(n).map_err(|_| Error::InvalidPartition {
            reason: format!("ground set size {n} too large"),
        })?;
        if blocks.is_empty() || n == 0 {
            return Err(Error::InvalidPartition {
                reason: "no blocks".into(),
            });
        }
        let mut seen = 0u32;
        for &b in &blocks {
            if b == 0 {
                return Err(Error::InvalidPartition {
                    reason: "empty block".into(),
                });
            }
            if b & seen != 0 {
                return Err(Error::InvalidPartition {
                    reason: "blocks are not disjoint".into(),
                });
            }
            seen |= b;
        }
        if seen != full_mask(n) {
            return Err(Error::InvalidPartition {
                reason: format!("blocks do not cover 1..={n}"),
            });
        }
        Ok(OrderedPartition {
            n: n as u8,
            blocks,
        })
    }

    /// Convenience constructor from explicit element lists.
    pub fn from_blocks(n: usize, blocks: &[&[u8]]) -> Result<Self> {
        let masks = blocks
            .iter()
            .map(|block| block.iter().fold(0u32, |m, &e| m | (1 << (e - 1))))
            .collect();
        OrderedPartition::new(n, masks)
    }

    /// The all-singleton partition listing the one-line notation of `tau`.
    pub fn from_permutation(tau: &Permutation) -> Self {
        OrderedPartition {
            n: tau.n() as u8,
            blocks: tau.entries().iter().map(|&v| 1u32 << (v - 1)).collect(),
        }
    }

    /// The one-block partition `([n])`.
    pub fn whole(n: usize) -> Self {
        OrderedPartition::new(n, vec![full_mask(n)]).expect("one full block is valid")
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Number of blocks.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> u32 {
        self.blocks[i]
    }

    /// When all blocks are singletons, the corresponding permutation.
    pub fn as_permutation(&self) -> Option<Permutation> {
        if self.blocks.iter().any(|b| b.count_ones() != 1) {
            return None;
        }
        let entries = self
            .blocks
            .iter()
            .map(|b| b.trailing_zeros() as u8 + 1)
            .collect();
        Some(Permutation::new(entries).expect("singleton blocks list each element once"))
    }

    /// Block sizes, read off in order.
    pub fn op_type(&self) -> Composition {
        Composition::new(self.blocks.iter().map(|b| b.count_ones() as u8).collect())
            .expect("nonempty blocks")
    }

    /// Merges blocks `i` and `i+1` (0-based).
    pub fn merged(&self, i: usize) -> Result<OrderedPartition> {
        if i + 1 >= self.blocks.len() {
            return Err(Error::BlockIndexOutOfRange {
                index: i,
                blocks: self.blocks.len(),
            });
        }
        let mut blocks = Vec::with_capacity(self.blocks.len() - 1);
        blocks.extend_from_slice(&self.blocks[..i]);
        blocks.push(self.blocks[i] | self.blocks[i + 1]);
        blocks.extend_from_slice(&self.blocks[i + 2..]);
        Ok(OrderedPartition { n: self.n, blocks })
    }

    /// All covers in the merge order: each adjacent pair merged.
    pub fn merge_covers(&self) -> Vec<OrderedPartition> {
        (0..self.blocks.len().saturating_sub(1))
            .map(|i| self.merged(i).unwrap())
            .collect()
    }

    /// True when `coarser` is obtained from `self` by merging runs of
    /// consecutive blocks, i.e. `self <= coarser` in the merge order.
    pub fn refines_to(&self, coarser: &OrderedPartition) -> bool {
        if self.n != coarser.n {
            return false;
        }
        let mut acc = 0u32;
        let mut target = coarser.blocks.iter();
        let mut current = match target.next() {
            Some(&b) => b,
            None => return false,
        };
        for &b in &self.blocks {
            acc |= b;
            if acc == current {
                current = match target.next() {
                    Some(&c) => c,
                    None => 0,
                };
                acc = 0;
            } else if acc & !current != 0 {
                return false;
            }
        }
        acc == 0 && current == 0 && target.next().is_none()
    }

    /// Sorts each block increasingly and concatenates. The result is the
    /// minimal permutation `tau` in the weak Bruhat order with
    /// `self` a face of the facet `tau`.
    pub fn f_map(&self) -> Permutation {
        let mut entries = Vec::with_capacity(self.n());
        for &b in &self.blocks {
            let mut m = b;
            while m != 0 {
                let e = m.trailing_zeros() as u8 + 1;
                entries.push(e);
                m &= m - 1;
            }
        }
        Permutation::new(entries).expect("blocks partition the ground set")
    }

    /// Sorts each block decreasingly and concatenates.
    pub fn g_map(&self) -> Permutation {
        let mut entries = Vec::with_capacity(self.n());
        for &b in &self.blocks {
            let mut m = b;
            while m != 0 {
                let e = 31 - m.leading_zeros() as u8 + 1;
                entries.push(e);
                m &= !(1 << (e - 1));
            }
        }
        Permutation::new(entries).expect("blocks partition the ground set")
    }

    /// Repeatedly merges adjacent blocks with `max(C_i) < min(C_{i+1})`
    /// until no such pair remains. A single left-to-right pass suffices:
    /// merging a block into its predecessor never lowers the
    /// predecessor's maximum, so earlier pairs stay unmergeable.
    pub fn r_map(&self) -> OrderedPartition {
        let mut blocks: Vec<u32> = Vec::with_capacity(self.blocks.len());
        for &b in &self.blocks {
            match blocks.last_mut() {
                Some(prev) if block_max(*prev) < block_min(b) => *prev |= b,
                _ => blocks.push(b),
            }
        }
        OrderedPartition { n: self.n, blocks }
    }

    /// Applies `tau` elementwise to every block, preserving block order.
    pub fn relabeled(&self, tau: &Permutation) -> OrderedPartition {
        assert_eq!(self.n(), tau.n());
        OrderedPartition {
            n: self.n,
            blocks: self.blocks.iter().map(|&b| tau.image_of_set(b)).collect(),
        }
    }

    /// Compact key assigning each element its block index (4 bits each).
    pub fn key(&self) -> u64 {
        let mut key = 0u64;
        for (idx, &b) in self.blocks.iter().enumerate() {
            let mut m = b;
            while m != 0 {
                let e = m.trailing_zeros() as u64;
                key |= (idx as u64) << (4 * e);
                m &= m - 1;
            }
        }
        key
    }
}

fn block_min(b: u32) -> u32 {
    b.trailing_zeros() + 1
}

fn block_max(b: u32) -> u32 {
    31 - b.leading_zeros() + 1
}

/// Maximal ascending runs of `tau`, taken in order, as an ordered
/// partition. Coincides with `r_map` applied to the singleton partition.
pub fn run_partition(tau: &Permutation) -> OrderedPartition {
    OrderedPartition::from_permutation(tau).r_map()
}

impl fmt::Display for OrderedPartition {
    /// Blocks are printed with elements ascending and joined by `-`
    /// (e.g. `1-4-23`); for `n >= 10` elements are comma separated
    /// within blocks.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n() >= 10;
        for (idx, &b) in self.blocks.iter().enumerate() {
            if idx > 0 {
                write!(f, "-")?;
            }
            let mut m = b;
            let mut first = true;
            while m != 0 {
                let e = m.trailing_zeros() + 1;
                if wide && !first {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
                first = false;
                m &= m - 1;
            }
        }
        Ok(())
    }
}

/// Streams every ordered partition of `[n]` exactly once, in the order
/// (number of blocks ascending, block mask sequence lexicographic).
pub fn for_each_ordered_partition<F: FnMut(&OrderedPartition)>(
    n: usize,
    caps: &EnumerationCaps,
    mut f: F,
) -> Result<()> {
    caps.check_partitions(n)?;
    if n == 0 {
        return Err(Error::InvalidPartition {
            reason: "ground set is empty".into(),
        });
    }
    let full = full_mask(n);
    let mut blocks: Vec<u32> = Vec::with_capacity(n);
    for k in 1..=n {
        recurse_partitions(full, k, &mut blocks, n, &mut f);
    }
    Ok(())
}

fn recurse_partitions<F: FnMut(&OrderedPartition)>(
    remaining: u32,
    blocks_left: usize,
    blocks: &mut Vec<u32>,
    n: usize,
    f: &mut F,
) {
    if blocks_left == 1 {
        blocks.push(remaining);
        f(&OrderedPartition {
            n: n as u8,
            blocks: blocks.clone(),
        });
        blocks.pop();
        return;
    }
    // Enumerate nonempty proper submasks of `remaining` in increasing
    // numeric order, leaving enough elements for the remaining blocks.
    let need = blocks_left - 1;
    let mut b = 0u32;
    loop {
        b = b.wrapping_sub(remaining) & remaining;
        if b == 0 {
            break;
        }
        if b == remaining {
            continue;
        }
        if ((remaining & !b).count_ones() as usize) < need {
            continue;
        }
        blocks.push(b);
        recurse_partitions(remaining & !b, need, blocks, n, f);
        blocks.pop();
    }
}

/// Collects the full stream; intended for small `n`.
pub fn ordered_partitions(n: usize, caps: &EnumerationCaps) -> Result<Vec<OrderedPartition>> {
    let mut out = Vec::new();
    for_each_ordered_partition(n, caps, |p| out.push(p.clone()))?;
    Ok(out)
}

/// Ordered Bell numbers (number of ordered partitions of `[n]`).
pub fn ordered_bell(n: usize) -> u128 {
    // a(n) = sum_{k=1}^{n} C(n,k) a(n-k)
    let mut a = vec![1u128; n + 1];
    for m in 1..=n {
        let mut total = 0u128;
        let mut binom = 1u128; // C(m, k)
        for k in 1..=m {
            binom = binom * (m as u128 - k as u128 + 1) / k as u128;
            total += binom * a[m - k];
        }
        a[m] = total;
    }
    a[n]
}
