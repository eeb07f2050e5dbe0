//! Reduced Betti numbers over GF(2), computed from boundary-matrix
//! ranks on the chain realization of the weighted complex. This is the
//! independent topological cross-check for the ball/sphere
//! classification.

use crate::complex::{Classification, WeightedComplex};
use crate::cube::face_to_chain;
use crate::error::{Error, Result};

/// Largest ground set for which the boundary matrices are materialized.
pub const HOMOLOGY_MAX_N: usize = 6;

/// Reduced Betti numbers indexed from dimension `-1`:
/// `reduced[d + 1]` is the rank of the reduced homology in dimension
/// `d`, for `d = -1, 0, ..., n - 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiNumbers {
    pub reduced: Vec<u64>,
}

impl BettiNumbers {
    /// Betti number in dimension `d` (with `d >= -1`).
    pub fn in_dim(&self, d: i64) -> u64 {
        self.reduced
            .get((d + 1) as usize)
            .copied()
            .unwrap_or(0)
    }

    /// True when the homology matches the classification: a single
    /// generator in the top dimension for spheres, nothing for balls,
    /// nothing at all for the empty complex.
    pub fn matches_classification(&self, class: &Classification) -> bool {
        match class {
            Classification::Empty => self.reduced.iter().all(|&b| b == 0),
            Classification::Ball { .. } => self.reduced.iter().all(|&b| b == 0),
            Classification::Sphere { dim } => self
                .reduced
                .iter()
                .enumerate()
                .all(|(i, &b)| b == u64::from(i as i64 - 1 == *dim)),
        }
    }
}

/// Computes the reduced GF(2) Betti numbers of the complex via the
/// chain-of-subsets realization of its faces.
pub fn reduced_betti_gf2(complex: &WeightedComplex) -> Result<BettiNumbers> {
    let n = complex.n();
    if n > HOMOLOGY_MAX_N {
        return Err(Error::CapExceeded {
            what: "homology",
            n,
            cap: HOMOLOGY_MAX_N,
        });
    }
    // Simplices grouped by number of vertices s = |sigma| - 1; the
    // empty simplex (s = 0) is present whenever the complex is.
    let mut by_size: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n + 1];
    for sigma in complex.faces() {
        let chain = face_to_chain(sigma, complex.lambda())?;
        by_size[chain.len()].push(chain);
    }
    for level in &mut by_size {
        level.sort_unstable();
    }

    // rank of the boundary map from s-vertex simplices to (s-1)-vertex
    // simplices, for s = 0..=n (zero maps at both ends).
    let mut ranks = vec![0usize; n + 2];
    for s in 1..=n {
        if by_size[s].is_empty() {
            continue;
        }
        let rows: Vec<Vec<u64>> = by_size[s]
            .iter()
            .map(|chain| {
                let mut row = vec![0u64; by_size[s - 1].len().div_ceil(64)];
                for skip in 0..chain.len() {
                    let mut sub: Vec<u32> = chain.clone();
                    sub.remove(skip);
                    let col = by_size[s - 1]
                        .binary_search(&sub)
                        .expect("the complex is closed under taking subchains");
                    row[col / 64] |= 1 << (col % 64);
                }
                row
            })
            .collect();
        ranks[s] = gf2_rank(rows);
    }

    let reduced = (0..n)
        .map(|s| (by_size[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect();
    Ok(BettiNumbers { reduced })
}

fn gf2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let words = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for word in 0..words {
        for bit in 0..64 {
            let Some(pivot) = (rank..rows.len())
                .find(|&r| rows[r][word] >> bit & 1 == 1)
            else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[word] >> bit & 1 == 1 {
                    for (a, b) in row.iter_mut().zip(&pivot_row) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}
