//! The weighted subcomplex of the Coxeter complex: ordered partitions
//! whose prefix block sums are all strictly positive. The one-block
//! partition is the empty face, partitions into singletons are the
//! facets, and the dimension of a face with `k` blocks is `k - 2`.

use std::fmt;

use num::Signed;

use crate::caps::EnumerationCaps;
use crate::error::{Error, Result};
use crate::ordered_partition::{full_mask, OrderedPartition};
use crate::perm::Permutation;
use crate::weight::{Rat, WeightVector};

/// Membership test: every prefix block sum must be strictly positive.
pub fn is_face(lambda: &WeightVector, sigma: &OrderedPartition) -> bool {
    assert_eq!(lambda.n(), sigma.n());
    let mut prefix = Rat::from_integer(0);
    for &b in sigma.blocks() {
        prefix += lambda.subset_weight(b);
        if !prefix.is_positive() {
            return false;
        }
    }
    true
}

/// Homeomorphism type of the weighted complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// All weights strictly positive: a sphere of dimension `n - 2`.
    Sphere { dim: i64 },
    /// Positive total but some nonpositive weight: a ball of dimension
    /// `n - 2`.
    Ball { dim: i64 },
    /// Nonpositive total: no faces at all, not even the empty face.
    Empty,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Sphere { dim } => write!(f, "Sphere({dim})"),
            Classification::Ball { dim } => write!(f, "Ball({dim})"),
            Classification::Empty => write!(f, "Empty"),
        }
    }
}

/// A fully materialized weighted complex: the face set, with the
/// facets extracted as permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedComplex {
    lambda: WeightVector,
    faces: Vec<OrderedPartition>,
    facets: Vec<Permutation>,
}

impl WeightedComplex {
    /// Enumerates all faces by a pruned recursion over first blocks:
    /// a prefix with a nonpositive sum can never extend to a face.
    /// Faces are stored sorted by (number of blocks, block masks).
    pub fn build(lambda: &WeightVector, caps: &EnumerationCaps) -> Result<Self> {
        let n = lambda.n();
        caps.check_partitions(n)?;
        if n == 0 {
            return Err(Error::InvalidPartition {
                reason: "ground set is empty".into(),
            });
        }
        let weights = lambda.scaled_integers()?;
        let sums = subset_sums(&weights);
        let mut faces = Vec::new();
        let mut blocks: Vec<u32> = Vec::with_capacity(n);
        collect_faces(full_mask(n), 0, &sums, &mut blocks, n, &mut faces);
        faces.sort_unstable_by(|a, b| {
            a.num_blocks()
                .cmp(&b.num_blocks())
                .then_with(|| a.blocks().cmp(b.blocks()))
        });
        let facets = faces
            .iter()
            .filter_map(|sigma| sigma.as_permutation())
            .collect();
        Ok(WeightedComplex {
            lambda: lambda.clone(),
            faces,
            facets,
        })
    }

    /// Reassembles a complex from a face list, e.g. one read back from
    /// an export. Faces are validated for membership and resorted; the
    /// face list is trusted to be complete.
    pub fn from_parts(lambda: WeightVector, mut faces: Vec<OrderedPartition>) -> Result<Self> {
        for sigma in &faces {
            if sigma.n() != lambda.n() {
                return Err(Error::LengthMismatch {
                    expected: lambda.n(),
                    got: sigma.n(),
                });
            }
            if !is_face(&lambda, sigma) {
                return Err(Error::NotAFace);
            }
        }
        faces.sort_unstable_by(|a, b| {
            a.num_blocks()
                .cmp(&b.num_blocks())
                .then_with(|| a.blocks().cmp(b.blocks()))
        });
        faces.dedup();
        let facets = faces
            .iter()
            .filter_map(|sigma| sigma.as_permutation())
            .collect();
        Ok(WeightedComplex {
            lambda,
            faces,
            facets,
        })
    }

    pub fn lambda(&self) -> &WeightVector {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    /// All faces, sorted by (number of blocks, block masks). The
    /// one-block partition comes first when present.
    pub fn faces(&self) -> &[OrderedPartition] {
        &self.faces
    }

    /// The facets, i.e. the all-singleton faces read as permutations.
    pub fn facets(&self) -> &[Permutation] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Face counts `(f_{-1}, f_0, ..., f_{n-2})`: entry `k - 1` counts
    /// the faces with `k` blocks. All zeros for the empty complex.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.n()];
        for sigma in &self.faces {
            counts[sigma.num_blocks() - 1] += 1;
        }
        counts
    }

    /// The alternating sum of `(-1)^(number of blocks)` over all faces;
    /// this is the reduced Euler characteristic of the complex.
    pub fn euler_sum(&self) -> i64 {
        self.faces
            .iter()
            .map(|sigma| if sigma.num_blocks() % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// Ball/sphere/empty classification from the weight signs.
    pub fn classify(&self) -> Classification {
        classify_weights(&self.lambda)
    }

    /// The isomorphic complex on relabeled ground elements; equals
    /// building from the relabeled weights directly.
    pub fn relabeled(&self, tau: &Permutation) -> WeightedComplex {
        let mut faces: Vec<OrderedPartition> =
            self.faces.iter().map(|s| s.relabeled(tau)).collect();
        faces.sort_unstable_by(|a, b| {
            a.num_blocks()
                .cmp(&b.num_blocks())
                .then_with(|| a.blocks().cmp(b.blocks()))
        });
        let facets = faces
            .iter()
            .filter_map(|sigma| sigma.as_permutation())
            .collect();
        WeightedComplex {
            lambda: self.lambda.relabeled(tau),
            faces,
            facets,
        }
    }
}

/// Classification straight from the weights, without building faces.
pub fn classify_weights(lambda: &WeightVector) -> Classification {
    if !lambda.total().is_positive() {
        Classification::Empty
    } else if lambda.all_positive() {
        Classification::Sphere {
            dim: lambda.n() as i64 - 2,
        }
    } else {
        Classification::Ball {
            dim: lambda.n() as i64 - 2,
        }
    }
}

pub(crate) fn subset_sums(weights: &[i64]) -> Vec<i64> {
    let n = weights.len();
    let mut sums = vec![0i64; 1 << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = sums[mask & (mask - 1)] + weights[low];
    }
    sums
}

fn collect_faces(
    remaining: u32,
    prefix: i64,
    sums: &[i64],
    blocks: &mut Vec<u32>,
    n: usize,
    out: &mut Vec<OrderedPartition>,
) {
    let mut b = 0u32;
    loop {
        b = b.wrapping_sub(remaining) & remaining;
        if b == 0 {
            return;
        }
        let sum = prefix + sums[b as usize];
        if sum <= 0 {
            continue;
        }
        blocks.push(b);
        if b == remaining {
            out.push(
                OrderedPartition::new(n, blocks.clone()).expect("recursion builds valid blocks"),
            );
        } else {
            collect_faces(remaining & !b, sum, sums, blocks, n, out);
        }
        blocks.pop();
    }
}

/// Splits off the element of block `j` (0-based) with maximal weight,
/// smallest element on ties, placing the singleton first. The result
/// is a cover below `sigma` and stays in the complex.
pub fn split_max(
    sigma: &OrderedPartition,
    j: usize,
    lambda: &WeightVector,
) -> Result<OrderedPartition> {
    if j >= sigma.num_blocks() {
        return Err(Error::BlockIndexOutOfRange {
            index: j,
            blocks: sigma.num_blocks(),
        });
    }
    if !is_face(lambda, sigma) {
        return Err(Error::NotAFace);
    }
    let block = sigma.block(j);
    if block.count_ones() < 2 {
        return Err(Error::SingletonBlock);
    }
    let mut best: Option<(Rat, u8)> = None;
    let mut m = block;
    while m != 0 {
        let e = m.trailing_zeros() as u8 + 1;
        m &= m - 1;
        let w = lambda.get(e as usize);
        // Strict comparison keeps the smallest element on ties.
        if best.is_none_or(|(bw, _)| w > bw) {
            best = Some((w, e));
        }
    }
    let (_, a) = best.unwrap();
    let singleton = 1u32 << (a - 1);
    replace_block(sigma, j, singleton, block & !singleton)
}

/// Splits block `j` along a nonempty proper subset `B`: the positive
/// side goes first.
pub fn split_block(
    sigma: &OrderedPartition,
    j: usize,
    subset: u32,
    lambda: &WeightVector,
) -> Result<OrderedPartition> {
    if j >= sigma.num_blocks() {
        return Err(Error::BlockIndexOutOfRange {
            index: j,
            blocks: sigma.num_blocks(),
        });
    }
    if !is_face(lambda, sigma) {
        return Err(Error::NotAFace);
    }
    let block = sigma.block(j);
    if subset == 0 || subset == block || subset & !block != 0 {
        return Err(Error::NotProperSubset);
    }
    if lambda.subset_weight(subset).is_positive() {
        replace_block(sigma, j, subset, block & !subset)
    } else {
        replace_block(sigma, j, block & !subset, subset)
    }
}

fn replace_block(
    sigma: &OrderedPartition,
    j: usize,
    first: u32,
    second: u32,
) -> Result<OrderedPartition> {
    let mut blocks = Vec::with_capacity(sigma.num_blocks() + 1);
    blocks.extend_from_slice(&sigma.blocks()[..j]);
    blocks.push(first);
    blocks.push(second);
    blocks.extend_from_slice(&sigma.blocks()[j + 1..]);
    OrderedPartition::new(sigma.n(), blocks)
}

/// Descends from a face to a facet below it by repeatedly splitting the
/// leftmost non-singleton block at its maximal-weight element.
pub fn facet_below(sigma: &OrderedPartition, lambda: &WeightVector) -> Result<Permutation> {
    if !is_face(lambda, sigma) {
        return Err(Error::NotAFace);
    }
    let mut current = sigma.clone();
    loop {
        match current.as_permutation() {
            Some(tau) => return Ok(tau),
            None => {
                let j = (0..current.num_blocks())
                    .find(|&j| current.block(j).count_ones() >= 2)
                    .expect("non-permutation partition has a non-singleton block");
                current = split_max(&current, j, lambda)?;
            }
        }
    }
}

/// The alternating face-count sum, streamed with prefix pruning and
/// no materialization; agrees with `euler_sum` on the built complex.
pub fn euler_direct(lambda: &WeightVector, caps: &EnumerationCaps) -> Result<i64> {
    let n = lambda.n();
    caps.check_partitions(n)?;
    if n == 0 || !lambda.total().is_positive() {
        return Ok(0);
    }
    let weights = lambda.scaled_integers()?;
    let sums = subset_sums(&weights);
    let mut total = 0i64;
    euler_expand(full_mask(n), 0, 0, &sums, &mut total);
    Ok(total)
}

fn euler_expand(remaining: u32, prefix: i64, blocks: u32, sums: &[i64], total: &mut i64) {
    let mut b = 0u32;
    loop {
        b = b.wrapping_sub(remaining) & remaining;
        if b == 0 {
            return;
        }
        let sum = prefix + sums[b as usize];
        if sum <= 0 {
            continue;
        }
        if b == remaining {
            *total += if blocks % 2 == 1 { 1 } else { -1 };
        } else {
            euler_expand(remaining & !b, sum, blocks + 1, sums, total);
        }
    }
}

/// Streams the facets (prefix-positive permutations) in lexicographic
/// one-line order, without materializing the face set.
pub fn for_each_facet<F: FnMut(&Permutation)>(
    lambda: &WeightVector,
    caps: &EnumerationCaps,
    mut f: F,
) -> Result<()> {
    let n = lambda.n();
    caps.check_partitions(n)?;
    if n == 0 {
        return Ok(());
    }
    let weights = lambda.scaled_integers()?;
    let mut entries: Vec<u8> = Vec::with_capacity(n);
    facet_recursion(full_mask(n), 0, &weights, &mut entries, &mut f);
    Ok(())
}

fn facet_recursion<F: FnMut(&Permutation)>(
    remaining: u32,
    prefix: i64,
    weights: &[i64],
    entries: &mut Vec<u8>,
    f: &mut F,
) {
    if remaining == 0 {
        f(&Permutation::new(entries.clone()).expect("recursion visits each element once"));
        return;
    }
    let mut m = remaining;
    while m != 0 {
        let e = m.trailing_zeros() as usize;
        m &= m - 1;
        let sum = prefix + weights[e];
        if sum <= 0 {
            continue;
        }
        entries.push(e as u8 + 1);
        facet_recursion(remaining & !(1 << e), sum, weights, entries, f);
        entries.pop();
    }
}

/// Collects the facet stream.
pub fn facet_permutations(
    lambda: &WeightVector,
    caps: &EnumerationCaps,
) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for_each_facet(lambda, caps, |p| out.push(p.clone()))?;
    Ok(out)
}
