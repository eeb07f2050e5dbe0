//! Permutations of `[n]` in one-line notation and their statistics.
//!
//! The group acts on vectors on the left by permuting coordinates:
//! position `i` of `tau(x)` holds the entry of `x` at position
//! `tau^{-1}(i)`, so the entry originally at position `j` moves to
//! position `tau(j)`.

use std::collections::HashMap;
use std::fmt;

use crate::caps::check_ground_set;
use crate::composition::Composition;
use crate::error::{Error, Result};

/// A permutation of `[n]` stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation (values `1..=n`).
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let n = entries.len();
        check_ground_set(n).map_err(|_| Error::InvalidPermutation {
            reason: format!("length {n} exceeds the supported maximum"),
        })?;
        let mut seen = 0u32;
        for &v in &entries {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidPermutation {
                    reason: format!("entry {v} outside 1..={n}"),
                });
            }
            let bit = 1u32 << (v - 1);
            if seen & bit != 0 {
                return Err(Error::InvalidPermutation {
                    reason: format!("entry {v} repeated"),
                });
            }
            seen |= bit;
        }
        Ok(Permutation { entries })
    }

    /// The identity permutation `12...n`.
    pub fn identity(n: usize) -> Self {
        assert!(n <= crate::caps::MAX_GROUND_SET);
        Permutation {
            entries: (1..=n as u8).collect(),
        }
    }

    /// The longest permutation `n...21`.
    pub fn longest(n: usize) -> Self {
        assert!(n <= crate::caps::MAX_GROUND_SET);
        Permutation {
            entries: (1..=n as u8).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Value at 1-based position `i`, i.e. `tau(i)`.
    pub fn apply(&self, i: u8) -> u8 {
        self.entries[i as usize - 1]
    }

    /// Image of a subset under the permutation map `e -> tau(e)`.
    pub fn image_of_set(&self, mask: u32) -> u32 {
        let mut out = 0u32;
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            out |= 1 << (self.entries[b] - 1);
            m &= m - 1;
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.entries.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation { entries: inv }
    }

    /// Functional composition: applies `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            entries: other.entries.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    /// Number of inversions, i.e. pairs `i < j` with `tau_i > tau_j`.
    pub fn inversions(&self) -> u32 {
        let mut count = 0;
        for i in 0..self.entries.len() {
            for j in i + 1..self.entries.len() {
                if self.entries[i] > self.entries[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `(-1)^inv(tau)`.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Descent positions `i` (1-based) with `tau_i > tau_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.entries[i - 1] > self.entries[i])
            .collect()
    }

    /// Lengths of the maximal ascending runs.
    pub fn descent_composition(&self) -> Composition {
        let mut parts = Vec::new();
        let mut run = 0u8;
        for i in 0..self.n() {
            run += 1;
            let at_descent = i + 1 < self.n() && self.entries[i] > self.entries[i + 1];
            if at_descent || i + 1 == self.n() {
                parts.push(run);
                run = 0;
            }
        }
        Composition::new(parts).expect("runs of a permutation form a composition")
    }

    /// Swaps the values at positions `i`, `i+1` (1-based), i.e. `tau * s_i`.
    pub fn swap_adjacent(&self, i: usize) -> Result<Permutation> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n().saturating_sub(1),
            });
        }
        let mut entries = self.entries.clone();
        entries.swap(i - 1, i);
        Ok(Permutation { entries })
    }

    /// Upward covers in the weak Bruhat order: all `tau * s_i` with
    /// `tau_i < tau_{i+1}`.
    pub fn bruhat_covers(&self) -> Vec<Permutation> {
        (1..self.n())
            .filter(|&i| self.entries[i - 1] < self.entries[i])
            .map(|i| self.swap_adjacent(i).unwrap())
            .collect()
    }

    /// Downward covers in the weak Bruhat order: all `tau * s_i` with
    /// `tau_i > tau_{i+1}`.
    pub fn inverse_covers(&self) -> Vec<Permutation> {
        (1..self.n())
            .filter(|&i| self.entries[i - 1] > self.entries[i])
            .map(|i| self.swap_adjacent(i).unwrap())
            .collect()
    }

    /// Compact key: 4 bits per position. Usable for `n <= 16`.
    pub fn key(&self) -> u64 {
        self.entries
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &v)| acc | ((v as u64 - 1) << (4 * i)))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Calls `f` on every permutation of `[n]` in lexicographic order.
pub fn for_each_permutation<F: FnMut(&Permutation)>(n: usize, mut f: F) {
    assert!(n <= crate::caps::MAX_GROUND_SET);
    let mut perm = Permutation::identity(n);
    loop {
        f(&perm);
        if !next_lex(&mut perm.entries) {
            return;
        }
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(n, |p| out.push(p.clone()));
    out
}

fn next_lex(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rfind(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = a.iter().rposition(|x| *x > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Checks whether `order` lists all of the symmetric group in a way
/// compatible with the weak Bruhat order: every cover `tau < tau'` must
/// place `tau` first. Rejects sequences with duplicates or of the wrong
/// length.
pub fn is_weak_bruhat_linear_extension(order: &[Permutation]) -> Result<bool> {
    if order.is_empty() {
        return Err(Error::InvalidPermutation {
            reason: "empty order".into(),
        });
    }
    let n = order[0].n();
    let expected: usize = (1..=n).product();
    if order.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            got: order.len(),
        });
    }
    let mut position = HashMap::with_capacity(order.len());
    for (idx, p) in order.iter().enumerate() {
        if p.n() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: p.n(),
            });
        }
        if position.insert(p.key(), idx).is_some() {
            return Err(Error::InvalidPermutation {
                reason: format!("duplicate entry {p}"),
            });
        }
    }
    for (idx, p) in order.iter().enumerate() {
        for cover in p.bruhat_covers() {
            if position[&cover.key()] < idx {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &[u8]) -> Permutation {
        Permutation::new(s.to_vec()).unwrap()
    }

    #[test]
    fn inversions_examples() {
        assert_eq!(Permutation::identity(5).inversions(), 0);
        assert_eq!(perm(&[3, 2, 1]).inversions(), 3);
        assert_eq!(perm(&[2, 1, 4, 3]).inversions(), 2);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        // n...21 for n = 4 has C(4,2) = 6 inversions.
        assert_eq!(Permutation::longest(4).sign(), 1);
        assert_eq!(perm(&[2, 1, 3]).sign(), -1);
    }

    #[test]
    fn descent_composition_examples() {
        assert_eq!(Permutation::identity(6).descent_composition().parts(), &[6]);
        assert_eq!(perm(&[1, 3, 2, 4]).descent_composition().parts(), &[2, 2]);
        assert_eq!(
            perm(&[4, 3, 2, 1]).descent_composition().parts(),
            &[1, 1, 1, 1]
        );
    }

    #[test]
    fn descent_composition_sums_to_n() {
        for_each_permutation(6, |p| {
            let dc = p.descent_composition();
            assert_eq!(dc.n(), 6);
            assert_eq!(dc.len(), p.descent_set().len() + 1);
        });
    }

    #[test]
    fn bruhat_covers_examples() {
        assert!(Permutation::longest(4).bruhat_covers().is_empty());
        assert_eq!(Permutation::identity(4).bruhat_covers().len(), 3);
        assert_eq!(perm(&[1, 3, 2]).bruhat_covers(), vec![perm(&[3, 1, 2])]);
    }

    #[test]
    fn covers_increase_length_by_one() {
        for_each_permutation(5, |p| {
            for c in p.bruhat_covers() {
                assert_eq!(c.inversions(), p.inversions() + 1);
            }
        });
    }

    #[test]
    fn inverse_and_compose() {
        for_each_permutation(5, |p| {
            let id = p.compose(&p.inverse());
            assert_eq!(id, Permutation::identity(5));
        });
        // (tau o pi)(x) = tau(pi(x))
        let tau = perm(&[2, 3, 1]);
        let pi = perm(&[1, 3, 2]);
        assert_eq!(tau.compose(&pi), perm(&[2, 1, 3]));
    }

    #[test]
    fn linear_extension_by_inversion_count() {
        let mut order = all_permutations(3);
        order.sort_by_key(|p| (p.inversions(), p.entries().to_vec()));
        assert_eq!(is_weak_bruhat_linear_extension(&order), Ok(true));
    }

    #[test]
    fn longest_first_is_not_an_extension() {
        let mut order = all_permutations(3);
        let pos = order.iter().position(|p| *p == Permutation::longest(3)).unwrap();
        order.swap(0, pos);
        assert_eq!(is_weak_bruhat_linear_extension(&order), Ok(false));
    }

    #[test]
    fn two_element_extension() {
        let order = vec![perm(&[1, 2]), perm(&[2, 1])];
        assert_eq!(is_weak_bruhat_linear_extension(&order), Ok(true));
    }

    #[test]
    fn extension_validation_errors() {
        let dup = vec![perm(&[1, 2]), perm(&[1, 2])];
        assert!(is_weak_bruhat_linear_extension(&dup).is_err());
        let short = vec![perm(&[1, 2, 3])];
        assert!(is_weak_bruhat_linear_extension(&short).is_err());
    }

    #[test]
    fn rejects_bad_one_line_words() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }

    #[test]
    fn image_of_set_tracks_entries() {
        let tau = perm(&[2, 3, 1, 4]);
        // {1,2} maps to {tau(1), tau(2)} = {2,3}
        assert_eq!(tau.image_of_set(0b0011), 0b0110);
    }

    #[test]
    fn permutation_count() {
        let mut count = 0u32;
        for_each_permutation(7, |_| count += 1);
        assert_eq!(count, 5040);
    }
}
