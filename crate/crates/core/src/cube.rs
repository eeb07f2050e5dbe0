//! The subposet of the Boolean lattice cut out by positive subset
//! weights, its edge labeling, and the correspondence between faces of
//! the weighted complex and chains of proper subsets.
//!
//! Geometrically: the vertices of the unit cube satisfying the linear
//! inequality `<lambda, x> > 0`, together with the origin. Covers add
//! one element `a` and are labeled `-lambda_a`; with pairwise distinct
//! weights every interval has a unique weakly rising chain which is
//! also lexicographically least, so the labeling is an EL-labeling and
//! the order complex (which is exactly the weighted complex) is
//! shellable in lexicographic chain order.

use num::Signed;

use crate::error::{Error, Result};
use crate::ordered_partition::{full_mask, OrderedPartition};
use crate::weight::{Rat, WeightVector};

/// Largest ground set for which the exhaustive interval checks run.
pub const EL_VERIFY_MAX_N: usize = 10;

/// The poset of positive-weight subsets plus the empty set, ordered by
/// inclusion and graded by cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubePoset {
    n: usize,
    lambda: WeightVector,
    elements: Vec<u32>,
    member: Vec<bool>,
}

impl CubePoset {
    /// Collects the elements and, for `n` up to [`EL_VERIFY_MAX_N`],
    /// verifies gradedness by cardinality: between any two comparable
    /// elements two apart or more there is an intermediate element.
    pub fn build(lambda: &WeightVector) -> Result<CubePoset> {
        let n = lambda.n();
        crate::caps::check_ground_set(n)?;
        let mut elements = vec![0u32];
        let mut member = vec![false; 1 << n];
        member[0] = true;
        for mask in 1u32..(1u32 << n) {
            if lambda.subset_weight(mask).is_positive() {
                elements.push(mask);
                member[mask as usize] = true;
            }
        }
        elements.sort_unstable_by_key(|&m| (m.count_ones(), m));
        let poset = CubePoset {
            n,
            lambda: lambda.clone(),
            elements,
            member,
        };
        debug_assert!(poset.contains(0));
        if lambda.total().is_positive() {
            assert!(poset.contains(full_mask(n)));
        }
        if n <= EL_VERIFY_MAX_N {
            poset.verify_gradedness()?;
        }
        Ok(poset)
    }

    fn verify_gradedness(&self) -> Result<()> {
        for &s in &self.elements {
            for &t in &self.elements {
                if t & !s != 0 || s.count_ones() <= t.count_ones() + 1 || s == t {
                    continue;
                }
                let has_intermediate = {
                    let mut diff = s & !t;
                    let mut found = false;
                    while diff != 0 {
                        let bit = diff & diff.wrapping_neg();
                        diff &= diff - 1;
                        if self.contains(t | bit) {
                            found = true;
                            break;
                        }
                    }
                    found
                };
                if !has_intermediate {
                    return Err(Error::DecompositionViolation {
                        detail: format!(
                            "cover {:#b} -> {:#b} jumps more than one rank",
                            t, s
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &WeightVector {
        &self.lambda
    }

    /// Elements sorted by (cardinality, mask).
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.member[mask as usize]
    }

    /// Label of the cover `t` below `t | {a}`: the negated weight of
    /// the added element.
    pub fn cover_label(&self, t: u32, s: u32) -> Option<Rat> {
        if self.contains(t) && self.contains(s) && t & !s == 0 && (s & !t).count_ones() == 1 {
            let a = (s & !t).trailing_zeros() as usize + 1;
            Some(-self.lambda.get(a))
        } else {
            None
        }
    }
}

/// Failure witness for the EL property: an interval and what went
/// wrong inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElCounterexample {
    pub bottom: u32,
    pub top: u32,
    pub rising_chains: usize,
    pub rising_is_lex_least: bool,
}

/// Outcome of the exhaustive EL check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElReport {
    pub ok: bool,
    pub intervals_checked: u64,
    pub counterexample: Option<ElCounterexample>,
}

/// Checks, for every interval of the poset, that exactly one saturated
/// chain carries weakly rising labels and that its label word is
/// lexicographically least. Requires pairwise distinct weights and a
/// positive total.
pub fn el_labeling_verify(lambda: &WeightVector) -> Result<ElReport> {
    if lambda.has_repeated_entries() {
        return Err(Error::RepeatedWeights);
    }
    if !lambda.total().is_positive() {
        return Err(Error::NonpositiveTotal);
    }
    if lambda.n() > EL_VERIFY_MAX_N {
        return Err(Error::CapExceeded {
            what: "EL interval",
            n: lambda.n(),
            cap: EL_VERIFY_MAX_N,
        });
    }
    let poset = CubePoset::build(lambda)?;
    let mut intervals = 0u64;
    for &top in poset.elements() {
        // Bottoms: poset members that are proper subsets of `top`.
        let mut bottom = 0u32;
        loop {
            if bottom != top && poset.contains(bottom) {
                intervals += 1;
                let mut chains = Vec::new();
                let mut labels = Vec::new();
                collect_chains(&poset, bottom, top, &mut labels, &mut chains);
                let rising: Vec<&Vec<Rat>> = chains
                    .iter()
                    .filter(|c| c.windows(2).all(|w| w[0] <= w[1]))
                    .collect();
                let lex_least = chains.iter().min().expect("interval has a chain");
                let ok = rising.len() == 1 && rising[0] == lex_least;
                if !ok {
                    return Ok(ElReport {
                        ok: false,
                        intervals_checked: intervals,
                        counterexample: Some(ElCounterexample {
                            bottom,
                            top,
                            rising_chains: rising.len(),
                            rising_is_lex_least: rising
                                .first()
                                .map(|c| *c == lex_least)
                                .unwrap_or(false),
                        }),
                    });
                }
            }
            bottom = bottom.wrapping_sub(top) & top;
            if bottom == 0 {
                break;
            }
        }
    }
    Ok(ElReport {
        ok: true,
        intervals_checked: intervals,
        counterexample: None,
    })
}

fn collect_chains(
    poset: &CubePoset,
    current: u32,
    top: u32,
    labels: &mut Vec<Rat>,
    out: &mut Vec<Vec<Rat>>,
) {
    if current == top {
        out.push(labels.clone());
        return;
    }
    let mut add = top & !current;
    while add != 0 {
        let bit = add & add.wrapping_neg();
        add &= add - 1;
        let next = current | bit;
        if !poset.contains(next) {
            continue;
        }
        let a = bit.trailing_zeros() as usize + 1;
        labels.push(-poset.lambda.get(a));
        collect_chains(poset, next, top, labels, out);
        labels.pop();
    }
}

/// The strictly increasing chain of proper prefix unions of a face.
/// Faces with `k` blocks map to chains of `k - 1` subsets; the
/// one-block face maps to the empty chain. This is a bijection between
/// faces of the weighted complex and chains of the open poset.
pub fn face_to_chain(sigma: &OrderedPartition, lambda: &WeightVector) -> Result<Vec<u32>> {
    if !crate::complex::is_face(lambda, sigma) {
        return Err(Error::NotAFace);
    }
    let mut chain = Vec::with_capacity(sigma.num_blocks() - 1);
    let mut acc = 0u32;
    for &b in &sigma.blocks()[..sigma.num_blocks() - 1] {
        acc |= b;
        chain.push(acc);
    }
    Ok(chain)
}

/// Inverse of [`face_to_chain`]: consecutive differences of the chain,
/// closed off with the complement of the last subset.
pub fn chain_to_face(n: usize, chain: &[u32]) -> Result<OrderedPartition> {
    let mut blocks = Vec::with_capacity(chain.len() + 1);
    let mut prev = 0u32;
    for &s in chain {
        if s & !full_mask(n) != 0 || prev & !s != 0 || s == prev {
            return Err(Error::InvalidPartition {
                reason: "not a strictly increasing chain of subsets".into(),
            });
        }
        blocks.push(s & !prev);
        prev = s;
    }
    blocks.push(full_mask(n) & !prev);
    OrderedPartition::new(n, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::EnumerationCaps;
    use crate::complex::WeightedComplex;

    fn wv(values: &[i64]) -> WeightVector {
        WeightVector::from_integers(values).unwrap()
    }

    #[test]
    fn poset_elements_for_figure_weights() {
        let poset = CubePoset::build(&wv(&[5, 1, -2, -3])).unwrap();
        let expected: Vec<u32> = vec![
            0b0000, // empty set
            0b0001, // {1}
            0b0010, // {2}
            0b0011, // {1,2}
            0b0101, // {1,3}
            0b1001, // {1,4}
            0b0111, // {1,2,3}
            0b1011, // {1,2,4}
            0b1111, // {1,2,3,4}
        ];
        let mut sorted = expected.clone();
        sorted.sort_unstable_by_key(|&m| (m.count_ones(), m));
        assert_eq!(poset.elements(), sorted.as_slice());
        // {1,3,4} sums to exactly zero and is excluded by strictness.
        assert!(!poset.contains(0b1101));
        // One empty set + one full set + the seven proper subsets that
        // appear as vertices of the complex.
        assert_eq!(poset.elements().len(), 9);
    }

    #[test]
    fn all_positive_weights_give_the_boolean_lattice() {
        let poset = CubePoset::build(&wv(&[1, 2, 3])).unwrap();
        assert_eq!(poset.elements().len(), 8);
        let pair = CubePoset::build(&wv(&[1, 1])).unwrap();
        assert_eq!(pair.elements(), &[0b00, 0b01, 0b10, 0b11]);
    }

    #[test]
    fn cover_labels_negate_weights() {
        let poset = CubePoset::build(&wv(&[5, 1, -2, -3])).unwrap();
        assert_eq!(
            poset.cover_label(0, 0b0001),
            Some(Rat::from_integer(-5))
        );
        assert_eq!(
            poset.cover_label(0b0001, 0b0101),
            Some(Rat::from_integer(2))
        );
        assert_eq!(poset.cover_label(0b0001, 0b0111), None); // rank jump
        assert_eq!(poset.cover_label(0b0001, 0b1101), None); // not in poset
    }

    #[test]
    fn el_verify_examples() {
        assert!(el_labeling_verify(&wv(&[5, 1, -2, -3])).unwrap().ok);
        assert!(el_labeling_verify(&wv(&[2, 1])).unwrap().ok);
        assert_eq!(
            el_labeling_verify(&wv(&[1, 1])),
            Err(Error::RepeatedWeights)
        );
        assert_eq!(
            el_labeling_verify(&wv(&[1, -2])),
            Err(Error::NonpositiveTotal)
        );
    }

    #[test]
    fn el_rising_chain_in_two_element_interval() {
        // In [empty, {1,2}] with weights (2,1) the rising chain adds
        // element 1 first: labels (-2, -1).
        let poset = CubePoset::build(&wv(&[2, 1])).unwrap();
        let mut chains = Vec::new();
        collect_chains(&poset, 0, 0b11, &mut Vec::new(), &mut chains);
        chains.sort();
        assert_eq!(
            chains,
            vec![
                vec![Rat::from_integer(-2), Rat::from_integer(-1)],
                vec![Rat::from_integer(-1), Rat::from_integer(-2)],
            ]
        );
    }

    #[test]
    fn chain_correspondence_examples() {
        let lambda = wv(&[5, 1, -2, -3]);
        let sigma = OrderedPartition::from_blocks(4, &[&[1], &[2, 3, 4]]).unwrap();
        assert_eq!(face_to_chain(&sigma, &lambda).unwrap(), vec![0b0001]);
        let sigma = OrderedPartition::from_blocks(4, &[&[1], &[4], &[2], &[3]]).unwrap();
        assert_eq!(
            face_to_chain(&sigma, &lambda).unwrap(),
            vec![0b0001, 0b1001, 0b1011]
        );
        assert_eq!(
            face_to_chain(&OrderedPartition::whole(4), &lambda).unwrap(),
            Vec::<u32>::new()
        );
        // Not a face.
        let bad = OrderedPartition::from_blocks(4, &[&[4], &[1, 2, 3]]).unwrap();
        assert!(face_to_chain(&bad, &lambda).is_err());
    }

    #[test]
    fn face_chain_bijection_exhaustive() {
        let caps = EnumerationCaps::default();
        for lambda in [wv(&[5, 1, -2, -3]), wv(&[1, 1, 1, 1]), wv(&[2, -1, 3, -2])] {
            let complex = WeightedComplex::build(&lambda, &caps).unwrap();
            let poset = CubePoset::build(&lambda).unwrap();
            let mut seen = std::collections::HashSet::new();
            for sigma in complex.faces() {
                let chain = face_to_chain(sigma, &lambda).unwrap();
                // Chain entries are proper nonempty poset members.
                for &s in &chain {
                    assert!(poset.contains(s));
                    assert!(s != 0 && s != full_mask(4));
                }
                assert!(chain.windows(2).all(|w| w[0] & !w[1] == 0 && w[0] != w[1]));
                assert_eq!(chain_to_face(4, &chain).unwrap(), *sigma);
                assert!(seen.insert(chain));
            }
            // Conversely every chain of the open poset is hit.
            let proper: Vec<u32> = poset
                .elements()
                .iter()
                .copied()
                .filter(|&s| s != 0 && s != full_mask(4))
                .collect();
            let mut chain_count = 0u64;
            let mut count_chains = |chain: &[u32]| {
                chain_count += 1;
                assert!(seen.contains(chain));
            };
            // Enumerate chains by DFS over the proper elements.
            fn dfs(
                proper: &[u32],
                start: usize,
                chain: &mut Vec<u32>,
                visit: &mut impl FnMut(&[u32]),
            ) {
                visit(chain);
                for i in start..proper.len() {
                    let s = proper[i];
                    if chain.last().map_or(true, |&t| t & !s == 0 && t != s) {
                        chain.push(s);
                        dfs(proper, i + 1, chain, visit);
                        chain.pop();
                    }
                }
            }
            dfs(&proper, 0, &mut Vec::new(), &mut count_chains);
            assert_eq!(chain_count as usize, complex.faces().len());
        }
    }

    #[test]
    fn gradedness_detects_no_violation_on_random_weights() {
        // Gradedness holds for every weight vector; build must not
        // reject any of these.
        for values in [
            [9i64, -1, -2, -3],
            [1, 2, 3, 4],
            [5, -4, 3, -2],
            [7, -6, 5, -4],
        ] {
            CubePoset::build(&wv(&values)).unwrap();
        }
    }
}
