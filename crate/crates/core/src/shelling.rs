//! Decomposition of the weighted complex into facet intervals, and a
//! brute-force shelling verifier.
//!
//! For weakly decreasing weights the facet restrictions are the
//! ascending-run partitions and the intervals `[R(tau), tau]` tile the
//! face set; the general case is reduced to this one by relabeling.
//! The shelling verifier checks a facet order in two independent ways:
//! the prefix-intersection purity definition and the new-faces-form-an-
//! interval condition. The two must agree on every prefix.

use std::collections::HashSet;

use rand::Rng;

use crate::caps::EnumerationCaps;
use crate::complex::WeightedComplex;
use crate::error::{Error, Result};
use crate::ordered_partition::{run_partition, OrderedPartition};
use crate::perm::{all_permutations, Permutation};
use crate::weight::WeightVector;

/// A decomposition of the face set into intervals `[R(F), F]`, one per
/// facet, together with the facet order that realizes it as a shelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingCertificate {
    /// Relabeling applied before decomposing (identity when the weights
    /// were already weakly decreasing). Facets and restrictions below
    /// are reported in the original labels.
    pub sorting: Permutation,
    /// Facets in shelling order.
    pub facet_order: Vec<Permutation>,
    /// Restriction face of each facet, parallel to `facet_order`.
    pub restrictions: Vec<OrderedPartition>,
    /// Facets whose restriction is the facet itself.
    pub homology_facets: Vec<Permutation>,
}

/// Outcome of verifying one facet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingReport {
    pub is_shelling: bool,
    /// Index (0-based) of the first facet whose prefix fails, plus the
    /// offending face.
    pub first_violation: Option<(usize, OrderedPartition)>,
    /// Restriction faces per facet; only meaningful on success.
    pub restrictions: Vec<OrderedPartition>,
    pub homology_facets: Vec<Permutation>,
}

/// Decomposes the complex into the intervals `[R(F), F]` and verifies
/// exhaustiveness and disjointness by counting. Non-decreasing weights
/// are first sorted by a relabeling, which is reported in the
/// certificate; the certificate itself speaks about the original
/// complex.
pub fn decomposition(complex: &WeightedComplex) -> Result<ShellingCertificate> {
    let n = complex.n();
    let lambda = complex.lambda();
    let sorting = if lambda.is_weakly_decreasing() {
        Permutation::identity(n)
    } else {
        lambda.sorting_permutation_decreasing()
    };
    let relabeled = complex.relabeled(&sorting);
    let sorting_inverse = sorting.inverse();

    let mut order: Vec<Permutation> = relabeled.facets().to_vec();
    order.sort_by_key(|p| (p.inversions(), p.entries().to_vec()));

    let mut restrictions = Vec::with_capacity(order.len());
    let mut homology = Vec::new();
    let mut interval_cells = 0u128;
    for facet in &order {
        let restriction = run_partition(facet);
        interval_cells += 1u128 << (n - restriction.num_blocks());
        if restriction.num_blocks() == n {
            homology.push(sorting_inverse.compose(facet));
        }
        restrictions.push(restriction.relabeled(&sorting_inverse));
    }
    if interval_cells != relabeled.faces().len() as u128 {
        return Err(Error::DecompositionViolation {
            detail: format!(
                "interval cells {} do not cover the {} faces",
                interval_cells,
                relabeled.faces().len()
            ),
        });
    }
    // Every face must land in the interval of the facet f(sigma).
    let facet_keys: HashSet<u64> = relabeled.facets().iter().map(|p| p.key()).collect();
    for sigma in relabeled.faces() {
        let f = sigma.f_map();
        let r = run_partition(&f);
        let in_interval = OrderedPartition::from_permutation(&f).refines_to(sigma)
            && sigma.refines_to(&r);
        if !in_interval || !facet_keys.contains(&f.key()) {
            return Err(Error::DecompositionViolation {
                detail: format!("face {sigma} escapes the interval of facet {f}"),
            });
        }
    }

    let facet_order = order.iter().map(|p| sorting_inverse.compose(p)).collect();
    Ok(ShellingCertificate {
        sorting,
        facet_order,
        restrictions,
        homology_facets: homology,
    })
}

/// Streaming decomposition validity, for sweeps over many weight
/// vectors: no faces are materialized. Verifies that the interval
/// sizes, summed over the facets, tile the face count exactly, and
/// that the per-block ascending reading of every face is itself a
/// facet (so every face lands in a facet interval; a face always lies
/// between that facet and its ascending-run coarsening).
pub fn decomposition_holds(lambda: &WeightVector, caps: &EnumerationCaps) -> Result<bool> {
    use crate::complex::{for_each_facet, subset_sums};
    use crate::ordered_partition::full_mask;
    use num::Signed;

    let n = lambda.n();
    caps.check_partitions(n)?;
    if n == 0 {
        return Ok(true);
    }
    let sorted = if lambda.is_weakly_decreasing() {
        lambda.clone()
    } else {
        lambda.relabeled(&lambda.sorting_permutation_decreasing())
    };
    if !sorted.total().is_positive() {
        return Ok(true);
    }
    let weights = sorted.scaled_integers()?;
    let sums = subset_sums(&weights);

    let mut faces = 0u128;
    let mut ascending_readings_are_facets = true;
    count_faces_checking_f(
        full_mask(n),
        0,
        &weights,
        &sums,
        &mut faces,
        &mut ascending_readings_are_facets,
    );

    let mut interval_cells = 0u128;
    for_each_facet(&sorted, caps, |tau| {
        let runs = tau.descent_set().len() + 1;
        interval_cells += 1u128 << (n - runs);
    })?;

    Ok(ascending_readings_are_facets && faces == interval_cells)
}

fn count_faces_checking_f(
    remaining: u32,
    prefix: i64,
    weights: &[i64],
    sums: &[i64],
    faces: &mut u128,
    f_ok: &mut bool,
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
        // Within the block, the ascending reading visits elements in
        // label order; all its partial prefixes must stay positive for
        // the reading to be a facet.
        let mut partial = prefix;
        let mut m = b;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            partial += weights[e];
            if partial <= 0 {
                *f_ok = false;
            }
        }
        if b == remaining {
            *faces += 1;
        } else {
            count_faces_checking_f(remaining & !b, sum, weights, sums, faces, f_ok);
        }
    }
}

/// All faces of the facet `tau`: one coarsening per subset of the gaps
/// between consecutive one-line positions.
fn faces_of_facet(tau: &Permutation) -> Vec<OrderedPartition> {
    let n = tau.n();
    let entries = tau.entries();
    let mut out = Vec::with_capacity(1 << (n - 1));
    for gaps in 0u32..(1u32 << (n - 1)) {
        let mut blocks = Vec::new();
        let mut block = 0u32;
        for (i, &v) in entries.iter().enumerate() {
            block |= 1 << (v - 1);
            let split_here = i + 1 < n && (gaps >> i) & 1 == 1;
            if split_here || i + 1 == n {
                blocks.push(block);
                block = 0;
            }
        }
        out.push(OrderedPartition::new(n, blocks).expect("gap splits give valid partitions"));
    }
    out
}

/// Verifies that `order` is a shelling of the complex, by brute force.
///
/// Two independent criteria are evaluated for every prefix: the
/// intersection with the union of earlier facets must be pure of
/// codimension one, and the new faces must form a full interval with a
/// unique minimal face. Their agreement is asserted; a divergence would
/// indicate a broken checker.
pub fn verify_shelling(complex: &WeightedComplex, order: &[Permutation]) -> Result<ShellingReport> {
    let mut expected: Vec<u64> = complex.facets().iter().map(|p| p.key()).collect();
    let mut given: Vec<u64> = order.iter().map(|p| p.key()).collect();
    expected.sort_unstable();
    given.sort_unstable();
    if expected != given {
        return Err(Error::NotAFacetOrder);
    }

    let n = complex.n();
    let mut seen: HashSet<u64> = HashSet::new();
    let mut restrictions = Vec::with_capacity(order.len());
    let mut homology = Vec::new();
    for (j, facet) in order.iter().enumerate() {
        let faces = faces_of_facet(facet);
        let old: Vec<&OrderedPartition> =
            faces.iter().filter(|g| seen.contains(&g.key())).collect();
        let new: Vec<&OrderedPartition> =
            faces.iter().filter(|g| !seen.contains(&g.key())).collect();

        // Definition route: maximal faces of the intersection all have
        // codimension one (n - 1 blocks). Vacuous for the first facet.
        let pure = old.iter().all(|g| {
            old.iter()
                .any(|h| h.num_blocks() == n - 1 && h.refines_to(g))
        });
        let definition_ok = j == 0 || pure;

        // Interval route: the new faces are exactly the faces above a
        // unique coarsest new face.
        let min_blocks = new.iter().map(|g| g.num_blocks()).min();
        let interval_check = match min_blocks {
            None => None,
            Some(min) => {
                let coarsest: Vec<&&OrderedPartition> =
                    new.iter().filter(|g| g.num_blocks() == min).collect();
                if coarsest.len() != 1 {
                    None
                } else {
                    let restriction = (*coarsest[0]).clone();
                    let interval_size = faces
                        .iter()
                        .filter(|g| g.refines_to(&restriction))
                        .count();
                    if interval_size == new.len() {
                        Some(restriction)
                    } else {
                        None
                    }
                }
            }
        };
        let interval_ok = interval_check.is_some();

        assert_eq!(
            definition_ok, interval_ok,
            "shelling criteria diverge at step {j} (facet {facet})"
        );
        if !definition_ok {
            let witness = old
                .iter()
                .find(|g| {
                    !old.iter()
                        .any(|h| h.num_blocks() == n - 1 && h.refines_to(g))
                })
                .map(|g| (*g).clone())
                .unwrap_or_else(|| OrderedPartition::from_permutation(facet));
            return Ok(ShellingReport {
                is_shelling: false,
                first_violation: Some((j, witness)),
                restrictions: Vec::new(),
                homology_facets: Vec::new(),
            });
        }

        let restriction = interval_check.unwrap();
        if restriction.num_blocks() == n {
            homology.push(facet.clone());
        }
        restrictions.push(restriction);
        for g in faces {
            seen.insert(g.key());
        }
    }
    Ok(ShellingReport {
        is_shelling: true,
        first_violation: None,
        restrictions,
        homology_facets: homology,
    })
}

/// Samples a uniform-ish linear extension of the weak Bruhat order on
/// the whole symmetric group by repeatedly popping a random minimal
/// element.
pub fn random_linear_extension<R: Rng>(n: usize, rng: &mut R) -> Vec<Permutation> {
    let perms = all_permutations(n);
    let mut remaining: HashSet<u64> = perms.iter().map(|p| p.key()).collect();
    let mut available: Vec<Permutation> = perms
        .iter()
        .filter(|p| p.inversions() == 0)
        .cloned()
        .collect();
    let mut out = Vec::with_capacity(perms.len());
    while let Some(idx) = (!available.is_empty()).then(|| rng.random_range(0..available.len())) {
        let next = available.swap_remove(idx);
        remaining.remove(&next.key());
        out.push(next.clone());
        for cover in next.bruhat_covers() {
            if !remaining.contains(&cover.key()) {
                continue;
            }
            // The cover becomes available once all its lower covers are out.
            let ready = cover
                .inverse_covers()
                .iter()
                .all(|low| !remaining.contains(&low.key()));
            if ready && !available.iter().any(|p| p.key() == cover.key()) {
                available.push(cover);
            }
        }
    }
    out
}

/// Restricts a linear extension of the symmetric group to the facets of
/// the complex, preserving relative order.
pub fn restrict_extension_to_facets(
    extension: &[Permutation],
    complex: &WeightedComplex,
) -> Vec<Permutation> {
    let facet_keys: HashSet<u64> = complex.facets().iter().map(|p| p.key()).collect();
    extension
        .iter()
        .filter(|p| facet_keys.contains(&p.key()))
        .cloned()
        .collect()
}

/// Facets ordered by (inversions, one-line word): the restriction of a
/// fixed weak Bruhat linear extension.
pub fn canonical_bruhat_order(facets: &[Permutation]) -> Vec<Permutation> {
    let mut order = facets.to_vec();
    order.sort_by_key(|p| (p.inversions(), p.entries().to_vec()));
    order
}

/// Facets ordered by the label words of their maximal chains: position
/// `i` of the key is the negated weight of the element placed `i`-th.
/// Requires pairwise distinct weights so the order is total.
pub fn lex_el_order(
    lambda: &WeightVector,
    facets: &[Permutation],
) -> Result<Vec<Permutation>> {
    if lambda.has_repeated_entries() {
        return Err(Error::RepeatedWeights);
    }
    let mut order = facets.to_vec();
    order.sort_by_key(|p| {
        p.entries()
            .iter()
            .map(|&v| -lambda.get(v as usize))
            .collect::<Vec<_>>()
    });
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::EnumerationCaps;
    use crate::weight::WeightVector;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn wv(values: &[i64]) -> WeightVector {
        WeightVector::from_integers(values).unwrap()
    }

    fn build(values: &[i64]) -> WeightedComplex {
        WeightedComplex::build(&wv(values), &EnumerationCaps::default()).unwrap()
    }

    #[test]
    fn faces_of_facet_counts() {
        let tau = Permutation::new(vec![2, 1, 3]).unwrap();
        let faces = faces_of_facet(&tau);
        assert_eq!(faces.len(), 4);
        assert!(faces.contains(&OrderedPartition::whole(3)));
        assert!(faces.contains(&OrderedPartition::from_permutation(&tau)));
    }

    #[test]
    fn single_facet_is_a_shelling() {
        let complex = build(&[2, -1]);
        assert_eq!(complex.facets().len(), 1);
        let report = verify_shelling(&complex, complex.facets()).unwrap();
        assert!(report.is_shelling);
        assert_eq!(report.restrictions[0], OrderedPartition::whole(2));
        assert!(report.homology_facets.is_empty());
    }

    #[test]
    fn hexagon_canonical_order_shells() {
        let complex = build(&[1, 1, 1]);
        let order = canonical_bruhat_order(complex.facets());
        let report = verify_shelling(&complex, &order).unwrap();
        assert!(report.is_shelling);
        // The full Coxeter complex has exactly one homology facet.
        assert_eq!(report.homology_facets, vec![Permutation::longest(3)]);
    }

    #[test]
    fn hexagon_antipodal_order_fails() {
        let complex = build(&[1, 1, 1]);
        let p = |s: &[u8]| Permutation::new(s.to_vec()).unwrap();
        // Second facet shares no vertex with the first.
        let order = vec![
            p(&[1, 2, 3]),
            p(&[3, 2, 1]),
            p(&[1, 3, 2]),
            p(&[2, 3, 1]),
            p(&[2, 1, 3]),
            p(&[3, 1, 2]),
        ];
        let report = verify_shelling(&complex, &order).unwrap();
        assert!(!report.is_shelling);
        assert_eq!(report.first_violation.as_ref().unwrap().0, 1);
    }

    #[test]
    fn rejects_wrong_facet_multiset() {
        let complex = build(&[1, 1, 1]);
        let mut order = complex.facets().to_vec();
        order.pop();
        assert_eq!(
            verify_shelling(&complex, &order),
            Err(Error::NotAFacetOrder)
        );
        let mut doubled = complex.facets().to_vec();
        let first = doubled[0].clone();
        *doubled.last_mut().unwrap() = first;
        assert_eq!(
            verify_shelling(&complex, &doubled),
            Err(Error::NotAFacetOrder)
        );
    }

    #[test]
    fn decomposition_of_full_complex() {
        for n in 2..=5 {
            let lambda = WeightVector::from_integers(&vec![1; n]).unwrap();
            let complex = WeightedComplex::build(&lambda, &EnumerationCaps::default()).unwrap();
            let cert = decomposition(&complex).unwrap();
            assert_eq!(cert.sorting, Permutation::identity(n));
            assert_eq!(cert.homology_facets, vec![Permutation::longest(n)]);
            let report = verify_shelling(&complex, &cert.facet_order).unwrap();
            assert!(report.is_shelling);
            assert_eq!(report.restrictions, cert.restrictions);
            assert_eq!(report.homology_facets, cert.homology_facets);
        }
    }

    #[test]
    fn decomposition_examples() {
        // Weakly decreasing weights with a nonpositive tail: no
        // homology facet, hence a ball.
        let complex = build(&[5, 1, -2, -3]);
        let cert = decomposition(&complex).unwrap();
        assert!(cert.homology_facets.is_empty());
        let report = verify_shelling(&complex, &cert.facet_order).unwrap();
        assert!(report.is_shelling);

        // n = 2 with both weights positive: facet 12 carries the empty
        // face and 21 is the homology facet.
        let complex = build(&[1, 1]);
        let cert = decomposition(&complex).unwrap();
        assert_eq!(cert.facet_order.len(), 2);
        assert_eq!(cert.restrictions[0], OrderedPartition::whole(2));
        assert_eq!(
            cert.restrictions[1],
            OrderedPartition::from_permutation(&Permutation::longest(2))
        );
        assert_eq!(cert.homology_facets, vec![Permutation::longest(2)]);
    }

    #[test]
    fn decomposition_relabels_general_weights() {
        let complex = WeightedComplex::build(&wv(&[-2, 5, 1, -3]), &EnumerationCaps::default())
            .unwrap();
        let cert = decomposition(&complex).unwrap();
        assert_ne!(cert.sorting, Permutation::identity(4));
        // The certificate speaks about the original complex.
        let report = verify_shelling(&complex, &cert.facet_order).unwrap();
        assert!(report.is_shelling);
        assert_eq!(report.restrictions, cert.restrictions);
    }

    #[test]
    fn random_extensions_shell_decreasing_complexes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for lambda in [wv(&[2, 1, 1, -1]), wv(&[3, 2, -1, -2]), wv(&[1, 1, 1, 1])] {
            let complex =
                WeightedComplex::build(&lambda, &EnumerationCaps::default()).unwrap();
            for _ in 0..10 {
                let extension = random_linear_extension(4, &mut rng);
                assert!(crate::perm::is_weak_bruhat_linear_extension(&extension).unwrap());
                let order = restrict_extension_to_facets(&extension, &complex);
                let report = verify_shelling(&complex, &order).unwrap();
                assert!(report.is_shelling, "lambda = {lambda:?}");
            }
        }
    }

    #[test]
    fn streaming_decomposition_agrees_with_certificates() {
        use rand::{Rng, SeedableRng};
        let caps = EnumerationCaps::default();
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..60 {
            let n = 1 + rng.random_range(0..6);
            let lambda = crate::sample::random_lambda(
                &mut rng,
                n,
                crate::sample::LambdaShape::Any,
            );
            let complex = WeightedComplex::build(&lambda, &caps).unwrap();
            assert_eq!(
                decomposition_holds(&lambda, &caps).unwrap(),
                decomposition(&complex).is_ok(),
                "lambda = {lambda:?}"
            );
        }
        assert!(decomposition_holds(&wv(&[5, 1, -2, -3]), &caps).unwrap());
        assert!(decomposition_holds(&wv(&[-1, -1]), &caps).unwrap());
    }

    #[test]
    fn lex_el_order_shells_distinct_weights() {
        for lambda in [wv(&[5, 1, -2, -3]), wv(&[-2, 5, 1, -3]), wv(&[4, 3, 2, 1])] {
            let complex =
                WeightedComplex::build(&lambda, &EnumerationCaps::default()).unwrap();
            let order = lex_el_order(&lambda, complex.facets()).unwrap();
            let report = verify_shelling(&complex, &order).unwrap();
            assert!(report.is_shelling, "lambda = {lambda:?}");
        }
        assert_eq!(
            lex_el_order(&wv(&[1, 1]), &[]),
            Err(Error::RepeatedWeights)
        );
    }
}
