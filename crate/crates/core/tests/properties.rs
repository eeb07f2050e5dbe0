//! Randomized invariants over weight vectors, permutations, and
//! partitions. The exhaustive small-n sweeps live with the acceptance
//! suite; these exercise the same laws over broader random inputs.

use proptest::prelude::*;

use wcx_core::complex::{is_face, WeightedComplex};
use wcx_core::cube::el_labeling_verify;
use wcx_core::identity::{
    s_decreasing_formula, s_direct, s_recursive, t_direct, verify_recursion,
};
use wcx_core::ordered_partition::OrderedPartition;
use wcx_core::perm::Permutation;
use wcx_core::pfaffian::t_via_pfaffian;
use wcx_core::weight::{Rat, WeightVector};
use wcx_core::EnumerationCaps;

fn rat_entry() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=3).prop_map(|(p, q)| Rat::new(p, q))
}

fn lambda_strategy(max_n: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(rat_entry(), 1..=max_n)
        .prop_map(|entries| WeightVector::new(entries).unwrap())
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|entries| Permutation::new(entries).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn all_routes_agree(lambda in lambda_strategy(6)) {
        let caps = EnumerationCaps::default();
        let n = lambda.n();
        let s = s_direct(&lambda, &caps).unwrap();
        let t = t_direct(&lambda, &caps).unwrap();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(s, sign * t);
        prop_assert_eq!(t_via_pfaffian(&lambda).unwrap(), t);
        prop_assert_eq!(s_recursive(&lambda).unwrap(), s);
    }

    #[test]
    fn recursion_identities_hold(lambda in lambda_strategy(6)) {
        prop_assume!(lambda.n() >= 2);
        let caps = EnumerationCaps::default();
        for i in 1..lambda.n() {
            let check = verify_recursion(&lambda, i, &caps).unwrap();
            prop_assert!(check.pass());
        }
    }

    #[test]
    fn euler_sum_closed_form(lambda in lambda_strategy(6)) {
        let caps = EnumerationCaps::default();
        let complex = WeightedComplex::build(&lambda, &caps).unwrap();
        let expected = if lambda.all_positive() {
            if lambda.n() % 2 == 0 { 1 } else { -1 }
        } else {
            0
        };
        prop_assert_eq!(complex.euler_sum(), expected);
    }

    #[test]
    fn relabeling_preserves_the_complex(
        entries in prop::collection::vec(rat_entry(), 5),
        tau in perm_strategy(5),
    ) {
        let caps = EnumerationCaps::default();
        let lambda = WeightVector::new(entries).unwrap();
        let complex = WeightedComplex::build(&lambda, &caps).unwrap();
        let relabeled = complex.relabeled(&tau);
        let direct = WeightedComplex::build(&lambda.relabeled(&tau), &caps).unwrap();
        prop_assert_eq!(&relabeled, &direct);
        prop_assert_eq!(relabeled.f_vector(), complex.f_vector());
        prop_assert_eq!(relabeled.euler_sum(), complex.euler_sum());
    }

    #[test]
    fn faces_form_an_upper_ideal(lambda in lambda_strategy(5)) {
        let caps = EnumerationCaps::default();
        let complex = WeightedComplex::build(&lambda, &caps).unwrap();
        for sigma in complex.faces() {
            for merged in sigma.merge_covers() {
                prop_assert!(is_face(&lambda, &merged));
            }
        }
    }

    #[test]
    fn decreasing_formula_matches_direct(mut entries in prop::collection::vec(rat_entry(), 1..=6)) {
        entries.sort_by(|a, b| b.cmp(a));
        let lambda = WeightVector::new(entries).unwrap();
        let caps = EnumerationCaps::default();
        prop_assert_eq!(
            s_decreasing_formula(&lambda, &caps).unwrap(),
            s_direct(&lambda, &caps).unwrap()
        );
    }

    #[test]
    fn el_labeling_on_random_distinct_weights(entries in prop::collection::vec(rat_entry(), 1..=5)) {
        let lambda = WeightVector::new(entries).unwrap();
        prop_assume!(!lambda.has_repeated_entries());
        prop_assume!(lambda.total() > Rat::from_integer(0));
        prop_assert!(el_labeling_verify(&lambda).unwrap().ok);
    }

    #[test]
    fn reverse_is_an_involution(lambda in lambda_strategy(8)) {
        prop_assert_eq!(lambda.reversed().reversed(), lambda);
    }

    #[test]
    fn run_partition_agrees_with_singleton_r_map(tau in perm_strategy(7)) {
        prop_assert_eq!(
            wcx_core::ordered_partition::run_partition(&tau),
            OrderedPartition::from_permutation(&tau).r_map()
        );
    }

    #[test]
    fn perturbation_preserves_face_sets(lambda in lambda_strategy(5)) {
        let caps = EnumerationCaps::default();
        if let Ok(perturbed) = lambda.perturbed_distinct() {
            let original = WeightedComplex::build(&lambda, &caps).unwrap();
            let after = WeightedComplex::build(&perturbed, &caps).unwrap();
            prop_assert_eq!(original.faces(), after.faces());
        }
    }

    #[test]
    fn reversal_relates_descending_and_ascending_signs(lambda in lambda_strategy(6)) {
        // The face sum equals (-1)^C(n,2) times the ascending-reading
        // signed sum over the reversed weights.
        let caps = EnumerationCaps::default();
        let n = lambda.n();
        let reversed = lambda.reversed();
        let complex = WeightedComplex::build(&reversed, &caps).unwrap();
        let f_sum: i64 = complex
            .faces()
            .iter()
            .map(|sigma| {
                let sign = if sigma.num_blocks() % 2 == 0 { 1 } else { -1 };
                sign * sigma.f_map().sign()
            })
            .sum();
        let outer = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(s_direct(&lambda, &caps).unwrap(), outer * f_sum);
    }
}

use rand::Rng;
use wcx_core::homology::reduced_betti_gf2;
use wcx_core::matching::{
    is_paired_ascending, matching_from_paired_ascending, maximal_matching_count,
};
use wcx_core::perm::for_each_permutation;
use wcx_core::sample::{random_lambda, seeded_rng, LambdaShape};

#[test]
fn paired_ascending_bijection_at_n_ten() {
    let mut count = 0u64;
    let mut keys = std::collections::HashSet::new();
    for_each_permutation(10, |tau| {
        if is_paired_ascending(tau) {
            let p = matching_from_paired_ascending(tau).unwrap();
            assert_eq!(p.sign(), tau.sign());
            keys.insert(format!("{p:?}"));
            count += 1;
        }
    });
    assert_eq!(count, maximal_matching_count(10));
    assert_eq!(keys.len() as u64, count);
}

#[test]
fn euler_closed_form_on_random_rationals_n7_n8() {
    let caps = EnumerationCaps::default();
    let mut rng = seeded_rng(78);
    for n in [7usize, 8] {
        for _ in 0..1000 {
            let lambda = random_lambda(&mut rng, n, LambdaShape::Any);
            let complex = WeightedComplex::build(&lambda, &caps).unwrap();
            let expected = if lambda.all_positive() {
                if n % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                0
            };
            assert_eq!(complex.euler_sum(), expected, "lambda = {lambda:?}");
        }
    }
}

#[test]
fn pfaffian_route_up_to_n_ten() {
    let caps = EnumerationCaps::default();
    let mut rng = seeded_rng(910);
    for n in [9usize, 10] {
        for _ in 0..200 {
            let lambda = random_lambda(&mut rng, n, LambdaShape::Any);
            assert_eq!(
                t_via_pfaffian(&lambda).unwrap(),
                t_direct(&lambda, &caps).unwrap(),
                "lambda = {lambda:?}"
            );
        }
    }
}

#[test]
fn el_labeling_on_two_hundred_distinct_lambdas() {
    let mut rng = seeded_rng(200);
    for _ in 0..200 {
        let n = 1 + rng.random_range(0..6);
        let lambda = random_lambda(&mut rng, n, LambdaShape::DistinctPositiveTotal);
        assert!(el_labeling_verify(&lambda).unwrap().ok, "lambda = {lambda:?}");
    }
}

#[test]
fn homology_matches_classification_at_n_six() {
    let caps = EnumerationCaps::default();
    let mut rng = seeded_rng(6);
    for _ in 0..50 {
        let lambda = random_lambda(&mut rng, 6, LambdaShape::Any);
        let complex = WeightedComplex::build(&lambda, &caps).unwrap();
        let betti = reduced_betti_gf2(&complex).unwrap();
        assert!(
            betti.matches_classification(&complex.classify()),
            "lambda = {lambda:?}, betti = {betti:?}"
        );
    }
}
