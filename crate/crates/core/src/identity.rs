//! The two alternating sums and their identities: the face-side sum
//! over the weighted complex, the matching-side sum, closed forms for
//! monotone weights, the pair-swap reduction identities, a recursive
//! evaluator built on them, and the ascent-run formula for weakly
//! decreasing weights.
//!
//! For the empty weight vector the face-side sum is 1 (a single face
//! with zero blocks) and the matching-side sum is 1 (a single empty
//! matching). These natural values keep the length-reduction
//! identities consistent at n = 2; reports flag when they were used.

use num::Signed;

use crate::caps::EnumerationCaps;
use crate::complex::{for_each_facet, subset_sums};
use crate::composition::for_each_composition;
use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::ordered_partition::{full_mask, OrderedPartition};
use crate::perm::Permutation;
use crate::pfaffian::t_via_pfaffian;
use crate::weight::{Rat, WeightVector};

/// Indicator of strict positivity.
pub fn c1(a: Rat) -> i64 {
    a.is_positive() as i64
}

/// Pair weight: 1 when both are positive, 2 when `a > -b >= 0`, else 0.
pub fn c2(a: Rat, b: Rat) -> i64 {
    let zero = Rat::from_integer(0);
    if a > zero && b > zero {
        1
    } else if b <= zero && a + b > zero {
        2
    } else {
        0
    }
}

/// Product of the pair weights over the edges (smaller endpoint first),
/// times the positivity indicator of the isolated vertex for odd `n`.
pub fn c_of_matching(p: &Matching, lambda: &WeightVector) -> Result<i64> {
    if p.n() != lambda.n() {
        return Err(Error::LengthMismatch {
            expected: lambda.n(),
            got: p.n(),
        });
    }
    let mut product = 1i64;
    for &(i, j) in p.edges() {
        product *= c2(lambda.get(i as usize), lambda.get(j as usize));
    }
    if let Some(i) = p.isolated() {
        product *= c1(lambda.get(i as usize));
    }
    Ok(product)
}

fn c1_int(w: i64) -> i64 {
    (w > 0) as i64
}

fn c2_int(a: i64, b: i64) -> i64 {
    if a > 0 && b > 0 {
        1
    } else if b <= 0 && a + b > 0 {
        2
    } else {
        0
    }
}

/// The matching-side sum: signed and weighted over all maximal
/// matchings. Streams with zero-product pruning. The empty vector
/// evaluates to 1.
pub fn t_direct(lambda: &WeightVector, caps: &EnumerationCaps) -> Result<i64> {
    let n = lambda.n();
    if n == 0 {
        return Ok(1);
    }
    caps.check_matchings(n)?;
    let weights = lambda.scaled_integers()?;
    let mut total = 0i64;
    t_expand(
        full_mask(n),
        n % 2 == 1,
        &weights,
        0,
        0,
        1,
        &mut total,
    );
    Ok(total)
}

fn t_expand(
    remaining: u32,
    isolated_free: bool,
    weights: &[i64],
    larger_ends: u32,
    parity: u32,
    product: i64,
    total: &mut i64,
) {
    if remaining == 0 {
        *total += if parity.is_multiple_of(2) { product } else { -product };
        return;
    }
    let v = remaining.trailing_zeros() as usize;
    let rest = remaining & (remaining - 1);
    if isolated_free {
        // Isolated vertex v contributes its indicator and (-1)^(v-1);
        // v is 0-based here so the exponent is exactly v.
        let factor = c1_int(weights[v]);
        if factor != 0 {
            t_expand(
                rest,
                false,
                weights,
                larger_ends,
                parity + v as u32,
                product * factor,
                total,
            );
        }
    }
    let mut partners = rest;
    while partners != 0 {
        let w = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        let factor = c2_int(weights[v], weights[w]);
        if factor == 0 {
            continue;
        }
        let between = ((1u32 << w) - 1) & !((1u32 << (v + 1)) - 1);
        let crossings = (larger_ends & between).count_ones();
        t_expand(
            rest & !(1u32 << w),
            isolated_free,
            weights,
            larger_ends | (1u32 << w),
            parity + crossings,
            product * factor,
            total,
        );
    }
}

/// The face-side sum: over every face, `(-1)^(number of blocks)` times
/// the sign of the per-block-descending permutation. Streams the face
/// set with prefix pruning and incremental inversion counting. The
/// empty vector evaluates to 1: one face with zero blocks.
pub fn s_direct(lambda: &WeightVector, caps: &EnumerationCaps) -> Result<i64> {
    let n = lambda.n();
    if n == 0 {
        return Ok(1);
    }
    caps.check_partitions(n)?;
    if !lambda.total().is_positive() {
        return Ok(0);
    }
    let weights = lambda.scaled_integers()?;
    let sums = subset_sums(&weights);
    let full = full_mask(n);
    let mut total = 0i64;
    s_expand(full, full, 0, 0, &sums, &mut total);
    Ok(total)
}

fn s_expand(full: u32, remaining: u32, prefix: i64, parity: u32, sums: &[i64], total: &mut i64) {
    let placed = full & !remaining;
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
        // Appending block b flips the sign by one block, by the
        // inversions inside the descending block, and by the pairs
        // (x, y) with x already placed, y in b, x > y.
        let size = b.count_ones();
        let mut added = 1 + size * (size - 1) / 2;
        let mut m = b;
        while m != 0 {
            let v = m.trailing_zeros();
            m &= m - 1;
            added += (placed & !((2u32 << v) - 1)).count_ones();
        }
        let parity = parity + added;
        if b == remaining {
            *total += if parity.is_multiple_of(2) { 1 } else { -1 };
        } else {
            s_expand(full, remaining & !b, sum, parity, sums, total);
        }
    }
}

/// Closed form for weakly increasing weights: `(-1)^n` when the first
/// entry is positive, else 0. The empty vector evaluates to 1, the
/// `n = 0` reading of the positive case.
pub fn s_closed_increasing(lambda: &WeightVector) -> Result<i64> {
    if !lambda.is_weakly_increasing() {
        return Err(Error::NotWeaklyIncreasing);
    }
    let n = lambda.n();
    if n == 0 {
        return Ok(1);
    }
    if lambda.get(1).is_positive() {
        Ok(if n.is_multiple_of(2) { 1 } else { -1 })
    } else {
        Ok(0)
    }
}

/// Both sides of the two pair-swap identities at position `i`,
/// evaluated independently by the direct sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionCheck {
    pub s_lhs: i64,
    pub s_rhs: i64,
    pub t_lhs: i64,
    pub t_rhs: i64,
    /// True when the reduction bottomed out at the empty vector, whose
    /// sums fall outside the usual `n >= 1` setting.
    pub uses_empty_convention: bool,
}

impl RecursionCheck {
    pub fn s_pass(&self) -> bool {
        self.s_lhs == self.s_rhs
    }

    pub fn t_pass(&self) -> bool {
        self.t_lhs == self.t_rhs
    }

    pub fn pass(&self) -> bool {
        self.s_pass() && self.t_pass()
    }
}

/// Verifies, at swap position `i` (1-based), the identities
/// `S(lambda) + S(s_i lambda) = 2 * [w_i + w_{i+1} > 0] * S(mu)` and
/// `T(lambda) + T(s_i lambda) = 2 * [w_i + w_{i+1} > 0] * T(mu)`,
/// where `mu` drops the two entries. Both sides are evaluated
/// independently by the direct sums.
pub fn verify_recursion(
    lambda: &WeightVector,
    i: usize,
    caps: &EnumerationCaps,
) -> Result<RecursionCheck> {
    let swapped = lambda.swapped(i)?;
    let mu = lambda.without_pair(i)?;
    let indicator = (lambda.get(i) + lambda.get(i + 1)).is_positive() as i64;
    Ok(RecursionCheck {
        s_lhs: s_direct(lambda, caps)? + s_direct(&swapped, caps)?,
        s_rhs: 2 * indicator * s_direct(&mu, caps)?,
        t_lhs: t_direct(lambda, caps)? + t_direct(&swapped, caps)?,
        t_rhs: 2 * indicator * t_direct(&mu, caps)?,
        uses_empty_convention: lambda.n() == 2,
    })
}

/// Evaluates the face-side sum without any face enumeration: bubble
/// the weights toward weakly increasing order, rewriting through the
/// pair-swap identity at each step and recursing on the two-shorter
/// vector, then close with the monotone formula.
pub fn s_recursive(lambda: &WeightVector) -> Result<i64> {
    crate::caps::check_ground_set(lambda.n())?;
    let n = lambda.n();
    if n == 0 {
        return Ok(1);
    }
    if n == 1 {
        return Ok(if lambda.get(1).is_positive() { -1 } else { 0 });
    }
    if lambda.is_weakly_increasing() {
        return s_closed_increasing(lambda);
    }
    let i = (1..n)
        .find(|&i| lambda.get(i) > lambda.get(i + 1))
        .expect("a non-monotone vector has a strict descent");
    let indicator = (lambda.get(i) + lambda.get(i + 1)).is_positive() as i64;
    let swapped = s_recursive(&lambda.swapped(i)?)?;
    let reduced = s_recursive(&lambda.without_pair(i)?)?;
    Ok(-swapped + 2 * indicator * reduced)
}

/// `a_i = (-1)^(C(i,2) + 1)` for `i >= 1`.
pub fn seq_a(i: u64) -> i64 {
    assert!(i >= 1);
    if (i * (i - 1) / 2 + 1).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `b_0 = b_1 = 1` and `b_i = 2` for `i >= 2`.
pub fn seq_b(i: u64) -> i64 {
    if i >= 2 {
        2
    } else {
        1
    }
}

/// Two sides of a closed-form identity, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: i64,
    pub rhs: i64,
}

impl IdentityCheck {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Sums the products `a_{c_1} ... a_{c_k}` over all compositions of
/// `n` and compares with `(-1)^n * b_n`.
pub fn composition_identity(n: usize) -> Result<IdentityCheck> {
    if n == 0 || n > 20 {
        return Err(Error::CapExceeded {
            what: "composition",
            n,
            cap: 20,
        });
    }
    let mut lhs = 0i64;
    for_each_composition(n, |parts| {
        let parity: u64 = parts
            .iter()
            .map(|&c| (c as u64 * (c as u64 - 1) / 2 + 1) % 2)
            .sum();
        lhs += if parity.is_multiple_of(2) { 1 } else { -1 };
    });
    let rhs = if n.is_multiple_of(2) { seq_b(n as u64) } else { -seq_b(n as u64) };
    Ok(IdentityCheck { lhs, rhs })
}

/// Sums the face-side terms over the interval between the ascending-run
/// partition of the identity and the identity facet, i.e. over the
/// ordered partitions into consecutive intervals, and compares with
/// `(-1)^n * b_n`. The terms are evaluated from actual block
/// permutation signs, independently of the sequence route above.
pub fn interval_sum_identity(n: usize) -> Result<IdentityCheck> {
    if n == 0 || n > 12 {
        return Err(Error::CapExceeded {
            what: "interval sum",
            n,
            cap: 12,
        });
    }
    let mut lhs = 0i64;
    for_each_composition(n, |parts| {
        let mut blocks = Vec::with_capacity(parts.len());
        let mut start = 0u32;
        for &c in parts {
            let block = ((1u32 << c) - 1) << start;
            blocks.push(block);
            start += c as u32;
        }
        let sigma = OrderedPartition::new(n, blocks).expect("interval blocks partition [n]");
        let block_sign = if sigma.num_blocks().is_multiple_of(2) { 1 } else { -1 };
        lhs += block_sign * sigma.g_map().sign();
    });
    let rhs = if n.is_multiple_of(2) { seq_b(n as u64) } else { -seq_b(n as u64) };
    Ok(IdentityCheck { lhs, rhs })
}

/// `2` to the number of maximal ascending runs of length at least two.
pub fn b_stat(tau: &Permutation) -> i64 {
    tau.descent_composition()
        .parts()
        .iter()
        .map(|&c| seq_b(c as u64))
        .product()
}

/// For weakly decreasing weights, evaluates
/// `(-1)^n * sum over facets of sign(tau) * b(tau)` by streaming the
/// facet permutations.
pub fn s_decreasing_formula(lambda: &WeightVector, caps: &EnumerationCaps) -> Result<i64> {
    if !lambda.is_weakly_decreasing() {
        return Err(Error::NotWeaklyDecreasing);
    }
    let mut sum = 0i64;
    for_each_facet(lambda, caps, |tau| {
        sum += tau.sign() * b_stat(tau);
    })?;
    Ok(if lambda.n().is_multiple_of(2) { sum } else { -sum })
}

/// All computation routes for one weight vector, with their agreement
/// verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: usize,
    pub s_direct: i64,
    pub t_direct: i64,
    pub t_via_pfaffian: i64,
    pub s_recursive: i64,
    /// Present when the weights are weakly decreasing.
    pub s_decreasing: Option<i64>,
}

impl IdentityReport {
    pub fn main_identity_pass(&self) -> bool {
        let sign = if self.n.is_multiple_of(2) { 1 } else { -1 };
        self.s_direct == sign * self.t_direct
    }

    pub fn pfaffian_pass(&self) -> bool {
        self.t_via_pfaffian == self.t_direct
    }

    pub fn recursive_pass(&self) -> bool {
        self.s_recursive == self.s_direct
    }

    pub fn decreasing_pass(&self) -> Option<bool> {
        self.s_decreasing.map(|v| v == self.s_direct)
    }

    pub fn all_pass(&self) -> bool {
        self.main_identity_pass()
            && self.pfaffian_pass()
            && self.recursive_pass()
            && self.decreasing_pass().unwrap_or(true)
    }
}

/// Evaluates every applicable route.
pub fn identity_report(lambda: &WeightVector, caps: &EnumerationCaps) -> Result<IdentityReport> {
    let s_decreasing = if lambda.is_weakly_decreasing() && lambda.n() >= 1 {
        Some(s_decreasing_formula(lambda, caps)?)
    } else {
        None
    };
    Ok(IdentityReport {
        n: lambda.n(),
        s_direct: s_direct(lambda, caps)?,
        t_direct: t_direct(lambda, caps)?,
        t_via_pfaffian: t_via_pfaffian(lambda)?,
        s_recursive: s_recursive(lambda)?,
        s_decreasing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::is_face;
    use crate::matching::for_each_maximal_matching;
    use crate::ordered_partition::for_each_ordered_partition;

    fn wv(values: &[i64]) -> WeightVector {
        WeightVector::from_integers(values).unwrap()
    }

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(p, q)
    }

    /// Definitional oracle for the face-side sum: filter the full
    /// ordered-partition stream and evaluate permutation signs.
    fn s_oracle(lambda: &WeightVector) -> i64 {
        let caps = EnumerationCaps::default();
        let mut total = 0i64;
        for_each_ordered_partition(lambda.n(), &caps, |sigma| {
            if is_face(lambda, sigma) {
                let sign = if sigma.num_blocks() % 2 == 0 { 1 } else { -1 };
                total += sign * sigma.g_map().sign();
            }
        })
        .unwrap();
        total
    }

    /// Definitional oracle for the matching-side sum.
    fn t_oracle(lambda: &WeightVector) -> i64 {
        let caps = EnumerationCaps::default();
        let mut total = 0i64;
        for_each_maximal_matching(lambda.n(), &caps, |p| {
            total += p.sign() * c_of_matching(p, lambda).unwrap();
        })
        .unwrap();
        total
    }

    #[test]
    fn c1_examples() {
        assert_eq!(c1(Rat::from_integer(1)), 1);
        assert_eq!(c1(Rat::from_integer(0)), 0);
        assert_eq!(c1(rat(-3, 2)), 0);
    }

    #[test]
    fn c2_examples() {
        assert_eq!(c2(Rat::from_integer(1), Rat::from_integer(2)), 1);
        assert_eq!(c2(Rat::from_integer(3), Rat::from_integer(-1)), 2);
        assert_eq!(c2(Rat::from_integer(1), Rat::from_integer(-1)), 0);
        assert_eq!(c2(Rat::from_integer(-1), Rat::from_integer(5)), 0);
        assert_eq!(c2(Rat::from_integer(0), Rat::from_integer(1)), 0);
    }

    #[test]
    fn c_of_matching_examples() {
        let caps = EnumerationCaps::default();
        let positive = wv(&[1, 2, 3, 4]);
        for_each_maximal_matching(4, &caps, |p| {
            assert_eq!(c_of_matching(p, &positive).unwrap(), 1);
        })
        .unwrap();
        let first_nonpositive = wv(&[0, 2, 3, 4]);
        for_each_maximal_matching(4, &caps, |p| {
            assert_eq!(c_of_matching(p, &first_nonpositive).unwrap(), 0);
        })
        .unwrap();
        let pair = Matching::new(2, vec![(1, 2)], None).unwrap();
        assert_eq!(c_of_matching(&pair, &wv(&[3, -1])).unwrap(), 2);
    }

    #[test]
    fn t_direct_closed_forms() {
        let caps = EnumerationCaps::default();
        for n in 1..=8 {
            let positive = WeightVector::new((1..=n).map(|i| rat(i as i64, 2)).collect()).unwrap();
            assert_eq!(t_direct(&positive, &caps).unwrap(), 1, "n = {n}");
            let mut entries = vec![Rat::from_integer(0)];
            entries.extend((1..n).map(|i| rat(i as i64, 3)));
            let first_nonpositive = WeightVector::new(entries).unwrap();
            assert_eq!(t_direct(&first_nonpositive, &caps).unwrap(), 0, "n = {n}");
        }
        assert_eq!(t_direct(&wv(&[3, -1]), &caps).unwrap(), 2);
    }

    #[test]
    fn t_direct_matches_oracle() {
        let caps = EnumerationCaps::default();
        for values in [
            vec![5i64, 1, -2, -3],
            vec![1, -1, 2, -2, 3],
            vec![-3, 9, -1, 4],
            vec![2, 2, -1, -1, 1, -2],
        ] {
            let lambda = wv(&values);
            assert_eq!(
                t_direct(&lambda, &caps).unwrap(),
                t_oracle(&lambda),
                "{values:?}"
            );
        }
    }

    #[test]
    fn s_direct_examples() {
        let caps = EnumerationCaps::default();
        assert_eq!(s_direct(&wv(&[1]), &caps).unwrap(), -1);
        assert_eq!(s_direct(&wv(&[1, 1]), &caps).unwrap(), 1);
        assert_eq!(s_direct(&wv(&[-1, -1]), &caps).unwrap(), 0);
        assert_eq!(s_direct(&WeightVector::empty(), &caps).unwrap(), 1);
    }

    #[test]
    fn s_direct_matches_oracle() {
        let caps = EnumerationCaps::default();
        for values in [
            vec![5i64, 1, -2, -3],
            vec![1, 1, 1, 1],
            vec![1, -1, 2, -2, 3],
            vec![-3, 9, -1, 4],
            vec![0, 1, -1, 2, 1],
        ] {
            let lambda = wv(&values);
            assert_eq!(
                s_direct(&lambda, &caps).unwrap(),
                s_oracle(&lambda),
                "{values:?}"
            );
        }
    }

    #[test]
    fn s_closed_increasing_examples() {
        assert_eq!(s_closed_increasing(&wv(&[1, 2, 3])).unwrap(), -1);
        assert_eq!(s_closed_increasing(&wv(&[0, 1, 2])).unwrap(), 0);
        assert_eq!(s_closed_increasing(&wv(&[-5, 1, 100])).unwrap(), 0);
        assert!(s_closed_increasing(&wv(&[2, 1])).is_err());
    }

    #[test]
    fn recursion_check_examples() {
        let caps = EnumerationCaps::default();
        let check = verify_recursion(&wv(&[1, 1]), 1, &caps).unwrap();
        assert_eq!(check.s_lhs, 2);
        assert_eq!(check.s_rhs, 2);
        assert_eq!(check.t_lhs, 2);
        assert_eq!(check.t_rhs, 2);
        assert!(check.uses_empty_convention);
        assert!(check.pass());

        // Indicator off: the left side must cancel.
        let check = verify_recursion(&wv(&[1, -1, 2, 2]), 1, &caps).unwrap();
        assert_eq!(check.s_rhs, 0);
        assert_eq!(check.t_rhs, 0);
        assert!(check.pass());

        let check = verify_recursion(&wv(&[5, 1, -2, -3]), 2, &caps).unwrap();
        assert!(check.pass());

        // The unmatched face terms carry a plus sign; this case pins it.
        let check = verify_recursion(&wv(&[1, 2, -1]), 2, &caps).unwrap();
        assert_eq!(check.s_lhs, -2);
        assert_eq!(check.s_rhs, -2);
        assert!(check.pass());

        assert!(verify_recursion(&wv(&[1, 1]), 2, &caps).is_err());
    }

    #[test]
    fn recursion_identities_hold_on_small_grid() {
        let caps = EnumerationCaps::default();
        let vals = [-2i64, -1, 0, 1, 2];
        for n in 2..=4usize {
            let mut idx = vec![0usize; n];
            loop {
                let v: Vec<i64> = idx.iter().map(|&i| vals[i]).collect();
                let lambda = wv(&v);
                for i in 1..n {
                    let check = verify_recursion(&lambda, i, &caps).unwrap();
                    assert!(check.pass(), "lambda = {v:?}, i = {i}: {check:?}");
                }
                let mut k = 0;
                while k < n {
                    idx[k] += 1;
                    if idx[k] < vals.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
        }
    }

    #[test]
    fn s_recursive_examples() {
        let caps = EnumerationCaps::default();
        assert_eq!(
            s_recursive(&wv(&[1, 2, 3])).unwrap(),
            s_closed_increasing(&wv(&[1, 2, 3])).unwrap()
        );
        assert_eq!(s_recursive(&wv(&[1, -1])).unwrap(), 0);
        assert_eq!(s_direct(&wv(&[1, -1]), &caps).unwrap(), 0);
        assert_eq!(
            s_recursive(&wv(&[5, 1, -2, -3])).unwrap(),
            s_direct(&wv(&[5, 1, -2, -3]), &caps).unwrap()
        );
    }

    #[test]
    fn sequence_values() {
        assert_eq!(seq_a(1), -1);
        assert_eq!(seq_a(2), 1);
        assert_eq!(seq_a(3), 1);
        assert_eq!(seq_a(4), -1);
        assert_eq!(seq_b(0), 1);
        assert_eq!(seq_b(1), 1);
        assert_eq!(seq_b(5), 2);
    }

    #[test]
    fn composition_identity_small_cases() {
        let one = composition_identity(1).unwrap();
        assert_eq!((one.lhs, one.rhs), (-1, -1));
        let two = composition_identity(2).unwrap();
        assert_eq!((two.lhs, two.rhs), (2, 2));
        let three = composition_identity(3).unwrap();
        assert_eq!((three.lhs, three.rhs), (-2, -2));
        for n in 1..=14 {
            assert!(composition_identity(n).unwrap().pass(), "n = {n}");
        }
    }

    #[test]
    fn interval_sum_identity_small_cases() {
        let one = interval_sum_identity(1).unwrap();
        assert_eq!((one.lhs, one.rhs), (-1, -1));
        let two = interval_sum_identity(2).unwrap();
        assert_eq!((two.lhs, two.rhs), (2, 2));
        let four = interval_sum_identity(4).unwrap();
        assert_eq!((four.lhs, four.rhs), (2, 2));
        for n in 1..=10 {
            assert!(interval_sum_identity(n).unwrap().pass(), "n = {n}");
        }
    }

    #[test]
    fn b_stat_examples() {
        assert_eq!(b_stat(&Permutation::longest(5)), 1);
        assert_eq!(b_stat(&Permutation::identity(4)), 2);
        assert_eq!(b_stat(&Permutation::new(vec![1, 3, 2, 4]).unwrap()), 4);
    }

    #[test]
    fn s_decreasing_formula_examples() {
        let caps = EnumerationCaps::default();
        assert_eq!(s_decreasing_formula(&wv(&[1, 1]), &caps).unwrap(), 1);
        let figure = wv(&[5, 1, -2, -3]);
        assert_eq!(
            s_decreasing_formula(&figure, &caps).unwrap(),
            s_direct(&figure, &caps).unwrap()
        );
        assert_eq!(s_decreasing_formula(&wv(&[-1, -2]), &caps).unwrap(), 0);
        assert!(s_decreasing_formula(&wv(&[1, 2]), &caps).is_err());
    }

    #[test]
    fn main_identity_on_figure_weights() {
        let caps = EnumerationCaps::default();
        let report = identity_report(&wv(&[5, 1, -2, -3]), &caps).unwrap();
        assert_eq!(report.t_direct, 0);
        assert_eq!(report.s_direct, 0);
        assert!(report.all_pass());
        assert_eq!(report.s_decreasing, Some(0));
    }

    #[test]
    fn reverse_identity_via_f_signs() {
        // The face-side sum equals (-1)^C(n,2) times the f-signed sum
        // over the reversed weights.
        let caps = EnumerationCaps::default();
        for values in [
            vec![5i64, 1, -2, -3],
            vec![1, 1, 1],
            vec![2, -1, 1, 3],
            vec![-1, 4, -2, 3, 1],
        ] {
            let lambda = wv(&values);
            let n = lambda.n();
            let reversed = lambda.reversed();
            let mut f_sum = 0i64;
            for_each_ordered_partition(n, &caps, |sigma| {
                if is_face(&reversed, sigma) {
                    let sign = if sigma.num_blocks() % 2 == 0 { 1 } else { -1 };
                    f_sum += sign * sigma.f_map().sign();
                }
            })
            .unwrap();
            let outer = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                s_direct(&lambda, &caps).unwrap(),
                outer * f_sum,
                "{values:?}"
            );
        }
    }

    #[test]
    fn rational_weights_work_throughout() {
        let caps = EnumerationCaps::default();
        let lambda = WeightVector::new(vec![rat(7, 2), rat(1, 3), rat(-5, 2), rat(-1, 6)]).unwrap();
        let report = identity_report(&lambda, &caps).unwrap();
        assert!(report.all_pass());
        assert_eq!(report.s_direct, s_oracle(&lambda));
        assert_eq!(report.t_direct, t_oracle(&lambda));
    }
}
