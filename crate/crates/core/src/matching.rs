//! Maximal matchings on `[n]`: perfect matchings for even `n`, perfect
//! up to one isolated vertex for odd `n`. The sign of a matching
//! combines its crossing parity with the position of the isolated
//! vertex.

use crate::caps::EnumerationCaps;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A maximal matching: `floor(n/2)` disjoint edges plus, for odd `n`,
/// the unique unmatched vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    n: u8,
    /// Edges `(i, j)` with `i < j`, sorted by smaller endpoint.
    edges: Vec<(u8, u8)>,
    isolated: Option<u8>,
}

impl Matching {
    pub fn new(n: usize, mut edges: Vec<(u8, u8)>, isolated: Option<u8>) -> Result<Self> {
        crate::caps::check_ground_set(n).map_err(|_| Error::InvalidMatching {
            reason: format!("ground set size {n} too large"),
        })?;
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        let mut covered = 0u32;
        for &(i, j) in &edges {
            if i == 0 || j as usize > n || i == j {
                return Err(Error::InvalidMatching {
                    reason: format!("edge ({i},{j}) outside the ground set"),
                });
            }
            let bits = (1u32 << (i - 1)) | (1u32 << (j - 1));
            if covered & bits != 0 {
                return Err(Error::InvalidMatching {
                    reason: "edges are not disjoint".into(),
                });
            }
            covered |= bits;
        }
        if edges.len() != n / 2 {
            return Err(Error::InvalidMatching {
                reason: format!("expected {} edges, got {}", n / 2, edges.len()),
            });
        }
        match (n % 2, isolated) {
            (0, None) => {}
            (1, Some(v)) => {
                if v == 0 || v as usize > n || covered & (1 << (v - 1)) != 0 {
                    return Err(Error::InvalidMatching {
                        reason: format!("isolated vertex {v} is invalid"),
                    });
                }
            }
            (0, Some(_)) => {
                return Err(Error::InvalidMatching {
                    reason: "even ground set cannot have an isolated vertex".into(),
                })
            }
            _ => {
                return Err(Error::InvalidMatching {
                    reason: "odd ground set needs an isolated vertex".into(),
                })
            }
        }
        Ok(Matching {
            n: n as u8,
            edges,
            isolated,
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    pub fn isolated(&self) -> Option<u8> {
        self.isolated
    }

    /// Number of pairs of edges `{a,c}`, `{b,d}` with `a < b < c < d`.
    pub fn crossings(&self) -> u32 {
        let mut count = 0;
        for (idx, &(a, c)) in self.edges.iter().enumerate() {
            for &(b, d) in &self.edges[idx + 1..] {
                // Edges are sorted by smaller endpoint, so a < b.
                if a < b && b < c && c < d {
                    count += 1;
                }
            }
        }
        count
    }

    /// `(-1)^cross(p)`, times `(-1)^(i-1)` for the isolated vertex `i`
    /// when `n` is odd.
    pub fn sign(&self) -> i64 {
        let mut parity = self.crossings();
        if let Some(i) = self.isolated {
            parity += i as u32 - 1;
        }
        if parity.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// For odd `n`, joins the isolated vertex to a new vertex `n + 1`;
    /// the resulting matching on `n + 1` vertices has the same sign.
    pub fn lift(&self) -> Result<Matching> {
        let Some(i) = self.isolated else {
            return Err(Error::EvenGroundSet);
        };
        let mut edges = self.edges.clone();
        edges.push((i, self.n + 1));
        Matching::new(self.n() + 1, edges, None)
    }
}

/// Streams every maximal matching on `[n]` exactly once. The order is
/// deterministic: the smallest free vertex is either isolated (odd `n`,
/// first) or paired with each larger free vertex in increasing order.
pub fn for_each_maximal_matching<F: FnMut(&Matching)>(
    n: usize,
    caps: &EnumerationCaps,
    mut f: F,
) -> Result<()> {
    caps.check_matchings(n)?;
    if n == 0 {
        return Err(Error::InvalidMatching {
            reason: "ground set is empty".into(),
        });
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut edges = Vec::with_capacity(n / 2);
    recurse_matchings(full, n, n % 2 == 1, None, &mut edges, &mut f);
    Ok(())
}

fn recurse_matchings<F: FnMut(&Matching)>(
    remaining: u32,
    n: usize,
    isolated_free: bool,
    isolated: Option<u8>,
    edges: &mut Vec<(u8, u8)>,
    f: &mut F,
) {
    if remaining == 0 {
        f(&Matching {
            n: n as u8,
            edges: edges.clone(),
            isolated,
        });
        return;
    }
    let v = remaining.trailing_zeros() as u8 + 1;
    let rest = remaining & (remaining - 1);
    if isolated_free {
        recurse_matchings(rest, n, false, Some(v), edges, f);
    }
    let mut partners = rest;
    while partners != 0 {
        let w = partners.trailing_zeros() as u8 + 1;
        partners &= partners - 1;
        edges.push((v, w));
        recurse_matchings(
            rest & !(1u32 << (w - 1)),
            n,
            isolated_free,
            isolated,
            edges,
            f,
        );
        edges.pop();
    }
}

/// Collects the full stream; intended for small `n`.
pub fn maximal_matchings(n: usize, caps: &EnumerationCaps) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    for_each_maximal_matching(n, caps, |m| out.push(m.clone()))?;
    Ok(out)
}

/// Number of maximal matchings: `(n-1)!!` for even `n` and
/// `n * (n-2)!!` for odd `n`.
pub fn maximal_matching_count(n: usize) -> u64 {
    fn double_factorial(k: i64) -> u64 {
        if k <= 0 {
            1
        } else {
            k as u64 * double_factorial(k - 2)
        }
    }
    if n.is_multiple_of(2) {
        double_factorial(n as i64 - 1)
    } else {
        n as u64 * double_factorial(n as i64 - 2)
    }
}

/// True when `tau` satisfies `tau_{2j-1} < tau_{2j}` for every pair and
/// `tau_1 < tau_3 < ... < tau_{2m-1}`.
pub fn is_paired_ascending(tau: &Permutation) -> bool {
    let e = tau.entries();
    let m = e.len() / 2;
    for j in 0..m {
        if e[2 * j] >= e[2 * j + 1] {
            return false;
        }
        if j > 0 && e[2 * j - 2] >= e[2 * j] {
            return false;
        }
    }
    true
}

/// Reads a paired-ascending permutation as a maximal matching
/// `{{tau_1, tau_2}, {tau_3, tau_4}, ...}` (isolated vertex `tau_n`
/// for odd `n`). The construction preserves the sign.
pub fn matching_from_paired_ascending(tau: &Permutation) -> Result<Matching> {
    if !is_paired_ascending(tau) {
        return Err(Error::NotPairedAscending);
    }
    let e = tau.entries();
    let m = e.len() / 2;
    let edges = (0..m).map(|j| (e[2 * j], e[2 * j + 1])).collect();
    let isolated = if e.len() % 2 == 1 {
        Some(e[e.len() - 1])
    } else {
        None
    };
    Matching::new(e.len(), edges, isolated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::for_each_permutation;
    use std::collections::HashSet;

    fn m(n: usize, edges: &[(u8, u8)], isolated: Option<u8>) -> Matching {
        Matching::new(n, edges.to_vec(), isolated).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let caps = EnumerationCaps::default();
        assert_eq!(maximal_matchings(2, &caps).unwrap().len(), 1);
        assert_eq!(maximal_matchings(4, &caps).unwrap().len(), 3);
        assert_eq!(maximal_matchings(3, &caps).unwrap().len(), 3);
        for n in 1..=9 {
            assert_eq!(
                maximal_matchings(n, &caps).unwrap().len() as u64,
                maximal_matching_count(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn enumeration_respects_cap() {
        let caps = EnumerationCaps {
            max_matching_n: 6,
            ..Default::default()
        };
        assert!(for_each_maximal_matching(7, &caps, |_| ()).is_err());
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(m(4, &[(1, 2), (3, 4)], None).crossings(), 0);
        assert_eq!(m(4, &[(1, 3), (2, 4)], None).crossings(), 1);
        assert_eq!(m(4, &[(1, 4), (2, 3)], None).crossings(), 0);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(m(2, &[(1, 2)], None).sign(), 1);
        assert_eq!(m(4, &[(1, 3), (2, 4)], None).sign(), -1);
        assert_eq!(m(3, &[(2, 3)], Some(1)).sign(), 1);
    }

    #[test]
    fn paired_ascending_examples() {
        let t1234 = Permutation::new(vec![1, 2, 3, 4]).unwrap();
        let p = matching_from_paired_ascending(&t1234).unwrap();
        assert_eq!(p, m(4, &[(1, 2), (3, 4)], None));
        assert_eq!(p.sign(), t1234.sign());

        let t1324 = Permutation::new(vec![1, 3, 2, 4]).unwrap();
        let p = matching_from_paired_ascending(&t1324).unwrap();
        assert_eq!(p, m(4, &[(1, 3), (2, 4)], None));
        assert_eq!(p.sign(), -1);
        assert_eq!(t1324.sign(), -1);

        let t1423 = Permutation::new(vec![1, 4, 2, 3]).unwrap();
        let p = matching_from_paired_ascending(&t1423).unwrap();
        assert_eq!(p, m(4, &[(1, 4), (2, 3)], None));
        assert_eq!(p.sign(), 1);
        assert_eq!(t1423.sign(), 1);

        let bad = Permutation::new(vec![2, 1, 3, 4]).unwrap();
        assert!(matching_from_paired_ascending(&bad).is_err());
    }

    #[test]
    fn paired_ascending_is_sign_preserving_bijection() {
        let caps = EnumerationCaps::default();
        for n in 1..=7 {
            let mut image = HashSet::new();
            let mut count = 0u64;
            for_each_permutation(n, |tau| {
                if is_paired_ascending(tau) {
                    let p = matching_from_paired_ascending(tau).unwrap();
                    assert_eq!(p.sign(), tau.sign(), "tau = {tau}");
                    assert!(image.insert(format!("{:?}", p)));
                    count += 1;
                }
            });
            assert_eq!(count, maximal_matching_count(n), "n = {n}");
            assert_eq!(image.len(), maximal_matchings(n, &caps).unwrap().len());
        }
    }

    #[test]
    fn lift_examples() {
        let p = m(1, &[], Some(1));
        assert_eq!(p.lift().unwrap(), m(2, &[(1, 2)], None));

        let p = m(3, &[(1, 2)], Some(3));
        let lifted = p.lift().unwrap();
        assert_eq!(lifted, m(4, &[(1, 2), (3, 4)], None));
        assert_eq!(p.sign(), 1);
        assert_eq!(lifted.sign(), 1);

        let p = m(3, &[(1, 3)], Some(2));
        let lifted = p.lift().unwrap();
        assert_eq!(lifted, m(4, &[(1, 3), (2, 4)], None));
        assert_eq!(p.sign(), -1);
        assert_eq!(lifted.sign(), -1);

        assert!(m(2, &[(1, 2)], None).lift().is_err());
    }

    #[test]
    fn lift_is_sign_preserving_bijection() {
        let caps = EnumerationCaps::default();
        for n in [1usize, 3, 5, 7, 9] {
            let lifted: Vec<Matching> = maximal_matchings(n, &caps)
                .unwrap()
                .iter()
                .map(|p| {
                    let q = p.lift().unwrap();
                    assert_eq!(q.sign(), p.sign());
                    q
                })
                .collect();
            let mut seen = HashSet::new();
            for q in &lifted {
                assert!(seen.insert(format!("{:?}", q)));
            }
            assert_eq!(lifted.len() as u64, maximal_matching_count(n + 1));
        }
    }
}
