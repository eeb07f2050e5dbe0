//! Exact integer Pfaffians of skew-symmetric matrices, by the signed
//! perfect-matching expansion. The sign of a matching is its crossing
//! parity, matching the sign convention used for maximal matchings.

use crate::caps::MAX_GROUND_SET;
use crate::error::{Error, Result};
use crate::weight::WeightVector;

/// A skew-symmetric integer matrix, stored by its strict upper
/// triangle in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    order: usize,
    upper: Vec<i64>,
}

impl SkewMatrix {
    pub fn from_upper(order: usize, upper: Vec<i64>) -> Result<Self> {
        let expected = order * order.saturating_sub(1) / 2;
        if upper.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: upper.len(),
            });
        }
        Ok(SkewMatrix { order, upper })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> i64>(order: usize, mut f: F) -> Self {
        let mut upper = Vec::with_capacity(order * order.saturating_sub(1) / 2);
        for i in 0..order {
            for j in i + 1..order {
                upper.push(f(i, j));
            }
        }
        SkewMatrix { order, upper }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry at 0-based `(i, j)`, with skew symmetry applied.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => 0,
            Less => self.upper[self.offset(i, j)],
            Greater => -self.upper[self.offset(j, i)],
        }
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        i * (2 * self.order - i - 1) / 2 + (j - i - 1)
    }
}

/// The Pfaffian as the crossing-signed sum over perfect matchings:
/// each matching contributes the product of its edge entries times
/// `(-1)^(number of crossings)`.
pub fn pfaffian(matrix: &SkewMatrix) -> Result<i64> {
    let order = matrix.order();
    if order % 2 == 1 {
        return Err(Error::OddOrder { order });
    }
    if order > MAX_GROUND_SET {
        return Err(Error::CapExceeded {
            what: "pfaffian",
            n: order,
            cap: MAX_GROUND_SET,
        });
    }
    if order == 0 {
        return Ok(1);
    }
    let full = (1u32 << order) - 1;
    let total = expand(matrix, full, 0, 0, 1);
    i64::try_from(total).map_err(|_| Error::WeightOverflow)
}

fn expand(matrix: &SkewMatrix, remaining: u32, larger_ends: u32, cross_parity: u32, product: i128) -> i128 {
    if remaining == 0 {
        return if cross_parity.is_multiple_of(2) { product } else { -product };
    }
    let v = remaining.trailing_zeros() as usize;
    let rest = remaining & (remaining - 1);
    let mut total = 0i128;
    let mut partners = rest;
    while partners != 0 {
        let w = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        let entry = matrix.get(v, w);
        if entry == 0 {
            continue;
        }
        // Earlier edges cross {v, w} exactly when their larger endpoint
        // lies strictly between v and w.
        let between = ((1u32 << w) - 1) & !((1u32 << (v + 1)) - 1);
        let crossings = (larger_ends & between).count_ones();
        total += expand(
            matrix,
            rest & !(1u32 << w),
            larger_ends | (1u32 << w),
            cross_parity + crossings,
            product * entry as i128,
        );
    }
    total
}

fn indicator_positive(w: i64) -> i64 {
    (w > 0) as i64
}

fn edge_weight(a: i64, b: i64) -> i64 {
    if a > 0 && b > 0 {
        1
    } else if b <= 0 && a + b > 0 {
        2
    } else {
        0
    }
}

/// The skew matrix whose Pfaffian evaluates the matching-side sum:
/// pair entries above the diagonal, and for odd `n` an extra final
/// column holding the positivity indicators.
pub fn t_skew_matrix(lambda: &WeightVector) -> Result<SkewMatrix> {
    let n = lambda.n();
    let weights = lambda.scaled_integers()?;
    let matrix = if n.is_multiple_of(2) {
        SkewMatrix::from_fn(n, |i, j| edge_weight(weights[i], weights[j]))
    } else {
        SkewMatrix::from_fn(n + 1, |i, j| {
            if j == n {
                indicator_positive(weights[i])
            } else {
                edge_weight(weights[i], weights[j])
            }
        })
    };
    Ok(matrix)
}

/// Evaluates the matching-side sum through the Pfaffian route.
pub fn t_via_pfaffian(lambda: &WeightVector) -> Result<i64> {
    pfaffian(&t_skew_matrix(lambda)?)
}
