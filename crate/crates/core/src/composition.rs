//! Compositions of `n`: ordered lists of positive parts.

use std::fmt;

use crate::error::{Error, Result};

/// A composition of `n`, i.e. a list of positive integers summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u8>,
}

impl Composition {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition {
                reason: "zero part".into(),
            });
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Calls `f` on every composition of `n`, encoded by the subset of break
/// points between consecutive positions (so `2^(n-1)` of them).
pub fn for_each_composition<F: FnMut(&[u8])>(n: usize, mut f: F) {
    assert!((1..=32).contains(&n));
    let mut parts: Vec<u8> = Vec::with_capacity(n);
    for breaks in 0u64..(1u64 << (n - 1)) {
        parts.clear();
        let mut run = 1u8;
        for i in 0..n - 1 {
            if breaks >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        f(&parts);
    }
}
