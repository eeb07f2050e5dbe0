use crate::error::{Error, Result};

/// Hard upper bound on the ground set size; subsets are stored in `u32`
/// bit masks and block indices fit in 4 bits.
pub const MAX_GROUND_SET: usize = 16;

/// Size caps for the exhaustive enumerations.
///
/// Ordered partitions grow like the ordered Bell numbers and maximal
/// matchings like double factorials, so both enumerations refuse to run
/// beyond their configured cap instead of silently taking hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCaps {
    /// Largest n for which ordered partitions (faces, facets) are enumerated.
    pub max_partition_n: usize,
    /// Largest n for which maximal matchings are enumerated.
    pub max_matching_n: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            max_partition_n: 10,
            max_matching_n: 14,
        }
    }
}

impl EnumerationCaps {
    pub fn check_partitions(&self, n: usize) -> Result<()> {
        check_ground_set(n)?;
        if n > self.max_partition_n {
            return Err(Error::CapExceeded {
                what: "ordered partition",
                n,
                cap: self.max_partition_n,
            });
        }
        Ok(())
    }

    pub fn check_matchings(&self, n: usize) -> Result<()> {
        check_ground_set(n)?;
        if n > self.max_matching_n {
            return Err(Error::CapExceeded {
                what: "maximal matching",
                n,
                cap: self.max_matching_n,
            });
        }
        Ok(())
    }
}

pub fn check_ground_set(n: usize) -> Result<()> {
    if n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            n,
            max: MAX_GROUND_SET,
        });
    }
    Ok(())
}
