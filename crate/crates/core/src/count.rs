//! Exact counting of standardized fold configurations and fold-count sweeps.
//!
//! Counts can exceed any fixed-width integer, so they are arbitrary
//! precision. There is no known closed form, counting walks the generator.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::enumerate::partition_k_m;
use crate::types::{fold_sizes, ClassDistribution, Error, FoldSizes, Result};

/// Exact cardinality of a configuration space.
pub type ConfigCount = BigUint;

/// Number of distinct standardized fold configurations, without
/// materializing them.
pub fn count_configurations(n: &FoldSizes, c: &ClassDistribution) -> Result<ConfigCount> {
    let mut stream = partition_k_m(n, c)?;
    let mut total = ConfigCount::default();
    let mut chunk: u64 = 0;
    while stream.next().is_some() {
        chunk += 1;
        if chunk == u64::MAX {
            total += chunk;
            chunk = 0;
        }
    }
    total += chunk;
    Ok(total)
}

/// One row of a fold-count sweep.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub k: u64,
    pub sizes: FoldSizes,
    pub count: ConfigCount,
    pub elapsed: Duration,
}

/// Configuration counts for every fold count in `k_min..=k_max`, ascending.
pub fn sweep(c: &ClassDistribution, k_min: u64, k_max: u64) -> Result<Vec<SweepRow>> {
    if k_min == 0 {
        return Err(Error::ZeroFolds);
    }
    if k_max > c.total() {
        return Err(Error::TooManyFolds);
    }
    let mut rows = Vec::new();
    for k in k_min..=k_max {
        let sizes = fold_sizes(c.total(), k)?;
        let start = Instant::now();
        let count = count_configurations(&sizes, c)?;
        rows.push(SweepRow {
            k,
            sizes,
            count,
            elapsed: start.elapsed(),
        });
    }
    Ok(rows)
}

/// Independent cross-check for binary datasets with equal-size folds.
///
/// In that case a configuration is determined by the multiset of per-fold
/// counts of class 0, so the count equals the number of partitions of `c0`
/// into at most `k` parts, each at most `fold_size`. Computed by the
/// standard bounded-partition recurrence, sharing nothing with the
/// generator.
pub fn count_binary_equal_folds(c0: u64, k: u64, fold_size: u64) -> Result<ConfigCount> {
    if k == 0 {
        return Err(Error::ZeroFolds);
    }
    if fold_size == 0 {
        return Err(Error::EmptyFold);
    }
    if c0 > k * fold_size {
        return Err(Error::ClassTooLarge {
            cardinality: c0,
            capacity: k * fold_size,
        });
    }
    let mut memo = HashMap::new();
    Ok(bounded_partitions(c0, k, fold_size, &mut memo))
}

/// Partitions of `n` into at most `parts` parts, each at most `max_part`.
fn bounded_partitions(
    n: u64,
    parts: u64,
    max_part: u64,
    memo: &mut HashMap<(u64, u64, u64), ConfigCount>,
) -> ConfigCount {
    if n == 0 {
        return ConfigCount::from(1u8);
    }
    if parts == 0 {
        return ConfigCount::default();
    }
    let cap = max_part.min(n);
    let key = (n, parts, cap);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut total = ConfigCount::default();
    for first in 1..=cap {
        total += bounded_partitions(n - first, parts - 1, first, memo);
    }
    memo.insert(key, total.clone());
    total
}
