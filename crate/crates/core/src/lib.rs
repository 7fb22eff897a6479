//! Enumeration, exact counting and analysis of the standardized k-fold
//! configurations of a multi-class dataset.
//!
//! A *fold configuration* is a `k x m` non-negative integer matrix whose rows
//! sum to the fold sizes and whose columns sum to the per-class record counts,
//! i.e. a contingency table with fixed margins. Configurations that differ
//! only in the order of the folds are equivalent; the canonical representative
//! (rows sorted by fold size, ties broken lexicographically) is the
//! *standardized* fold configuration.
//!
//! The [`enumerate`] module provides lazy generators that produce every
//! distinct standardized configuration exactly once, [`count`] builds exact
//! big-integer counting and fold-count sweeps on top of them, and [`oracle`]
//! holds a deliberately independent brute-force reference used by the test
//! suite.

pub mod count;
pub mod enumerate;
pub mod oracle;
pub mod types;

pub use count::{count_binary_equal_folds, count_configurations, sweep, ConfigCount, SweepRow};
pub use enumerate::{
    partition_2_2, partition_2_m, partition_k_m, Partition22, Partition2M, PartitionKM,
};
pub use types::{
    fold_sizes, standardize, ClassDistribution, Error, FoldConfiguration, FoldSizes, Result,
    StandardizedFoldConfiguration,
};
