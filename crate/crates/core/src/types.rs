//! Domain types: class distributions, fold sizes and (standardized) fold
//! configurations.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("class distribution must contain at least one class")]
    NoClasses,
    #[error("class distribution must contain at least one record")]
    NoRecords,
    #[error("fold count must be at least 1")]
    ZeroFolds,
    #[error("fold count exceeds records")]
    TooManyFolds,
    #[error("fold sizes must be positive")]
    EmptyFold,
    #[error("fold sizes must be in non-decreasing order")]
    UnsortedFoldSizes,
    #[error("fold sizes sum to {fold_total} but class counts sum to {class_total}")]
    SumMismatch { fold_total: u64, class_total: u64 },
    #[error("class cardinality {cardinality} exceeds the combined fold capacity {capacity}")]
    ClassTooLarge { cardinality: u64, capacity: u64 },
    #[error("matrix rows must be non-empty and of equal length")]
    MalformedMatrix,
    #[error("instance too large for brute-force enumeration (estimated {estimate} search nodes)")]
    InstanceTooLarge { estimate: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Per-class record counts of the whole dataset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDistribution {
    counts: Vec<u64>,
}

impl ClassDistribution {
    /// At least one class, at least one record overall; zero-count classes
    /// are allowed.
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::NoClasses);
        }
        if counts.iter().all(|&c| c == 0) {
            return Err(Error::NoRecords);
        }
        Ok(Self { counts })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn num_classes(&self) -> usize {
        self.counts.len()
    }

    /// Total number of records, the dataset size N.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Per-fold cardinalities, kept in non-decreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldSizes {
    sizes: Vec<u64>,
}

impl FoldSizes {
    pub fn new(sizes: Vec<u64>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::ZeroFolds);
        }
        if sizes.contains(&0) {
            return Err(Error::EmptyFold);
        }
        if sizes.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::UnsortedFoldSizes);
        }
        Ok(Self { sizes })
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn num_folds(&self) -> usize {
        self.sizes.len()
    }

    pub fn total(&self) -> u64 {
        self.sizes.iter().sum()
    }
}

/// Balanced fold sizes for `total` records split into `folds` folds:
/// `total mod folds` folds get one extra record, smaller folds come first.
pub fn fold_sizes(total: u64, folds: u64) -> Result<FoldSizes> {
    if folds == 0 {
        return Err(Error::ZeroFolds);
    }
    if total == 0 {
        return Err(Error::NoRecords);
    }
    if folds > total {
        return Err(Error::TooManyFolds);
    }
    let small = total / folds;
    let larger = total % folds;
    let smaller = folds - larger;
    let mut sizes = Vec::with_capacity(folds as usize);
    sizes.extend(std::iter::repeat_n(small, smaller as usize));
    sizes.extend(std::iter::repeat_n(small + 1, larger as usize));
    Ok(FoldSizes { sizes })
}

/// A `k x m` matrix; cell `(i, j)` is the number of records of class `j`
/// placed in fold `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FoldConfiguration {
    folds: usize,
    classes: usize,
    cells: Vec<u64>, // row-major
}

impl FoldConfiguration {
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let folds = rows.len();
        let classes = rows.first().map_or(0, |r| r.len());
        if folds == 0 || classes == 0 || rows.iter().any(|r| r.len() != classes) {
            return Err(Error::MalformedMatrix);
        }
        Ok(Self {
            folds,
            classes,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn num_folds(&self) -> usize {
        self.folds
    }

    pub fn num_classes(&self) -> usize {
        self.classes
    }

    pub fn cell(&self, fold: usize, class: usize) -> u64 {
        self.cells[fold * self.classes + class]
    }

    /// Row-major cell storage.
    pub fn cells(&self) -> &[u64] {
        &self.cells
    }

    pub fn row(&self, fold: usize) -> &[u64] {
        &self.cells[fold * self.classes..(fold + 1) * self.classes]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.cells.chunks_exact(self.classes)
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<u64> {
        let mut sums = vec![0; self.classes];
        for row in self.rows() {
            for (s, &v) in sums.iter_mut().zip(row) {
                *s += v;
            }
        }
        sums
    }

    /// True iff rows are sorted by (row sum, lexicographic row) ascending.
    pub fn is_standardized(&self) -> bool {
        let sums = self.row_sums();
        (1..self.folds).all(|i| {
            sums[i - 1] < sums[i] || (sums[i - 1] == sums[i] && self.row(i - 1) <= self.row(i))
        })
    }
}

/// A fold configuration in canonical row order: rows sorted primarily by row
/// sum, secondarily by elementwise lexicographic order. Two standardized
/// configurations are equal iff their matrices are identical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardizedFoldConfiguration(FoldConfiguration);

impl StandardizedFoldConfiguration {
    /// Rows already in canonical order.
    pub(crate) fn from_canonical_rows(rows: Vec<Vec<u64>>) -> Self {
        let config = FoldConfiguration::from_rows(rows).expect("canonical rows form a matrix");
        debug_assert!(config.is_standardized());
        Self(config)
    }

    pub fn as_configuration(&self) -> &FoldConfiguration {
        &self.0
    }

    pub fn into_configuration(self) -> FoldConfiguration {
        self.0
    }
}

impl std::ops::Deref for StandardizedFoldConfiguration {
    type Target = FoldConfiguration;

    fn deref(&self) -> &FoldConfiguration {
        &self.0
    }
}

/// Canonical representative of a configuration under fold permutation.
/// Idempotent; the multiset of rows is preserved.
pub fn standardize(config: &FoldConfiguration) -> StandardizedFoldConfiguration {
    let mut rows: Vec<Vec<u64>> = config.rows().map(<[u64]>::to_vec).collect();
    rows.sort_by_key(|r| (r.iter().sum::<u64>(), r.clone()));
    StandardizedFoldConfiguration(FoldConfiguration::from_rows(rows).expect("same shape"))
}
