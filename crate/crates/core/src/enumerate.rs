//! Recursive lazy generators for standardized fold configurations.
//!
//! The two-fold two-class case is solved directly ([`partition_2_2`]); two
//! folds with m classes reduce to it one class at a time ([`partition_2_m`]);
//! k folds split the smallest fold against the merged remainder and recurse
//! ([`partition_k_m`]). Duplicates under fold permutation are suppressed
//! during generation, never by post-hoc filtering of a materialized set, so
//! working memory stays proportional to `k * m`.

use crate::types::{
    ClassDistribution, Error, FoldConfiguration, FoldSizes, Result, StandardizedFoldConfiguration,
};

/// All splits of a 2-class dataset over two folds of sizes `n0` and `n1`,
/// where class 0 has `c0` records (class 1 has the remaining `n0 + n1 - c0`).
///
/// With `F[0][0] = i` the rest of the matrix is forced, so the stream walks
/// `i` ascending over its admissible range. Equal-size folds would duplicate
/// every split under fold swap, so there the loop stops at `c0 / 2`.
pub fn partition_2_2(n0: u64, n1: u64, c0: u64) -> Result<Partition22> {
    if n0 == 0 || n1 == 0 {
        return Err(Error::EmptyFold);
    }
    if c0 > n0 + n1 {
        return Err(Error::ClassTooLarge {
            cardinality: c0,
            capacity: n0 + n1,
        });
    }
    let lo = c0.saturating_sub(n1);
    let hi = if n0 == n1 {
        (c0 / 2).min(n0)
    } else {
        c0.min(n0)
    };
    Ok(Partition22 {
        n0,
        n1,
        c0,
        next: lo,
        hi,
        done: lo > hi,
    })
}

pub struct Partition22 {
    n0: u64,
    n1: u64,
    c0: u64,
    next: u64,
    hi: u64,
    done: bool,
}

impl Iterator for Partition22 {
    type Item = FoldConfiguration;

    fn next(&mut self) -> Option<FoldConfiguration> {
        if self.done {
            return None;
        }
        let i = self.next;
        if i == self.hi {
            self.done = true;
        } else {
            self.next += 1;
        }
        let rows = vec![
            vec![i, self.n0 - i],
            vec![self.c0 - i, self.n1 - self.c0 + i],
        ];
        Some(FoldConfiguration::from_rows(rows).expect("2x2 matrix"))
    }
}

/// One two-fold split level: an odometer over the per-class amounts placed in
/// fold 0. Classes advance right to left, each within bounds set by the
/// remaining fold capacities.
///
/// `sym[j]` tracks whether the two folds are still interchangeable before
/// class `j`: it starts out true only for a genuinely swappable pair (equal
/// fold sizes) and survives class `j` only if that class splits exactly in
/// half. While it holds, the fold-0 amount is capped at `counts[j] / 2`,
/// which enumerates exactly the representatives with row 0 <= row 1. Equal
/// *remaining* capacities arising under unequal fold sizes do not trigger the
/// cap; the folds are not interchangeable then.
struct Splitter {
    counts: Vec<u64>,
    cur: Vec<u64>,
    hi: Vec<u64>,
    cap0: Vec<u64>, // fold-0 capacity before class j, len m + 1
    cap1: Vec<u64>,
    sym: Vec<bool>,
    started: bool,
    exhausted: bool,
}

impl Splitter {
    /// Requires `n0 + n1 == counts.sum()`; `symmetric` marks the folds as
    /// interchangeable (implies `n0 == n1`).
    fn new(n0: u64, n1: u64, counts: Vec<u64>, symmetric: bool) -> Self {
        debug_assert_eq!(n0 + n1, counts.iter().sum::<u64>());
        debug_assert!(!symmetric || n0 == n1);
        let m = counts.len();
        let mut splitter = Splitter {
            cur: vec![0; m],
            hi: vec![0; m],
            cap0: vec![0; m + 1],
            cap1: vec![0; m + 1],
            sym: vec![false; m + 1],
            counts,
            started: false,
            exhausted: false,
        };
        splitter.cap0[0] = n0;
        splitter.cap1[0] = n1;
        splitter.sym[0] = symmetric;
        let feasible = splitter.fill_from(0);
        debug_assert!(feasible);
        splitter.exhausted = !feasible;
        splitter
    }

    /// Reset classes `at..` to their lowest admissible amounts.
    fn fill_from(&mut self, at: usize) -> bool {
        for j in at..self.counts.len() {
            let c = self.counts[j];
            let lo = c.saturating_sub(self.cap1[j]);
            let hi = if self.sym[j] {
                (c / 2).min(self.cap0[j])
            } else {
                c.min(self.cap0[j])
            };
            if lo > hi {
                return false;
            }
            self.cur[j] = lo;
            self.hi[j] = hi;
            self.step_caps(j);
        }
        true
    }

    fn step_caps(&mut self, j: usize) {
        let taken = self.cur[j];
        self.cap0[j + 1] = self.cap0[j] - taken;
        self.cap1[j + 1] = self.cap1[j] - (self.counts[j] - taken);
        self.sym[j + 1] = self.sym[j] && taken * 2 == self.counts[j];
    }

    /// Move to the next split; the first call settles on the initial one.
    fn advance(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        for j in (0..self.counts.len()).rev() {
            while self.cur[j] < self.hi[j] {
                self.cur[j] += 1;
                self.step_caps(j);
                if self.fill_from(j + 1) {
                    return true;
                }
            }
        }
        self.exhausted = true;
        false
    }

    fn fold0(&self) -> &[u64] {
        &self.cur
    }

    fn fold1(&self) -> Vec<u64> {
        self.counts
            .iter()
            .zip(&self.cur)
            .map(|(&c, &taken)| c - taken)
            .collect()
    }
}

/// Every 2 x m matrix with row sums `(n0, n1)` and column sums `c`, each
/// exactly once up to fold swap when `n0 == n1`. Deterministic: ascending in
/// the fold-0 amount of each class, leftmost class outermost.
pub fn partition_2_m(n0: u64, n1: u64, c: &ClassDistribution) -> Result<Partition2M> {
    if n0 == 0 || n1 == 0 {
        return Err(Error::EmptyFold);
    }
    if n0 + n1 != c.total() {
        return Err(Error::SumMismatch {
            fold_total: n0 + n1,
            class_total: c.total(),
        });
    }
    Ok(Partition2M {
        splitter: Splitter::new(n0, n1, c.counts().to_vec(), n0 == n1),
    })
}

pub struct Partition2M {
    splitter: Splitter,
}

impl Iterator for Partition2M {
    type Item = FoldConfiguration;

    fn next(&mut self) -> Option<FoldConfiguration> {
        if !self.splitter.advance() {
            return None;
        }
        let rows = vec![self.splitter.fold0().to_vec(), self.splitter.fold1()];
        Some(FoldConfiguration::from_rows(rows).expect("2xm matrix"))
    }
}

/// Every distinct standardized fold configuration for folds `n` and class
/// distribution `c`, exactly once, in a fixed deterministic order.
///
/// Level `t` of the recursion splits fold `t` against the merged remainder
/// with [`partition_2_m`]; a candidate row for fold `t` is discarded when the
/// previous fold has the same size and a lexicographically larger row, which
/// keeps every run of equal-size folds non-decreasing and makes each emitted
/// matrix its own canonical form.
pub fn partition_k_m(n: &FoldSizes, c: &ClassDistribution) -> Result<PartitionKM> {
    if n.total() != c.total() {
        return Err(Error::SumMismatch {
            fold_total: n.total(),
            class_total: c.total(),
        });
    }
    let sizes = n.sizes().to_vec();
    let k = sizes.len();
    // tail[t] = combined size of folds t+1..
    let mut tail = vec![0u64; k];
    for t in (0..k.saturating_sub(1)).rev() {
        tail[t] = tail[t + 1] + sizes[t + 1];
    }
    let mut generator = PartitionKM {
        single: None,
        levels: Vec::with_capacity(k),
        rows: Vec::with_capacity(k),
        sizes,
        tail,
    };
    if k == 1 {
        generator.single = Some(c.counts().to_vec());
    } else {
        generator.levels.push(Splitter::new(
            generator.sizes[0],
            generator.tail[0],
            c.counts().to_vec(),
            generator.sizes[0] == generator.tail[0],
        ));
    }
    Ok(generator)
}

pub struct PartitionKM {
    sizes: Vec<u64>,
    tail: Vec<u64>,
    levels: Vec<Splitter>,
    rows: Vec<Vec<u64>>,
    single: Option<Vec<u64>>, // k == 1 short-circuit
}

impl Iterator for PartitionKM {
    type Item = StandardizedFoldConfiguration;

    fn next(&mut self) -> Option<StandardizedFoldConfiguration> {
        if let Some(row) = self.single.take() {
            return Some(StandardizedFoldConfiguration::from_canonical_rows(vec![
                row,
            ]));
        }
        loop {
            let level = self.levels.len().checked_sub(1)?;
            if !self.levels[level].advance() {
                self.levels.pop();
                self.rows.pop();
                continue;
            }
            let top = &self.levels[level];
            // Lexicographic guard between adjacent equal-size folds.
            if level > 0
                && self.sizes[level] == self.sizes[level - 1]
                && self.rows[level - 1].as_slice() > top.fold0()
            {
                continue;
            }
            if level == self.sizes.len() - 2 {
                let mut rows = self.rows.clone();
                rows.push(top.fold0().to_vec());
                rows.push(top.fold1());
                return Some(StandardizedFoldConfiguration::from_canonical_rows(rows));
            }
            let row = top.fold0().to_vec();
            let remainder = top.fold1();
            self.rows.push(row);
            let next_level = level + 1;
            self.levels.push(Splitter::new(
                self.sizes[next_level],
                self.tail[next_level],
                remainder,
                self.sizes[next_level] == self.tail[next_level],
            ));
        }
    }
}
