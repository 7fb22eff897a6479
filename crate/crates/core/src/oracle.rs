//! Brute-force reference implementation, for verification only.
//!
//! Enumerates every margin-consistent matrix by plain nested recursion with
//! no symmetry pruning, standardizes each and dedupes through a set. It
//! shares no code with the generators in [`crate::enumerate`], so agreement
//! between the two is a meaningful check. Not built for speed; a size guard
//! refuses instances whose unpruned search tree would be too large.

use std::collections::{BTreeSet, HashMap};

use crate::count::ConfigCount;
use crate::types::{
    standardize, ClassDistribution, Error, FoldConfiguration, FoldSizes, Result,
    StandardizedFoldConfiguration,
};

/// Upper bound on the estimated number of search nodes.
const MAX_TREE_ESTIMATE: u64 = 10_000_000;

/// The set of all distinct standardized fold configurations, by exhaustive
/// search.
pub fn oracle_enumerate(
    n: &FoldSizes,
    c: &ClassDistribution,
) -> Result<BTreeSet<StandardizedFoldConfiguration>> {
    if n.total() != c.total() {
        return Err(Error::SumMismatch {
            fold_total: n.total(),
            class_total: c.total(),
        });
    }
    // The last column of each row and the whole last row are forced, so the
    // tree is bounded by the product of the free-cell ranges.
    let mut estimate: u64 = 1;
    for &size in &n.sizes()[..n.num_folds() - 1] {
        for &cardinality in &c.counts()[..c.num_classes() - 1] {
            estimate = estimate.saturating_mul(size.min(cardinality) + 1);
        }
    }
    if estimate > MAX_TREE_ESTIMATE {
        return Err(Error::InstanceTooLarge { estimate });
    }

    let mut search = Search {
        sizes: n.sizes().to_vec(),
        col_rem: c.counts().to_vec(),
        rows: Vec::with_capacity(n.num_folds()),
        found: BTreeSet::new(),
    };
    search.fill_fold(0);
    Ok(search.found)
}

/// Cardinality of [`oracle_enumerate`]'s set.
pub fn oracle_count(n: &FoldSizes, c: &ClassDistribution) -> Result<ConfigCount> {
    Ok(ConfigCount::from(oracle_enumerate(n, c)?.len()))
}

/// Orbit count of margin-consistent matrices under fold permutation, for
/// `k` folds of equal size, via Burnside's lemma over the symmetric group.
///
/// For each cycle type of a fold permutation, the matrices it fixes are
/// those constant on each cycle, counted by dynamic programming over the
/// remaining column budgets; the orbit count is the fixed-point average.
/// A completely different route to the same number as
/// [`crate::count::count_configurations`] on balanced instances, and it
/// handles instances far beyond [`oracle_enumerate`]'s reach.
pub fn orbit_count_equal_folds(
    fold_size: u64,
    k: u64,
    c: &ClassDistribution,
) -> Result<ConfigCount> {
    if k == 0 {
        return Err(Error::ZeroFolds);
    }
    if fold_size == 0 {
        return Err(Error::EmptyFold);
    }
    if k * fold_size != c.total() {
        return Err(Error::SumMismatch {
            fold_total: k * fold_size,
            class_total: c.total(),
        });
    }
    let budget_states: u64 = c
        .counts()
        .iter()
        .fold(1u64, |acc, &x| acc.saturating_mul(x + 1));
    if budget_states > 1_000_000 || k > 12 {
        return Err(Error::InstanceTooLarge {
            estimate: budget_states,
        });
    }

    let mut numerator = ConfigCount::default();
    for cycle_type in partitions_of(k) {
        let weight = permutations_with_cycle_type(k, &cycle_type);
        let fixed = count_fixed_matrices(fold_size, &cycle_type, c.counts());
        numerator += fixed * ConfigCount::from(weight);
    }
    let order = (1..=k).fold(ConfigCount::from(1u8), |acc, i| acc * ConfigCount::from(i));
    debug_assert!((&numerator % &order) == ConfigCount::default());
    Ok(numerator / order)
}

/// Partitions of `n`, each in non-increasing order.
fn partitions_of(n: u64) -> Vec<Vec<u64>> {
    fn rec(left: u64, cap: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=cap.min(left)).rev() {
            prefix.push(part);
            rec(left - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of permutations of S_n with the given cycle type:
/// n! / (prod cycle_len * prod multiplicity!).
fn permutations_with_cycle_type(n: u64, cycle_type: &[u64]) -> u128 {
    let factorial = |x: u64| (1..=x as u128).product::<u128>();
    let mut denom: u128 = cycle_type.iter().map(|&l| l as u128).product();
    let mut run = 1u64;
    for window in cycle_type.windows(2) {
        if window[0] == window[1] {
            run += 1;
        } else {
            denom *= factorial(run);
            run = 1;
        }
    }
    denom *= factorial(run);
    factorial(n) / denom
}

/// Matrices with all rows summing to `fold_size` and columns to `counts`
/// that are constant on each cycle of a row permutation with the given
/// cycle type: cycle by cycle, a shared row is chosen and charged
/// `cycle_len` times against the column budgets.
fn count_fixed_matrices(fold_size: u64, cycle_type: &[u64], counts: &[u64]) -> ConfigCount {
    let mut states: HashMap<Vec<u64>, ConfigCount> = HashMap::new();
    states.insert(counts.to_vec(), ConfigCount::from(1u8));
    for &cycle_len in cycle_type {
        let mut next: HashMap<Vec<u64>, ConfigCount> = HashMap::new();
        for (budget, ways) in &states {
            let mut row = vec![0u64; counts.len()];
            charge_cycle(fold_size, cycle_len, budget, 0, &mut row, ways, &mut next);
        }
        states = next;
    }
    // all budgets are exhausted exactly when every cycle fit
    states.remove(&vec![0; counts.len()]).unwrap_or_default()
}

fn charge_cycle(
    row_rem: u64,
    cycle_len: u64,
    budget: &[u64],
    class: usize,
    row: &mut Vec<u64>,
    ways: &ConfigCount,
    next: &mut HashMap<Vec<u64>, ConfigCount>,
) {
    if class == budget.len() - 1 {
        if row_rem * cycle_len <= budget[class] {
            row[class] = row_rem;
            let mut remaining: Vec<u64> = budget.to_vec();
            for (slot, &used) in remaining.iter_mut().zip(row.iter()) {
                *slot -= used * cycle_len;
            }
            *next.entry(remaining).or_default() += ways;
        }
        return;
    }
    for value in 0..=row_rem.min(budget[class] / cycle_len) {
        row[class] = value;
        charge_cycle(
            row_rem - value,
            cycle_len,
            budget,
            class + 1,
            row,
            ways,
            next,
        );
    }
}

struct Search {
    sizes: Vec<u64>,
    col_rem: Vec<u64>,
    rows: Vec<Vec<u64>>,
    found: BTreeSet<StandardizedFoldConfiguration>,
}

impl Search {
    fn fill_fold(&mut self, fold: usize) {
        if fold == self.sizes.len() - 1 {
            // Last row is the leftover column capacity.
            if self.col_rem.iter().sum::<u64>() == self.sizes[fold] {
                let mut rows = self.rows.clone();
                rows.push(self.col_rem.clone());
                let config = FoldConfiguration::from_rows(rows).expect("rectangular");
                self.found.insert(standardize(&config));
            }
            return;
        }
        let m = self.col_rem.len();
        self.rows.push(vec![0; m]);
        self.fill_cell(fold, 0, self.sizes[fold]);
        self.rows.pop();
    }

    fn fill_cell(&mut self, fold: usize, class: usize, row_rem: u64) {
        if class == self.col_rem.len() - 1 {
            if row_rem <= self.col_rem[class] {
                self.rows[fold][class] = row_rem;
                self.col_rem[class] -= row_rem;
                self.fill_fold(fold + 1);
                self.col_rem[class] += row_rem;
            }
            return;
        }
        for value in 0..=row_rem.min(self.col_rem[class]) {
            self.rows[fold][class] = value;
            self.col_rem[class] -= value;
            self.fill_cell(fold, class + 1, row_rem - value);
            self.col_rem[class] += value;
        }
    }
}
