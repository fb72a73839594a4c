//! Brute-force ground truth: exhaustive generation of all Dyck words of a
//! given slope and size, with definition-level classification. No formula
//! from `sequences` is used here; counts come from scanning every word.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use thiserror::Error;

use crate::bell::binom;
use crate::words::{DyckWord, Letter, Slope};

/// Default cap on the number of candidate words a report may scan.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration for slope {slope} n={n} exceeds budget {budget}")]
    BudgetExceeded {
        slope: String,
        n: usize,
        budget: u64,
    },
}

/// Definition-level counts over all Dyck words of length `(alpha+beta)n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub slope: Slope,
    pub n: usize,
    pub total: u64,
    pub factor_free: u64,
    pub strongly_below: u64,
    /// reducibility level -> number of words
    pub rl_histogram: BTreeMap<usize, u64>,
}

/// Yields every Dyck word of length `(alpha+beta)n` (with `alpha n` letters
/// `a` and `beta n` letters `b`) exactly once, in lexicographic order with
/// `a < b`. Backtracking on prefix height: a letter is placed only while
/// the height stays nonnegative and letter counts remain available.
pub fn enumerate_words(slope: Slope, n: usize) -> Vec<DyckWord> {
    let mut out = Vec::new();
    for_each_word(slope, n, &mut |w| out.push(w.clone()));
    out
}

/// Visitor form of the enumeration; avoids materializing large sets.
pub fn for_each_word<F: FnMut(&DyckWord)>(slope: Slope, n: usize, visit: &mut F) {
    let a_total = (slope.alpha() * n as u64) as usize;
    let b_total = (slope.beta() * n as u64) as usize;
    let mut letters = Vec::with_capacity(a_total + b_total);
    descend(slope, a_total, b_total, 0, &mut letters, visit);
}

fn descend<F: FnMut(&DyckWord)>(
    slope: Slope,
    a_left: usize,
    b_left: usize,
    height: i64,
    letters: &mut Vec<Letter>,
    visit: &mut F,
) {
    if a_left == 0 && b_left == 0 {
        let word = DyckWord::from_letters(slope, letters.clone())
            .expect("backtracking only builds valid words");
        visit(&word);
        return;
    }
    if a_left > 0 {
        letters.push(Letter::A);
        descend(
            slope,
            a_left - 1,
            b_left,
            height + slope.beta() as i64,
            letters,
            visit,
        );
        letters.pop();
    }
    if b_left > 0 {
        let h = height - slope.alpha() as i64;
        // Only the final letter may land at height 0 with nothing left; any
        // interior prefix must stay nonnegative.
        if h >= 0 {
            letters.push(Letter::B);
            descend(slope, a_left, b_left - 1, h, letters, visit);
            letters.pop();
        }
    }
}

/// Estimated number of candidates the backtracking scan can touch: the
/// unconstrained arrangement count `binom((alpha+beta)n, alpha n)`.
fn candidate_bound(slope: Slope, n: usize) -> BigInt {
    binom(slope.period() * n as u64, slope.alpha() * n as u64)
}

/// Classifies every word of size `n` using word operations only.
pub fn report(slope: Slope, n: usize, budget: u64) -> Result<EnumerationReport, OracleError> {
    if candidate_bound(slope, n) > BigInt::from(budget) {
        return Err(OracleError::BudgetExceeded {
            slope: slope.to_string(),
            n,
            budget,
        });
    }
    let mut total = 0u64;
    let mut factor_free = 0u64;
    let mut strongly_below = 0u64;
    let mut rl_histogram = BTreeMap::new();
    for_each_word(slope, n, &mut |w| {
        total += 1;
        let rl = w.reducibility_level();
        *rl_histogram.entry(rl).or_insert(0) += 1;
        if w.is_factor_free().expect("enumerated words are nonempty") {
            factor_free += 1;
        }
        let heights = w.height_profile();
        if heights[..heights.len() - 1].iter().all(|&h| h > 0) {
            strongly_below += 1;
        }
    });
    debug_assert_eq!(rl_histogram.get(&1).copied().unwrap_or(0), factor_free);
    Ok(EnumerationReport {
        slope,
        n,
        total,
        factor_free,
        strongly_below,
        rl_histogram,
    })
}
