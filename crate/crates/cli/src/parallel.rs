//! Brute-force enumeration split across threads. Results are identical to
//! the sequential oracles: counter ranges are disjoint and merged in order.

use antiring::oracle::{count_nilpotent_in_range, enumerate_gl_in_range, EnumerationBudget};
use antiring::{Error, Matrix, Result, Semiring};
use num_bigint::BigUint;
use rayon::prelude::*;

fn split(budget: &EnumerationBudget, total: u64) -> Vec<std::ops::Range<u64>> {
    EnumerationBudget {
        chunks: budget.chunks.max(rayon::current_num_threads() * 4),
        ..*budget
    }
    .ranges(total)
}

pub fn count_nilpotent_bruteforce(
    s: &Semiring,
    n: usize,
    budget: &EnumerationBudget,
) -> Result<BigUint> {
    let total = budget.admit(s, n)?;
    split(budget, total)
        .into_par_iter()
        .map(|r| count_nilpotent_in_range(s, n, r).map(BigUint::from))
        .try_reduce(BigUint::default, |a, b| Ok(a + b))
}

pub fn enumerate_gl(s: &Semiring, n: usize, budget: &EnumerationBudget) -> Result<Vec<Matrix>> {
    if !s.is_antiring() {
        return Err(Error::Precondition(format!("{s} is not zerosumfree")));
    }
    let total = budget.admit(s, n)?;
    let parts = split(budget, total)
        .into_par_iter()
        .map(|r| enumerate_gl_in_range(s, n, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().flatten().collect())
}
