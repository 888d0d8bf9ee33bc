//! Brute-force ground truth over small finite semirings.
//!
//! Matrices are enumerated by a mixed-radix counter over the entries in
//! row-major order, entry `(1, 1)` most significant, each digit running
//! over the carrier in canonical order. Counter ranges are independent, so
//! an enumeration splits into chunks that can be evaluated separately and
//! merged by summing or concatenating. Budgets are hard refusals.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::invertibility::{is_invertible, OrthogonalDecomposition};
use crate::matrix::Matrix;
use crate::semiring::{Semiring, Value};

pub const DEFAULT_MAX_STATES: u64 = 100_000_000;

/// Largest carrier accepted by [`orth_decomp_search`].
pub const MAX_SEARCH_CARRIER: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Enumerations over more than this many matrices are refused.
    pub max_states: u64,
    /// Number of independent counter ranges.
    pub chunks: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_states: DEFAULT_MAX_STATES,
            chunks: 1,
        }
    }
}

impl EnumerationBudget {
    pub fn with_max_states(max_states: u64) -> Self {
        EnumerationBudget {
            max_states,
            ..Default::default()
        }
    }

    /// `|S|^(n^2)` if it fits the budget.
    pub fn admit(&self, s: &Semiring, n: usize) -> Result<u64> {
        if n == 0 {
            return Err(Error::NonPositive("n"));
        }
        let size = s.carrier_size().ok_or_else(|| Error::Unsupported {
            semiring: s.to_string(),
            operation: "enumeration over an infinite carrier",
        })?;
        if s.is_degenerate() {
            return Err(Error::Degenerate(s.to_string()));
        }
        let states = BigUint::from(size).pow((n * n) as u32);
        match states.to_u64() {
            Some(k) if k <= self.max_states => Ok(k),
            _ => Err(Error::BudgetExceeded {
                required: states.to_string(),
                max: self.max_states,
            }),
        }
    }

    /// Splits `0..total` into `chunks` contiguous ranges.
    pub fn ranges(&self, total: u64) -> Vec<Range<u64>> {
        let chunks = self.chunks.max(1) as u64;
        let step = total.div_ceil(chunks).max(1);
        (0..chunks)
            .map(|c| (c * step).min(total)..((c + 1) * step).min(total))
            .filter(|r| !r.is_empty())
            .collect()
    }
}

/// Walks the matrices with counter values in `range`.
pub fn for_each_matrix(
    s: &Semiring,
    n: usize,
    range: Range<u64>,
    mut f: impl FnMut(&Matrix),
) -> Result<()> {
    let carrier = s.elements()?;
    let radix = carrier.len() as u64;
    let cells = n * n;
    let mut digits = alloc::vec![0usize; cells];
    let mut rest = range.start;
    for d in digits.iter_mut().rev() {
        *d = (rest % radix) as usize;
        rest /= radix;
    }
    let mut m = Matrix::from_fn(s, n, |i, j| carrier[digits[i * n + j]].clone())?;
    for _ in range {
        f(&m);
        for pos in (0..cells).rev() {
            digits[pos] += 1;
            if digits[pos] < carrier.len() {
                m.set(pos / n, pos % n, carrier[digits[pos]].clone())?;
                break;
            }
            digits[pos] = 0;
            m.set(pos / n, pos % n, carrier[0].clone())?;
        }
    }
    Ok(())
}

fn require_power_test(s: &Semiring) -> Result<()> {
    if !s.has_no_nonzero_nilpotents() || !s.is_zerosumfree() {
        return Err(Error::Precondition(format!(
            "{s} is not an antiring without nonzero nilpotent elements"
        )));
    }
    Ok(())
}

pub fn count_nilpotent_in_range(s: &Semiring, n: usize, range: Range<u64>) -> Result<u64> {
    require_power_test(s)?;
    let mut count = 0;
    for_each_matrix(s, n, range, |m| {
        if m.pow(n as u64).is_zero() {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Counts the `n x n` matrices with `A^n = 0` by scanning all of them.
pub fn count_nilpotent_bruteforce(
    s: &Semiring,
    n: usize,
    budget: &EnumerationBudget,
) -> Result<BigUint> {
    let total = budget.admit(s, n)?;
    let mut count = BigUint::default();
    for r in budget.ranges(total) {
        count += count_nilpotent_in_range(s, n, r)?;
    }
    Ok(count)
}

/// All nilpotent matrices, in counter order.
pub fn nilpotent_matrices(
    s: &Semiring,
    n: usize,
    budget: &EnumerationBudget,
) -> Result<Vec<Matrix>> {
    require_power_test(s)?;
    let total = budget.admit(s, n)?;
    let mut out = Vec::new();
    for_each_matrix(s, n, 0..total, |m| {
        if m.pow(n as u64).is_zero() {
            out.push(m.clone());
        }
    })?;
    Ok(out)
}

pub fn enumerate_gl_in_range(s: &Semiring, n: usize, range: Range<u64>) -> Result<Vec<Matrix>> {
    let mut out = Vec::new();
    for_each_matrix(s, n, range, |m| {
        if is_invertible(m) {
            out.push(m.clone());
        }
    })?;
    Ok(out)
}

/// All invertible `n x n` matrices, in counter order.
pub fn enumerate_gl(s: &Semiring, n: usize, budget: &EnumerationBudget) -> Result<Vec<Matrix>> {
    if !s.is_antiring() {
        return Err(Error::Precondition(format!("{s} is not zerosumfree")));
    }
    let total = budget.admit(s, n)?;
    let mut out = Vec::new();
    for r in budget.ranges(total) {
        out.extend(enumerate_gl_in_range(s, n, r)?);
    }
    Ok(out)
}

/// Every orthogonal decomposition of 1, found by checking all sets of
/// nonzero carrier elements. Sorted by length, then by parts.
pub fn orth_decomp_search(s: &Semiring) -> Result<Vec<OrthogonalDecomposition>> {
    match s.carrier_size() {
        Some(k) if k <= MAX_SEARCH_CARRIER as u128 => {}
        _ => {
            return Err(Error::Unsupported {
                semiring: s.to_string(),
                operation: "exhaustive decomposition search beyond 16 elements",
            })
        }
    }
    if s.is_degenerate() {
        return Err(Error::Degenerate(s.to_string()));
    }
    let nonzero: Vec<Value> = s.elements()?.into_iter().filter(|v| !s.is_zero(v)).collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << nonzero.len()) {
        let subset: Vec<&Value> = (0..nonzero.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| &nonzero[i])
            .collect();
        let orthogonal = subset.iter().enumerate().all(|(i, a)| {
            subset[i + 1..].iter().all(|b| s.is_zero(&s.mul(a, b)))
        });
        if orthogonal && s.is_one(&s.sum(subset.iter().copied())) {
            out.push(OrthogonalDecomposition::new(
                s,
                subset.into_iter().cloned().collect(),
            )?);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.parts().cmp(b.parts())));
    Ok(out)
}
