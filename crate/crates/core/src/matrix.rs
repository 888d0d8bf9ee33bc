//! Dense square matrices over a [`Semiring`] and permutations.
//!
//! Indices are 0-based in this API. Text output and error messages are
//! 1-based.
//!
//! Permutation matrices follow the convention `P(i, s(i)) = 1`. With that
//! convention `P_p * P_q = P_{p.then(q)}` where `p.then(q)` applies `p`
//! first, and [`conjugate_by_permutation`] computes `P A P^T`, whose entry
//! `(i, j)` is `A(s(i), s(j))`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::semiring::{Semiring, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    semiring: Semiring,
    n: usize,
    entries: Vec<Value>,
}

impl Matrix {
    fn check_shape(semiring: &Semiring, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::NonPositive("matrix dimension"));
        }
        if semiring.is_degenerate() {
            return Err(Error::Degenerate(semiring.to_string()));
        }
        Ok(())
    }

    pub fn zeros(semiring: &Semiring, n: usize) -> Result<Self> {
        Self::check_shape(semiring, n)?;
        Ok(Matrix {
            entries: alloc::vec![semiring.zero(); n * n],
            semiring: semiring.clone(),
            n,
        })
    }

    pub fn identity(semiring: &Semiring, n: usize) -> Result<Self> {
        let mut m = Self::zeros(semiring, n)?;
        for i in 0..n {
            m.entries[i * n + i] = semiring.one();
        }
        Ok(m)
    }

    pub fn diagonal(semiring: &Semiring, diag: &[Value]) -> Result<Self> {
        let n = diag.len();
        let mut m = Self::zeros(semiring, n)?;
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone())?;
        }
        Ok(m)
    }

    /// Builds a matrix from rows, checking squareness and that every entry
    /// belongs to the semiring.
    pub fn from_rows(semiring: &Semiring, rows: Vec<Vec<Value>>) -> Result<Self> {
        let n = rows.len();
        Self::check_shape(semiring, n)?;
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            for (j, v) in row.into_iter().enumerate() {
                if !semiring.contains(&v) {
                    return Err(Error::InvalidElement {
                        semiring: format!("{semiring} at ({}, {})", i + 1, j + 1),
                        literal: v.to_string(),
                    });
                }
                entries.push(v);
            }
        }
        Ok(Matrix {
            semiring: semiring.clone(),
            n,
            entries,
        })
    }

    pub fn from_fn(
        semiring: &Semiring,
        n: usize,
        mut f: impl FnMut(usize, usize) -> Value,
    ) -> Result<Self> {
        let mut m = Self::zeros(semiring, n)?;
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, f(i, j))?;
            }
        }
        Ok(m)
    }

    /// Row-major entries; `entries.len()` must be `n * n` for some `n`.
    pub fn from_entries(semiring: &Semiring, entries: Vec<Value>) -> Result<Self> {
        let n = (0..=entries.len())
            .find(|k| k * k >= entries.len())
            .unwrap_or(0);
        if n * n != entries.len() {
            return Err(Error::DimensionMismatch {
                left: n * n,
                right: entries.len(),
            });
        }
        let rows = entries.chunks(n.max(1)).map(|r| r.to_vec()).collect();
        Self::from_rows(semiring, rows)
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Value {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Value) -> Result<()> {
        if !self.semiring.contains(&v) {
            return Err(Error::InvalidElement {
                semiring: self.semiring.to_string(),
                literal: v.to_string(),
            });
        }
        self.entries[i * self.n + j] = v;
        Ok(())
    }

    pub fn entries(&self) -> &[Value] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Value]> {
        self.entries.chunks(self.n)
    }

    #[inline]
    pub fn is_nonzero_at(&self, i: usize, j: usize) -> bool {
        !self.semiring.is_zero(self.get(i, j))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| self.semiring.is_zero(v))
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let v = self.get(i, j);
                if i == j {
                    self.semiring.is_one(v)
                } else {
                    self.semiring.is_zero(v)
                }
            })
        })
    }

    /// All entries on or below the diagonal are zero.
    pub fn is_strictly_upper(&self) -> bool {
        (0..self.n).all(|i| (0..=i).all(|j| !self.is_nonzero_at(i, j)))
    }

    /// Position of the first nonzero diagonal entry.
    pub fn first_nonzero_diagonal(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.is_nonzero_at(i, i))
    }

    fn check_compatible(&self, other: &Matrix) -> Result<()> {
        if self.semiring != other.semiring {
            return Err(Error::SemiringMismatch {
                left: self.semiring.to_string(),
                right: other.semiring.to_string(),
            });
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let s = &self.semiring;
        Ok(Matrix {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| s.add(a, b))
                .collect(),
            semiring: s.clone(),
            n: self.n,
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Matrix) -> Matrix {
        let (s, n) = (&self.semiring, self.n);
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = s.zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    if s.is_zero(a) {
                        continue;
                    }
                    let b = other.get(k, j);
                    if s.is_zero(b) {
                        continue;
                    }
                    acc = s.add(&acc, &s.mul(a, b));
                }
                entries.push(acc);
            }
        }
        Matrix {
            semiring: s.clone(),
            n,
            entries,
        }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        Matrix {
            entries: (0..n * n)
                .map(|idx| self.get(idx % n, idx / n).clone())
                .collect(),
            semiring: self.semiring.clone(),
            n,
        }
    }

    /// `A^k` by repeated squaring; `A^0` is the identity.
    pub fn pow(&self, mut k: u64) -> Matrix {
        let mut result: Option<Matrix> = None;
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul_unchecked(&base),
                });
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result.unwrap_or_else(|| {
            Matrix::identity(&self.semiring, self.n).expect("shape checked at construction")
        })
    }

    /// `c * A`, entrywise.
    pub fn scale(&self, c: &Value) -> Matrix {
        let s = &self.semiring;
        Matrix {
            entries: self.entries.iter().map(|v| s.mul(c, v)).collect(),
            semiring: s.clone(),
            n: self.n,
        }
    }

    /// Keeps the entries where `keep(i, j)` holds and zeroes the rest.
    pub fn masked(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Matrix {
        let n = self.n;
        let zero = self.semiring.zero();
        Matrix {
            entries: self
                .entries
                .iter()
                .enumerate()
                .map(|(idx, v)| {
                    if keep(idx / n, idx % n) {
                        v.clone()
                    } else {
                        zero.clone()
                    }
                })
                .collect(),
            semiring: self.semiring.clone(),
            n,
        }
    }
}

/// Rows of entries in literal syntax, separated by single spaces.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// A bijection on `0..n`, stored in one-line notation.
///
/// The derived order is lexicographic on the one-line form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[i]` is the image of `i`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::NonPositive("permutation length"));
        }
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            if x >= n || core::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a bijection on 1..{n}",
                    images.iter().map(|x| x + 1).collect::<Vec<_>>()
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// One-line notation with 1-based images, as printed.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("images are 1-based".into()));
        }
        Self::new(images.iter().map(|x| x - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self` first, then `other`: `i -> other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation lengths differ");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    /// The lexicographically next permutation, if any.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut v = self.images.clone();
        let i = (1..v.len()).rev().find(|&i| v[i - 1] < v[i])? - 1;
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i])?;
        v.swap(i, j);
        v[i + 1..].reverse();
        Some(Permutation { images: v })
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        core::iter::successors(Some(Permutation::identity(n)), |p| p.next_lex())
    }
}

/// One-line notation, 1-based, e.g. `[2 3 1]`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str("]")
    }
}

/// `P(i, p(i)) = 1` and zero elsewhere.
pub fn permutation_matrix(p: &Permutation, semiring: &Semiring) -> Result<Matrix> {
    let mut m = Matrix::zeros(semiring, p.len())?;
    for i in 0..p.len() {
        m.entries[i * p.len() + p.apply(i)] = semiring.one();
    }
    Ok(m)
}

/// `P A P^T` for `P = permutation_matrix(p)`; entry `(i, j)` of the result
/// is `A(p(i), p(j))`.
pub fn conjugate_by_permutation(a: &Matrix, p: &Permutation) -> Result<Matrix> {
    if a.n != p.len() {
        return Err(Error::DimensionMismatch {
            left: a.n,
            right: p.len(),
        });
    }
    let n = a.n;
    Ok(Matrix {
        entries: (0..n * n)
            .map(|idx| a.get(p.apply(idx / n), p.apply(idx % n)).clone())
            .collect(),
        semiring: a.semiring.clone(),
        n,
    })
}
