//! Counting nilpotent matrices over finite entire antirings.
//!
//! Over an entire antiring a matrix is nilpotent iff its digraph is
//! acyclic, and all matrices with a given pattern of `r` nonzero entries
//! number `(q - 1)^r`. So the nilpotent `n x n` matrices over an antiring
//! with `q` elements number `A_n(q - 1)`, where
//! `A_n(x) = sum_r A_{n,r} x^r` counts labeled acyclic digraphs on `n`
//! vertices by edges. Two independent routes compute it:
//!
//! - the recurrence
//!   `A_n(x) = sum_{m=1}^n (-1)^{m-1} C(n, m) (1+x)^{m(n-m)} A_{n-m}(x)`,
//! - the closed form as a sum over partitions `mu` of `n` into `k` parts,
//!   `(-1)^{n-k} * n!/prod(mu_i!) * k!/prod(r_j!) * (1+x)^{(n^2 - sum mu_i^2)/2}`,
//!   where `r_j` are the multiplicities of the distinct part sizes. The factor
//!   `k!/prod(r_j!)` counts the distinct orderings of the parts; the sum is
//!   really over compositions of `n`.
//!
//! For reference, `A_4(q-1) = 24q^6 - 36q^5 + 6q^4 + 8q^3 - 1` (543 at
//! `q = 2`).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients; `coeffs[d]` is
/// the coefficient of degree `d`, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `(1 + x)^e`.
    pub fn one_plus_x_pow(e: usize) -> Self {
        let mut coeffs = Vec::with_capacity(e + 1);
        let mut b = BigInt::one();
        for k in 0..=e {
            coeffs.push(b.clone());
            b = b * BigInt::from(e - k) / BigInt::from(k + 1);
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, a| acc * x + a)
    }

    /// `p(y + c)` as a polynomial in `y`.
    pub fn shift(&self, c: &BigInt) -> Self {
        // Horner in the ring of polynomials: p = (..(a_d)(y+c) + a_{d-1})..
        let linear = IntPolynomial::new(vec![c.clone(), BigInt::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPolynomial::zero(), |acc, a| {
                &(&acc * &linear) + &IntPolynomial::constant(a.clone())
            })
    }

    /// Nonzero `(degree, coefficient)` pairs, highest degree first.
    pub fn terms_descending(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// Writes `24x^6 - 36x^5 + ... - 1` in the variable `x`; see
/// [`IntPolynomial::display_in`] for other names.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("x").fmt(f)
    }
}

impl IntPolynomial {
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(&'a IntPolynomial, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut first = true;
                for (d, c) in self.0.terms_descending() {
                    let mag = c.abs();
                    match (first, c.sign() == Sign::Minus) {
                        (true, true) => f.write_str("-")?,
                        (true, false) => {}
                        (false, true) => f.write_str(" - ")?,
                        (false, false) => f.write_str(" + ")?,
                    }
                    first = false;
                    if d == 0 || !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    match d {
                        0 => {}
                        1 => f.write_str(self.1)?,
                        _ => write!(f, "{}^{d}", self.1)?,
                    }
                }
                if first {
                    f.write_str("0")?;
                }
                Ok(())
            }
        }
        D(self, var)
    }
}

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// All partitions of `n` in reverse-lexicographic order:
/// `(3), (2, 1), (1, 1, 1)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            cur.push(part);
            go(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `A_0, .., A_n` by the recurrence, each step reusing the earlier ones.
pub fn acyclic_gf_table(n: usize) -> Vec<IntPolynomial> {
    let mut table = vec![IntPolynomial::constant(1)];
    for size in 1..=n {
        let mut acc = IntPolynomial::zero();
        for m in 1..=size {
            let term = &IntPolynomial::one_plus_x_pow(m * (size - m)) * &table[size - m];
            let term = term.scale(&binomial(size, m));
            acc = if m % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        table.push(acc);
    }
    table
}

/// Generating polynomial of labeled acyclic digraphs on `n` vertices by
/// number of edges, via the recurrence.
pub fn acyclic_gf_recurrence(n: usize) -> IntPolynomial {
    acyclic_gf_table(n).pop().expect("table holds A_0..A_n")
}

/// The same polynomial via the closed-form sum over partitions of `n`.
pub fn acyclic_gf_explicit(n: usize) -> IntPolynomial {
    let n_fact = factorial(n);
    let mut acc = IntPolynomial::zero();
    for mu in partitions(n) {
        let k = mu.len();
        let mut weight = n_fact.clone();
        for &part in mu.parts() {
            weight /= factorial(part);
        }
        // distinct orderings of the parts
        weight *= factorial(k);
        for run in mu.parts().chunk_by(|a, b| a == b) {
            weight /= factorial(run.len());
        }
        let squares: usize = mu.parts().iter().map(|p| p * p).sum();
        let term = IntPolynomial::one_plus_x_pow((n * n - squares) / 2).scale(&weight);
        acc = if (n - k).is_multiple_of(2) { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `A_n(q - 1)` as a polynomial in `q`.
pub fn nilpotent_count_polynomial(n: usize) -> IntPolynomial {
    acyclic_gf_recurrence(n).shift(&BigInt::from(-1))
}

/// Number of nilpotent `n x n` matrices over a finite entire commutative
/// antiring with `q` elements.
pub fn count_nilpotent(n: usize, q: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::NonPositive("n"));
    }
    if q == 0 {
        return Err(Error::NonPositive("q"));
    }
    let value = acyclic_gf_recurrence(n).eval(&BigInt::from(q - 1));
    Ok(value
        .to_biguint()
        .expect("counts of acyclic digraphs are nonnegative"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn partition_lists() {
        let p3: Vec<Vec<usize>> = partitions(3).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(p3, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(0), vec![Partition::new(vec![]).unwrap()]);
        assert_eq!(partitions(6).len(), 11);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn small_generating_polynomials() {
        assert_eq!(acyclic_gf_recurrence(0), poly(&[1]));
        assert_eq!(acyclic_gf_recurrence(1), poly(&[1]));
        assert_eq!(acyclic_gf_recurrence(2), poly(&[1, 2]));
        assert_eq!(acyclic_gf_explicit(1), poly(&[1]));
        assert_eq!(acyclic_gf_explicit(3), acyclic_gf_recurrence(3));
    }

    #[test]
    fn q_substituted_forms() {
        assert_eq!(nilpotent_count_polynomial(2), poly(&[-1, 2]));
        assert_eq!(nilpotent_count_polynomial(3), poly(&[1, 0, -6, 6]));
        assert_eq!(nilpotent_count_polynomial(4), poly(&[-1, 0, 0, 8, 6, -36, 24]));
        assert_eq!(
            nilpotent_count_polynomial(5),
            poly(&[1, 0, 0, 0, -10, 0, -20, 60, 90, -240, 120])
        );
        assert_eq!(
            std::format!("{}", nilpotent_count_polynomial(3).display_in("q")),
            "6q^3 - 6q^2 + 1"
        );
    }

    #[test]
    fn counts() {
        assert_eq!(count_nilpotent(2, 3).unwrap(), BigUint::from(5u32));
        assert_eq!(count_nilpotent(3, 3).unwrap(), BigUint::from(109u32));
        assert_eq!(count_nilpotent(2, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(count_nilpotent(4, 2).unwrap(), BigUint::from(543u32));
        assert_eq!(
            acyclic_gf_explicit(5).eval(&BigInt::from(1)),
            BigInt::from(29281)
        );
        assert!(count_nilpotent(2, 0).is_err());
        assert!(count_nilpotent(0, 2).is_err());
    }

    #[test]
    fn polynomial_arithmetic() {
        let p = poly(&[1, 2, 3]);
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(17));
        assert_eq!(p.shift(&BigInt::from(1)), poly(&[6, 8, 3]));
        assert_eq!(&p - &p, IntPolynomial::zero());
        assert_eq!(IntPolynomial::one_plus_x_pow(3), poly(&[1, 3, 3, 1]));
        assert_eq!(std::format!("{}", poly(&[-1, 0, -1])), "-x^2 - 1");
        assert_eq!(std::format!("{}", IntPolynomial::zero()), "0");
        assert_eq!(IntPolynomial::zero().degree(), None);
    }
}
