//! Invertible matrices over commutative antirings.
//!
//! A matrix `A` is invertible iff `A A^T` and `A^T A` are diagonal with unit
//! diagonal entries. Every invertible `A` factors as
//!
//! ```text
//! A = D * sum_s a_s P_s
//! ```
//!
//! with `D = Diag(l_1, .., l_n)`, `l_i` the `i`-th row sum, and coefficients
//! `a_s = L^{-1} prod_i A(i, s(i))`, `L = prod_i l_i`. The nonzero `a_s` form
//! an orthogonal decomposition of 1. Over a finite antiring whose maximal
//! orthogonal decomposition of 1 has atoms `e_1, .., e_k`, the map
//! `A -> (diag(D), (t_1, .., t_k))` with `e_t A = e_t D P_{t_t}` identifies
//! `GL_n(S)` with `U(S)^n x| (S_n)^k`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, NonInvertibility, Result};
use crate::matrix::{Matrix, Permutation};
use crate::semiring::{Semiring, Value};

/// Nonzero elements `a_1, .., a_r` with `sum a_i = 1` and `a_i a_j = 0` for
/// `i != j`. Parts are kept in canonical carrier order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalDecomposition {
    semiring: Semiring,
    parts: Vec<Value>,
}

impl OrthogonalDecomposition {
    pub fn new(semiring: &Semiring, mut parts: Vec<Value>) -> Result<Self> {
        let s = semiring;
        let bad = |msg: &str| Err(Error::InvalidDecomposition(msg.into()));
        if parts.is_empty() {
            return bad("no parts");
        }
        if let Some(v) = parts.iter().find(|v| !s.contains(v)) {
            return Err(Error::InvalidElement {
                semiring: s.to_string(),
                literal: v.to_string(),
            });
        }
        if parts.iter().any(|v| s.is_zero(v)) {
            return bad("zero part");
        }
        if !s.is_one(&s.sum(&parts)) {
            return bad("parts do not sum to 1");
        }
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                if !s.is_zero(&s.mul(a, b)) {
                    return Err(Error::InvalidDecomposition(format!(
                        "parts {a} and {b} are not orthogonal"
                    )));
                }
            }
            // a = a * sum(parts) = a^2
            if s.mul(a, a) != *a {
                return Err(Error::InvalidDecomposition(format!("part {a} is not idempotent")));
            }
        }
        parts.sort();
        Ok(OrthogonalDecomposition {
            semiring: s.clone(),
            parts,
        })
    }

    pub fn parts(&self) -> &[Value] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    /// Whether `x` equals the sum of the parts it meets, each of which it
    /// absorbs (`part * x = part`).
    pub fn expresses(&self, x: &Value) -> bool {
        let s = &self.semiring;
        let mut sum = s.zero();
        for p in &self.parts {
            let px = s.mul(p, x);
            if s.is_zero(&px) {
                continue;
            }
            if px != *p {
                return false;
            }
            sum = s.add(&sum, p);
        }
        sum == *x
    }

    /// Every part of `coarser` is a sum of parts of `self`.
    pub fn refines(&self, coarser: &OrthogonalDecomposition) -> bool {
        coarser.parts.iter().all(|x| self.expresses(x))
    }
}

/// `A = Diag(diag) * sum coeff * P_perm`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertibleFactorization {
    semiring: Semiring,
    diag: Vec<Value>,
    terms: Vec<(Value, Permutation)>,
}

impl InvertibleFactorization {
    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    /// Diagonal of `D`; every entry is a unit.
    pub fn diag(&self) -> &[Value] {
        &self.diag
    }

    /// Terms with nonzero coefficients, sorted by permutation in
    /// lexicographic one-line order.
    pub fn terms(&self) -> &[(Value, Permutation)] {
        &self.terms
    }

    pub fn coefficients(&self) -> Result<OrthogonalDecomposition> {
        OrthogonalDecomposition::new(
            &self.semiring,
            self.terms.iter().map(|(c, _)| c.clone()).collect(),
        )
    }

    /// `D * sum coeff * P_perm`.
    pub fn reconstruct(&self) -> Result<Matrix> {
        let s = &self.semiring;
        let n = self.diag.len();
        let mut out = Matrix::zeros(s, n)?;
        for (c, p) in &self.terms {
            for i in 0..n {
                let j = p.apply(i);
                let v = s.add(out.get(i, j), &s.mul(&self.diag[i], c));
                out.set(i, j, v)?;
            }
        }
        Ok(out)
    }
}

/// Checks the invertibility criterion and reports the first violated
/// condition: the off-diagonal entries of `A A^T`, then `A^T A`, must vanish
/// and their diagonal entries must be units.
///
/// The criterion characterizes invertibility over commutative antirings.
pub fn invertibility_defect(a: &Matrix) -> Option<NonInvertibility> {
    let s = a.semiring();
    let at = a.transpose();
    for (name, prod) in [("A A^T", a.mul_unchecked(&at)), ("A^T A", at.mul_unchecked(a))] {
        for i in 0..a.n() {
            for j in 0..a.n() {
                let v = prod.get(i, j);
                if i != j && !s.is_zero(v) {
                    return Some(NonInvertibility::OffDiagonal {
                        product: name,
                        row: i,
                        col: j,
                        entry: v.to_string(),
                    });
                }
            }
        }
        for i in 0..a.n() {
            let v = prod.get(i, i);
            if !s.is_unit(v) {
                return Some(NonInvertibility::NonUnitDiagonal {
                    product: name,
                    index: i,
                    entry: v.to_string(),
                });
            }
        }
    }
    None
}

pub fn is_invertible(a: &Matrix) -> bool {
    invertibility_defect(a).is_none()
}

fn require_antiring(s: &Semiring) -> Result<()> {
    if s.is_antiring() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{s} is not zerosumfree")))
    }
}

/// Products `prod_i A(i, s(i))` over all permutations `s` for which the
/// product is nonzero. Rows only branch on their nonzero columns and a
/// branch is cut as soon as its partial product vanishes.
fn nonzero_diagonal_products(a: &Matrix) -> Vec<(Permutation, Value)> {
    fn go(
        a: &Matrix,
        row: usize,
        used: &mut Vec<bool>,
        images: &mut Vec<usize>,
        acc: Value,
        out: &mut Vec<(Permutation, Value)>,
    ) {
        let s = a.semiring();
        if row == a.n() {
            out.push((Permutation::new(images.clone()).expect("bijection"), acc));
            return;
        }
        for col in 0..a.n() {
            if used[col] || !a.is_nonzero_at(row, col) {
                continue;
            }
            let next = s.mul(&acc, a.get(row, col));
            if s.is_zero(&next) {
                continue;
            }
            used[col] = true;
            images.push(col);
            go(a, row + 1, used, images, next, out);
            images.pop();
            used[col] = false;
        }
    }
    let mut out = Vec::new();
    let mut used = alloc::vec![false; a.n()];
    let mut images = Vec::with_capacity(a.n());
    go(a, 0, &mut used, &mut images, a.semiring().one(), &mut out);
    out
}

/// Computes `D` and the coefficients `a_s` of an invertible matrix.
///
/// The result is checked: its coefficients must form an orthogonal
/// decomposition of 1 and it must reconstruct `a` exactly.
pub fn factorize_invertible(a: &Matrix) -> Result<InvertibleFactorization> {
    let s = a.semiring();
    require_antiring(s)?;
    if let Some(defect) = invertibility_defect(a) {
        return Err(Error::NotInvertible(defect));
    }
    let diag: Vec<Value> = a.rows().map(|row| s.sum(row)).collect();
    let big_l = s.product(&diag);
    let l_inv = s.inverse(&big_l).ok_or(Error::FactorizationMismatch)?;

    let mut terms: Vec<(Value, Permutation)> = nonzero_diagonal_products(a)
        .into_iter()
        .map(|(p, prod)| (s.mul(&l_inv, &prod), p))
        .filter(|(c, _)| !s.is_zero(c))
        .collect();
    terms.sort_by(|x, y| x.1.cmp(&y.1));

    let f = InvertibleFactorization {
        semiring: s.clone(),
        diag,
        terms,
    };
    f.coefficients()
        .map_err(|_| Error::FactorizationMismatch)?;
    if f.reconstruct()? != *a {
        return Err(Error::FactorizationMismatch);
    }
    Ok(f)
}

/// `B = sum_s a_s Diag(d_{s^-1(1)}^{-1}, .., d_{s^-1(n)}^{-1}) P_s^T`,
/// verified to satisfy `AB = BA = I`.
pub fn invert(a: &Matrix) -> Result<Matrix> {
    let f = factorize_invertible(a)?;
    let s = a.semiring();
    let n = a.n();
    let inv_diag: Vec<Value> = f
        .diag
        .iter()
        .map(|d| s.inverse(d).ok_or(Error::FactorizationMismatch))
        .collect::<Result<_>>()?;
    let mut b = Matrix::zeros(s, n)?;
    for (c, p) in &f.terms {
        let pinv = p.inverse();
        // Diag(..) P^T has its row-i entry in column p^-1(i).
        for i in 0..n {
            let j = pinv.apply(i);
            let v = s.add(b.get(i, j), &s.mul(c, &inv_diag[j]));
            b.set(i, j, v)?;
        }
    }
    if !a.mul_unchecked(&b).is_identity() || !b.mul_unchecked(a).is_identity() {
        return Err(Error::FactorizationMismatch);
    }
    Ok(b)
}

/// Carrier size up to which table semirings get an exhaustive search for
/// the maximal decomposition.
pub const EXHAUSTIVE_DECOMPOSITION_LIMIT: usize = 16;

/// The orthogonal decomposition of 1 of maximal length. Any other
/// orthogonal decomposition of 1 has parts that are sums of its parts, so it
/// is unique as a set.
///
/// Built-in lattices have closed forms: chains (and boolean) give `{1}`,
/// `powerset(m)` gives the `m` singletons. Table semirings are refined
/// greedily by splitting parts into orthogonal idempotent pairs, then
/// confirmed by exhaustive search when the carrier has at most
/// [`EXHAUSTIVE_DECOMPOSITION_LIMIT`] elements.
pub fn max_orthogonal_decomposition(s: &Semiring) -> Result<OrthogonalDecomposition> {
    if !s.is_finite() {
        return Err(Error::Unsupported {
            semiring: s.to_string(),
            operation: "maximal orthogonal decomposition of an infinite carrier",
        });
    }
    if s.is_degenerate() {
        return Err(Error::Degenerate(s.to_string()));
    }
    match s {
        Semiring::Boolean | Semiring::Chain(_) => OrthogonalDecomposition::new(s, alloc::vec![s.one()]),
        Semiring::Powerset(m) => {
            OrthogonalDecomposition::new(s, (0..*m).map(|k| Value::Set(1 << k)).collect())
        }
        Semiring::Table(t) => {
            let idempotents = s
                .idempotents()?
                .into_iter()
                .filter(|x| !s.is_zero(x))
                .collect::<Vec<_>>();
            let mut best = greedy_refinement(s, &idempotents);
            if t.tables().size() <= EXHAUSTIVE_DECOMPOSITION_LIMIT {
                let exhaustive = longest_decomposition(s, &idempotents);
                if exhaustive.len() > best.len() {
                    best = exhaustive;
                }
            }
            OrthogonalDecomposition::new(s, best)
        }
        Semiring::Naturals | Semiring::Tropical => unreachable!("infinite carriers handled above"),
    }
}

fn greedy_refinement(s: &Semiring, idempotents: &[Value]) -> Vec<Value> {
    let mut parts = alloc::vec![s.one()];
    'refine: loop {
        for (pos, p) in parts.iter().enumerate() {
            for (i, x) in idempotents.iter().enumerate() {
                if s.mul(x, p) != *x || x == p {
                    continue;
                }
                for y in &idempotents[i + 1..] {
                    if s.mul(y, p) == *y
                        && y != p
                        && s.is_zero(&s.mul(x, y))
                        && s.add(x, y) == *p
                    {
                        let (x, y) = (x.clone(), y.clone());
                        parts.remove(pos);
                        parts.push(x);
                        parts.push(y);
                        continue 'refine;
                    }
                }
            }
        }
        return parts;
    }
}

fn longest_decomposition(s: &Semiring, idempotents: &[Value]) -> Vec<Value> {
    fn go(
        s: &Semiring,
        cand: &[Value],
        start: usize,
        chosen: &mut Vec<Value>,
        sum: Value,
        best: &mut Vec<Value>,
    ) {
        if s.is_one(&sum) && chosen.len() > best.len() {
            *best = chosen.clone();
        }
        for i in start..cand.len() {
            let x = &cand[i];
            if chosen.iter().all(|c| s.is_zero(&s.mul(c, x))) {
                chosen.push(x.clone());
                let next = s.add(&sum, x);
                go(s, cand, i + 1, chosen, next, best);
                chosen.pop();
            }
        }
    }
    let mut best = Vec::new();
    go(s, idempotents, 0, &mut Vec::new(), s.zero(), &mut best);
    best
}

/// Coordinates of an invertible matrix in `U(S)^n x| (S_n)^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlCoordinates {
    /// Atoms of the maximal orthogonal decomposition, in canonical order.
    pub atoms: Vec<Value>,
    /// Diagonal of `D`.
    pub units: Vec<Value>,
    /// `perms[t]` is the permutation carried by `atoms[t]`.
    pub perms: Vec<Permutation>,
}

/// Splits an invertible matrix along the atoms of the maximal orthogonal
/// decomposition: `e_t A = e_t D P_{perms[t]}`.
pub fn gl_encode(a: &Matrix) -> Result<GlCoordinates> {
    let s = a.semiring();
    let atoms = max_orthogonal_decomposition(s)?;
    let f = factorize_invertible(a)?;
    let mut perms = Vec::with_capacity(atoms.len());
    for e in atoms.parts() {
        // every coefficient is a sum of atoms, so e lies under exactly one
        let (_, p) = f
            .terms
            .iter()
            .find(|(c, _)| s.mul(e, c) == *e)
            .ok_or(Error::FactorizationMismatch)?;
        perms.push(p.clone());
    }
    Ok(GlCoordinates {
        atoms: atoms.parts().to_vec(),
        units: f.diag,
        perms,
    })
}

/// Rebuilds `D * sum_t e_t P_{perms[t]}` after validating the coordinates
/// against the maximal decomposition of `s`.
pub fn gl_decode(c: &GlCoordinates, s: &Semiring) -> Result<Matrix> {
    let atoms = max_orthogonal_decomposition(s)?;
    if atoms.parts() != c.atoms.as_slice() {
        return Err(Error::InvalidCoordinates(
            "atoms differ from the maximal orthogonal decomposition".into(),
        ));
    }
    if c.perms.len() != atoms.len() {
        return Err(Error::InvalidCoordinates(format!(
            "expected {} permutations, got {}",
            atoms.len(),
            c.perms.len()
        )));
    }
    let n = c.units.len();
    if let Some(p) = c.perms.iter().find(|p| p.len() != n) {
        return Err(Error::InvalidCoordinates(format!(
            "permutation {p} does not act on {n} points"
        )));
    }
    if let Some((i, u)) = c
        .units
        .iter()
        .enumerate()
        .find(|(_, u)| !s.contains(u) || !s.is_unit(u))
    {
        return Err(Error::InvalidCoordinates(format!(
            "entry {} = {u} is not a unit",
            i + 1
        )));
    }
    let mut out = Matrix::zeros(s, n)?;
    for (e, p) in c.atoms.iter().zip(&c.perms) {
        for i in 0..n {
            let j = p.apply(i);
            let v = s.add(out.get(i, j), &s.mul(&c.units[i], e));
            out.set(i, j, v)?;
        }
    }
    Ok(out)
}
