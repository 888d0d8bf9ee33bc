//! The digraph `D(A)` of a matrix and nilpotency.
//!
//! `D(A)` has an edge `(i, j)` exactly when `A(i, j) != 0`. Over an entire
//! antiring `A` is nilpotent iff `D(A)` is acyclic, and the nilpotency index
//! is one more than the longest path of `D(A)`.
//!
//! Nilpotency itself is decided by `A^n = 0`, which is complete over any
//! antiring without nonzero nilpotent elements: if `A^n != 0`, some walk of
//! length `n` has a nonzero product, so it repeats a vertex and contains a
//! closed walk with nonzero product `c`. Every sub-product of a nonzero
//! product is nonzero, `c^k != 0` for all `k`, and zerosumfreeness keeps the
//! corresponding entries of all higher powers of `A` nonzero. Over
//! non-entire antirings the pattern `D(A)` may have cycles while `A` is
//! nilpotent, so only the power test is used there.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::{conjugate_by_permutation, Matrix, Permutation};
use crate::semiring::Semiring;

/// A digraph on vertices `0..n`; loops allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges: BTreeSet<_> = edges.into_iter().collect();
        if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| i >= n || j >= n) {
            return Err(Error::Precondition(format!(
                "edge ({}, {}) outside vertices 1..{n}",
                i + 1,
                j + 1
            )));
        }
        Ok(Digraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Edges `(i, j)` for all `i < j`.
    pub fn transitive_tournament(n: usize) -> Self {
        Digraph {
            n,
            edges: (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        }
    }

    /// Edges `(i, j)` for all `i != j`.
    pub fn complete(n: usize) -> Self {
        Digraph {
            n,
            edges: (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    /// Edge union on the same vertex set.
    pub fn union(&self, other: &Digraph) -> Digraph {
        Digraph {
            n: self.n.max(other.n),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    /// Some path `(u, v), (v, w)` of two edges, loops included.
    pub fn two_path(&self) -> Option<(usize, usize, usize)> {
        self.edges.iter().find_map(|&(u, v)| {
            self.edges
                .range((v, 0)..(v + 1, 0))
                .next()
                .map(|&(_, w)| (u, v, w))
        })
    }
}

/// One `i -> j` line per edge, 1-based, sorted.
impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in &self.edges {
            writeln!(f, "{} -> {}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

pub fn digraph_of(a: &Matrix) -> Digraph {
    let n = a.n();
    Digraph {
        n,
        edges: (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| a.is_nonzero_at(i, j))
            .collect(),
    }
}

/// A vertex order with every edge pointing forward, `None` when `g` has a
/// cycle (a loop counts). Among available vertices the smallest goes first.
///
/// The result maps positions to vertices: `order.apply(k)` is the `k`-th
/// vertex.
pub fn topological_order(g: &Digraph) -> Option<Permutation> {
    let mut indegree = alloc::vec![0usize; g.n];
    for &(_, j) in &g.edges {
        indegree[j] += 1;
    }
    let mut ready: BinaryHeap<Reverse<usize>> = (0..g.n)
        .filter(|&v| indegree[v] == 0)
        .map(Reverse)
        .collect();
    let mut order = Vec::with_capacity(g.n);
    while let Some(Reverse(v)) = ready.pop() {
        order.push(v);
        for &(_, w) in g.edges.range((v, 0)..(v + 1, 0)) {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(Reverse(w));
            }
        }
    }
    if order.len() < g.n {
        return None;
    }
    if g.n == 0 {
        return Some(Permutation::identity(0));
    }
    Some(Permutation::new(order).expect("topological order is a bijection"))
}

pub fn is_acyclic(g: &Digraph) -> bool {
    topological_order(g).is_some()
}

/// Number of edges on a longest directed path.
pub fn longest_path(g: &Digraph) -> Result<usize> {
    let order = topological_order(g).ok_or(Error::Cyclic)?;
    let mut depth = alloc::vec![0usize; g.n];
    for k in 0..g.n {
        let v = order.apply(k);
        for &(_, w) in g.edges.range((v, 0)..(v + 1, 0)) {
            depth[w] = depth[w].max(depth[v] + 1);
        }
    }
    Ok(depth.into_iter().max().unwrap_or(0))
}

fn require_power_test(s: &Semiring) -> Result<()> {
    if !s.has_no_nonzero_nilpotents() {
        return Err(Error::Precondition(format!(
            "{s} has nonzero nilpotent elements"
        )));
    }
    if !s.is_zerosumfree() {
        return Err(Error::Precondition(format!("{s} is not zerosumfree")));
    }
    Ok(())
}

/// `A^n = 0`. Requires an antiring without nonzero nilpotent elements.
pub fn is_nilpotent(a: &Matrix) -> Result<bool> {
    require_power_test(a.semiring())?;
    let nilpotent = a.pow(a.n() as u64).is_zero();
    if a.semiring().is_entire() {
        debug_assert_eq!(nilpotent, is_acyclic(&digraph_of(a)));
    }
    Ok(nilpotent)
}

/// Least `h >= 1` with `A^h = 0`.
pub fn nilpotency_index(a: &Matrix) -> Result<usize> {
    require_power_test(a.semiring())?;
    let mut power = a.clone();
    for h in 1..=a.n() {
        if power.is_zero() {
            if a.semiring().is_entire() {
                debug_assert_eq!(longest_path(&digraph_of(a)).ok(), Some(h - 1));
            }
            return Ok(h);
        }
        power = power.mul_unchecked(a);
    }
    Err(Error::NotNilpotent)
}

/// `(B, p)` with `B = conjugate_by_permutation(A, p)` strictly upper
/// triangular, `p` the topological order of `D(A)`.
pub fn triangularize(a: &Matrix) -> Result<(Matrix, Permutation)> {
    let s = a.semiring();
    if !s.is_entire() {
        return Err(Error::Precondition(format!("{s} is not entire")));
    }
    if !is_nilpotent(a)? {
        return Err(Error::NotNilpotent);
    }
    let order = topological_order(&digraph_of(a)).ok_or(Error::NotNilpotent)?;
    let b = conjugate_by_permutation(a, &order)?;
    debug_assert!(b.is_strictly_upper());
    Ok((b, order))
}
