//! Square-zero decompositions and path-incidence-free arc colorings.
//!
//! An arc coloring is path-incidence-free when no vertex has an in-edge and
//! an out-edge of the same color. Splitting a matrix along the color classes
//! of such a coloring of (a supergraph of) its digraph yields summands
//! without two-edge paths, hence `B^2 = 0`: every term of `B^2(u, w)` has a
//! zero factor.
//!
//! - Transitive tournaments on `n` vertices need exactly `ceil(log2 n)`
//!   colors; [`tournament_coloring`] colors `(i, j)` by the highest bit in
//!   which `i - 1` and `j - 1` differ.
//! - Complete digraphs need exactly `N(n)` colors, the least `N` with
//!   `C(N, ceil(N/2)) >= n`; [`complete_digraph_coloring`] gives each vertex
//!   its own `ceil(N/2)`-subset of colors.
//!
//! `C(k, ceil(k/2))` grows like `2^k / sqrt(k)`, so [`n_max`] is roughly that
//! large; only the exact value is computed here.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::{conjugate_by_permutation, Matrix};
use crate::nilpotency::{digraph_of, triangularize, Digraph};

/// Colors are `0..count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    digraph: Digraph,
    colors: BTreeMap<(usize, usize), usize>,
    count: usize,
}

impl EdgeColoring {
    /// Checks that exactly the edges of `digraph` are colored, with colors
    /// below `count`, and that the coloring is path-incidence-free.
    pub fn new(
        digraph: Digraph,
        colors: BTreeMap<(usize, usize), usize>,
        count: usize,
    ) -> Result<Self> {
        if colors.len() != digraph.edge_count()
            || colors.keys().any(|&(i, j)| !digraph.has_edge(i, j))
        {
            return Err(Error::InvalidColoring(
                "colored edges differ from the digraph".into(),
            ));
        }
        if let Some((&(i, j), &c)) = colors.iter().find(|(_, &c)| c >= count) {
            return Err(Error::InvalidColoring(format!(
                "edge ({}, {}) has color {} of {count}",
                i + 1,
                j + 1,
                c + 1
            )));
        }
        let coloring = EdgeColoring {
            digraph,
            colors,
            count,
        };
        if let Some(((a, b), (c, d))) = coloring.conflict() {
            return Err(Error::InvalidColoring(format!(
                "edges ({}, {}) and ({}, {}) share a color at vertex {}",
                a + 1,
                b + 1,
                c + 1,
                d + 1,
                b + 1
            )));
        }
        Ok(coloring)
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn color(&self, i: usize, j: usize) -> Option<usize> {
        self.colors.get(&(i, j)).copied()
    }

    pub fn colors(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.colors
    }

    /// An in-edge `(u, v)` and out-edge `(v, w)` of equal color, found by
    /// scanning every vertex. A loop conflicts with itself.
    pub fn conflict(&self) -> Option<((usize, usize), (usize, usize))> {
        for (&(u, v), &c) in &self.colors {
            let out = self
                .colors
                .range((v, 0)..(v + 1, 0))
                .find(|(_, &k)| k == c);
            if let Some((&e, _)) = out {
                return Some(((u, v), e));
            }
        }
        None
    }

    pub fn is_path_incidence_free(&self) -> bool {
        self.conflict().is_none()
    }

    /// Edges of each color, colors ascending.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut classes = alloc::vec![Vec::new(); self.count];
        for (&e, &c) in &self.colors {
            classes[c].push(e);
        }
        classes
    }
}

/// `ceil(log2 n)`, with `ceil(log2 1) = 0`.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Colors the transitive tournament on `n` vertices with `ceil(log2 n)`
/// colors: edge `(i, j)`, `i < j`, gets the highest bit where `i` and `j`
/// differ (0-based labels). At that bit the tail has 0 and the head has 1.
pub fn tournament_coloring(n: usize) -> Result<EdgeColoring> {
    if n == 0 {
        return Err(Error::NonPositive("n"));
    }
    let g = Digraph::transitive_tournament(n);
    let colors = g
        .edges()
        .iter()
        .map(|&(i, j)| ((i, j), (usize::BITS - 1 - (i ^ j).leading_zeros()) as usize))
        .collect();
    EdgeColoring::new(g, colors, ceil_log2(n))
}

/// `C(k, ceil(k/2))`, the largest dimension whose trace-zero matrices split
/// into `k` square-zero summands.
pub fn n_max(k: usize) -> BigUint {
    binomial(k, k.div_ceil(2))
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut b = BigUint::one();
    for i in 0..k {
        b = b * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    b
}

/// `N(n)`: the least `N` with `C(N, ceil(N/2)) >= n`.
pub fn capacity(n: usize) -> usize {
    let target = BigUint::from(n);
    (0..).find(|&k| n_max(k) >= target).expect("central binomials are unbounded")
}

/// The first `count` subsets of `0..universe` of size `k`, in
/// lexicographic order.
fn lex_subsets(universe: usize, k: usize, count: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(count);
    let mut cur: Vec<usize> = (0..k).collect();
    while out.len() < count {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < universe - k + i) else {
            break;
        };
        cur[i] += 1;
        for t in i + 1..k {
            cur[t] = cur[t - 1] + 1;
        }
    }
    out
}

/// Colors the complete digraph on `n` vertices with `N(n)` colors. Vertex
/// `i` receives the `i`-th `ceil(N/2)`-subset `S_i` of the colors in
/// lexicographic order and `(i, j)` gets the smallest color in
/// `S_i \ S_j`. A shared color on `(i, j)` and `(j, k)` would have to lie
/// both outside and inside `S_j`.
pub fn complete_digraph_coloring(n: usize) -> Result<EdgeColoring> {
    if n == 0 {
        return Err(Error::NonPositive("n"));
    }
    let big_n = capacity(n);
    let subsets = lex_subsets(big_n, big_n.div_ceil(2), n);
    debug_assert_eq!(subsets.len(), n);
    let g = Digraph::complete(n);
    let colors = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let c = *subsets[i]
                .iter()
                .find(|c| !subsets[j].contains(c))
                .expect("distinct subsets of equal size");
            ((i, j), c)
        })
        .collect();
    EdgeColoring::new(g, colors, big_n)
}

/// Summands `B_1, .., B_r` with `B_i^2 = 0` and `sum B_i = A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareZeroDecomposition {
    summands: Vec<Matrix>,
}

impl SquareZeroDecomposition {
    /// Validates both invariants against `source`.
    pub fn new(source: &Matrix, summands: Vec<Matrix>) -> Result<Self> {
        let mut total = Matrix::zeros(source.semiring(), source.n())?;
        for (k, b) in summands.iter().enumerate() {
            total = total.add(b)?;
            if !b.mul(b)?.is_zero() {
                return Err(Error::InvalidDecomposition(format!(
                    "summand {} does not square to zero",
                    k + 1
                )));
            }
        }
        if total != *source {
            return Err(Error::InvalidDecomposition(
                "summands do not add up to the matrix".into(),
            ));
        }
        Ok(SquareZeroDecomposition { summands })
    }

    pub fn summands(&self) -> &[Matrix] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn into_summands(self) -> Vec<Matrix> {
        self.summands
    }
}

/// One summand per color class with nonzero support; empty classes are
/// dropped.
fn split_by_coloring(a: &Matrix, coloring: &EdgeColoring) -> Vec<Matrix> {
    (0..coloring.count())
        .map(|c| a.masked(|i, j| coloring.color(i, j) == Some(c)))
        .filter(|b| !b.is_zero())
        .collect()
}

/// Writes a nilpotent matrix over an entire antiring as a sum of at most
/// `ceil(log2 n)` square-zero matrices: triangularize, split along the
/// tournament coloring, conjugate back.
pub fn decompose_nilpotent(a: &Matrix) -> Result<SquareZeroDecomposition> {
    let (b, order) = triangularize(a)?;
    let coloring = tournament_coloring(a.n())?;
    let back = order.inverse();
    let summands = split_by_coloring(&b, &coloring)
        .iter()
        .map(|part| conjugate_by_permutation(part, &back))
        .collect::<Result<Vec<_>>>()?;
    SquareZeroDecomposition::new(a, summands)
}

/// Writes a matrix with zero diagonal as a sum of at most `N(n)`
/// square-zero matrices along the complete-digraph coloring. Works over
/// non-entire antirings.
pub fn decompose_trace_zero(a: &Matrix) -> Result<SquareZeroDecomposition> {
    let s = a.semiring();
    if !s.has_no_nonzero_nilpotents() || !s.is_zerosumfree() {
        return Err(Error::Precondition(format!(
            "{s} is not an antiring without nonzero nilpotent elements"
        )));
    }
    if let Some(i) = a.first_nonzero_diagonal() {
        return Err(Error::NonZeroDiagonal(i));
    }
    let coloring = complete_digraph_coloring(a.n())?;
    SquareZeroDecomposition::new(a, split_by_coloring(a, &coloring))
}

/// Upper bound on `colors^edges` explored by [`min_coloring_search`].
pub const SEARCH_LIMIT: u64 = 100_000_000;

/// A path-incidence-free coloring of `g` with at most `colors` colors, or
/// `None` if there is none.
///
/// Backtracks over edges in sorted order; each edge takes a color already in
/// use or the next fresh one, so the result is the first solution in that
/// canonical order. Since a coloring never needs more colors than edges, the
/// search space is `min(colors, |E|)^|E|`; it is refused above
/// [`SEARCH_LIMIT`].
pub fn min_coloring_search(g: &Digraph, colors: usize) -> Result<Option<EdgeColoring>> {
    let edges: Vec<(usize, usize)> = g.edges().iter().copied().collect();
    let c = colors.min(edges.len());
    let space = (c as u128).checked_pow(edges.len() as u32);
    if space.is_none_or(|s| s > SEARCH_LIMIT as u128) {
        return Err(Error::SearchTooLarge {
            required: match space {
                Some(s) => format!("{s}"),
                None => format!("{c}^{}", edges.len()),
            },
            max: SEARCH_LIMIT,
        });
    }

    struct Search<'a> {
        edges: &'a [(usize, usize)],
        limit: usize,
        in_colors: Vec<Vec<u32>>,
        out_colors: Vec<Vec<u32>>,
        assigned: Vec<usize>,
    }

    impl Search<'_> {
        fn go(&mut self, k: usize, used: usize) -> bool {
            if k == self.edges.len() {
                return true;
            }
            let (u, v) = self.edges[k];
            for color in 0..(used + 1).min(self.limit) {
                // (u, v) leaves u and enters v
                let clash = self.in_colors[u][color] > 0
                    || self.out_colors[v][color] > 0
                    || u == v;
                if clash {
                    continue;
                }
                self.out_colors[u][color] += 1;
                self.in_colors[v][color] += 1;
                self.assigned[k] = color;
                if self.go(k + 1, used.max(color + 1)) {
                    return true;
                }
                self.out_colors[u][color] -= 1;
                self.in_colors[v][color] -= 1;
            }
            false
        }
    }

    let mut search = Search {
        edges: &edges,
        limit: c,
        in_colors: alloc::vec![alloc::vec![0; c]; g.n()],
        out_colors: alloc::vec![alloc::vec![0; c]; g.n()],
        assigned: alloc::vec![0; edges.len()],
    };
    if !search.go(0, 0) {
        return Ok(None);
    }
    let used = search.assigned.iter().map(|c| c + 1).max().unwrap_or(0);
    let map = edges.iter().copied().zip(search.assigned.iter().copied()).collect();
    EdgeColoring::new(g.clone(), map, used).map(Some)
}

/// Color classes of the coloring restricted to the support of `a`, as
/// digraphs; each has no two-edge path.
pub fn class_digraphs(a: &Matrix, coloring: &EdgeColoring) -> Vec<Digraph> {
    split_by_coloring(a, coloring)
        .iter()
        .map(digraph_of)
        .collect()
}
