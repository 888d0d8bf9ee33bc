mod common;

use antiring::nilpotency::{digraph_of, Digraph};
use antiring::oracle::{nilpotent_matrices, EnumerationBudget};
use antiring::squarezero::{
    capacity, ceil_log2, class_digraphs, complete_digraph_coloring, decompose_nilpotent,
    decompose_trace_zero, min_coloring_search, n_max, tournament_coloring, EdgeColoring,
    SquareZeroDecomposition,
};
use antiring::{Error, Matrix, Semiring};
use num_bigint::BigUint;
use rand::Rng;

fn assert_valid(a: &Matrix, d: &SquareZeroDecomposition, bound: usize) {
    assert!(d.len() <= bound, "{} > {bound}", d.len());
    let mut total = Matrix::zeros(a.semiring(), a.n()).unwrap();
    for b in d.summands() {
        assert!(!b.is_zero());
        assert!(b.mul(b).unwrap().is_zero(), "\n{b}");
        assert!(digraph_of(b).two_path().is_none());
        total = total.add(b).unwrap();
    }
    assert_eq!(&total, a);
}

/// Direct scan of every vertex's in/out edge pairs.
fn scan_incidence_free(c: &EdgeColoring) -> bool {
    let edges = c.digraph().edges();
    edges.iter().all(|&(i, j)| {
        edges
            .iter()
            .filter(|&&(k, _)| k == j)
            .all(|&(_, l)| c.color(i, j) != c.color(j, l))
    })
}

#[test]
fn constructed_colorings_are_incidence_free() {
    for n in 1..=40 {
        let t = tournament_coloring(n).unwrap();
        assert!(scan_incidence_free(&t) && t.is_path_incidence_free());
        assert!(t.count() <= ceil_log2(n).max(1));
        let k = complete_digraph_coloring(n).unwrap();
        assert!(scan_incidence_free(&k) && k.is_path_incidence_free());
        assert!(k.count() <= capacity(n));
        for g in class_digraphs(&Matrix::identity(&Semiring::Boolean, n).unwrap(), &k) {
            assert!(g.two_path().is_none());
        }
    }
}

#[test]
fn every_small_boolean_nilpotent_decomposes() {
    for n in 1..=4 {
        for a in nilpotent_matrices(&Semiring::Boolean, n, &EnumerationBudget::default()).unwrap() {
            assert_valid(&a, &decompose_nilpotent(&a).unwrap(), ceil_log2(n));
        }
    }
}

#[test]
fn random_nilpotents_decompose() {
    let mut rng = common::rng(50);
    for s in [Semiring::Chain(3), Semiring::Tropical, Semiring::Naturals] {
        for _ in 0..40 {
            let n = rng.gen_range(1..=32);
            let a = common::random_nilpotent(&s, n, rng.gen_range(0.05..1.0), &mut rng);
            assert_valid(&a, &decompose_nilpotent(&a).unwrap(), ceil_log2(n));
        }
    }
}

#[test]
fn decompose_nilpotent_refusals() {
    let p2 = Semiring::Powerset(2);
    assert!(matches!(
        decompose_nilpotent(&Matrix::zeros(&p2, 2).unwrap()),
        Err(Error::Precondition(_))
    ));
    let id = Matrix::identity(&Semiring::Boolean, 3).unwrap();
    assert!(matches!(decompose_nilpotent(&id), Err(Error::NotNilpotent)));
}

#[test]
fn random_trace_zero_matrices_decompose() {
    let mut rng = common::rng(51);
    for s in [Semiring::Boolean, Semiring::Powerset(2), Semiring::Tropical, Semiring::Chain(4)] {
        for n in 1..=9 {
            for _ in 0..10 {
                let a = common::random_trace_zero(&s, n, &mut rng);
                assert_valid(&a, &decompose_trace_zero(&a).unwrap(), capacity(n));
            }
        }
    }
    let mut a = Matrix::zeros(&Semiring::Boolean, 3).unwrap();
    a.set(2, 2, Semiring::Boolean.one()).unwrap();
    let err = decompose_trace_zero(&a).unwrap_err();
    assert!(matches!(err, Error::NonZeroDiagonal(2)));
    assert!(err.to_string().contains("(3, 3)"), "{err}");
}

#[test]
fn sharpness_by_exhaustive_search() {
    for (n, chi) in [(2, 1), (3, 2), (4, 2), (5, 3)] {
        let t = Digraph::transitive_tournament(n);
        assert!(min_coloring_search(&t, chi - 1).unwrap().is_none(), "tournament {n}");
        let found = min_coloring_search(&t, chi).unwrap().unwrap();
        assert!(scan_incidence_free(&found));
        assert_eq!(chi, ceil_log2(n));
    }
    for n in 2..=4 {
        let k = Digraph::complete(n);
        assert!(min_coloring_search(&k, capacity(n) - 1).unwrap().is_none(), "complete {n}");
        assert!(scan_incidence_free(&min_coloring_search(&k, capacity(n)).unwrap().unwrap()));
    }
    assert!(min_coloring_search(&Digraph::empty(3), 0).unwrap().is_some());
    assert!(matches!(
        min_coloring_search(&Digraph::complete(7), 6),
        Err(Error::SearchTooLarge { .. })
    ));
}

#[test]
fn capacity_inverts_n_max() {
    for k in 2..=30 {
        assert_eq!(capacity(n_max(k).try_into().unwrap()), k, "k = {k}");
    }
    for n in 1..=1000usize {
        let c = capacity(n);
        assert!(n_max(c) >= BigUint::from(n));
        if c > 0 {
            assert!(n == 1 || n_max(c - 1) < BigUint::from(n), "n = {n}");
        }
    }
    assert_eq!(capacity(3), 3);
    assert_eq!(capacity(6), 4);
}
