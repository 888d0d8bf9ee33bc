use antiring::dag_counting::{
    acyclic_gf_explicit, acyclic_gf_recurrence, acyclic_gf_table, count_nilpotent,
    nilpotent_count_polynomial, partitions, IntPolynomial,
};
use antiring::squarezero::ceil_log2;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

/// Acyclicity by depth-first search over a bitmask adjacency.
fn has_cycle(n: usize, adj: &[u32]) -> bool {
    fn visit(v: usize, adj: &[u32], state: &mut [u8]) -> bool {
        state[v] = 1;
        for w in 0..adj.len() {
            if adj[v] >> w & 1 == 1 && (state[w] == 1 || (state[w] == 0 && visit(w, adj, state))) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    let mut state = vec![0u8; n];
    (0..n).any(|v| state[v] == 0 && visit(v, adj, &mut state))
}

/// Number of acyclic loop-free patterns on `n` vertices by edge count.
fn histogram(n: usize) -> Vec<u64> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut counts = vec![0u64; pairs.len() + 1];
    for mask in 0u64..(1 << pairs.len()) {
        let mut adj = vec![0u32; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                adj[i] |= 1 << j;
            }
        }
        if !has_cycle(n, &adj) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

#[test]
fn coefficients_are_edge_count_histograms() {
    let table = acyclic_gf_table(4);
    for (n, poly) in table.iter().enumerate() {
        let h = histogram(n);
        for (r, &c) in h.iter().enumerate() {
            assert_eq!(poly.coeff(r), BigInt::from(c), "n = {n}, r = {r}");
        }
        assert!(poly.degree().unwrap_or(0) <= n * (n.max(1) - 1) / 2);
    }
    let totals: Vec<u64> = (0..=4).map(|n| histogram(n).iter().sum()).collect();
    assert_eq!(totals, vec![1, 1, 3, 25, 543]);
}

#[test]
fn both_formulas_agree() {
    let table = acyclic_gf_table(10);
    for (n, row) in table.iter().enumerate() {
        assert_eq!(acyclic_gf_recurrence(n), acyclic_gf_explicit(n), "n = {n}");
        assert_eq!(*row, acyclic_gf_recurrence(n));
    }
}

#[test]
fn coefficients_are_nonnegative() {
    for poly in acyclic_gf_table(10) {
        assert!(poly.coeffs().iter().all(|c| !c.is_negative()), "{poly}");
    }
}

#[test]
fn leading_term_in_q() {
    for n in 1..=8usize {
        let p = nilpotent_count_polynomial(n);
        let d = n * (n - 1) / 2;
        assert_eq!(p.degree(), Some(d));
        let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
        assert_eq!(p.coeff(d), fact);
    }
}

#[test]
fn shift_is_substitution() {
    let p = acyclic_gf_recurrence(5);
    let q = nilpotent_count_polynomial(5);
    for x in -3i64..10 {
        assert_eq!(q.eval(&BigInt::from(x)), p.eval(&BigInt::from(x - 1)));
    }
    assert_eq!(q, p.shift(&-BigInt::one()));
}

#[test]
fn reference_rows() {
    let q = |n| nilpotent_count_polynomial(n).display_in("q").to_string();
    assert_eq!(q(1), "1");
    assert_eq!(q(2), "2q - 1");
    assert_eq!(q(3), "6q^3 - 6q^2 + 1");
    assert_eq!(q(4), "24q^6 - 36q^5 + 6q^4 + 8q^3 - 1");
    assert_eq!(count_nilpotent(4, 2).unwrap(), BigUint::from(543u32));
    assert_eq!(count_nilpotent(5, 2).unwrap(), BigUint::from(29281u32));
    assert_eq!(count_nilpotent(1, 7).unwrap(), BigUint::one());
    assert!(count_nilpotent(3, 0).is_err());
    assert!(count_nilpotent(0, 3).is_err());
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    for p in partitions(8) {
        assert_eq!(p.total(), 8);
        assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
    }
}

#[test]
fn polynomial_arithmetic() {
    let a = IntPolynomial::one_plus_x_pow(3);
    let expected: Vec<BigInt> = [1, 3, 3, 1].into_iter().map(BigInt::from).collect();
    assert_eq!(a.coeffs(), expected.as_slice());
    let b = &a * &a;
    assert_eq!(b.eval(&BigInt::from(2)), BigInt::from(729));
    assert!((&b - &b).is_zero());
    assert_eq!(ceil_log2(1), 0);
}
