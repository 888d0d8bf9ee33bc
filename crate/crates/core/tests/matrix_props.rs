mod common;

use antiring::matrix::{conjugate_by_permutation, permutation_matrix};
use antiring::{Error, Matrix, Permutation, Semiring};
use rand::Rng;

#[test]
fn ring_laws_hold_for_random_matrices() {
    let mut rng = common::rng(20);
    for s in common::builtins() {
        for _ in 0..1000 {
            let n = rng.gen_range(1..=5);
            let a = common::random_matrix(&s, n, &mut rng);
            let b = common::random_matrix(&s, n, &mut rng);
            let c = common::random_matrix(&s, n, &mut rng);
            let ab = a.mul(&b).unwrap();
            assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap(), "{s}");
            assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                ab.add(&a.mul(&c).unwrap()).unwrap(),
                "{s}"
            );
            assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            // commutative entries give (AB)^T = B^T A^T
            assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()).unwrap());
            let id = Matrix::identity(&s, n).unwrap();
            assert_eq!(a.mul(&id).unwrap(), a);
            assert!(a.mul(&Matrix::zeros(&s, n).unwrap()).unwrap().is_zero());
        }
    }
}

#[test]
fn powers_add_exponents() {
    let mut rng = common::rng(21);
    for s in common::builtins() {
        for _ in 0..100 {
            let n = rng.gen_range(1..=4);
            let a = common::random_matrix(&s, n, &mut rng);
            let (j, k) = (rng.gen_range(0..5u64), rng.gen_range(0..5u64));
            assert_eq!(a.pow(j + k), a.pow(j).mul(&a.pow(k)).unwrap(), "{s}");
        }
        let a = common::random_matrix(&s, 3, &mut rng);
        assert!(a.pow(0).is_identity());
    }
}

#[test]
fn permutation_matrices_are_a_homomorphism() {
    let s = Semiring::Tropical;
    let perms: Vec<_> = Permutation::all(4).collect();
    assert_eq!(perms.len(), 24);
    for p in &perms {
        for q in &perms {
            let lhs = permutation_matrix(&p.then(q), &s).unwrap();
            let rhs = permutation_matrix(p, &s)
                .unwrap()
                .mul(&permutation_matrix(q, &s).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
        let pt = permutation_matrix(p, &s).unwrap().transpose();
        assert_eq!(pt, permutation_matrix(&p.inverse(), &s).unwrap());
    }
}

#[test]
fn conjugation_is_p_a_p_transpose() {
    let mut rng = common::rng(22);
    for s in common::builtins() {
        let a = common::random_matrix(&s, 4, &mut rng);
        let p = common::random_permutation(4, &mut rng);
        let pm = permutation_matrix(&p, &s).unwrap();
        let expected = pm.mul(&a).unwrap().mul(&pm.transpose()).unwrap();
        assert_eq!(conjugate_by_permutation(&a, &p).unwrap(), expected, "{s}");
    }
}

#[test]
fn mismatches_are_errors() {
    let a = Matrix::identity(&Semiring::Boolean, 2).unwrap();
    let b = Matrix::identity(&Semiring::Chain(3), 2).unwrap();
    let c = Matrix::identity(&Semiring::Boolean, 3).unwrap();
    assert!(matches!(a.mul(&b), Err(Error::SemiringMismatch { .. })));
    assert!(matches!(a.add(&c), Err(Error::DimensionMismatch { .. })));
    assert!(Matrix::zeros(&Semiring::Boolean, 0).is_err());
}

#[test]
fn permutations_enumerate_in_lexicographic_order() {
    let all: Vec<_> = Permutation::all(5).collect();
    assert_eq!(all.len(), 120);
    assert!(all.windows(2).all(|w| w[0] < w[1]));
    assert!(all[0].is_identity());
    assert!(Permutation::new(vec![0, 0, 1]).is_err());
}
