#![allow(dead_code)]

use antiring::matrix::conjugate_by_permutation;
use antiring::{Matrix, Permutation, Semiring, Value};
use num_bigint::{BigInt, BigUint};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every built-in with a small description of its parameters.
pub fn builtins() -> Vec<Semiring> {
    vec![
        Semiring::Boolean,
        Semiring::Chain(3),
        Semiring::Chain(5),
        Semiring::Powerset(2),
        Semiring::Powerset(3),
        Semiring::Naturals,
        Semiring::Tropical,
    ]
}

pub fn entire_builtins() -> Vec<Semiring> {
    vec![
        Semiring::Boolean,
        Semiring::Chain(3),
        Semiring::Chain(5),
        Semiring::Naturals,
        Semiring::Tropical,
    ]
}

/// A random value; zero comes up often so that sparse patterns appear.
pub fn random_value(s: &Semiring, rng: &mut impl Rng) -> Value {
    if rng.gen_bool(0.3) {
        return s.zero();
    }
    match s {
        Semiring::Naturals => {
            if rng.gen_bool(0.1) {
                Value::Nat(BigUint::from(rng.gen::<u64>()) << 40u32)
            } else {
                Value::Nat(BigUint::from(rng.gen_range(0u32..20)))
            }
        }
        Semiring::Tropical => Value::Trop(Some(BigInt::from(rng.gen_range(-50i64..50)))),
        _ => {
            let size = s.carrier_size().unwrap() as usize;
            s.value_at(rng.gen_range(0..size))
        }
    }
}

pub fn random_nonzero(s: &Semiring, rng: &mut impl Rng) -> Value {
    loop {
        let v = random_value(s, rng);
        if !s.is_zero(&v) {
            return v;
        }
    }
}

pub fn random_matrix(s: &Semiring, n: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(s, n, |_, _| random_value(s, rng)).unwrap()
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::new(images).unwrap()
}

/// Strictly upper triangular with the given density, conjugated by a random
/// permutation. Nilpotent over any semiring.
pub fn random_nilpotent(s: &Semiring, n: usize, density: f64, rng: &mut impl Rng) -> Matrix {
    let upper = Matrix::from_fn(s, n, |i, j| {
        if i < j && rng.gen_bool(density) {
            random_nonzero(s, rng)
        } else {
            s.zero()
        }
    })
    .unwrap();
    conjugate_by_permutation(&upper, &random_permutation(n, rng)).unwrap()
}

pub fn random_trace_zero(s: &Semiring, n: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(s, n, |i, j| if i == j { s.zero() } else { random_value(s, rng) }).unwrap()
}

/// All matrices over a finite carrier, independent of the library's own
/// counter.
pub fn all_matrices(s: &Semiring, n: usize) -> Vec<Matrix> {
    let carrier = s.elements().unwrap();
    let cells = n * n;
    let total = carrier.len().pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut entries = vec![s.zero(); cells];
            for e in entries.iter_mut().rev() {
                *e = carrier[code % carrier.len()].clone();
                code /= carrier.len();
            }
            Matrix::from_fn(s, n, |i, j| entries[i * n + j].clone()).unwrap()
        })
        .collect()
}
