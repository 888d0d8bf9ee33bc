//! Linear algebra over commutative antirings.
//!
//! An antiring is a zerosumfree semiring: `a + b = 0` forces `a = b = 0`.
//! This crate provides
//!
//! - concrete antirings ([`Semiring`]) and an exhaustive axiom checker for
//!   finite semirings given by operation tables,
//! - dense square matrices over them ([`Matrix`], [`Permutation`]),
//! - the characterization of invertible matrices as `D * sum(a_s P_s)` with an
//!   explicit inverse and the coordinates of `GL_n(S) = U(S)^n x| (S_n)^k`,
//! - nilpotency tests through the digraph `D(A)` and matrix powers,
//! - square-zero decompositions of nilpotent and trace-zero matrices built
//!   from path-incidence-free arc colorings,
//! - exact nilpotent counts over finite entire antirings via the generating
//!   polynomial of labeled acyclic digraphs,
//! - brute-force oracles over small finite carriers.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dag_counting;
mod error;
pub mod invertibility;
pub mod matrix;
pub mod nilpotency;
pub mod oracle;
pub mod semiring;
pub mod squarezero;

pub use error::{Error, NonInvertibility, Result};
pub use matrix::{Matrix, Permutation};
pub use semiring::{AxiomReport, Element, FiniteTables, Semiring, Value};
