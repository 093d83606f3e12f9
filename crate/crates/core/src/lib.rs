//! Exact combinatorics of Schubert polynomials, Demazure characters, and
//! crystal graphs.
//!
//! The crate computes, over the integers and with no floating point anywhere:
//!
//! * permutations, reduced words, and the sorting action on weak compositions
//!   ([`perm`], [`composition`]);
//! * sparse integer polynomials with divided-difference operator calculus,
//!   and the Schur, Demazure, Schubert, and Stanley polynomial constructors
//!   ([`poly`]);
//! * the type A crystal structure on semi-standard Young tableaux ([`ssyt`]),
//!   on semi-standard key tableaux ([`key`]), and on reduced factorizations
//!   with and without the cutoff condition ([`factorization`]);
//! * Edelman–Greene insertion together with its weak (key-shaped) analogue
//!   ([`eg`]);
//! * a generic edge-colored crystal-graph engine with Demazure truncation and
//!   decomposition verification ([`crystal`]).
//!
//! Everything is deterministic: sets are ordered, graphs are built in canonical
//! node order, and all polynomial arithmetic uses checked 64-bit integers.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod composition;
pub mod crystal;
pub mod eg;
pub mod factorization;
pub mod key;
pub mod perm;
pub mod poly;
pub mod ssyt;

pub use composition::{act_on_composition, sort_composition, Partition, WeakComposition};
pub use crystal::{build_crystal, demazure_truncate, CrystalElement, CrystalGraph, DemazureSubset};
pub use factorization::{enumerate_rf, enumerate_rfc, CompatibleSequence, ReducedFactorization};
pub use key::{enumerate_sskt, KeyTableau};
pub use perm::{all_permutations, apply_word, is_reduced, Permutation, Word};
pub use poly::SparsePolynomial;
pub use ssyt::{enumerate_ssyt, Ssyt};
