//! Kuratowski words, free Kuratowski monoids and the operator monoids of
//! finite polytopological spaces.
//!
//! A polytopological space is a set carrying a chain of topologies
//! `t0 ⊂ t1 ⊂ … ⊂ t(n-1)`. Its interior and closure operators generate a
//! monoid of self-maps of the powerset whose size is bounded by
//! `K(n) = Σ_{i,j ≤ n} C(i+j, i)²`. This crate provides:
//!
//! * [`alphabet`]: the ordered generator alphabets and their morphisms,
//! * [`words`]: alternating and Kuratowski words, classification and
//!   enumeration,
//! * [`rewrite`]: normal forms, free Kuratowski monoids, their order and
//!   a congruence-closure cross-check,
//! * [`counting`]: exact combinatorics for `K(n, p)` and its asymptotics,
//! * [`topology`]: finite topologies, operator tables and monoid generation,
//! * [`witness`]: separating spaces showing that the bound is attained.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod alphabet;
pub mod counting;
pub mod error;
pub mod rewrite;
pub mod topology;
pub mod witness;
pub mod words;

pub use alphabet::{make_chain, ChainMorphism, Letter, PointedChain, StarChain, Symbol};
pub use error::{Error, Result};
pub use words::{FullWord, Word, WordClass};

/// Resource caps shared by the exhaustive computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n_neg` or `n_pos` accepted by word enumeration.
    pub max_chain_side: usize,
    /// Largest ground set for topology computations.
    pub max_ground: usize,
    /// Largest generated operator monoid.
    pub max_monoid: usize,
    /// Largest free Kuratowski monoid that is materialized with its tables.
    pub max_free_monoid: usize,
    /// Largest number of words visited by the congruence-closure oracle.
    pub max_oracle_words: usize,
    /// Largest number of components materialized by `build_witness`.
    pub max_witness_pairs: usize,
    /// Largest star chain accepted by exactness certification.
    pub max_certify_side: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_chain_side: 6,
            max_ground: 6,
            max_monoid: 100_000,
            max_free_monoid: 10_000,
            max_oracle_words: 4_000_000,
            max_witness_pairs: 100_000,
            max_certify_side: 3,
        }
    }
}
