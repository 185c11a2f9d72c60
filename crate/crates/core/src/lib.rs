//! Exact computation in free Lie algebras, partially commutative Lie
//! algebras, free Lie Rota-Baxter algebras and the universal enveloping Lie
//! Rota-Baxter algebras of pre-Lie and post-Lie algebras.
//!
//! Every element is a [`LinComb`]: a finite combination of basis [`Word`]s
//! with arbitrary-precision rational coefficients. Products are computed by a
//! single memoizing straightening engine ([`engine`]) parametrized by the
//! rules of each algebra.

pub mod algebra;
pub mod engine;
pub mod enveloping;
pub mod error;
pub mod free_rb;
pub mod harness;
pub mod identities;
pub mod lincomb;
pub mod ls;
pub mod parse;
pub mod pcls;
pub mod rational;
pub mod rng;
pub mod structure;
pub mod word;

pub use algebra::{LieAlgebra, Weight};
pub use error::{Error, Result};
pub use lincomb::{LinComb, Q};
pub use word::{Alphabet, Word};
