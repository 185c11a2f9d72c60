//! Common interface of the algebras that live in a basis of words.

use std::fmt;

use num_traits::{One, Zero};

use crate::engine::apply_r;
use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Q};
use crate::word::{Alphabet, Shape, Word};

/// Weight of a Rota-Baxter operator. Any nonzero weight is rescaled to one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    Zero,
    One,
}

impl Weight {
    pub fn as_q(self) -> Q {
        match self {
            Weight::Zero => Q::zero(),
            Weight::One => Q::one(),
        }
    }

    pub fn from_int(w: i64) -> Option<Weight> {
        match w {
            0 => Some(Weight::Zero),
            1 => Some(Weight::One),
            _ => None,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Weight::Zero => "0",
            Weight::One => "1",
        })
    }
}

/// An algebra whose elements are combinations of basis words.
pub trait LieAlgebra {
    fn alphabet(&self) -> &Alphabet;

    /// Product of two combinations of basis words.
    fn mul(&self, a: &LinComb, b: &LinComb) -> Result<LinComb>;

    fn is_basis(&self, w: &Word) -> bool;

    /// Basis words of degree `<= max_deg` and `R`-degree `<= max_rdeg`
    /// (argument words are bounded recursively), sorted descending.
    fn basis(&self, max_deg: usize, max_rdeg: usize) -> Vec<Word>;

    /// The Rota-Baxter operator and its weight, when the algebra has one.
    fn weight(&self) -> Option<Weight> {
        None
    }

    fn apply_r(&self, x: &LinComb) -> Result<LinComb> {
        match self.weight() {
            Some(_) => Ok(apply_r(x)),
            None => Err(Error::NotBasis("this algebra has no operator R".into())),
        }
    }

    /// Evaluates arbitrary bracketed words in this algebra.
    fn normalize(&self, x: &LinComb) -> Result<LinComb> {
        x.map_linear(|w| self.evaluate(w))
    }

    fn evaluate(&self, w: &Word) -> Result<LinComb> {
        match w.shape() {
            Shape::Gen(i) if *i < self.alphabet().len() => Ok(LinComb::word(w.clone())),
            Shape::Gen(i) => Err(Error::NotBasis(format!("generator index {i} out of range"))),
            Shape::R(u) => {
                let inner = self.evaluate(u)?;
                self.apply_r(&inner)
            }
            Shape::Br(u, v) => {
                let a = self.evaluate(u)?;
                let b = self.evaluate(v)?;
                self.mul(&a, &b)
            }
        }
    }
}
