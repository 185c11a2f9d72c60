//! Finite linear combinations of words with exact rational coefficients.

use std::collections::hash_map::{self, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::word::{Alphabet, BuildWordHasher, Word};

pub use crate::rational::{q, q_frac, Q};

/// A canonical linear combination: no zero coefficients, one entry per word.
/// [`LinComb::iter`] and [`LinComb::words`] run in descending word order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LinComb {
    terms: HashMap<Word, Q, BuildWordHasher>,
}

impl fmt::Debug for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

impl LinComb {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Q::one())
    }

    pub fn term(w: Word, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &LinComb, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (w, k) in other.terms.iter() {
            self.add_term(w.clone(), k * c);
        }
    }

    pub fn scaled(&self, c: &Q) -> LinComb {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Terms in descending word order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Word, &Q)> + '_ {
        let mut v: Vec<(&Word, &Q)> = self.terms.iter().collect();
        v.sort_unstable_by(|a, b| b.0.cmp(a.0));
        v.into_iter()
    }

    /// Words in descending order.
    pub fn words(&self) -> impl Iterator<Item = &Word> + '_ {
        self.iter().map(|(w, _)| w)
    }

    /// Terms in an unspecified (but reproducible) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> + '_ {
        self.terms.iter()
    }

    /// The single word of a combination `1*w`, if that is what this is.
    pub fn as_word(&self) -> Option<&Word> {
        match self.terms.iter().next() {
            Some((w, c)) if self.terms.len() == 1 && c.is_one() => Some(w),
            _ => None,
        }
    }

    /// Applies a linear map given on words.
    pub fn map_linear<E>(
        &self,
        mut f: impl FnMut(&Word) -> Result<LinComb, E>,
    ) -> Result<LinComb, E> {
        let mut out = LinComb::zero();
        for (w, c) in self.terms.iter() {
            out.add_scaled(&f(w)?, c);
        }
        Ok(out)
    }

    /// Applies a bilinear map given on pairs of words.
    pub fn bilinear<E>(
        a: &LinComb,
        b: &LinComb,
        mut f: impl FnMut(&Word, &Word) -> Result<LinComb, E>,
    ) -> Result<LinComb, E> {
        let mut out = LinComb::zero();
        for (u, cu) in a.terms.iter() {
            for (v, cv) in b.terms.iter() {
                let p = f(u, v)?;
                out.add_scaled(&p, &(cu * cv));
            }
        }
        Ok(out)
    }

    /// Canonical text: descending terms, `p/q*` coefficients, ` + `/` - ` separators.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if !a.is_one() {
                s.push_str(&a.to_string());
                s.push('*');
            }
            alphabet.write_word(&mut s, w).expect("writing to a String");
        }
        s
    }
}

impl From<Word> for LinComb {
    fn from(w: Word) -> Self {
        LinComb::word(w)
    }
}

impl AddAssign<&LinComb> for LinComb {
    fn add_assign(&mut self, rhs: &LinComb) {
        for (w, c) in rhs.terms.iter() {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&LinComb> for LinComb {
    fn sub_assign(&mut self, rhs: &LinComb) {
        for (w, c) in rhs.terms.iter() {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add for LinComb {
    type Output = LinComb;
    fn add(mut self, rhs: LinComb) -> LinComb {
        self += &rhs;
        self
    }
}

impl Add<&LinComb> for &LinComb {
    type Output = LinComb;
    fn add(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for LinComb {
    type Output = LinComb;
    fn sub(mut self, rhs: LinComb) -> LinComb {
        self -= &rhs;
        self
    }
}

impl Sub<&LinComb> for &LinComb {
    type Output = LinComb;
    fn sub(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for LinComb {
    type Output = LinComb;
    fn neg(mut self) -> LinComb {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &LinComb {
    type Output = LinComb;
    fn neg(self) -> LinComb {
        -self.clone()
    }
}

impl FromIterator<(Word, Q)> for LinComb {
    fn from_iter<I: IntoIterator<Item = (Word, Q)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_entries() {
        let a = Word::gen(0);
        let mut x = LinComb::word(a.clone());
        x.add_term(a.clone(), q(-1));
        assert!(x.is_zero());
        assert_eq!(x.coeff(&a), q(0));
    }

    #[test]
    fn display_is_descending() {
        let al = Alphabet::parse("a,b").unwrap();
        let (a, b) = (Word::gen(0), Word::gen(1));
        let x: LinComb = [(b.clone(), q(1)), (a.clone(), q_frac(-3, 2))]
            .into_iter()
            .collect();
        assert_eq!(x.display(&al), "-3/2*a + b");
        let y = LinComb::word(Word::br(a, b)) - LinComb::word(Word::gen(1));
        assert_eq!(y.display(&al), "[a,b] - b");
        assert_eq!(LinComb::zero().display(&al), "0");
    }
}
