//! The straightening engine shared by every algebra in the crate.
//!
//! A product of two basis words is rewritten into a combination of basis
//! words by a prioritized system of rules:
//!
//! 1. `u*u = 0`;
//! 2. `u*v = -(v*u)` when `u < v`;
//! 3. context-specific rules (relations between letters, the Rota-Baxter
//!    composition, the action of `R(x)` in an enveloping algebra);
//! 4. `[u,v]` is returned as is when it is itself a basis word;
//! 5. `[[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]]` when `u` is a bracket;
//! 6. `[u,[v1,v2]] = [[u,v1],v2] + [v1,[u,v2]]` when `u` is a letter.
//!
//! Products are memoized per engine (the memo is dropped between top-level
//! products once it exceeds a size limit) and every top-level product
//! carries a step budget, so a rule that fails to terminate surfaces as
//! [`Error::FuelExhausted`].

use std::cell::{Cell, RefCell};
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Q};
use crate::word::{compare_letter_seqs, BuildWordHasher, Word};

pub const DEFAULT_FUEL: u64 = 1_000_000;
pub const DEFAULT_CACHE_LIMIT: usize = 300_000;

/// Context-specific part of the rewriting system.
pub trait Rules: Sized {
    /// Rule 3. Called with `u > v`, both basis words of the context.
    fn special(&self, eng: &Engine<Self>, u: &Word, v: &Word) -> Option<Result<LinComb>>;

    /// Rule 4. Whether `[u,v]` with `u > v` is a basis word.
    fn is_basis_bracket(&self, u: &Word, v: &Word) -> bool;
}

/// Memoizing straightening engine. Not `Sync`; use one engine per worker.
pub struct Engine<R: Rules> {
    rules: R,
    cache: RefCell<HashMap<(Word, Word), LinComb, BuildWordHasher>>,
    fuel: u64,
    cache_limit: usize,
    steps: Cell<u64>,
    active: Cell<bool>,
    #[cfg(feature = "fault-injection")]
    fault: Cell<bool>,
}

impl<R: Rules> Engine<R> {
    pub fn new(rules: R) -> Self {
        Engine {
            rules,
            cache: RefCell::new(HashMap::default()),
            fuel: DEFAULT_FUEL,
            cache_limit: DEFAULT_CACHE_LIMIT,
            steps: Cell::new(0),
            active: Cell::new(false),
            #[cfg(feature = "fault-injection")]
            fault: Cell::new(false),
        }
    }

    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel;
        self
    }

    pub fn with_cache_limit(mut self, entries: usize) -> Self {
        self.cache_limit = entries;
        self
    }

    pub fn rules(&self) -> &R {
        &self.rules
    }

    /// Flips the sign of the second summand of rule 5. Breaks the Jacobi
    /// identity; only for negative controls.
    #[cfg(feature = "fault-injection")]
    pub fn inject_fault(&self, on: bool) {
        self.fault.set(on);
        self.cache.borrow_mut().clear();
    }

    pub fn cache_len(&self) -> usize {
        self.cache.borrow().len()
    }

    fn enter<T>(&self, f: impl FnOnce() -> Result<T>) -> Result<T> {
        if self.active.get() {
            return f();
        }
        self.active.set(true);
        self.steps.set(0);
        if self.cache.borrow().len() > self.cache_limit {
            self.cache.borrow_mut().clear();
        }
        let out = f();
        self.active.set(false);
        out
    }

    /// Product of two basis words.
    pub fn mul_words(&self, u: &Word, v: &Word) -> Result<LinComb> {
        self.enter(|| self.product(u, v))
    }

    /// Bilinear product of two combinations of basis words.
    pub fn mul(&self, a: &LinComb, b: &LinComb) -> Result<LinComb> {
        self.enter(|| self.mul_inner(a, b))
    }

    pub(crate) fn mul_inner(&self, a: &LinComb, b: &LinComb) -> Result<LinComb> {
        LinComb::bilinear(a, b, |u, v| self.product(u, v))
    }

    pub(crate) fn product(&self, u: &Word, v: &Word) -> Result<LinComb> {
        if u == v {
            return Ok(LinComb::zero());
        }
        if u < v {
            return Ok(-self.product(v, u)?);
        }
        let key = (u.clone(), v.clone());
        if let Some(hit) = self.cache.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let steps = self.steps.get() + 1;
        self.steps.set(steps);
        if steps > self.fuel {
            return Err(Error::FuelExhausted {
                steps,
                left: u.clone(),
                right: v.clone(),
            });
        }
        let out = self.straighten(u, v)?;
        self.cache.borrow_mut().insert(key, out.clone());
        Ok(out)
    }

    fn straighten(&self, u: &Word, v: &Word) -> Result<LinComb> {
        if let Some(r) = self.rules.special(self, u, v) {
            return r;
        }
        if self.rules.is_basis_bracket(u, v) {
            return Ok(LinComb::word(Word::br(u.clone(), v.clone())));
        }
        if let Some((u1, u2)) = u.split() {
            // [[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]]
            let left = self.product(u1, v)?;
            let a = self.mul_inner(&left, &LinComb::word(u2.clone()))?;
            let right = self.product(u2, v)?;
            let b = self.mul_inner(&LinComb::word(u1.clone()), &right)?;
            #[cfg(feature = "fault-injection")]
            if self.fault.get() {
                return Ok(a - b);
            }
            return Ok(a + b);
        }
        if let Some((v1, v2)) = v.split() {
            // [u,[v1,v2]] = [[u,v1],v2] + [v1,[u,v2]]
            let left = self.product(u, v1)?;
            let a = self.mul_inner(&left, &LinComb::word(v2.clone()))?;
            let right = self.product(u, v2)?;
            let b = self.mul_inner(&LinComb::word(v1.clone()), &right)?;
            return Ok(a + b);
        }
        Err(Error::Stuck {
            left: u.clone(),
            right: v.clone(),
        })
    }

    /// `R(a)*R(b) = R(R(a)*b + a*R(b) + weight*(a*b))`.
    pub(crate) fn rb_compose(&self, a: &Word, b: &Word, weight: &Q) -> Result<LinComb> {
        let ra = Word::r(a.clone());
        let rb = Word::r(b.clone());
        let mut inner = self.product(&ra, b)?;
        inner += &self.product(a, &rb)?;
        if !num_traits::Zero::is_zero(weight) {
            inner.add_scaled(&self.product(a, b)?, weight);
        }
        Ok(apply_r(&inner))
    }
}

/// Linear extension of `w -> R(w)`.
pub fn apply_r(x: &LinComb) -> LinComb {
    x.terms()
        .map(|(w, c)| (Word::r(w.clone()), c.clone()))
        .collect()
}

/// The Lyndon-Shirshov conditions for `[u,v]`, given that `u` and `v` are
/// themselves LS words with `u > v`: if `u = [u1,u2]` then `v >= u2`.
pub(crate) fn ls_bracket_ok(u: &Word, v: &Word) -> bool {
    match u.split() {
        Some((_, u2)) => compare_letter_seqs(v.letters(), u2.letters()) != std::cmp::Ordering::Less,
        None => true,
    }
}

/// The partial-commutativity condition: some letter of `u` is not adjacent
/// to the first letter of `v`. A letter is never adjacent to itself.
pub(crate) fn pcls_bracket_ok(u: &Word, v: &Word, adjacent: impl Fn(&Word, &Word) -> bool) -> bool {
    let first = v.first_letter();
    u.letters()
        .iter()
        .any(|l| l == first || !adjacent(l, first))
}
