//! Universal enveloping Lie Rota-Baxter algebras of pre-Lie (weight 0) and
//! post-Lie (weight 1) algebras.
//!
//! The basis `E` is a subset of the standard basis of the free Lie RB-algebra
//! on the basis `X` of the input algebra:
//!
//! * single letters of `X`, and for pre-Lie input every LS word over `X`;
//! * `R(u)` for every `u` in `E`;
//! * PCLS words of degree at least two whose `R`-letters all have arguments
//!   in `E \ X`. For post-Lie input the letters of `X` are pairwise adjacent
//!   in the commutativity graph, so no bracket of two `X`-letters survives.
//!
//! The product is the free straightening system with three overrides: two
//! `X`-letters multiply by the input bracket (post-Lie), `R(x)*y = x.y`, and
//! `R(x)` acts on brackets as a derivation.

use std::collections::BTreeMap;

use crate::algebra::{LieAlgebra, Weight};
use crate::engine::{apply_r, ls_bracket_ok, pcls_bracket_ok, Engine, Rules};
use crate::error::{Error, Result};
use crate::free_rb::{enum_layered, r_clique};
use crate::lincomb::{LinComb, Q};
use crate::pcls::is_pcls_with;
use crate::structure::{Kind, StructureAlgebra};
use crate::word::{compare_letter_seqs, Alphabet, Word};

fn r_of_generator(w: &Word) -> Option<usize> {
    w.r_arg().and_then(Word::gen_rank)
}

fn env_adjacent(post: bool) -> impl Fn(&Word, &Word) -> bool {
    move |a, b| r_clique(a, b) || (post && a.is_gen() && b.is_gen() && a != b)
}

/// Membership in `E` for pre-Lie (`post = false`) or post-Lie input.
pub fn is_env_basis(w: &Word, post: bool) -> bool {
    if let Some(u) = w.r_arg() {
        return is_env_basis(u, post);
    }
    if w.is_gen() {
        return true;
    }
    w.all_r_args(&mut |u| !u.is_gen() && is_env_basis(u, post))
        && is_pcls_with(w, &env_adjacent(post))
}

/// `E` within `deg <= max_deg`, `rdeg <= max_rdeg` (arguments bounded
/// recursively), sorted descending. Depends only on the size of `X` and the
/// kind, never on the structure constants.
pub fn enum_env_basis(
    alphabet: &Alphabet,
    post: bool,
    max_deg: usize,
    max_rdeg: usize,
) -> Vec<Word> {
    let adj = env_adjacent(post);
    enum_layered(
        alphabet,
        max_deg,
        max_rdeg,
        |_| true,
        |w| w.is_letter() || (w.all_r_args(&mut |u| !u.is_gen()) && is_pcls_with(w, &adj)),
    )
}

pub struct EnvRules {
    alg: StructureAlgebra,
    post: bool,
    weight: Q,
}

impl EnvRules {
    /// `R(x)*z` for a generator `x` and a word `z` that is not an `R`-letter.
    fn act(&self, eng: &Engine<Self>, rx: &Word, x: usize, z: &Word) -> Result<LinComb> {
        if let Some(y) = z.gen_rank() {
            return Ok(self.alg.dot_entry(x, y).clone());
        }
        let (z1, z2) = z.split().expect("z is a bracket");
        let s1 = eng.product(rx, z1)?;
        let mut out = eng.mul_inner(&s1, &LinComb::word(z2.clone()))?;
        let s2 = eng.product(rx, z2)?;
        out += &eng.mul_inner(&LinComb::word(z1.clone()), &s2)?;
        Ok(out)
    }
}

impl Rules for EnvRules {
    fn special(&self, eng: &Engine<Self>, u: &Word, v: &Word) -> Option<Result<LinComb>> {
        if let (Some(a), Some(b)) = (u.r_arg(), v.r_arg()) {
            return Some(eng.rb_compose(a, b, &self.weight));
        }
        if let Some(x) = r_of_generator(u) {
            return Some(self.act(eng, u, x, v));
        }
        if let Some(x) = r_of_generator(v) {
            return Some(self.act(eng, v, x, u).map(|p| -p));
        }
        if self.post {
            if let (Some(i), Some(j)) = (u.gen_rank(), v.gen_rank()) {
                return Some(Ok(self.alg.bracket_entry(i, j).clone()));
            }
        }
        None
    }

    fn is_basis_bracket(&self, u: &Word, v: &Word) -> bool {
        ls_bracket_ok(u, v) && pcls_bracket_ok(u, v, env_adjacent(self.post))
    }
}

/// `U_RB(L)` for a validated pre-Lie or post-Lie algebra `L`.
pub struct Enveloping {
    engine: Engine<EnvRules>,
}

impl Enveloping {
    pub fn new(alg: StructureAlgebra) -> Result<Self> {
        let (post, weight) = match alg.kind() {
            Kind::Pre => (false, Weight::Zero),
            Kind::Post => (true, Weight::One),
            Kind::Lie => {
                return Err(Error::Invalid(
                    "enveloping algebras need a pre-Lie or post-Lie algebra".into(),
                ))
            }
        };
        alg.validate()?;
        Ok(Enveloping {
            engine: Engine::new(EnvRules {
                alg,
                post,
                weight: weight.as_q(),
            }),
        })
    }

    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.engine = self.engine.with_fuel(fuel);
        self
    }

    /// Memo entries kept between top-level products.
    pub fn with_cache_limit(mut self, entries: usize) -> Self {
        self.engine = self.engine.with_cache_limit(entries);
        self
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.engine.rules().alg
    }

    pub fn is_post(&self) -> bool {
        self.engine.rules().post
    }

    pub fn engine(&self) -> &Engine<EnvRules> {
        &self.engine
    }

    pub fn env_mult(&self, u: &Word, v: &Word) -> Result<LinComb> {
        self.engine.mul_words(u, v)
    }

    /// Image in `span(E)` of an arbitrary word over `X` and `R`.
    pub fn reduce_to_env(&self, w: &Word) -> Result<LinComb> {
        self.evaluate(w)
    }

    /// `L -> U_RB(L)`: basis letters map to themselves.
    pub fn embed(&self, a: &LinComb) -> Result<LinComb> {
        for w in a.words() {
            if !matches!(w.gen_rank(), Some(i) if i < self.algebra().dim()) {
                return Err(Error::NotBasis(format!("{w:?} is not an element of L")));
            }
        }
        Ok(a.clone())
    }

    /// Counts of basis words per `(deg, rdeg)`.
    pub fn pbw_table(&self, max_deg: usize, max_rdeg: usize) -> BTreeMap<(usize, usize), usize> {
        pbw_counts(&self.basis(max_deg, max_rdeg))
    }
}

pub fn pbw_counts(words: &[Word]) -> BTreeMap<(usize, usize), usize> {
    let mut t = BTreeMap::new();
    for w in words {
        *t.entry((w.deg(), w.rdeg())).or_insert(0) += 1;
    }
    t
}

impl LieAlgebra for Enveloping {
    fn alphabet(&self) -> &Alphabet {
        self.algebra().basis()
    }

    fn mul(&self, a: &LinComb, b: &LinComb) -> Result<LinComb> {
        self.engine.mul(a, b)
    }

    fn is_basis(&self, w: &Word) -> bool {
        w.letters()
            .iter()
            .all(|l| l.gen_rank().is_none_or(|i| i < self.algebra().dim()))
            && is_env_basis(w, self.is_post())
    }

    fn basis(&self, max_deg: usize, max_rdeg: usize) -> Vec<Word> {
        enum_env_basis(self.alphabet(), self.is_post(), max_deg, max_rdeg)
    }

    fn weight(&self) -> Option<Weight> {
        Some(if self.is_post() {
            Weight::One
        } else {
            Weight::Zero
        })
    }

    fn apply_r(&self, x: &LinComb) -> Result<LinComb> {
        Ok(apply_r(x))
    }
}

/// The leading-term shape of a product `u*v`: every word has degree at most
/// `deg u + deg v` and `R`-degree at most `rdeg u + rdeg v`, and every word of
/// top degree is a bracket `[w1,w2]` with `w2 >= min(u,v)`. With
/// `same_letters`, top-degree words also use only letters of `u` and `v`.
pub fn graded_shape_ok(u: &Word, v: &Word, product: &LinComb, same_letters: bool) -> bool {
    let top = u.deg() + v.deg();
    let rtop = u.rdeg() + v.rdeg();
    let min = if u < v { u } else { v };
    product.words().all(|w| {
        if w.deg() > top || w.rdeg() > rtop {
            return false;
        }
        if w.deg() < top {
            return true;
        }
        let Some((_, w2)) = w.split() else {
            return false;
        };
        if compare_letter_seqs(w2.letters(), min.letters()) == std::cmp::Ordering::Less {
            return false;
        }
        !same_letters
            || w.letters()
                .iter()
                .all(|l| u.letters().contains(l) || v.letters().contains(l))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_expr, parse_word};
    use crate::structure::from_tables;

    fn one_dim() -> Enveloping {
        Enveloping::new(from_tables(&["e"], Kind::Pre, &[(0, 0, &[(0, 1)])], &[]).unwrap()).unwrap()
    }

    #[test]
    fn membership() {
        let al = Alphabet::parse("a,b").unwrap();
        let w = |s: &str| parse_word(s, &al).unwrap();
        assert!(is_env_basis(&w("[a,b]"), false));
        assert!(!is_env_basis(&w("[a,b]"), true));
        assert!(is_env_basis(&w("R(a)"), false));
        assert!(!is_env_basis(&w("[R(a),b]"), false));
        assert!(is_env_basis(&w("[R(R(a)),b]"), false));
        assert!(is_env_basis(&w("[R(R(a)),b]"), true));
        assert!(!is_env_basis(&w("[R(R(a)),[a,b]]"), true));
    }

    #[test]
    fn enumeration_examples() {
        let e = Alphabet::parse("e").unwrap();
        let show = |ws: Vec<Word>| ws.iter().map(|w| e.show(w)).collect::<Vec<_>>();
        assert_eq!(
            show(enum_env_basis(&e, false, 1, 2)),
            ["R(R(e))", "R(e)", "e"]
        );
        assert_eq!(
            show(enum_env_basis(&e, false, 2, 2)),
            ["R(R(e))", "[R(R(e)),e]", "R(e)", "e"]
        );
        let ab = Alphabet::parse("a,b").unwrap();
        assert_eq!(enum_env_basis(&ab, true, 2, 0), ab.letters());
    }

    #[test]
    fn one_dimensional_products() {
        let env = one_dim();
        let al = env.alphabet().clone();
        let w = |s: &str| parse_word(s, &al).unwrap();
        let p = |s: &str| parse_expr(s, &al).unwrap();
        assert_eq!(env.env_mult(&w("R(e)"), &w("e")).unwrap(), p("e"));
        assert!(env.env_mult(&w("R(e)"), &w("R(e)")).unwrap().is_zero());
        assert_eq!(
            env.env_mult(&w("R(R(e))"), &w("e")).unwrap(),
            p("[R(R(e)),e]")
        );
        assert_eq!(env.reduce_to_env(&w("[R(e),e]")).unwrap(), p("e"));
        assert_eq!(env.reduce_to_env(&w("R([R(e),e])")).unwrap(), p("R(e)"));
        assert_eq!(
            env.reduce_to_env(&w("[R(R(e)),e]")).unwrap(),
            p("[R(R(e)),e]")
        );
        assert_eq!(env.embed(&p("e")).unwrap(), p("e"));
        assert!(env.embed(&p("R(e)")).is_err());
    }

    #[test]
    fn pbw_counts_one_dim() {
        let env = one_dim();
        let t = env.pbw_table(2, 2);
        assert_eq!(t.get(&(1, 1)), Some(&1));
        assert_eq!(t.get(&(2, 2)), Some(&1));
    }

    #[test]
    fn lie_kind_is_rejected() {
        let lie = from_tables(&["e"], Kind::Lie, &[], &[]).unwrap();
        assert!(Enveloping::new(lie).is_err());
    }
}
