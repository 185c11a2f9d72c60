//! The free Lie Rota-Baxter algebra of weight 0 or 1 in its standard basis.
//!
//! Basis words are PCLS words over `X` together with the `R`-letters
//! `R(w)`, `w` a basis word, for the commutativity graph that is a clique on
//! the `R`-letters and has no other edges. The basis does not depend on the
//! weight; only the product does.

use crate::algebra::{LieAlgebra, Weight};
use crate::engine::{apply_r, ls_bracket_ok, pcls_bracket_ok, Engine, Rules};
use crate::error::Result;
use crate::lincomb::{LinComb, Q};
use crate::ls::assoc_ls_sequences;
use crate::pcls::is_pcls_with;
use crate::word::{Alphabet, Word};

/// Two distinct `R`-letters commute in the leading term.
pub(crate) fn r_clique(a: &Word, b: &Word) -> bool {
    a.is_r_letter() && b.is_r_letter() && a != b
}

/// Whether `w` belongs to the standard basis.
pub fn is_free_basis(w: &Word) -> bool {
    if let Some(u) = w.r_arg() {
        return is_free_basis(u);
    }
    w.all_r_args(&mut |u| is_free_basis(u)) && is_pcls_with(w, &r_clique)
}

/// Layered enumeration: PCLS words over `letters(r)` where `letters(r)`
/// adds `R(w)` for every word `w` found with budget `r - 1`.
pub(crate) fn enum_layered(
    alphabet: &Alphabet,
    max_deg: usize,
    max_rdeg: usize,
    r_arg_ok: impl Fn(&Word) -> bool,
    keep: impl Fn(&Word) -> bool,
) -> Vec<Word> {
    if max_deg == 0 {
        return Vec::new();
    }
    let mut layer: Vec<Word> = Vec::new();
    for r in 0..=max_rdeg {
        let mut letters = alphabet.letters();
        letters.extend(
            layer
                .iter()
                .filter(|w| r_arg_ok(w))
                .map(|w| Word::r(w.clone())),
        );
        layer = assoc_ls_sequences(&letters, max_deg, r)
            .iter()
            .map(|s| crate::ls::standard_bracketing(s).expect("sequence is LS"))
            .filter(|w| keep(w))
            .collect();
    }
    layer.sort_by(|a, b| b.cmp(a));
    layer
}

/// Standard basis words with `deg <= max_deg` and `rdeg <= max_rdeg`;
/// arguments of `R`-letters obey the same degree bound.
pub fn enum_free_basis(alphabet: &Alphabet, max_deg: usize, max_rdeg: usize) -> Vec<Word> {
    enum_layered(
        alphabet,
        max_deg,
        max_rdeg,
        |_| true,
        |w| w.is_letter() || is_pcls_with(w, &r_clique),
    )
}

#[derive(Clone, Debug)]
pub struct FreeRbRules {
    weight: Q,
}

impl Rules for FreeRbRules {
    fn special(&self, eng: &Engine<Self>, u: &Word, v: &Word) -> Option<Result<LinComb>> {
        match (u.r_arg(), v.r_arg()) {
            (Some(a), Some(b)) => Some(eng.rb_compose(a, b, &self.weight)),
            _ => None,
        }
    }

    fn is_basis_bracket(&self, u: &Word, v: &Word) -> bool {
        ls_bracket_ok(u, v) && pcls_bracket_ok(u, v, r_clique)
    }
}

/// `RBLie<X>` of a fixed weight.
pub struct FreeRbLie {
    alphabet: Alphabet,
    weight: Weight,
    engine: Engine<FreeRbRules>,
}

impl FreeRbLie {
    pub fn new(alphabet: Alphabet, weight: Weight) -> Self {
        FreeRbLie {
            alphabet,
            weight,
            engine: Engine::new(FreeRbRules {
                weight: weight.as_q(),
            }),
        }
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

    pub fn engine(&self) -> &Engine<FreeRbRules> {
        &self.engine
    }

    pub fn rb_mult(&self, u: &Word, v: &Word) -> Result<LinComb> {
        self.engine.mul_words(u, v)
    }
}

impl LieAlgebra for FreeRbLie {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn mul(&self, a: &LinComb, b: &LinComb) -> Result<LinComb> {
        self.engine.mul(a, b)
    }

    fn is_basis(&self, w: &Word) -> bool {
        w.letters()
            .iter()
            .all(|l| l.gen_rank().is_none_or(|i| i < self.alphabet.len()))
            && is_free_basis(w)
    }

    fn basis(&self, max_deg: usize, max_rdeg: usize) -> Vec<Word> {
        enum_free_basis(&self.alphabet, max_deg, max_rdeg)
    }

    fn weight(&self) -> Option<Weight> {
        Some(self.weight)
    }

    fn apply_r(&self, x: &LinComb) -> Result<LinComb> {
        Ok(apply_r(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::q;
    use crate::parse::{parse_expr, parse_word};

    fn al(s: &str) -> Alphabet {
        Alphabet::parse(s).unwrap()
    }

    #[test]
    fn membership() {
        let al = al("x1,x2,x3,x4");
        let w = parse_word("[[R(R(x1)),x2],[R(x3),x4]]", &al).unwrap();
        assert!(is_free_basis(&w));
        let al = self::al("a,b,c,d");
        assert!(!is_free_basis(&parse_word("[R(a),R(b)]", &al).unwrap()));
        assert!(!is_free_basis(&parse_word("R([b,a])", &al).unwrap()));
        assert!(is_free_basis(&parse_word("R([R(a),b])", &al).unwrap()));
    }

    #[test]
    fn enumeration_examples() {
        let a = al("a");
        let show = |ws: Vec<Word>, al: &Alphabet| ws.iter().map(|w| al.show(w)).collect::<Vec<_>>();
        assert_eq!(
            show(enum_free_basis(&a, 1, 2), &a),
            ["R(R(a))", "R(a)", "a"]
        );
        assert_eq!(
            show(enum_free_basis(&a, 2, 1), &a),
            ["R(a)", "[R(a),a]", "a"]
        );
        let ab = al("a,b");
        assert_eq!(show(enum_free_basis(&ab, 2, 0), &ab), ["a", "[a,b]", "b"]);
    }

    #[test]
    fn products_of_r_letters() {
        let ab = al("a,b");
        let p = |s: &str| parse_expr(s, &ab).unwrap();
        let zero = FreeRbLie::new(ab.clone(), Weight::Zero);
        assert_eq!(zero.mul(&p("R(a)"), &p("b")).unwrap(), p("[R(a),b]"));
        assert_eq!(
            zero.mul(&p("R(a)"), &p("R(b)")).unwrap(),
            p("R([R(a),b]) - R([R(b),a])")
        );
        let one = FreeRbLie::new(ab.clone(), Weight::One);
        assert_eq!(
            one.mul(&p("R(a)"), &p("R(b)")).unwrap(),
            p("R([R(a),b]) - R([R(b),a]) + R([a,b])")
        );
    }

    #[test]
    fn apply_r_is_linear() {
        let ab = al("a,b");
        let rb = FreeRbLie::new(ab.clone(), Weight::Zero);
        let p = |s: &str| parse_expr(s, &ab).unwrap();
        assert_eq!(rb.apply_r(&p("a")).unwrap(), p("R(a)"));
        assert!(rb.apply_r(&LinComb::zero()).unwrap().is_zero());
        assert_eq!(rb.apply_r(&p("2*[R(a),b]")).unwrap(), p("2*R([R(a),b])"));
        let _ = q(0);
    }

    #[test]
    fn bounded_cache_gives_same_products() {
        let ab = al("a,b");
        let p = |s: &str| parse_expr(s, &ab).unwrap();
        let big = FreeRbLie::new(ab.clone(), Weight::One);
        let mut small = FreeRbLie::new(ab.clone(), Weight::One);
        small.engine = Engine::new(FreeRbRules { weight: q(1) }).with_cache_limit(0);
        for (x, y) in [
            ("R([R(a),b])", "R(R(b))"),
            ("[R(a),b]", "R(a)"),
            ("R(a)", "R(b)"),
        ] {
            assert_eq!(
                big.mul(&p(x), &p(y)).unwrap(),
                small.mul(&p(x), &p(y)).unwrap()
            );
        }
    }

    #[test]
    fn tiny_fuel_is_reported() {
        let ab = al("a,b");
        let rb = FreeRbLie::new(ab.clone(), Weight::Zero).with_fuel(2);
        let p = |s: &str| parse_expr(s, &ab).unwrap();
        let err = rb.mul(&p("R([R(a),b])"), &p("R(R(b))")).unwrap_err();
        assert!(matches!(err, crate::error::Error::FuelExhausted { .. }));
    }
}
