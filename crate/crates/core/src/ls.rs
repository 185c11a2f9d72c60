//! Lyndon-Shirshov words and the free Lie algebra.
//!
//! Under the word order used throughout the crate (proper prefixes are
//! greater), an associative LS word is strictly greater than each of its
//! proper rotations, and it carries exactly one bracketing that is an
//! LS word. The free Lie product is computed by the straightening engine.

use std::cmp::Ordering;

use crate::algebra::LieAlgebra;
use crate::engine::{ls_bracket_ok, Engine, Rules};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::word::{compare_letter_seqs, compare_letters, Alphabet, Word};

/// Compares `seq` with its rotation starting at `k` without allocating.
fn cmp_with_rotation(seq: &[Word], k: usize) -> Ordering {
    let n = seq.len();
    for i in 0..n {
        match compare_letters(&seq[i], &seq[(i + k) % n]) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

/// Whether `seq` is strictly greater than every proper rotation.
pub fn is_assoc_ls(seq: &[Word]) -> bool {
    !seq.is_empty() && (1..seq.len()).all(|k| cmp_with_rotation(seq, k) == Ordering::Greater)
}

/// Whether `w` is a nonassociative LS word (conditions LS1-LS3, recursively).
pub fn is_ls(w: &Word) -> bool {
    match w.split() {
        None => true,
        Some((u, v)) => {
            is_ls(u)
                && is_ls(v)
                && compare_letter_seqs(u.letters(), v.letters()) == Ordering::Greater
                && ls_bracket_ok(u, v)
                && is_assoc_ls(w.letters())
        }
    }
}

/// The unique LS bracketing of an associative LS word. The right factor is
/// the longest proper suffix that is itself an LS word.
pub fn standard_bracketing(seq: &[Word]) -> Result<Word> {
    if !is_assoc_ls(seq) {
        return Err(Error::NotBasis(format!(
            "{seq:?} is not an associative Lyndon-Shirshov word"
        )));
    }
    Ok(bracket_ls(seq))
}

fn bracket_ls(seq: &[Word]) -> Word {
    if seq.len() == 1 {
        return seq[0].clone();
    }
    let split = (1..seq.len())
        .find(|&i| is_assoc_ls(&seq[i..]))
        .expect("a single letter is always an LS suffix");
    Word::br(bracket_ls(&seq[..split]), bracket_ls(&seq[split..]))
}

/// All associative LS sequences over `letters` of length `<= max_len` whose
/// total `R`-degree is `<= max_rdeg`.
pub(crate) fn assoc_ls_sequences(
    letters: &[Word],
    max_len: usize,
    max_rdeg: usize,
) -> Vec<Vec<Word>> {
    let mut sorted: Vec<Word> = letters.to_vec();
    sorted.sort_by(|a, b| compare_letters(b, a));
    sorted.dedup();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for first in 0..sorted.len() {
        if sorted[first].rdeg() > max_rdeg {
            continue;
        }
        cur.push(sorted[first].clone());
        extend(
            &sorted,
            first,
            max_len,
            max_rdeg - sorted[first].rdeg(),
            &mut cur,
            &mut out,
        );
        cur.pop();
    }
    out
}

// An LS word begins with its greatest letter, so later letters come from
// `sorted[first..]`.
fn extend(
    sorted: &[Word],
    first: usize,
    max_len: usize,
    budget: usize,
    cur: &mut Vec<Word>,
    out: &mut Vec<Vec<Word>>,
) {
    if is_assoc_ls(cur) {
        out.push(cur.clone());
    }
    if cur.len() == max_len {
        return;
    }
    for l in &sorted[first..] {
        if l.rdeg() > budget {
            continue;
        }
        cur.push(l.clone());
        extend(sorted, first, max_len, budget - l.rdeg(), cur, out);
        cur.pop();
    }
}

/// LS words over arbitrary letters, sorted descending.
pub fn enum_ls_over(letters: &[Word], max_deg: usize) -> Vec<Word> {
    let mut out: Vec<Word> = assoc_ls_sequences(letters, max_deg, usize::MAX)
        .iter()
        .map(|s| bracket_ls(s))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// All LS words over the alphabet of degree `<= max_deg`, sorted descending.
pub fn enum_ls(alphabet: &Alphabet, max_deg: usize) -> Vec<Word> {
    enum_ls_over(&alphabet.letters(), max_deg)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct LieRules;

impl Rules for LieRules {
    fn special(&self, _: &Engine<Self>, _: &Word, _: &Word) -> Option<Result<LinComb>> {
        None
    }

    fn is_basis_bracket(&self, u: &Word, v: &Word) -> bool {
        ls_bracket_ok(u, v)
    }
}

/// The free Lie algebra on an alphabet, in the LS basis.
pub struct FreeLie {
    alphabet: Alphabet,
    engine: Engine<LieRules>,
}

impl FreeLie {
    pub fn new(alphabet: Alphabet) -> Self {
        FreeLie {
            alphabet,
            engine: Engine::new(LieRules),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn engine(&self) -> &Engine<LieRules> {
        &self.engine
    }

    /// The Lie product of two LS words.
    pub fn lie_mult(&self, u: &Word, v: &Word) -> Result<LinComb> {
        self.engine.mul_words(u, v)
    }

    pub fn mul(&self, a: &LinComb, b: &LinComb) -> Result<LinComb> {
        self.engine.mul(a, b)
    }
}

impl LieAlgebra for FreeLie {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn mul(&self, a: &LinComb, b: &LinComb) -> Result<LinComb> {
        self.engine.mul(a, b)
    }

    fn is_basis(&self, w: &Word) -> bool {
        w.rdeg() == 0
            && w.letters()
                .iter()
                .all(|l| l.gen_rank().is_some_and(|i| i < self.alphabet.len()))
            && is_ls(w)
    }

    /// `R`-degree is always zero here, so `max_rdeg` is ignored.
    fn basis(&self, max_deg: usize, _max_rdeg: usize) -> Vec<Word> {
        enum_ls(&self.alphabet, max_deg)
    }
}
