//! Nonassociative words over a finite alphabet extended by the operator symbol `R`.
//!
//! A [`Word`] is an immutable, reference-counted tree. Leaves are generators,
//! `R(w)` nodes are single letters of the extended alphabet, and `[u,v]` nodes
//! are brackets. Every word caches its degree, its `R`-degree, a structural hash
//! and its flattened letter sequence, so ordering and hashing are cheap.
//!
//! Words built on the same thread are hash-consed: structurally equal words
//! share one node, so equality and the common-prefix scan of the order are
//! usually pointer comparisons. Words from different threads still compare
//! correctly, only more slowly.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{BuildHasherDefault, Hash, Hasher};
use std::sync::{Arc, Weak};

use crate::error::{Error, Result};

/// An ordered finite set of generator names.
///
/// Generators are declared in decreasing order: the first name is the
/// greatest letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Alphabet("alphabet must not be empty".into()));
        }
        let mut index = HashMap::new();
        let mut out = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref().trim();
            if !is_identifier(n) || n == "R" {
                return Err(Error::Alphabet(format!("invalid generator name `{n}`")));
            }
            if index.insert(n.to_string(), i).is_some() {
                return Err(Error::Alphabet(format!("duplicate generator `{n}`")));
            }
            out.push(n.to_string());
        }
        Ok(Alphabet { names: out, index })
    }

    /// Parses a comma-separated list such as `a,b,c`.
    pub fn parse(list: &str) -> Result<Self> {
        let names: Vec<&str> = list.split(',').map(str::trim).collect();
        Self::new(&names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, rank: usize) -> &str {
        &self.names[rank]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rank(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// All generators as words, greatest first.
    pub fn letters(&self) -> Vec<Word> {
        (0..self.len()).map(Word::gen).collect()
    }

    /// Renders a word in the canonical spelling, e.g. `[R(a),b]`.
    pub fn show(&self, w: &Word) -> String {
        let mut s = String::new();
        self.write_word(&mut s, w).expect("writing to a String");
        s
    }

    pub(crate) fn write_word(&self, out: &mut impl fmt::Write, w: &Word) -> fmt::Result {
        match w.shape() {
            Shape::Gen(i) => out.write_str(self.names.get(*i).map_or("?", String::as_str)),
            Shape::R(u) => {
                out.write_str("R(")?;
                self.write_word(out, u)?;
                out.write_char(')')
            }
            Shape::Br(u, v) => {
                out.write_char('[')?;
                self.write_word(out, u)?;
                out.write_char(',')?;
                self.write_word(out, v)?;
                out.write_char(']')
            }
        }
    }
}

/// The three kinds of word nodes.
#[derive(Clone, Debug)]
pub enum Shape {
    /// A generator, identified by its rank in the alphabet (rank 0 is greatest).
    Gen(usize),
    /// An `R`-letter `R(w)`.
    R(Word),
    /// A bracket `[u,v]`.
    Br(Word, Word),
}

#[derive(Debug)]
struct Node {
    shape: Shape,
    deg: usize,
    rdeg: usize,
    hash: u64,
    // Flattened atoms; empty for atoms themselves.
    letters: Vec<Word>,
}

/// An immutable nonassociative word. Cloning is cheap.
#[derive(Clone)]
pub struct Word(Arc<Node>);

/// A fast deterministic hasher for keys built from words, whose hashes are
/// already well mixed. Deterministic hashing keeps iteration orders, and so
/// every computation, reproducible between runs.
#[derive(Default, Clone, Copy)]
pub struct WordHasher(u64);

impl Hasher for WordHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.write_u64(b as u64);
        }
    }

    fn write_u64(&mut self, x: u64) {
        self.0 = (self.0.rotate_left(5) ^ x).wrapping_mul(0x51_7CC1_B727_220A_95);
    }

    fn write_usize(&mut self, x: usize) {
        self.write_u64(x as u64);
    }
}

pub type BuildWordHasher = BuildHasherDefault<WordHasher>;

/// Interning key: the node kind plus the addresses of its (interned)
/// children. A key can only be reused after its node died, in which case the
/// stale entry no longer upgrades.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Gen(usize),
    R(usize),
    Br(usize, usize),
}

struct Interner {
    table: HashMap<Key, Weak<Node>, BuildWordHasher>,
    purge_at: usize,
}

thread_local! {
    static INTERNER: RefCell<Interner> = RefCell::new(Interner {
        table: HashMap::default(),
        purge_at: 1 << 16,
    });
}

fn addr(w: &Word) -> usize {
    Arc::as_ptr(&w.0) as usize
}

fn intern(key: Key, make: impl FnOnce() -> Node) -> Word {
    INTERNER.with(|cell| {
        let mut i = cell.borrow_mut();
        if let Some(node) = i.table.get(&key).and_then(Weak::upgrade) {
            return Word(node);
        }
        let w = Word(Arc::new(make()));
        i.table.insert(key, Arc::downgrade(&w.0));
        if i.table.len() > i.purge_at {
            i.table.retain(|_, n| n.strong_count() > 0);
            i.purge_at = (2 * i.table.len()).max(1 << 16);
        }
        w
    })
}

fn mix(a: u64, b: u64) -> u64 {
    let mut x = a ^ b.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    x ^= x >> 31;
    x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x ^= x >> 29;
    x
}

impl Word {
    pub fn gen(rank: usize) -> Word {
        intern(Key::Gen(rank), || Node {
            shape: Shape::Gen(rank),
            deg: 1,
            rdeg: 0,
            hash: mix(1, rank as u64),
            letters: Vec::new(),
        })
    }

    /// `R(w)`: a single letter of the extended alphabet.
    pub fn r(arg: Word) -> Word {
        intern(Key::R(addr(&arg)), || Node {
            rdeg: arg.rdeg() + 1,
            hash: mix(2, arg.0.hash),
            shape: Shape::R(arg),
            deg: 1,
            letters: Vec::new(),
        })
    }

    pub fn br(left: Word, right: Word) -> Word {
        intern(Key::Br(addr(&left), addr(&right)), || {
            let mut letters = Vec::with_capacity(left.deg() + right.deg());
            letters.extend_from_slice(left.letters());
            letters.extend_from_slice(right.letters());
            Node {
                deg: left.deg() + right.deg(),
                rdeg: left.rdeg() + right.rdeg(),
                hash: mix(3, mix(left.0.hash, right.0.hash)),
                shape: Shape::Br(left, right),
                letters,
            }
        })
    }

    pub fn shape(&self) -> &Shape {
        &self.0.shape
    }

    /// Length over the extended alphabet; an `R`-letter counts once.
    pub fn deg(&self) -> usize {
        self.0.deg
    }

    /// Number of occurrences of `R`.
    pub fn rdeg(&self) -> usize {
        self.0.rdeg
    }

    pub fn is_letter(&self) -> bool {
        !matches!(self.0.shape, Shape::Br(..))
    }

    pub fn is_gen(&self) -> bool {
        matches!(self.0.shape, Shape::Gen(_))
    }

    pub fn is_r_letter(&self) -> bool {
        matches!(self.0.shape, Shape::R(_))
    }

    pub fn gen_rank(&self) -> Option<usize> {
        match self.0.shape {
            Shape::Gen(i) => Some(i),
            _ => None,
        }
    }

    pub fn r_arg(&self) -> Option<&Word> {
        match &self.0.shape {
            Shape::R(u) => Some(u),
            _ => None,
        }
    }

    pub fn split(&self) -> Option<(&Word, &Word)> {
        match &self.0.shape {
            Shape::Br(u, v) => Some((u, v)),
            _ => None,
        }
    }

    /// The flattened letter sequence (atoms of the extended alphabet).
    pub fn letters(&self) -> &[Word] {
        if self.is_letter() {
            std::slice::from_ref(self)
        } else {
            &self.0.letters
        }
    }

    pub fn first_letter(&self) -> &Word {
        &self.letters()[0]
    }

    /// Whether every `R`-argument (at any depth) satisfies `pred`.
    pub fn all_r_args(&self, pred: &mut impl FnMut(&Word) -> bool) -> bool {
        self.letters().iter().all(|l| match l.r_arg() {
            Some(u) => pred(u),
            None => true,
        })
    }

    fn shape_cmp(&self, other: &Word) -> Ordering {
        match (&self.0.shape, &other.0.shape) {
            (Shape::Br(a, b), Shape::Br(c, d)) => a
                .deg()
                .cmp(&c.deg())
                .then_with(|| a.cmp(c))
                .then_with(|| b.cmp(d)),
            (Shape::Br(..), _) => Ordering::Greater,
            (_, Shape::Br(..)) => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

/// Order on single letters: generators by rank (rank 0 greatest), every
/// generator below every `R`-letter, and `R(u)` vs `R(v)` as `u` vs `v`.
pub fn compare_letters(a: &Word, b: &Word) -> Ordering {
    match (a.shape(), b.shape()) {
        (Shape::Gen(i), Shape::Gen(j)) => j.cmp(i),
        (Shape::Gen(_), _) => Ordering::Less,
        (_, Shape::Gen(_)) => Ordering::Greater,
        (Shape::R(u), Shape::R(v)) => u.cmp(v),
        _ => panic!("compare_letters called on a bracket"),
    }
}

/// Lexicographic order on letter sequences in which a proper prefix is
/// greater than the longer sequence.
pub fn compare_letter_seqs(a: &[Word], b: &[Word]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if Arc::ptr_eq(&x.0, &y.0) {
            continue;
        }
        match compare_letters(x, y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    b.len().cmp(&a.len())
}

impl Ord for Word {
    /// Compares flattened letter sequences; words with the same flattening
    /// (different bracketings) are ordered by shape so the order is total.
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        compare_letter_seqs(self.letters(), other.letters()).then_with(|| self.shape_cmp(other))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        if self.0.hash != other.0.hash || self.0.deg != other.0.deg || self.0.rdeg != other.0.rdeg {
            return false;
        }
        match (&self.0.shape, &other.0.shape) {
            (Shape::Gen(i), Shape::Gen(j)) => i == j,
            (Shape::R(u), Shape::R(v)) => u == v,
            (Shape::Br(a, b), Shape::Br(c, d)) => a == c && b == d,
            _ => false,
        }
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape() {
            Shape::Gen(i) => write!(f, "x{i}"),
            Shape::R(u) => write!(f, "R({u:?})"),
            Shape::Br(u, v) => write!(f, "[{u:?},{v:?}]"),
        }
    }
}
