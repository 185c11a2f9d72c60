//! Partially commutative Lyndon-Shirshov words and the partially
//! commutative Lie algebra `Lie(G)`, where `[x,y] = 0` for every edge of `G`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::algebra::LieAlgebra;
use crate::engine::{ls_bracket_ok, pcls_bracket_ok, Engine, Rules};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::ls::{enum_ls, is_assoc_ls};
use crate::word::{compare_letter_seqs, Alphabet, Word};

/// An undirected graph without loops over the generators of an alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommGraph {
    vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl CommGraph {
    pub fn empty(vertices: usize) -> Self {
        CommGraph {
            vertices,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(vertices: usize) -> Self {
        let mut g = Self::empty(vertices);
        for i in 0..vertices {
            for j in i + 1..vertices {
                g.edges.insert((i, j));
            }
        }
        g
    }

    /// Adds an edge; loops are rejected and duplicates ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.vertices || b >= self.vertices {
            return Err(Error::Graph {
                line: 0,
                message: format!("vertex out of range in edge ({a},{b})"),
            });
        }
        if a == b {
            return Err(Error::Graph {
                line: 0,
                message: "loops are not allowed".into(),
            });
        }
        self.edges.insert((a.min(b), a.max(b)));
        Ok(())
    }

    pub fn with_edges(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(vertices);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Adjacency of two letters; only generators carry edges.
    pub fn adjacent(&self, a: &Word, b: &Word) -> bool {
        match (a.gen_rank(), b.gen_rank()) {
            (Some(i), Some(j)) => i != j && self.has_edge(i, j),
            _ => false,
        }
    }

    /// Parses the line format `edge <name> <name>`; `#` starts a comment.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let mut g = Self::empty(alphabet.len());
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Graph {
                line: n + 1,
                message,
            };
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["edge", x, y] => {
                    let a = alphabet
                        .rank(x)
                        .ok_or_else(|| err(format!("unknown vertex `{x}`")))?;
                    let b = alphabet
                        .rank(y)
                        .ok_or_else(|| err(format!("unknown vertex `{y}`")))?;
                    if a == b {
                        return Err(err("loops are not allowed".into()));
                    }
                    g.edges.insert((a.min(b), a.max(b)));
                }
                _ => return Err(err(format!("expected `edge <name> <name>`, got `{line}`"))),
            }
        }
        Ok(g)
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        self.edges
            .iter()
            .map(|&(a, b)| format!("edge {} {}\n", alphabet.name(a), alphabet.name(b)))
            .collect()
    }
}

/// PCLS test for an arbitrary adjacency relation on letters.
pub(crate) fn is_pcls_with(w: &Word, adjacent: &impl Fn(&Word, &Word) -> bool) -> bool {
    match w.split() {
        None => true,
        Some((u, v)) => {
            is_pcls_with(u, adjacent)
                && is_pcls_with(v, adjacent)
                && compare_letter_seqs(u.letters(), v.letters()) == Ordering::Greater
                && ls_bracket_ok(u, v)
                && pcls_bracket_ok(u, v, adjacent)
                && is_assoc_ls(w.letters())
        }
    }
}

/// Whether `w` is a PCLS word for `g`.
pub fn is_pcls(w: &Word, g: &CommGraph) -> Result<bool> {
    for l in w.letters() {
        match l.gen_rank() {
            Some(i) if i < g.vertices() => {}
            _ => {
                return Err(Error::NotBasis(format!(
                    "letter {l:?} is not a vertex of the graph"
                )))
            }
        }
    }
    Ok(is_pcls_with(w, &|a, b| g.adjacent(a, b)))
}

/// All PCLS words of degree `<= max_deg`, sorted descending.
pub fn enum_pcls(alphabet: &Alphabet, g: &CommGraph, max_deg: usize) -> Vec<Word> {
    enum_ls(alphabet, max_deg)
        .into_iter()
        .filter(|w| is_pcls_with(w, &|a, b| g.adjacent(a, b)))
        .collect()
}

#[derive(Clone, Debug)]
pub struct PcRules {
    graph: CommGraph,
}

impl Rules for PcRules {
    fn special(&self, _: &Engine<Self>, u: &Word, v: &Word) -> Option<Result<LinComb>> {
        if self.graph.adjacent(u, v) {
            return Some(Ok(LinComb::zero()));
        }
        None
    }

    fn is_basis_bracket(&self, u: &Word, v: &Word) -> bool {
        ls_bracket_ok(u, v) && pcls_bracket_ok(u, v, |a, b| self.graph.adjacent(a, b))
    }
}

/// The partially commutative Lie algebra `Lie(G)` in the PCLS basis.
pub struct PcLie {
    alphabet: Alphabet,
    engine: Engine<PcRules>,
}

impl PcLie {
    pub fn new(alphabet: Alphabet, graph: CommGraph) -> Result<Self> {
        if graph.vertices() != alphabet.len() {
            return Err(Error::Graph {
                line: 0,
                message: "graph and alphabet sizes differ".into(),
            });
        }
        Ok(PcLie {
            alphabet,
            engine: Engine::new(PcRules { graph }),
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn graph(&self) -> &CommGraph {
        &self.engine.rules().graph
    }

    pub fn engine(&self) -> &Engine<PcRules> {
        &self.engine
    }

    pub fn pc_mult(&self, u: &Word, v: &Word) -> Result<LinComb> {
        self.engine.mul_words(u, v)
    }

    pub fn mul(&self, a: &LinComb, b: &LinComb) -> Result<LinComb> {
        self.engine.mul(a, b)
    }
}

impl LieAlgebra for PcLie {
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
            && is_pcls_with(w, &|a, b| self.graph().adjacent(a, b))
    }

    fn basis(&self, max_deg: usize, _max_rdeg: usize) -> Vec<Word> {
        enum_pcls(&self.alphabet, self.graph(), max_deg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_word;

    fn abc() -> Alphabet {
        Alphabet::parse("a,b,c").unwrap()
    }

    fn w(s: &str) -> Word {
        parse_word(s, &abc()).unwrap()
    }

    #[test]
    fn membership() {
        let empty = CommGraph::empty(3);
        let ab = CommGraph::with_edges(3, &[(0, 1)]).unwrap();
        assert!(is_pcls(&w("b"), &ab).unwrap());
        assert!(!is_pcls(&w("[a,b]"), &ab).unwrap());
        assert!(is_pcls(&w("[a,b]"), &empty).unwrap());
        assert!(is_pcls(&Word::gen(5), &empty).is_err());
    }

    #[test]
    fn enumeration_specializations() {
        let al = abc();
        assert_eq!(enum_pcls(&al, &CommGraph::complete(3), 4), al.letters());
        assert_eq!(enum_pcls(&al, &CommGraph::empty(3), 4), enum_ls(&al, 4));
        let path = CommGraph::with_edges(3, &[(0, 1)]).unwrap();
        let d2 = enum_pcls(&al, &path, 2);
        assert_eq!(d2, vec![w("a"), w("[a,c]"), w("b"), w("[b,c]"), w("c")]);
    }

    #[test]
    fn products() {
        let al = abc();
        let g = CommGraph::with_edges(3, &[(0, 1)]).unwrap();
        let pc = PcLie::new(al.clone(), g).unwrap();
        assert!(pc.pc_mult(&w("a"), &w("b")).unwrap().is_zero());
        let free = PcLie::new(al.clone(), CommGraph::empty(3)).unwrap();
        assert_eq!(
            free.pc_mult(&w("a"), &w("b")).unwrap(),
            LinComb::word(w("[a,b]"))
        );
        let g2 = CommGraph::with_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let pc2 = PcLie::new(al, g2).unwrap();
        assert!(pc2.pc_mult(&w("[a,c]"), &w("b")).unwrap().is_zero());
    }

    #[test]
    fn graph_file_round_trip() {
        let al = abc();
        let g = CommGraph::parse("# path\nedge a b\nedge c b\n", &al).unwrap();
        assert!(g.has_edge(1, 2));
        assert_eq!(CommGraph::parse(&g.format(&al), &al).unwrap(), g);
        assert!(CommGraph::parse("edge a d", &al).is_err());
        assert!(CommGraph::parse("edge a a", &al).is_err());
        assert!(CommGraph::parse("vertex a", &al).is_err());
    }
}
