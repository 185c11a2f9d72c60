//! Property sweeps over basis samples.
//!
//! A [`Sweep`] combines every triple (or pair) of basis words inside small
//! exhaustive bounds with a seeded random sample drawn from larger bounds.
//! Samples are drawn as indices into the descending basis list with
//! [`XorShift64Star::below`], so identical seeds give identical reports.

use std::collections::BTreeMap;

use crate::algebra::{LieAlgebra, Weight};
use crate::enveloping::{graded_shape_ok, pbw_counts, Enveloping};
use crate::error::{Error, Result};
use crate::free_rb::{enum_free_basis, FreeRbLie};
use crate::identities::{self, Report};
use crate::lincomb::LinComb;
use crate::ls::{enum_ls, is_assoc_ls, is_ls, standard_bracketing, FreeLie};
use crate::pcls::{enum_pcls, CommGraph, PcLie};
use crate::rng::XorShift64Star;
use crate::structure::derived_structure;
use crate::word::{Alphabet, Word};

pub type Pair = (LinComb, LinComb);
pub type Triple = (LinComb, LinComb, LinComb);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sweep {
    /// `(max_deg, max_rdeg)` of the exhaustive part.
    pub exhaustive: (usize, usize),
    /// `(max_deg, max_rdeg)` the random samples are drawn from.
    pub sampled: (usize, usize),
    pub samples: usize,
    pub seed: u64,
}

impl Default for Sweep {
    fn default() -> Self {
        Sweep {
            exhaustive: (2, 1),
            sampled: (3, 2),
            samples: 500,
            seed: 1,
        }
    }
}

fn lc(w: &Word) -> LinComb {
    LinComb::word(w.clone())
}

pub fn all_pairs(words: &[Word]) -> Vec<Pair> {
    let mut out = Vec::with_capacity(words.len() * words.len());
    for a in words {
        for b in words {
            out.push((lc(a), lc(b)));
        }
    }
    out
}

pub fn all_triples(words: &[Word]) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in words {
        for b in words {
            for c in words {
                out.push((lc(a), lc(b), lc(c)));
            }
        }
    }
    out
}

pub fn sample_pairs(words: &[Word], n: usize, rng: &mut XorShift64Star) -> Vec<Pair> {
    if words.is_empty() {
        return Vec::new();
    }
    (0..n)
        .map(|_| {
            let a = rng.below(words.len());
            let b = rng.below(words.len());
            (lc(&words[a]), lc(&words[b]))
        })
        .collect()
}

pub fn sample_triples(words: &[Word], n: usize, rng: &mut XorShift64Star) -> Vec<Triple> {
    if words.is_empty() {
        return Vec::new();
    }
    (0..n)
        .map(|_| {
            let a = rng.below(words.len());
            let b = rng.below(words.len());
            let c = rng.below(words.len());
            (lc(&words[a]), lc(&words[b]), lc(&words[c]))
        })
        .collect()
}

impl Sweep {
    pub fn pairs(&self, alg: &dyn LieAlgebra) -> Vec<Pair> {
        let (d, r) = self.exhaustive;
        let mut out = all_pairs(&alg.basis(d, r));
        let (d, r) = self.sampled;
        let mut rng = XorShift64Star::new(self.seed);
        out.extend(sample_pairs(&alg.basis(d, r), self.samples, &mut rng));
        out
    }

    pub fn triples(&self, alg: &dyn LieAlgebra) -> Vec<Triple> {
        let (d, r) = self.exhaustive;
        let mut out = all_triples(&alg.basis(d, r));
        let (d, r) = self.sampled;
        let mut rng = XorShift64Star::new(self.seed);
        out.extend(sample_triples(&alg.basis(d, r), self.samples, &mut rng));
        out
    }
}

fn mul_of(alg: &dyn LieAlgebra) -> impl Fn(&LinComb, &LinComb) -> Result<LinComb> + '_ {
    move |a, b| alg.mul(a, b)
}

fn need_weight(alg: &dyn LieAlgebra) -> Result<Weight> {
    alg.weight()
        .ok_or_else(|| Error::Invalid("this property needs an operator R".into()))
}

pub fn anticomm(alg: &dyn LieAlgebra, sweep: &Sweep) -> Result<Report> {
    identities::check_anticommutative(&mul_of(alg), &sweep.pairs(alg))
}

pub fn jacobi(alg: &dyn LieAlgebra, sweep: &Sweep) -> Result<Report> {
    identities::check_jacobi(&mul_of(alg), &sweep.triples(alg))
}

/// The Rota-Baxter identity with the algebra's own weight.
pub fn rota_baxter(alg: &dyn LieAlgebra, sweep: &Sweep) -> Result<Report> {
    let weight = need_weight(alg)?;
    let r = |x: &LinComb| alg.apply_r(x);
    identities::check_rota_baxter(&mul_of(alg), &r, weight, &sweep.pairs(alg))
}

/// The pre-Lie law of `x.y = R(x)*y` (weight 0) or both post-Lie laws
/// (weight 1).
pub fn derived(alg: &dyn LieAlgebra, sweep: &Sweep) -> Result<Vec<Report>> {
    derived_structure(alg)?.check(&sweep.triples(alg))
}

/// For weight 0 and generators `x, y, z`:
/// `J(R(x),R(y),z) = (x.y).z - (y.x).z - x.(y.z) + y.(x.z)`.
pub fn jacobi_bridge(alg: &dyn LieAlgebra) -> Result<Report> {
    if need_weight(alg)? != Weight::Zero {
        return Err(Error::Invalid(
            "the Jacobi bridge is stated for weight 0".into(),
        ));
    }
    let d = derived_structure(alg)?;
    let mul = mul_of(alg);
    let gens: Vec<LinComb> = alg.alphabet().letters().iter().map(lc).collect();
    let mut rep = Report::new("jacobi-bridge");
    for x in &gens {
        for y in &gens {
            for z in &gens {
                let lhs = identities::jacobiator(&mul, &alg.apply_r(x)?, &alg.apply_r(y)?, z)?;
                let mut rhs = d.dot(&d.dot(x, y)?, z)?;
                rhs -= &d.dot(&d.dot(y, x)?, z)?;
                rhs -= &d.dot(x, &d.dot(y, z)?)?;
                rhs += &d.dot(y, &d.dot(x, z)?)?;
                rep.record(&[x, y, z], lhs, rhs);
            }
        }
    }
    Ok(rep)
}

/// The leading-term shape of every product of two basis words within the
/// bounds (each unordered pair once). With `same_letters`, top-degree words
/// must also be built from letters of the operands.
pub fn graded_shape(
    alg: &dyn LieAlgebra,
    max_deg: usize,
    max_rdeg: usize,
    same_letters: bool,
) -> Result<Report> {
    let words = alg.basis(max_deg, max_rdeg);
    let mut rep = Report::new("assump");
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            let p = alg.mul(&lc(u), &lc(v))?;
            rep.record_if(
                graded_shape_ok(u, v, &p, same_letters),
                &[&lc(u), &lc(v)],
                || format!("product={}", p.display(alg.alphabet())),
            );
        }
    }
    Ok(rep)
}

/// `R(x)*z` with one letter of `z` at a time replaced by its product with
/// `R(x)`.
fn letterwise(env: &Enveloping, rx: &LinComb, z: &Word) -> Result<LinComb> {
    match z.split() {
        None => env.mul(rx, &lc(z)),
        Some((z1, z2)) => {
            let mut out = env.mul(&letterwise(env, rx, z1)?, &env.evaluate(z2)?)?;
            out += &env.mul(&env.evaluate(z1)?, &letterwise(env, rx, z2)?)?;
            Ok(out)
        }
    }
}

/// The defining identities of the enveloping product, over `X` and the
/// basis words within the sampled bounds of `sweep`:
///
/// * `embed`: `R(x)*y = x.y` for `x, y` in `X`;
/// * `case1`: `R(x)*[z1,z2] = (R(x)*z1)*z2 + z1*(R(x)*z2)` for compound `z`;
/// * `case2`: `R(x)*(R(u)*y) = R(R(x)*u + x*R(u) + w x*u)*y + R(u)*(x.y)`;
/// * `derivation`: `R(x)*z` is the sum over letters `z_i` of `z` of `z`
///   with `z_i` replaced by `R(x)*z_i`, for every non-`R` word `z`.
pub fn env_definitions(env: &Enveloping, sweep: &Sweep) -> Result<Vec<Report>> {
    let alg = env.algebra();
    let weight = env
        .weight()
        .expect("enveloping algebras carry a weight")
        .as_q();
    let gens: Vec<LinComb> = env.alphabet().letters().iter().map(lc).collect();
    let (d, r) = sweep.sampled;
    let words = env.basis(d, r);

    let mut embed = Report::new("embed");
    let mut case1 = Report::new("case1");
    let mut case2 = Report::new("case2");
    let mut deriv = Report::new("derivation");
    for x in &gens {
        let rx = env.apply_r(x)?;
        for y in &gens {
            embed.record(&[x, y], env.mul(&rx, y)?, env.embed(&alg.dot(x, y)?)?);
        }
        for z in &words {
            let zl = lc(z);
            if z.is_r_letter() {
                let u = lc(z.r_arg().expect("R-letter"));
                let mut inner = env.mul(&rx, &u)?;
                inner += &env.mul(x, &zl)?;
                inner.add_scaled(&env.mul(x, &u)?, &weight);
                let ru_inner = env.apply_r(&inner)?;
                for y in &gens {
                    let lhs = env.mul(&rx, &env.mul(&zl, y)?)?;
                    let mut rhs = env.mul(&ru_inner, y)?;
                    rhs += &env.mul(&zl, &alg.dot(x, y)?)?;
                    case2.record(&[x, &zl, y], lhs, rhs);
                }
                continue;
            }
            let lhs = env.mul(&rx, &zl)?;
            if let Some((z1, z2)) = z.split() {
                let (a, b) = (lc(z1), lc(z2));
                let mut rhs = env.mul(&env.mul(&rx, &a)?, &b)?;
                rhs += &env.mul(&a, &env.mul(&rx, &b)?)?;
                case1.record(&[x, &zl], lhs.clone(), rhs);
            }
            deriv.record(&[x, &zl], lhs, letterwise(env, &rx, z)?);
        }
    }
    Ok(vec![embed, case1, case2, deriv])
}

/// Every standard basis word of the free algebra within the bounds reduces
/// to a combination of words of `E`.
pub fn spanning(env: &Enveloping, max_deg: usize, max_rdeg: usize) -> Result<Report> {
    let mut rep = Report::new("spanning");
    for w in enum_free_basis(env.alphabet(), max_deg, max_rdeg) {
        let wl = lc(&w);
        match env.reduce_to_env(&w) {
            Ok(img) => {
                let bad = img.words().find(|t| !env.is_basis(t)).cloned();
                rep.record_if(bad.is_none(), &[&wl], || {
                    format!(
                        "image contains {}",
                        env.alphabet().show(&bad.expect("bad word"))
                    )
                });
            }
            Err(e @ Error::FuelExhausted { .. }) => rep.record_if(false, &[&wl], || e.to_string()),
            Err(e) => return Err(e),
        }
    }
    Ok(rep)
}

/// `reduce(u*v) = reduce(u)*reduce(v)` for seeded pairs of free basis words,
/// the free product taken with the weight of `env`.
pub fn reduce_hom(env: &Enveloping, sweep: &Sweep) -> Result<Report> {
    let weight = env.weight().expect("enveloping algebras carry a weight");
    let free = FreeRbLie::new(env.alphabet().clone(), weight);
    let (d, r) = sweep.sampled;
    let words = enum_free_basis(env.alphabet(), d, r);
    let mut rng = XorShift64Star::new(sweep.seed);
    let mut rep = Report::new("reduce-hom");
    for (u, v) in sample_pairs(&words, sweep.samples, &mut rng) {
        let lhs = env.normalize(&free.mul(&u, &v)?)?;
        let rhs = env.mul(&env.normalize(&u)?, &env.normalize(&v)?)?;
        rep.record(&[&u, &v], lhs, rhs);
    }
    Ok(rep)
}

pub type PbwTable = BTreeMap<(usize, usize), usize>;

/// Compares `E` for `L` and for `Ab L` word by word and per bidegree.
pub fn pbw(
    env: &Enveloping,
    max_deg: usize,
    max_rdeg: usize,
) -> Result<(Report, PbwTable, PbwTable)> {
    let ab = Enveloping::new(env.algebra().abelianize())?;
    let mine = env.basis(max_deg, max_rdeg);
    let theirs = ab.basis(max_deg, max_rdeg);
    let (t1, t2) = (pbw_counts(&mine), pbw_counts(&theirs));
    let mut rep = Report::new("pbw");
    rep.record_if(t1 == t2, &[], || format!("tables differ: {t1:?} vs {t2:?}"));
    rep.record_if(mine == theirs, &[], || "basis lists differ".into());
    Ok((rep, t1, t2))
}

/// Renders a bidegree table, `(deg, rdeg): count` per line or
/// tab-separated.
pub fn format_table(t: &PbwTable, tsv: bool) -> String {
    let mut s = String::new();
    if tsv {
        s.push_str("deg\trdeg\tcount\n");
    }
    for ((d, r), c) in t {
        if tsv {
            s.push_str(&format!("{d}\t{r}\t{c}\n"));
        } else {
            s.push_str(&format!("({d}, {r}): {c}\n"));
        }
    }
    s
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of Lyndon words of length `n` over `k` letters (the Witt formula).
pub fn witt(k: usize, n: usize) -> usize {
    let sum: i64 = (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| mobius(d) * (k as i64).pow((n / d) as u32))
        .sum();
    (sum / n as i64) as usize
}

/// All associative words of length `1..=max_len`.
fn all_sequences(letters: &[Word], max_len: usize) -> Vec<Vec<Word>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<Word>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &frontier {
            for l in letters {
                let mut t = s.clone();
                t.push(l.clone());
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Every binary bracketing of `seq`.
fn all_bracketings(seq: &[Word]) -> Vec<Word> {
    if seq.len() == 1 {
        return vec![seq[0].clone()];
    }
    let mut out = Vec::new();
    for k in 1..seq.len() {
        for l in all_bracketings(&seq[..k]) {
            for r in all_bracketings(&seq[k..]) {
                out.push(Word::br(l.clone(), r.clone()));
            }
        }
    }
    out
}

fn sorted_desc(mut v: Vec<Word>) -> Vec<Word> {
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// Independent oracles for the enumerations:
///
/// * `witt`: LS counts per degree `1..=max_deg` against the Witt formula;
/// * `ls-filter`: bracketing enumeration equals filtering all words;
/// * `ls-trees`: among all bracketings, exactly the enumerated words are LS;
/// * `pcls-empty`, `pcls-complete`, `pcls-adjacent`: graph specializations;
/// * `weight-independence`: the free RB basis is the same for both weights.
pub fn enum_oracles(alphabet: &Alphabet, max_deg: usize) -> Result<Vec<Report>> {
    let letters = alphabet.letters();
    let k = letters.len();
    let enumerated = enum_ls(alphabet, max_deg);
    let mut reports = Vec::new();

    let mut witt_rep = Report::new("witt");
    for n in 1..=max_deg {
        let got = enumerated.iter().filter(|w| w.deg() == n).count();
        let want = witt(k, n);
        witt_rep.record_if(got == want, &[], || {
            format!("degree {n}: {got} words, expected {want}")
        });
    }
    reports.push(witt_rep);

    let seqs = all_sequences(&letters, max_deg);
    let mut filt = Report::new("ls-filter");
    let filtered: Result<Vec<Word>> = seqs
        .iter()
        .filter(|s| is_assoc_ls(s))
        .map(|s| standard_bracketing(s))
        .collect();
    let filtered = sorted_desc(filtered?);
    filt.record_if(filtered == enumerated, &[], || {
        format!(
            "{} filtered vs {} enumerated",
            filtered.len(),
            enumerated.len()
        )
    });
    reports.push(filt);

    let mut trees = Report::new("ls-trees");
    let set: std::collections::BTreeSet<&Word> = enumerated.iter().collect();
    for s in &seqs {
        for t in all_bracketings(s) {
            let ok = is_ls(&t) == set.contains(&t);
            trees.record_if(ok, &[&lc(&t)], || format!("is_ls={}", is_ls(&t)));
        }
    }
    reports.push(trees);

    let pc_deg = max_deg.min(5);
    let mut empty = Report::new("pcls-empty");
    let pcls = enum_pcls(alphabet, &CommGraph::empty(k), pc_deg);
    empty.record_if(pcls == enum_ls(alphabet, pc_deg), &[], || {
        "differs from LS enumeration".into()
    });
    let free = FreeLie::new(alphabet.clone());
    let pc_empty = PcLie::new(alphabet.clone(), CommGraph::empty(k))?;
    let small = enum_ls(alphabet, 3);
    for (u, v) in all_pairs(&small) {
        empty.record(&[&u, &v], pc_empty.mul(&u, &v)?, free.mul(&u, &v)?);
    }
    reports.push(empty);

    let mut complete = Report::new("pcls-complete");
    let pcls = enum_pcls(alphabet, &CommGraph::complete(k), max_deg);
    complete.record_if(pcls == sorted_desc(letters.clone()), &[], || {
        format!("{} words instead of the {k} letters", pcls.len())
    });
    reports.push(complete);

    let mut adjacent = Report::new("pcls-adjacent");
    let pc_full = PcLie::new(alphabet.clone(), CommGraph::complete(k))?;
    for a in &letters {
        for b in &letters {
            adjacent.record(&[&lc(a), &lc(b)], pc_full.pc_mult(a, b)?, LinComb::zero());
        }
    }
    reports.push(adjacent);

    let mut wi = Report::new("weight-independence");
    let rdeg = 2;
    let zero = FreeRbLie::new(alphabet.clone(), Weight::Zero).basis(max_deg.min(3), rdeg);
    let one = FreeRbLie::new(alphabet.clone(), Weight::One).basis(max_deg.min(3), rdeg);
    wi.record_if(zero == one, &[], || "bases differ between weights".into());
    reports.push(wi);

    Ok(reports)
}
