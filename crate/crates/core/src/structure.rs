//! Finite-dimensional algebras given by structure constants, their
//! validators, abelianization, and the derived pre-/post-Lie structure of a
//! Lie Rota-Baxter algebra.

use std::fmt::Write as _;

use crate::algebra::{LieAlgebra, Weight};
use crate::error::{Error, Result};
use crate::identities::{self, Report};
use crate::lincomb::{q, LinComb};
use crate::parse::parse_expr;
use crate::word::{Alphabet, Word};

/// Which identities the tables are expected to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Pre-Lie: a single product `dot`.
    Pre,
    /// Post-Lie: a Lie `bracket` plus `dot`.
    Post,
    /// Lie: `bracket` only.
    Lie,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Pre => "pre",
            Kind::Post => "post",
            Kind::Lie => "lie",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        match s {
            "pre" => Some(Kind::Pre),
            "post" => Some(Kind::Post),
            "lie" => Some(Kind::Lie),
            _ => None,
        }
    }
}

/// An algebra on a named basis. Table entries are combinations of basis
/// letters; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    basis: Alphabet,
    kind: Kind,
    dot: Vec<Vec<LinComb>>,
    bracket: Vec<Vec<LinComb>>,
}

fn zero_table(n: usize) -> Vec<Vec<LinComb>> {
    vec![vec![LinComb::zero(); n]; n]
}

fn check_letters(x: &LinComb, n: usize) -> Result<()> {
    for w in x.words() {
        match w.gen_rank() {
            Some(i) if i < n => {}
            _ => {
                return Err(Error::Invalid(format!(
                    "table entry contains non-basis word {w:?}"
                )))
            }
        }
    }
    Ok(())
}

impl StructureAlgebra {
    pub fn new(basis: Alphabet, kind: Kind) -> Self {
        let n = basis.len();
        StructureAlgebra {
            basis,
            kind,
            dot: zero_table(n),
            bracket: zero_table(n),
        }
    }

    pub fn basis(&self) -> &Alphabet {
        &self.basis
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The same tables under another kind tag, e.g. a pre-Lie algebra
    /// viewed as post-Lie with zero bracket.
    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }

    pub fn set_dot(&mut self, i: usize, j: usize, value: LinComb) -> Result<()> {
        check_letters(&value, self.dim())?;
        self.dot[i][j] = value;
        Ok(())
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, value: LinComb) -> Result<()> {
        check_letters(&value, self.dim())?;
        self.bracket[i][j] = value;
        Ok(())
    }

    pub fn dot_entry(&self, i: usize, j: usize) -> &LinComb {
        &self.dot[i][j]
    }

    pub fn bracket_entry(&self, i: usize, j: usize) -> &LinComb {
        &self.bracket[i][j]
    }

    fn apply(table: &[Vec<LinComb>], a: &LinComb, b: &LinComb) -> Result<LinComb> {
        LinComb::bilinear(a, b, |u, v| match (u.gen_rank(), v.gen_rank()) {
            (Some(i), Some(j)) if i < table.len() && j < table.len() => Ok(table[i][j].clone()),
            _ => Err(Error::NotBasis(format!(
                "{u:?} or {v:?} is not a basis letter"
            ))),
        })
    }

    pub fn dot(&self, a: &LinComb, b: &LinComb) -> Result<LinComb> {
        Self::apply(&self.dot, a, b)
    }

    pub fn bracket(&self, a: &LinComb, b: &LinComb) -> Result<LinComb> {
        Self::apply(&self.bracket, a, b)
    }

    pub fn is_abelian(&self) -> bool {
        self.dot
            .iter()
            .chain(&self.bracket)
            .flatten()
            .all(LinComb::is_zero)
    }

    /// Same basis and kind, all products zero.
    pub fn abelianize(&self) -> StructureAlgebra {
        StructureAlgebra::new(self.basis.clone(), self.kind)
    }

    fn elements(&self) -> Vec<LinComb> {
        self.basis
            .letters()
            .into_iter()
            .map(LinComb::word)
            .collect()
    }

    fn triples(&self) -> Vec<(LinComb, LinComb, LinComb)> {
        let e = self.elements();
        let mut out = Vec::with_capacity(e.len().pow(3));
        for x in &e {
            for y in &e {
                for z in &e {
                    out.push((x.clone(), y.clone(), z.clone()));
                }
            }
        }
        out
    }

    fn pairs(&self) -> Vec<(LinComb, LinComb)> {
        let e = self.elements();
        e.iter()
            .flat_map(|x| e.iter().map(move |y| (x.clone(), y.clone())))
            .collect()
    }

    /// Antisymmetry and Jacobi for the bracket table.
    pub fn check_lie(&self) -> Vec<Report> {
        let br = |a: &LinComb, b: &LinComb| self.bracket(a, b);
        let mut anti = identities::check_anticommutative(&br, &self.pairs())
            .expect("table products cannot fail");
        anti.property = "bracket-anticomm".into();
        let mut jac =
            identities::check_jacobi(&br, &self.triples()).expect("table products cannot fail");
        jac.property = "bracket-jacobi".into();
        vec![anti, jac]
    }

    /// The pre-Lie identity on all basis triples.
    pub fn check_pre_lie(&self) -> Report {
        let dot = |a: &LinComb, b: &LinComb| self.dot(a, b);
        identities::check_pre_lie(&dot, &self.triples()).expect("table products cannot fail")
    }

    /// Lie axioms for the bracket and both post-Lie laws on all basis triples.
    pub fn check_post_lie(&self) -> Vec<Report> {
        let dot = |a: &LinComb, b: &LinComb| self.dot(a, b);
        let br = |a: &LinComb, b: &LinComb| self.bracket(a, b);
        let mut out = self.check_lie();
        let (p, d) = identities::check_post_lie(&dot, &br, &self.triples())
            .expect("table products cannot fail");
        out.push(p);
        out.push(d);
        out
    }

    /// The validator matching the kind tag.
    pub fn check(&self) -> Vec<Report> {
        match self.kind {
            Kind::Pre => vec![self.check_pre_lie()],
            Kind::Post => self.check_post_lie(),
            Kind::Lie => self.check_lie(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.kind == Kind::Pre && self.bracket.iter().flatten().any(|x| !x.is_zero()) {
            return Err(Error::Invalid("a pre-Lie table has no bracket".into()));
        }
        for r in self.check() {
            if !r.passed() {
                return Err(Error::Invalid(r.render(&self.basis)));
            }
        }
        Ok(())
    }

    /// Parses the line format:
    ///
    /// ```text
    /// # comment
    /// kind post
    /// basis e f h
    /// dot e f = 2*h - e
    /// bracket e f = h
    /// ```
    ///
    /// `kind` is optional and defaults to `post` when bracket lines occur,
    /// `pre` otherwise.
    pub fn parse(text: &str) -> Result<StructureAlgebra> {
        let mut kind: Option<Kind> = None;
        let mut alg: Option<StructureAlgebra> = None;
        let mut saw_bracket = false;
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Algebra {
                line: line_no,
                message,
            };
            let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match head {
                "kind" => {
                    let k = Kind::parse(rest.trim())
                        .ok_or_else(|| err(format!("unknown kind `{}`", rest.trim())))?;
                    kind = Some(k);
                }
                "basis" => {
                    if alg.is_some() {
                        return Err(err("duplicate basis line".into()));
                    }
                    let names: Vec<&str> = rest.split_whitespace().collect();
                    let basis = Alphabet::new(&names).map_err(|e| err(e.to_string()))?;
                    alg = Some(StructureAlgebra::new(basis, Kind::Pre));
                }
                "dot" | "bracket" => {
                    let a = alg
                        .as_mut()
                        .ok_or_else(|| err("table line before basis".into()))?;
                    let (lhs, rhs) = rest
                        .split_once('=')
                        .ok_or_else(|| err("expected `<name> <name> = <expr>`".into()))?;
                    let names: Vec<&str> = lhs.split_whitespace().collect();
                    let [x, y] = names.as_slice() else {
                        return Err(err("expected two basis names before `=`".into()));
                    };
                    let i = a
                        .basis
                        .rank(x)
                        .ok_or_else(|| err(format!("unknown basis element `{x}`")))?;
                    let j = a
                        .basis
                        .rank(y)
                        .ok_or_else(|| err(format!("unknown basis element `{y}`")))?;
                    let value = parse_expr(rhs, &a.basis).map_err(|e| err(e.to_string()))?;
                    check_letters(&value, a.dim()).map_err(|e| err(e.to_string()))?;
                    if head == "dot" {
                        a.dot[i][j] = value;
                    } else {
                        saw_bracket = true;
                        a.bracket[i][j] = value;
                    }
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        let mut a = alg.ok_or(Error::Algebra {
            line: 0,
            message: "missing basis line".into(),
        })?;
        a.kind = kind.unwrap_or(if saw_bracket { Kind::Post } else { Kind::Pre });
        Ok(a)
    }

    /// Canonical text; `parse(format(a)) == a`.
    pub fn format(&self) -> String {
        let mut s = String::new();
        writeln!(s, "kind {}", self.kind.name()).unwrap();
        writeln!(s, "basis {}", self.basis.names().join(" ")).unwrap();
        for (head, table) in [("dot", &self.dot), ("bracket", &self.bracket)] {
            for (i, row) in table.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        writeln!(
                            s,
                            "{head} {} {} = {}",
                            self.basis.name(i),
                            self.basis.name(j),
                            v.display(&self.basis)
                        )
                        .unwrap();
                    }
                }
            }
        }
        s
    }
}

/// Builds an algebra from `(i, j, [(k, coeff)])` table entries.
pub fn from_tables(
    names: &[&str],
    kind: Kind,
    dot: &[(usize, usize, &[(usize, i64)])],
    bracket: &[(usize, usize, &[(usize, i64)])],
) -> Result<StructureAlgebra> {
    let mut a = StructureAlgebra::new(Alphabet::new(names)?, kind);
    let lc = |terms: &[(usize, i64)]| -> LinComb {
        terms.iter().map(|&(k, c)| (Word::gen(k), q(c))).collect()
    };
    for &(i, j, t) in dot {
        a.set_dot(i, j, lc(t))?;
    }
    for &(i, j, t) in bracket {
        a.set_bracket(i, j, lc(t))?;
    }
    Ok(a)
}

/// The pre-Lie algebra of polynomial vector fields `f d_i` in `n` variables
/// with `f o g = f * d_i(g)` on `x^a d_i o x^b d_j`, restricted to monomials
/// of total degree `1..=max_deg`; products of higher degree are dropped
/// (they span an ideal). The result is validated before it is returned.
pub fn derivation_prelie_example(n: usize, max_deg: usize) -> Result<StructureAlgebra> {
    if n == 0 || max_deg == 0 {
        return Err(Error::Invalid(
            "need at least one variable and degree one".into(),
        ));
    }
    let mut monomials: Vec<Vec<usize>> = Vec::new();
    for d in 1..=max_deg {
        let mut level = Vec::new();
        exponents(n, d, &mut Vec::new(), &mut level);
        level.sort_by(|a, b| b.cmp(a));
        monomials.extend(level);
    }
    let mut names = Vec::new();
    let mut elems = Vec::new();
    for m in &monomials {
        for i in 0..n {
            let mut name = String::new();
            for (v, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    write!(name, "x{}", v + 1).unwrap();
                }
            }
            write!(name, "_d{}", i + 1).unwrap();
            names.push(name);
            elems.push((m.clone(), i));
        }
    }
    let index = |m: &[usize], i: usize| elems.iter().position(|(mm, ii)| mm == m && *ii == i);
    let mut alg = StructureAlgebra::new(Alphabet::new(&names)?, Kind::Pre);
    for (a, (ma, i)) in elems.iter().enumerate() {
        for (b, (mb, j)) in elems.iter().enumerate() {
            let power = mb[*i];
            if power == 0 {
                continue;
            }
            let mut m: Vec<usize> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            m[*i] -= 1;
            if m.iter().sum::<usize>() > max_deg {
                continue;
            }
            let k = index(&m, *j).expect("degree within range");
            alg.dot[a][b] = LinComb::term(Word::gen(k), q(power as i64));
        }
    }
    alg.validate()?;
    Ok(alg)
}

/// The five small algebras the enveloping sweeps run on, by name:
/// `one-dim` (`e.e = e`), `dual` (the associative `k[t]/(t^2)` with basis
/// `u = 1, t`), `derivation` (vector fields in one variable up to degree
/// two), `sl2-post` (zero dot over the bracket of `sl2`) and `dual-post`
/// (the `dual` table as a post-Lie algebra with zero bracket).
pub fn reference_algebras() -> Vec<(&'static str, StructureAlgebra)> {
    let dual = |kind| {
        from_tables(
            &["u", "t"],
            kind,
            &[(0, 0, &[(0, 1)]), (0, 1, &[(1, 1)]), (1, 0, &[(1, 1)])],
            &[],
        )
    };
    let sl2 = from_tables(
        &["e", "f", "h"],
        Kind::Post,
        &[],
        &[
            (0, 1, &[(2, 1)]),
            (1, 0, &[(2, -1)]),
            (2, 0, &[(0, 2)]),
            (0, 2, &[(0, -2)]),
            (2, 1, &[(1, -2)]),
            (1, 2, &[(1, 2)]),
        ],
    );
    let all = [
        (
            "one-dim",
            from_tables(&["e"], Kind::Pre, &[(0, 0, &[(0, 1)])], &[]),
        ),
        ("dual", dual(Kind::Pre)),
        ("derivation", derivation_prelie_example(1, 2)),
        ("sl2-post", sl2),
        ("dual-post", dual(Kind::Post)),
    ];
    all.into_iter()
        .map(|(n, a)| (n, a.expect("reference algebras are well formed")))
        .collect()
}

fn exponents(n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == n - 1 {
        cur.push(d);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for e in 0..=d {
        cur.push(e);
        exponents(n, d - e, cur, out);
        cur.pop();
    }
}

/// The pre-Lie (weight 0) or post-Lie (weight 1) structure carried by a Lie
/// Rota-Baxter algebra: `x.y = R(x)*y`, and for weight 1 the ambient
/// product as the bracket.
pub struct Derived<'a, A: LieAlgebra + ?Sized> {
    alg: &'a A,
    weight: Weight,
}

pub fn derived_structure<A: LieAlgebra + ?Sized>(alg: &A) -> Result<Derived<'_, A>> {
    let weight = alg
        .weight()
        .ok_or_else(|| Error::NotBasis("the algebra has no Rota-Baxter operator".into()))?;
    Ok(Derived { alg, weight })
}

impl<A: LieAlgebra + ?Sized> Derived<'_, A> {
    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub fn kind(&self) -> Kind {
        match self.weight {
            Weight::Zero => Kind::Pre,
            Weight::One => Kind::Post,
        }
    }

    pub fn dot(&self, x: &LinComb, y: &LinComb) -> Result<LinComb> {
        self.alg.mul(&self.alg.apply_r(x)?, y)
    }

    /// The bracket; zero for the pre-Lie view.
    pub fn bracket(&self, x: &LinComb, y: &LinComb) -> Result<LinComb> {
        match self.weight {
            Weight::Zero => Ok(LinComb::zero()),
            Weight::One => self.alg.mul(x, y),
        }
    }

    /// Pre-Lie law (weight 0) or both post-Lie laws (weight 1).
    pub fn check(&self, triples: &[(LinComb, LinComb, LinComb)]) -> Result<Vec<Report>> {
        let dot = |a: &LinComb, b: &LinComb| self.dot(a, b);
        match self.weight {
            Weight::Zero => {
                let mut r = identities::check_pre_lie(&dot, triples)?;
                r.property = "derived-pre".into();
                Ok(vec![r])
            }
            Weight::One => {
                let br = |a: &LinComb, b: &LinComb| self.bracket(a, b);
                let (mut p, mut d) = identities::check_post_lie(&dot, &br, triples)?;
                p.property = "derived-post-assoc".into();
                d.property = "derived-post-derivation".into();
                Ok(vec![p, d])
            }
        }
    }
}

/// The Rota-Baxter identity of the algebra's own weight on `pairs`.
pub fn check_rb<A: LieAlgebra + ?Sized>(alg: &A, pairs: &[(LinComb, LinComb)]) -> Result<Report> {
    let weight = alg
        .weight()
        .ok_or_else(|| Error::NotBasis("the algebra has no Rota-Baxter operator".into()))?;
    let mul = |a: &LinComb, b: &LinComb| alg.mul(a, b);
    let r = |a: &LinComb| alg.apply_r(a);
    identities::check_rota_baxter(&mul, &r, weight, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_dim() -> StructureAlgebra {
        from_tables(&["e"], Kind::Pre, &[(0, 0, &[(0, 1)])], &[]).unwrap()
    }

    fn dual_numbers() -> StructureAlgebra {
        // k[t]/(t^2) with basis u = 1, t
        from_tables(
            &["u", "t"],
            Kind::Pre,
            &[(0, 0, &[(0, 1)]), (0, 1, &[(1, 1)]), (1, 0, &[(1, 1)])],
            &[],
        )
        .unwrap()
    }

    fn sl2(kind: Kind) -> StructureAlgebra {
        // e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f
        from_tables(
            &["e", "f", "h"],
            kind,
            &[],
            &[
                (0, 1, &[(2, 1)]),
                (1, 0, &[(2, -1)]),
                (2, 0, &[(0, 2)]),
                (0, 2, &[(0, -2)]),
                (2, 1, &[(1, -2)]),
                (1, 2, &[(1, 2)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn reference_algebras_validate() {
        let all = reference_algebras();
        assert_eq!(all.len(), 5);
        for (name, a) in all {
            assert!(a.validate().is_ok(), "{name}");
        }
    }

    #[test]
    fn associative_tables_are_pre_lie() {
        assert!(one_dim().check_pre_lie().passed());
        assert!(dual_numbers().check_pre_lie().passed());
    }

    #[test]
    fn corrupted_constant_is_rejected() {
        // x1_d1 o x2_d1 = 0 honestly; corrupting it breaks the identity.
        let mut a = derivation_prelie_example(2, 1).unwrap();
        let i = a.basis().rank("x1_d1").unwrap();
        let j = a.basis().rank("x2_d2").unwrap();
        let bogus = LinComb::term(Word::gen(j), q(2));
        a.set_dot(i, j, bogus).unwrap();
        assert!(!a.check_pre_lie().passed());
        assert!(a.validate().is_err());
    }

    #[test]
    fn post_lie_specializations() {
        assert!(sl2(Kind::Post).check_post_lie().iter().all(Report::passed));
        let pre_as_post = dual_numbers().with_kind(Kind::Post);
        assert!(pre_as_post.check_post_lie().iter().all(Report::passed));
        // A bracket that is antisymmetric but not Jacobi: [a,b] = a, [b,c] = a, [c,a] = b
        let bad = from_tables(
            &["a", "b", "c"],
            Kind::Post,
            &[],
            &[
                (0, 1, &[(0, 1)]),
                (1, 0, &[(0, -1)]),
                (1, 2, &[(0, 1)]),
                (2, 1, &[(0, -1)]),
                (2, 0, &[(1, 1)]),
                (0, 2, &[(1, -1)]),
            ],
        )
        .unwrap();
        let reports = bad.check_post_lie();
        assert!(reports[0].passed());
        assert!(!reports[1].passed());
    }

    #[test]
    fn abelianization() {
        let a = dual_numbers();
        let ab = a.abelianize();
        assert!(ab.is_abelian());
        assert_eq!(ab.abelianize(), ab);
        assert!(ab.check_pre_lie().passed());
        assert_eq!(ab.kind(), a.kind());
    }

    #[test]
    fn derivation_examples() {
        let a = derivation_prelie_example(1, 1).unwrap();
        assert_eq!(a.basis().names(), ["x1_d1"]);
        assert_eq!(a.dot_entry(0, 0), &LinComb::word(Word::gen(0)));

        let b = derivation_prelie_example(1, 2).unwrap();
        let x2 = b.basis().rank("x1x1_d1").unwrap();
        assert!(b.dot_entry(x2, x2).is_zero());

        let c = derivation_prelie_example(2, 1).unwrap();
        let x1d2 = c.basis().rank("x1_d2").unwrap();
        let x2d1 = c.basis().rank("x2_d1").unwrap();
        let x1d1 = c.basis().rank("x1_d1").unwrap();
        assert_eq!(c.dot_entry(x1d2, x2d1), &LinComb::word(Word::gen(x1d1)));
        assert!(derivation_prelie_example(2, 3).is_ok());
    }

    #[test]
    fn file_format_round_trip() {
        for a in [
            one_dim(),
            dual_numbers(),
            sl2(Kind::Post),
            derivation_prelie_example(2, 2).unwrap(),
        ] {
            let text = a.format();
            let back = StructureAlgebra::parse(&text).unwrap();
            assert_eq!(back, a);
            assert_eq!(back.format(), text);
        }
        let parsed = StructureAlgebra::parse("# one-dimensional\nbasis e\ndot e e = e\n").unwrap();
        assert_eq!(parsed, one_dim());
        assert!(StructureAlgebra::parse("dot e e = e").is_err());
        assert!(StructureAlgebra::parse("basis e\ndot e e = [e,e]").is_err());
        assert!(StructureAlgebra::parse("basis e\ndot e g = e").is_err());
    }
}
