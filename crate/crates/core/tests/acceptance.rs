//! Acceptance suite: one PASS/FAIL line per criterion, all checks exact.
//!
//! Runs as a plain binary (`harness = false`) so the report lines are
//! printed in order; the process exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rblie::enveloping::Enveloping;
use rblie::free_rb::FreeRbLie;
use rblie::harness::{self, Sweep};
use rblie::identities::{self, Report};
use rblie::lincomb::q;
use rblie::parse::parse_word;
use rblie::pcls::{enum_pcls, CommGraph, PcLie};
use rblie::structure::{derivation_prelie_example, from_tables, reference_algebras, Kind};
use rblie::{Alphabet, LieAlgebra, LinComb, Result, Weight, Word};

/// Collected sub-results of one criterion.
struct Outcome {
    lines: Vec<String>,
    ok: bool,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            lines: Vec::new(),
            ok: true,
        }
    }

    fn report(&mut self, context: &str, r: &Report, alphabet: &Alphabet) {
        if !r.passed() {
            self.ok = false;
            self.lines
                .push(format!("{context}: {}", r.render(alphabet)));
        }
    }

    fn expect(&mut self, what: &str, ok: bool) {
        if !ok {
            self.ok = false;
            self.lines.push(format!("{what}: failed"));
        }
    }
}

fn ab() -> Alphabet {
    Alphabet::parse("a,b").unwrap()
}

fn criterion_1() -> Result<Outcome> {
    let mut out = Outcome::new();
    for r in harness::enum_oracles(&ab(), 6)? {
        if ["witt", "ls-filter", "ls-trees"].contains(&r.property.as_str()) {
            out.report("ls", &r, &ab());
        }
    }
    Ok(out)
}

fn criterion_2() -> Result<Outcome> {
    let mut out = Outcome::new();
    for r in harness::enum_oracles(&ab(), 5)? {
        if r.property.starts_with("pcls") {
            out.report("pcls", &r, &ab());
        }
    }
    let abc = Alphabet::parse("a,b,c").unwrap();
    let path = CommGraph::with_edges(3, &[(0, 1), (1, 2)])?;
    let w = |s: &str| parse_word(s, &abc).unwrap();
    let words = enum_pcls(&abc, &path, 2);
    let mut want = vec![w("a"), w("[a,c]"), w("b"), w("c")];
    want.sort_by(|x, y| y.cmp(x));
    let shown: Vec<String> = words.iter().map(|x| abc.show(x)).collect();
    out.expect(&format!("path graph basis {shown:?}"), words == want);
    let pc = PcLie::new(abc.clone(), path)?;
    out.expect(
        "pc_mult([a,c],b) = 0",
        pc.pc_mult(&w("[a,c]"), &w("b"))?.is_zero(),
    );
    out.expect(
        "pc_mult(a,b) = 0 on an edge",
        pc.pc_mult(&w("a"), &w("b"))?.is_zero(),
    );
    Ok(out)
}

fn criterion_3() -> Result<Outcome> {
    let mut out = Outcome::new();
    let sweep = Sweep::default();
    for weight in [Weight::Zero, Weight::One] {
        let rb = FreeRbLie::new(ab(), weight);
        let ctx = format!("weight {weight}");
        out.report(&ctx, &harness::anticomm(&rb, &sweep)?, &ab());
        let all = harness::all_pairs(&rb.basis(3, 2));
        let mul = |x: &LinComb, y: &LinComb| rb.mul(x, y);
        out.report(&ctx, &identities::check_anticommutative(&mul, &all)?, &ab());
        out.report(&ctx, &harness::jacobi(&rb, &sweep)?, &ab());
        out.report(&ctx, &harness::rota_baxter(&rb, &sweep)?, &ab());
    }
    let zero = FreeRbLie::new(ab(), Weight::Zero).basis(3, 2);
    let one = FreeRbLie::new(ab(), Weight::One).basis(3, 2);
    out.expect("basis independent of the weight", zero == one);
    Ok(out)
}

fn criterion_4() -> Result<Outcome> {
    let mut out = Outcome::new();
    let sweep = Sweep::default();
    for weight in [Weight::Zero, Weight::One] {
        let rb = FreeRbLie::new(ab(), weight);
        for r in harness::derived(&rb, &sweep)? {
            out.report(&format!("weight {weight}"), &r, &ab());
        }
    }
    let rb = FreeRbLie::new(ab(), Weight::Zero);
    out.report("weight 0", &harness::jacobi_bridge(&rb)?, &ab());
    Ok(out)
}

fn envelopes() -> Vec<(&'static str, Enveloping)> {
    reference_algebras()
        .into_iter()
        .map(|(n, a)| (n, Enveloping::new(a).unwrap()))
        .collect()
}

fn criterion_5() -> Result<Outcome> {
    let mut out = Outcome::new();
    let sweep = Sweep::default();
    for (name, env) in envelopes() {
        let al = env.alphabet().clone();
        out.report(name, &harness::anticomm(&env, &sweep)?, &al);
        out.report(name, &harness::jacobi(&env, &sweep)?, &al);
        out.report(name, &harness::rota_baxter(&env, &sweep)?, &al);
        for r in harness::env_definitions(&env, &sweep)? {
            out.report(name, &r, &al);
        }
    }
    Ok(out)
}

fn criterion_6() -> Result<Outcome> {
    let mut out = Outcome::new();
    let sweep = Sweep {
        samples: 300,
        ..Sweep::default()
    };
    for (name, env) in envelopes() {
        let al = env.alphabet().clone();
        out.report(name, &harness::spanning(&env, 3, 2)?, &al);
        out.report(name, &harness::reduce_hom(&env, &sweep)?, &al);
    }
    Ok(out)
}

fn criterion_7() -> Result<Outcome> {
    let mut out = Outcome::new();
    for (name, env) in envelopes() {
        let al = env.alphabet().clone();
        let (r, _, _) = harness::pbw(&env, 4, 2)?;
        out.report(name, &r, &al);
        out.report(name, &harness::graded_shape(&env, 3, 2, false)?, &al);
    }
    for weight in [Weight::Zero, Weight::One] {
        let rb = FreeRbLie::new(ab(), weight);
        out.report(
            &format!("free weight {weight}"),
            &harness::graded_shape(&rb, 3, 2, true)?,
            &ab(),
        );
    }
    Ok(out)
}

fn criterion_8() -> Result<Outcome> {
    let mut out = Outcome::new();

    let mut der = derivation_prelie_example(2, 1)?;
    let i = der.basis().rank("x1_d1").unwrap();
    let j = der.basis().rank("x2_d2").unwrap();
    der.set_dot(i, j, LinComb::term(Word::gen(j), q(2)))?;
    out.expect(
        "corrupted pre-Lie constant rejected",
        der.validate().is_err(),
    );

    // [a,b] = a, [b,c] = b: antisymmetric but J(a,b,c) = -a.
    let bad = from_tables(
        &["a", "b", "c"],
        Kind::Lie,
        &[],
        &[
            (0, 1, &[(0, 1)]),
            (1, 0, &[(0, -1)]),
            (1, 2, &[(1, 1)]),
            (2, 1, &[(1, -1)]),
        ],
    )?;
    out.expect("non-Jacobi bracket rejected", bad.validate().is_err());

    let mut post = reference_algebras().remove(3).1;
    post.set_dot(0, 0, LinComb::word(Word::gen(0)))?;
    out.expect("corrupted post-Lie dot rejected", post.validate().is_err());

    // R + id is not a Rota-Baxter operator of weight 0.
    let rb = FreeRbLie::new(ab(), Weight::Zero);
    let mul = |x: &LinComb, y: &LinComb| rb.mul(x, y);
    let shifted = |x: &LinComb| Ok(&rb.apply_r(x)? + x);
    let words = rb.basis(2, 1);
    let pairs = harness::all_pairs(&words);
    let r = identities::check_rota_baxter(&mul, &shifted, Weight::Zero, &pairs)?;
    out.expect("R + id fails the Rota-Baxter identity", !r.passed());

    let faulty = FreeRbLie::new(ab(), Weight::Zero);
    faulty.engine().inject_fault(true);
    let sweep = Sweep {
        samples: 0,
        ..Sweep::default()
    };
    let r = harness::jacobi(&faulty, &sweep)?;
    let line = r.render(&ab());
    out.expect(
        &format!("fault-injected Jacobi fails with a witness ({line})"),
        !r.passed(),
    );
    if !r.passed() {
        out.lines.push(format!("fault injection: {line}"));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<Outcome>); 8] = [
        ("LS counts and enumeration oracles", criterion_1),
        ("PCLS specializations", criterion_2),
        ("free RB-Lie identities, both weights", criterion_3),
        ("derived pre-Lie and post-Lie laws", criterion_4),
        ("enveloping identities on five algebras", criterion_5),
        ("spanning and quotient homomorphism", criterion_6),
        ("PBW tables and graded shape", criterion_7),
        ("negative controls", criterion_8),
    ];
    let mut all = true;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, lines) = match run() {
            Ok(o) => (o.ok, o.lines),
            Err(e) => (false, vec![format!("error: {e}")]),
        };
        all &= ok;
        let status = if ok { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {} {title} ({:.1}s)",
            k + 1,
            start.elapsed().as_secs_f64()
        );
        for l in lines {
            println!("    {l}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
