//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes plain strings and numbers and returns the text to show,
//! or an error message. The `kind` argument is one of `free-rb`, `ls` or
//! `env`; for `env` the algebra is given as the text of an algebra file and
//! the alphabet argument is ignored.

use wasm_bindgen::prelude::*;

use rblie::enveloping::{pbw_counts, Enveloping};
use rblie::free_rb::FreeRbLie;
use rblie::harness::{self, format_table, Sweep};
use rblie::ls::FreeLie;
use rblie::parse::{format_expr, parse_expr};
use rblie::structure::StructureAlgebra;
use rblie::{Alphabet, LieAlgebra, Weight};

/// Keeps a single request from running away in the browser tab.
const FUEL: u64 = 200_000;
const MAX_SAMPLES: u32 = 200;

enum Algebra {
    Free(FreeRbLie),
    Ls(FreeLie),
    Env(Enveloping),
}

impl Algebra {
    fn build(kind: &str, alphabet: &str, algebra: &str, weight: u8) -> Result<Self, String> {
        let alpha = || Alphabet::parse(alphabet).map_err(|e| e.to_string());
        match kind {
            "free-rb" => {
                let w = Weight::from_int(weight.into()).ok_or("weight must be 0 or 1")?;
                Ok(Algebra::Free(FreeRbLie::new(alpha()?, w).with_fuel(FUEL)))
            }
            "ls" => Ok(Algebra::Ls(FreeLie::new(alpha()?))),
            "env" => {
                let alg = StructureAlgebra::parse(algebra).map_err(|e| e.to_string())?;
                let env = Enveloping::new(alg).map_err(|e| e.to_string())?;
                Ok(Algebra::Env(env.with_fuel(FUEL)))
            }
            other => Err(format!("unknown kind '{other}'")),
        }
    }

    fn get(&self) -> &dyn LieAlgebra {
        match self {
            Algebra::Free(a) => a,
            Algebra::Ls(a) => a,
            Algebra::Env(a) => a,
        }
    }
}

/// Basis words up to the given bidegree, one per line in descending order,
/// or the `(deg, rdeg): count` table when `counts` is set.
#[wasm_bindgen]
pub fn basis(
    kind: &str,
    alphabet: &str,
    algebra: &str,
    weight: u8,
    max_deg: u32,
    max_rdeg: u32,
    counts: bool,
) -> Result<String, String> {
    let a = Algebra::build(kind, alphabet, algebra, weight)?;
    let alg = a.get();
    let words = alg.basis(max_deg as usize, max_rdeg as usize);
    if counts {
        return Ok(format_table(&pbw_counts(&words), false));
    }
    let shown: Vec<String> = words.iter().map(|w| alg.alphabet().show(w)).collect();
    Ok(shown.join("\n"))
}

/// The product of two expressions, written over the basis.
#[wasm_bindgen]
pub fn multiply(
    kind: &str,
    alphabet: &str,
    algebra: &str,
    weight: u8,
    left: &str,
    right: &str,
) -> Result<String, String> {
    let a = Algebra::build(kind, alphabet, algebra, weight)?;
    let alg = a.get();
    let read = |s: &str| {
        parse_expr(s, alg.alphabet())
            .and_then(|x| alg.normalize(&x))
            .map_err(|e| e.to_string())
    };
    let product = alg
        .mul(&read(left)?, &read(right)?)
        .map_err(|e| e.to_string())?;
    Ok(format_expr(&product, alg.alphabet()))
}

/// Run one identity check (`anticomm`, `jacobi`, `rb`, or `derived`) over
/// all basis words of degree <= 2 and R-degree <= 1 plus `samples` seeded
/// random ones, and return the PASS/FAIL lines.
#[wasm_bindgen]
pub fn verify(
    kind: &str,
    alphabet: &str,
    algebra: &str,
    weight: u8,
    property: &str,
    samples: u32,
    seed: u64,
) -> Result<String, String> {
    let a = Algebra::build(kind, alphabet, algebra, weight)?;
    let alg = a.get();
    let sweep = Sweep {
        samples: samples.min(MAX_SAMPLES) as usize,
        seed,
        ..Sweep::default()
    };
    let reports = match property {
        "anticomm" => harness::anticomm(alg, &sweep).map(|r| vec![r]),
        "jacobi" => harness::jacobi(alg, &sweep).map(|r| vec![r]),
        "rb" => harness::rota_baxter(alg, &sweep).map(|r| vec![r]),
        "derived" => harness::derived(alg, &sweep),
        other => return Err(format!("unknown property '{other}'")),
    }
    .map_err(|e| e.to_string())?;
    let lines: Vec<String> = reports.iter().map(|r| r.render(alg.alphabet())).collect();
    Ok(lines.join("\n"))
}
