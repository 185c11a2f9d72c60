//! `rblie`: enumerate bases, multiply, reduce and verify identities in free
//! Lie, partially commutative Lie, free Lie Rota-Baxter and enveloping Lie
//! Rota-Baxter algebras.
//!
//! Exit codes: 0 success, 1 a verified property failed, 2 usage or input
//! error, 3 the straightening step budget ran out.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rblie::engine::DEFAULT_FUEL;
use rblie::enveloping::{pbw_counts, Enveloping};
use rblie::free_rb::FreeRbLie;
use rblie::harness::{self, format_table, Sweep};
use rblie::identities::Report;
use rblie::ls::FreeLie;
use rblie::parse::{format_expr, parse_expr};
use rblie::pcls::{CommGraph, PcLie};
use rblie::structure::{Kind, StructureAlgebra};
use rblie::{Alphabet, Error, LieAlgebra, LinComb, Weight};

#[derive(Parser)]
#[command(
    name = "rblie",
    version,
    about = "Exact computation in Lie Rota-Baxter algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List basis words in descending order, or count them per bidegree.
    Basis {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long)]
        max_deg: usize,
        #[arg(long, default_value_t = 0)]
        max_rdeg: usize,
        /// Print `(deg, rdeg): count` instead of the words.
        #[arg(long)]
        counts: bool,
        /// Tab-separated counts (implies --counts).
        #[arg(long)]
        tsv: bool,
    },
    /// Multiply two expressions.
    Mul {
        #[command(flatten)]
        ctx: CtxArgs,
        left: String,
        right: String,
    },
    /// Rewrite an expression over the basis of the context.
    Reduce {
        #[command(flatten)]
        ctx: CtxArgs,
        expr: String,
    },
    /// Run property sweeps and print one PASS/FAIL line per property.
    Verify(VerifyArgs),
    /// Validate an algebra file against the laws of its kind.
    CheckAlgebra {
        file: PathBuf,
        /// Also print the file in canonical form.
        #[arg(long)]
        canonical: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Ls,
    Pcls,
    FreeRb,
    EnvPre,
    EnvPost,
}

#[derive(Args)]
struct CtxArgs {
    /// Defaults to env-pre/env-post with --algebra (by the file's kind),
    /// free-rb otherwise.
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Comma-separated generators, greatest first.
    #[arg(long)]
    alphabet: Option<String>,
    /// Algebra file for the enveloping kinds.
    #[arg(long)]
    algebra: Option<PathBuf>,
    /// Commutativity graph file for --kind pcls (default: no edges).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Rota-Baxter weight for --kind free-rb.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(i64).range(0..=1))]
    weight: i64,
    /// Straightening step budget per top-level product.
    #[arg(long, default_value_t = DEFAULT_FUEL)]
    fuel: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    Anticomm,
    Jacobi,
    Rb,
    DerivedPre,
    DerivedPost,
    Assump,
    Pbw,
    ReduceHom,
    EnumOracles,
    EnvDefs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    ctx: CtxArgs,
    /// Properties to check; repeat or separate with commas.
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    property: Vec<Property>,
    /// Degree bound of the exhaustive part (and of assump/pbw/spanning).
    #[arg(long)]
    max_deg: Option<usize>,
    #[arg(long)]
    max_rdeg: Option<usize>,
    /// Number of seeded random samples added to each sweep.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Bounds the random samples are drawn from.
    #[arg(long, default_value_t = 3)]
    sample_deg: usize,
    #[arg(long, default_value_t = 2)]
    sample_rdeg: usize,
    /// Print the bidegree tables compared by pbw as tab-separated values.
    #[arg(long)]
    tsv: bool,
    #[cfg(feature = "fault-injection")]
    #[arg(long, hide = true)]
    inject_fault: bool,
}

/// Failures mapped to exit codes.
enum Failure {
    Usage(String),
    Fuel(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::FuelExhausted { .. } => Failure::Fuel(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::Usage(msg.into()))
}

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).or_else(|e| usage(format!("{}: {e}", path.display())))
}

enum Context {
    Ls(FreeLie),
    Pcls(PcLie),
    Free(FreeRbLie),
    Env(Enveloping),
}

impl Context {
    fn alg(&self) -> &dyn LieAlgebra {
        match self {
            Context::Ls(a) => a,
            Context::Pcls(a) => a,
            Context::Free(a) => a,
            Context::Env(a) => a,
        }
    }
}

fn alphabet(args: &CtxArgs) -> Outcome<Alphabet> {
    match &args.alphabet {
        Some(s) => Ok(Alphabet::parse(s)?),
        None => usage("--alphabet is required for this kind"),
    }
}

fn build(args: &CtxArgs) -> Outcome<Context> {
    let kind = match (args.kind, &args.algebra) {
        (Some(k), _) => k,
        (None, Some(_)) => KindArg::EnvPre,
        (None, None) => KindArg::FreeRb,
    };
    let ctx = match kind {
        KindArg::Ls => Context::Ls(FreeLie::new(alphabet(args)?)),
        KindArg::Pcls => {
            let al = alphabet(args)?;
            let graph = match &args.graph {
                Some(p) => CommGraph::parse(&read(p)?, &al)?,
                None => CommGraph::empty(al.len()),
            };
            Context::Pcls(PcLie::new(al, graph)?)
        }
        KindArg::FreeRb => {
            let w = Weight::from_int(args.weight).expect("weight range checked by clap");
            Context::Free(FreeRbLie::new(alphabet(args)?, w).with_fuel(args.fuel))
        }
        KindArg::EnvPre | KindArg::EnvPost => {
            let Some(path) = &args.algebra else {
                return usage("--algebra is required for the enveloping kinds");
            };
            let alg = StructureAlgebra::parse(&read(path)?)?;
            let wanted = match (args.kind, alg.kind()) {
                (Some(KindArg::EnvPost), _) => Kind::Post,
                (Some(KindArg::EnvPre), _) => Kind::Pre,
                (_, k) => k,
            };
            if alg.kind() == Kind::Lie {
                return usage("enveloping algebras need a pre-Lie or post-Lie algebra file");
            }
            if wanted == Kind::Pre && alg.kind() == Kind::Post && has_bracket(&alg) {
                return usage("env-pre needs an algebra without a bracket");
            }
            Context::Env(Enveloping::new(alg.with_kind(wanted))?.with_fuel(args.fuel))
        }
    };
    Ok(ctx)
}

fn has_bracket(alg: &StructureAlgebra) -> bool {
    (0..alg.dim()).any(|i| (0..alg.dim()).any(|j| !alg.bracket_entry(i, j).is_zero()))
}

fn expr(ctx: &Context, text: &str) -> Outcome<LinComb> {
    let alg = ctx.alg();
    Ok(alg.normalize(&parse_expr(text, alg.alphabet())?)?)
}

fn cmd_basis(
    args: &CtxArgs,
    max_deg: usize,
    max_rdeg: usize,
    counts: bool,
    tsv: bool,
) -> Outcome<String> {
    let ctx = build(args)?;
    let alg = ctx.alg();
    let words = alg.basis(max_deg, max_rdeg);
    if counts || tsv {
        return Ok(format_table(&pbw_counts(&words), tsv));
    }
    let mut out = String::new();
    for w in &words {
        out.push_str(&alg.alphabet().show(w));
        out.push('\n');
    }
    Ok(out)
}

fn line(alg: &dyn LieAlgebra, x: &LinComb) -> String {
    format!("{}\n", format_expr(x, alg.alphabet()))
}

fn cmd_mul(args: &CtxArgs, left: &str, right: &str) -> Outcome<String> {
    let ctx = build(args)?;
    let (a, b) = (expr(&ctx, left)?, expr(&ctx, right)?);
    Ok(line(ctx.alg(), &ctx.alg().mul(&a, &b)?))
}

fn cmd_reduce(args: &CtxArgs, text: &str) -> Outcome<String> {
    let ctx = build(args)?;
    Ok(line(ctx.alg(), &expr(&ctx, text)?))
}

fn env_only<'a>(ctx: &'a Context, what: &str) -> Outcome<&'a Enveloping> {
    match ctx {
        Context::Env(e) => Ok(e),
        _ => usage(format!(
            "--property {what} needs an enveloping context (--algebra)"
        )),
    }
}

fn cmd_verify(v: &VerifyArgs) -> Outcome<(String, bool)> {
    let ctx = build(&v.ctx)?;
    #[cfg(feature = "fault-injection")]
    if v.inject_fault {
        match &ctx {
            Context::Ls(a) => a.engine().inject_fault(true),
            Context::Pcls(a) => a.engine().inject_fault(true),
            Context::Free(a) => a.engine().inject_fault(true),
            Context::Env(a) => a.engine().inject_fault(true),
        }
    }
    let alg = ctx.alg();
    let max_deg = v.max_deg.unwrap_or(2);
    let max_rdeg = v.max_rdeg.unwrap_or(1);
    let sweep = Sweep {
        exhaustive: (max_deg, max_rdeg),
        sampled: (v.sample_deg, v.sample_rdeg),
        samples: v.samples,
        seed: v.seed,
    };
    let mut out = String::new();
    let mut reports: Vec<Report> = Vec::new();
    for &p in &v.property {
        match p {
            Property::Anticomm => reports.push(harness::anticomm(alg, &sweep)?),
            Property::Jacobi => reports.push(harness::jacobi(alg, &sweep)?),
            Property::Rb => reports.push(harness::rota_baxter(alg, &sweep)?),
            Property::DerivedPre | Property::DerivedPost => {
                let want = if p == Property::DerivedPre {
                    Weight::Zero
                } else {
                    Weight::One
                };
                if alg.weight() != Some(want) {
                    return usage(format!("this property needs an operator of weight {want}"));
                }
                reports.extend(harness::derived(alg, &sweep)?);
                if want == Weight::Zero {
                    reports.push(harness::jacobi_bridge(alg)?);
                }
            }
            Property::Assump => {
                let same_letters = matches!(ctx, Context::Free(_));
                reports.push(harness::graded_shape(alg, max_deg, max_rdeg, same_letters)?);
            }
            Property::Pbw => {
                let env = env_only(&ctx, "pbw")?;
                let (r, mine, ab) = harness::pbw(env, max_deg, max_rdeg)?;
                out.push_str("# L\n");
                out.push_str(&format_table(&mine, v.tsv));
                out.push_str("# Ab L\n");
                out.push_str(&format_table(&ab, v.tsv));
                reports.push(r);
                reports.push(harness::graded_shape(alg, max_deg, max_rdeg, false)?);
            }
            Property::ReduceHom => {
                let env = env_only(&ctx, "reduce-hom")?;
                reports.push(harness::spanning(env, v.sample_deg, v.sample_rdeg)?);
                reports.push(harness::reduce_hom(env, &sweep)?);
            }
            Property::EnvDefs => {
                let env = env_only(&ctx, "env-defs")?;
                reports.extend(harness::env_definitions(env, &sweep)?);
            }
            Property::EnumOracles => {
                let al = match &v.ctx.alphabet {
                    Some(_) => alphabet(&v.ctx)?,
                    None => alg.alphabet().clone(),
                };
                reports.extend(harness::enum_oracles(&al, v.max_deg.unwrap_or(6))?);
            }
        }
    }
    let mut ok = true;
    for r in &reports {
        ok &= r.passed();
        out.push_str(&r.render(alg.alphabet()));
        out.push('\n');
    }
    Ok((out, ok))
}

fn cmd_check_algebra(file: &Path, canonical: bool) -> Outcome<(String, bool)> {
    let alg = StructureAlgebra::parse(&read(file)?)?;
    let mut out = String::new();
    if canonical {
        out.push_str(&alg.format());
    }
    let mut ok = true;
    for r in alg.check() {
        ok &= r.passed();
        out.push_str(&r.render(alg.basis()));
        out.push('\n');
    }
    if let Err(e) = alg.validate() {
        if ok {
            ok = false;
            out.push_str(&format!("FAIL {e}\n"));
        }
    }
    Ok((out, ok))
}

fn run(cli: Cli) -> Outcome<(String, bool)> {
    match cli.command {
        Command::Basis {
            ctx,
            max_deg,
            max_rdeg,
            counts,
            tsv,
        } => cmd_basis(&ctx, max_deg, max_rdeg, counts, tsv).map(|s| (s, true)),
        Command::Mul { ctx, left, right } => cmd_mul(&ctx, &left, &right).map(|s| (s, true)),
        Command::Reduce { ctx, expr } => cmd_reduce(&ctx, &expr).map(|s| (s, true)),
        Command::Verify(v) => cmd_verify(&v),
        Command::CheckAlgebra { file, canonical } => cmd_check_algebra(&file, canonical),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Fuel(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(args: &[&str]) -> CtxArgs {
        #[derive(Parser)]
        struct Wrap {
            #[command(flatten)]
            ctx: CtxArgs,
        }
        Wrap::parse_from(std::iter::once("rblie").chain(args.iter().copied())).ctx
    }

    #[test]
    fn kind_defaults_to_free_rb() {
        let c = build(&ctx(&["--alphabet", "a", "--weight", "1"]))
            .ok()
            .unwrap();
        assert!(matches!(c, Context::Free(_)));
        assert_eq!(c.alg().weight(), Some(Weight::One));
    }

    #[test]
    fn missing_alphabet_is_a_usage_error() {
        assert!(matches!(
            build(&ctx(&["--kind", "ls"])),
            Err(Failure::Usage(_))
        ));
    }
}
