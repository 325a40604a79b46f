//! Argument parsing and dispatch. `run` returns the exit code and both
//! output streams so the binary and the tests share one path.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use multlab_core::resolve::{ModuleSpec, DEFAULT_HOM_CUTOFF};
use multlab_core::{build_finite_algebra, FiniteLocalAlgebra};
use serde_json::{json, Value};

use crate::acceptance;
use crate::report;
use crate::ringspec::load_ring_spec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "multlab", version, about = "Homological invariants of artinian local rings over GF(p)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Override the degree cap from the ring file.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct RingArgs {
    /// Ring-spec file.
    pub path: PathBuf,
    /// Homological cutoff.
    #[arg(long = "hom", default_value_t = DEFAULT_HOM_CUTOFF)]
    pub hom: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hilbert function of the associated graded ring.
    Hilbert(RingArgs),
    /// Socle dimension and basis.
    Socle(RingArgs),
    /// Multiplicity bounds and ring classes.
    Classify(RingArgs),
    /// Truncated minimal resolution of k or a power of the maximal ideal.
    Betti {
        #[command(flatten)]
        ring: RingArgs,
        /// Internal-degree cutoff for the graded table.
        #[arg(long = "deg", default_value_t = report::DEFAULT_DEG)]
        deg: usize,
        /// `k` or `m^j`.
        #[arg(long, default_value = "k", value_parser = parse_module)]
        module: ModuleSpec,
    },
    /// Degree-two presentation of the Ext algebra.
    ExtPres(RingArgs),
    /// Compare the Ext algebra with the dual of the quadratic part.
    ExtCompare(RingArgs),
    /// Quadratic part of the tangent cone and its dual.
    QuadDual(RingArgs),
    /// Koszulness, through the linearity defect and the tangent cone.
    Koszul(RingArgs),
    /// Linearity defect of the residue field.
    Lindef(RingArgs),
    /// Fröberg's relation.
    Froberg(RingArgs),
    /// Golod witness from Koszul homology.
    Golod(RingArgs),
    /// Levin's relation for powers of the maximal ideal.
    Levin {
        #[command(flatten)]
        ring: RingArgs,
        /// A single power; otherwise every power from the regularity bound.
        #[arg(long)]
        power: Option<usize>,
    },
    /// Polynomial regularity.
    Polreg(RingArgs),
    /// Gorenstein minimal multiplicity versus the Ext algebra.
    Theorem1(RingArgs),
    /// Complete intersections of minimal multiplicity versus the Ext algebra.
    Theorem2(RingArgs),
    /// Koszulness versus minimal multiplicity for CI and Golod rings.
    Theorem3(RingArgs),
    /// Run the acceptance suite on the bundled rings.
    Corpus,
}

fn parse_module(s: &str) -> Result<ModuleSpec, String> {
    if s == "k" {
        return Ok(ModuleSpec::ResidueField);
    }
    s.strip_prefix("m^")
        .and_then(|j| j.parse::<usize>().ok())
        .map(ModuleSpec::MaxIdealPower)
        .ok_or_else(|| format!("expected `k` or `m^j`, found `{s}`"))
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn input_error(msg: impl std::fmt::Display) -> Outcome {
    Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {msg}\n") }
}

fn load(args: &RingArgs, cap: Option<usize>) -> Result<FiniteLocalAlgebra, Outcome> {
    let spec = load_ring_spec(&args.path).map_err(input_error)?;
    build_finite_algebra(&spec.presentation, cap.unwrap_or(spec.cap))
        .map_err(|e| input_error(format!("{}: {e}", args.path.display())))
}

fn emit(format: Format, command: &str, ring: Option<Value>, body: Value, code: i32) -> Outcome {
    let mut v = body;
    if let Value::Object(m) = &mut v {
        m.insert("command".into(), json!(command));
        if let Some(r) = ring {
            m.insert("ring".into(), r);
        }
    }
    let stdout = match format {
        Format::Json => serde_json::to_string_pretty(&v).expect("reports serialize") + "\n",
        Format::Text => report::render_text(&v),
    };
    Outcome { code, stdout, stderr: String::new() }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    dispatch(cli)
}

fn dispatch(cli: Cli) -> Outcome {
    let fmt = cli.format;
    let cap = cli.cap;
    let (name, args) = match &cli.command {
        Command::Corpus => {
            let results = acceptance::run_all();
            let passed = results.iter().all(|c| c.passed);
            let body = json!({
                "passed": passed,
                "criteria": results.iter().map(|c| json!({
                    "id": c.id,
                    "name": c.name,
                    "passed": c.passed,
                    "detail": c.detail,
                })).collect::<Vec<_>>(),
            });
            return emit(fmt, "corpus", None, body, if passed { EXIT_OK } else { EXIT_FALSE });
        }
        Command::Hilbert(a) => ("hilbert", a),
        Command::Socle(a) => ("socle", a),
        Command::Classify(a) => ("classify", a),
        Command::Betti { ring, .. } => ("betti", ring),
        Command::ExtPres(a) => ("ext-pres", a),
        Command::ExtCompare(a) => ("ext-compare", a),
        Command::QuadDual(a) => ("quad-dual", a),
        Command::Koszul(a) => ("koszul", a),
        Command::Lindef(a) => ("lindef", a),
        Command::Froberg(a) => ("froberg", a),
        Command::Golod(a) => ("golod", a),
        Command::Levin { ring, .. } => ("levin", ring),
        Command::Polreg(a) => ("polreg", a),
        Command::Theorem1(a) => ("theorem1", a),
        Command::Theorem2(a) => ("theorem2", a),
        Command::Theorem3(a) => ("theorem3", a),
    };
    let r = match load(args, cap) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let s = args.hom;
    let plain = |v: Value| Ok((true, v));
    let result = match &cli.command {
        Command::Hilbert(_) => plain(report::hilbert(&r)),
        Command::Socle(_) => plain(report::socle(&r)),
        Command::Classify(_) => report::classification(&r, s).map(|v| (true, v)),
        Command::Betti { deg, module, .. } => plain(report::betti(&r, module, s, *deg)),
        Command::ExtPres(_) => report::ext_presentation(&r).map(|v| (true, v)),
        Command::ExtCompare(_) => report::ext_compare(&r, s),
        Command::QuadDual(_) => plain(report::quad_dual(&r, s)),
        Command::Koszul(_) => report::koszul(&r, s),
        Command::Lindef(_) => report::lindef_k(&r, s).map(|v| (true, v)),
        Command::Froberg(_) => Ok(report::froberg(&r, s)),
        Command::Golod(_) => Ok(report::golod(&r, s)),
        Command::Levin { power, .. } => report::levin(&r, *power, s),
        Command::Polreg(_) => report::polreg(&r).map(|v| (true, v)),
        Command::Theorem1(_) => report::theorem1(&r, s),
        Command::Theorem2(_) => report::theorem2(&r, s),
        Command::Theorem3(_) => report::theorem3(&r, s),
        Command::Corpus => unreachable!(),
    };
    match result {
        Ok((verdict, body)) => {
            emit(fmt, name, Some(report::ring_summary(&r)), body, if verdict { EXIT_OK } else { EXIT_FALSE })
        }
        Err(e) => input_error(format!("{}: {e}", args.path.display())),
    }
}
