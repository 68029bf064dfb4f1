//! `symdig` command-line front end.
//!
//! Exit codes: 0 success or all claims pass, 1 a verified failure (a failing
//! claim or proven non-isomorphism), 2 usage or input error.

pub mod io;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use symdig::constructions::{build_hamming, build_paley, XqFamily, XqnFamily};
use symdig::digraph::{is_isomorphic, normal_quotient, GraphError};
use symdig::verify::{self, PropertyReport, VerifyOptions};
use symdig::{Digraph, FiniteField, GeneratedAction};

use crate::io::Format;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] symdig::Error),
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Core(e.into())
    }
}

impl From<symdig::finfield::FieldError> for CliError {
    fn from(e: symdig::finfield::FieldError) -> Self {
        CliError::Core(e.into())
    }
}

#[derive(Debug, Parser)]
#[command(name = "symdig", version, about = "Construct and verify wedge-transitive digraph families")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph family and write it out.
    Construct(ConstructArgs),
    /// Check the structural claims for a family and write a JSON report.
    Verify(VerifyArgs),
    /// Quotient a family by a normal subgroup.
    Quotient(QuotientArgs),
    /// Test two graph files for isomorphism.
    Iso(IsoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Xq,
    Xqn,
    Hamming,
    HammingComplement,
    Paley,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, env = "SYMDIG_FAMILY", value_enum)]
    pub family: Family,
    /// Field order (prime power).
    #[arg(long, env = "SYMDIG_Q")]
    pub q: Option<u64>,
    /// Alphabet size for Hamming families.
    #[arg(long, env = "SYMDIG_M")]
    pub m: Option<usize>,
    /// Number of coordinates.
    #[arg(long, env = "SYMDIG_N")]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output file; standard output when absent.
    #[arg(long, env = "SYMDIG_OUT")]
    pub out: Option<PathBuf>,
    #[arg(long, env = "SYMDIG_FORMAT", value_enum, default_value = "edgelist")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// The family's main claim set.
    Claims,
    /// Local structure of X_q around [1,0] (xq only).
    Proposition,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, env = "SYMDIG_OUT")]
    pub out: Option<PathBuf>,
    #[arg(long, env = "SYMDIG_SUITE", value_enum, default_value = "claims")]
    pub suite: Suite,
    /// Seed for sampled checks.
    #[arg(long, env = "SYMDIG_SEED", default_value_t = verify::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, env = "SYMDIG_CAP_ENUM", default_value_t = verify::DEFAULT_ENUM_CAP)]
    pub cap_enum: usize,
    /// Full pair scans up to this many pairs, sampling beyond.
    #[arg(long, env = "SYMDIG_CAP_PAIRS", default_value_t = verify::DEFAULT_PAIR_SCAN_CAP)]
    pub cap_pairs: usize,
    /// Record per-claim wall time (reports are then no longer reproducible).
    #[arg(long, env = "SYMDIG_TIMINGS")]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Subgroup {
    /// The centre ⟨-I⟩ of SL(2,q).
    Center,
}

#[derive(Debug, Args)]
pub struct QuotientArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[arg(long, env = "SYMDIG_SUBGROUP", value_enum)]
    pub subgroup: Subgroup,
}

#[derive(Debug, Args)]
pub struct IsoArgs {
    pub first: PathBuf,
    pub second: PathBuf,
    /// Witness mapping output (`u v` per line).
    #[arg(long, env = "SYMDIG_OUT")]
    pub out: Option<PathBuf>,
    #[arg(long, env = "SYMDIG_CAP_ISO", default_value_t = symdig::digraph::DEFAULT_ISO_CAP)]
    pub cap_iso: usize,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_in(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parameters after checking they match the family.
#[derive(Debug, Clone)]
enum Params {
    Xq(FiniteField),
    Xqn(FiniteField, usize),
    Hamming { m: usize, n: usize, complement: bool },
    Paley(FiniteField),
}

impl FamilyArgs {
    fn resolve(&self) -> Result<Params, CliError> {
        let need_q = || {
            self.q
                .ok_or_else(|| usage("--q is required for this family"))
                .and_then(|q| FiniteField::with_order(q).map_err(|e| usage(format!("--q {q}: {e}"))))
        };
        let forbid_m = || match self.m {
            Some(_) => Err(usage("--m only applies to hamming families")),
            None => Ok(()),
        };
        match self.family {
            Family::Xq => {
                forbid_m()?;
                if self.n.is_some_and(|n| n != 1) {
                    return Err(usage("--n is not used by xq (use xqn)"));
                }
                Ok(Params::Xq(need_q()?))
            }
            Family::Xqn => {
                forbid_m()?;
                let n = self.n.ok_or_else(|| usage("--n is required for xqn"))?;
                if n < 1 {
                    return Err(usage("--n must be at least 1"));
                }
                Ok(Params::Xqn(need_q()?, n))
            }
            Family::Paley => {
                forbid_m()?;
                if self.n.is_some() {
                    return Err(usage("--n is not used by paley"));
                }
                Ok(Params::Paley(need_q()?))
            }
            Family::Hamming | Family::HammingComplement => {
                if self.q.is_some() {
                    return Err(usage("--q is not used by hamming families"));
                }
                let m = self.m.ok_or_else(|| usage("--m is required for hamming families"))?;
                let complement = self.family == Family::HammingComplement;
                let n = match (self.n, complement) {
                    (Some(n), _) => n,
                    (None, true) => 2,
                    (None, false) => return Err(usage("--n is required for hamming")),
                };
                if m < 2 || n < 1 {
                    return Err(usage("hamming families need m >= 2 and n >= 1"));
                }
                if complement && n != 2 {
                    return Err(usage("hamming-complement is only defined for n = 2"));
                }
                Ok(Params::Hamming { m, n, complement })
            }
        }
    }
}

/// Turns a construction error into a usage error naming the violated
/// precondition.
fn build_err(e: symdig::Error) -> CliError {
    match e {
        symdig::Error::BadOrder { .. }
        | symdig::Error::Parameter(_)
        | symdig::Error::Action(symdig::permaction::ActionError::DomainTooLarge { .. }) => {
            usage(e.to_string())
        }
        other => CliError::Core(other),
    }
}

fn build_graph(params: &Params) -> Result<Digraph, CliError> {
    Ok(match params {
        Params::Xq(f) => XqFamily::new(f).map_err(build_err)?.graph,
        Params::Xqn(f, n) => XqnFamily::new(f, *n).map_err(build_err)?.graph,
        Params::Hamming { m, n, complement } => {
            build_hamming(*m, *n, *complement).map_err(build_err)?
        }
        Params::Paley(f) => build_paley(f).map_err(build_err)?.0,
    })
}

pub fn cmd_construct(args: &ConstructArgs) -> Result<ExitCode, CliError> {
    let g = build_graph(&args.family.resolve()?)?;
    write_out(args.output.out.as_deref(), &io::render(&g, args.output.format))?;
    Ok(ExitCode::SUCCESS)
}

pub fn run_verify(args: &VerifyArgs) -> Result<PropertyReport, CliError> {
    let params = args.family.resolve()?;
    let opts = VerifyOptions {
        seed: args.seed,
        cap_enum: args.cap_enum,
        pair_scan_cap: args.cap_pairs,
        timings: args.timings,
    };
    let report = match (args.suite, &params) {
        (Suite::Proposition, Params::Xq(f)) => verify::check_proposition_claims(f, &opts),
        (Suite::Proposition, _) => return Err(usage("the proposition suite applies to xq only")),
        (Suite::Claims, Params::Xq(f)) => verify::check_xq_claims(f, &opts),
        (Suite::Claims, Params::Xqn(f, n)) => verify::check_xqn_claims(f, *n, &opts),
        (Suite::Claims, Params::Paley(f)) => verify::check_paley_claims(f, &opts),
        (Suite::Claims, Params::Hamming { m, n, complement }) => {
            verify::check_hamming_claims(*m, *n, *complement, &opts)
        }
    };
    report.map_err(build_err)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let report = run_verify(args)?;
    write_out(args.out.as_deref(), &(report.to_json() + "\n"))?;
    for c in report.failures() {
        eprintln!("FAIL {}: {}", c.id, c.anchor);
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn cmd_quotient(args: &QuotientArgs) -> Result<ExitCode, CliError> {
    let params = args.family.resolve()?;
    let Params::Xq(field) = params else {
        return Err(usage("--subgroup center is only supported for --family xq"));
    };
    let fam = XqFamily::new(&field).map_err(build_err)?;
    let centre = match args.subgroup {
        Subgroup::Center => GeneratedAction::new(fam.graph.vertex_count(), vec![fam.z()])
            .map_err(symdig::Error::from)?,
    };
    let quotient = normal_quotient(&fam.graph, &centre)?;
    let labels = fam.graph.labels().expect("X_q is labelled");
    let mut blocks = String::new();
    for (i, b) in quotient.blocks.iter().enumerate() {
        let members: Vec<String> = b.iter().map(|&v| labels.render(v)).collect();
        blocks.push_str(&format!("{i}: {}\n", members.join(", ")));
    }
    let graph = io::render(&quotient.graph, args.output.format);
    match &args.output.out {
        Some(path) => {
            write_out(Some(path), &graph)?;
            let mut block_path = path.clone().into_os_string();
            block_path.push(".blocks");
            write_out(Some(Path::new(&block_path)), &blocks)?;
        }
        None => {
            print!("{graph}");
            print!("{blocks}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_iso(args: &IsoArgs) -> Result<ExitCode, CliError> {
    let g1 = io::parse_graph(&read_in(&args.first)?)?;
    let g2 = io::parse_graph(&read_in(&args.second)?)?;
    match is_isomorphic(&g1, &g2, args.cap_iso)? {
        Some(map) => {
            let text: String = map
                .iter()
                .enumerate()
                .map(|(u, v)| format!("{u} {v}\n"))
                .collect();
            match &args.out {
                Some(p) => write_out(Some(p), &text)?,
                None => println!("isomorphic"),
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("not isomorphic");
            Ok(ExitCode::from(1))
        }
    }
}

pub fn run(cli: &Cli) -> ExitCode {
    let result = match &cli.command {
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Quotient(a) => cmd_quotient(a),
        Command::Iso(a) => cmd_iso(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
