//! The `brouwer` command line.
//!
//! Every command renders its result to a string first, so output is
//! byte-for-byte reproducible and easy to test. Exit codes: `0` success, `1`
//! a failed check (or a dimension mismatch), `2` unparsable input or options.

pub mod expr;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::creals::{const_rational, measurably_greater, measurably_smaller};
use crate::pastar::{self, parse_proof};
use crate::pseudo::{PseudoContinuum, PseudoError, TwistConfig};
use crate::rational::{int, parse_rational, Rational};
use crate::subject::{archimedean_probe, brouwer_alpha, kripke_witness, vesley_x, ProblemOracle};

pub use expr::{parse_expr, ExprError, PseudoExpr};

/// Settings shared by the commands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub dim: usize,
    pub twist_p: Rational,
    pub fuel: u32,
    pub oracle: String,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            dim: 2,
            twist_p: int(2),
            fuel: 64,
            oracle: "undecided".to_string(),
        }
    }
}

impl RunConfig {
    pub fn ring(&self) -> Result<PseudoContinuum, PseudoError> {
        PseudoContinuum::new(self.dim, TwistConfig::new(self.twist_p.clone())?)
    }

    pub fn problem(&self) -> Result<ProblemOracle, crate::subject::OracleSpecError> {
        self.oracle.parse()
    }
}

#[derive(Debug, Parser)]
#[command(name = "brouwer", version, about = "Constructive reals, the Creating Subject, the pseudo-continuum and PA*")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pseudo-continuum arithmetic.
    #[command(subcommand)]
    Pseudo(PseudoCmd),
    /// Choice sequences driven by a staged oracle.
    #[command(subcommand)]
    Subject(SubjectCmd),
    /// Proof checking and omega elimination.
    #[command(subcommand)]
    Pastar(PastarCmd),
}

#[derive(Debug, Subcommand)]
enum PseudoCmd {
    /// Evaluate an expression such as `e[0,1]*e[1,0]` and print it canonically.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value = "2")]
        twist: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Seq {
    Alpha,
    Vesley,
    Kripke,
}

#[derive(Debug, Subcommand)]
enum SubjectCmd {
    /// Print the first stages of a sequence.
    Run {
        #[arg(long)]
        oracle: String,
        #[arg(long)]
        stages: u32,
        #[arg(long, value_enum)]
        seq: Seq,
    },
    /// Archimedean probe and order verdicts for Vesley's x against 0.
    Probe {
        #[arg(long)]
        oracle: String,
        #[arg(long, default_value_t = 64)]
        fuel: u32,
    },
}

#[derive(Debug, Subcommand)]
enum PastarCmd {
    /// Check a proof file.
    Check { file: PathBuf },
    /// Replace omega by a numeral and write the resulting proof.
    Eliminate {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Check(String),
    Input(String),
}

type Outcome = Result<String, Failure>;

/// Runs the command line with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Pseudo(PseudoCmd::Eval { expr, dim, twist }) => pseudo_eval(&expr, dim, &twist),
        Command::Subject(SubjectCmd::Run {
            oracle,
            stages,
            seq,
        }) => subject_run(&oracle, stages, seq),
        Command::Subject(SubjectCmd::Probe { oracle, fuel }) => subject_probe(&oracle, fuel),
        Command::Pastar(PastarCmd::Check { file }) => pastar_check(&file),
        Command::Pastar(PastarCmd::Eliminate { file, output }) => pastar_eliminate(&file, &output),
    };
    match outcome {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Check(text)) => {
            let _ = out.write_all(text.as_bytes());
            1
        }
        Err(Failure::Input(text)) => {
            let _ = writeln!(err, "{text}");
            2
        }
    }
}

fn pseudo_eval(src: &str, dim: usize, twist: &str) -> Outcome {
    let twist_p =
        parse_rational(twist).ok_or_else(|| Failure::Input(format!("invalid twist `{twist}`")))?;
    let config = RunConfig {
        dim,
        twist_p,
        ..RunConfig::default()
    };
    let ring = config.ring().map_err(|e| Failure::Input(e.to_string()))?;
    let parsed = parse_expr(src).map_err(|e| Failure::Input(e.to_string()))?;
    match parsed.eval(&ring) {
        Ok(point) => Ok(format!("{point}\n")),
        Err(e) => Err(Failure::Check(format!("error: {e}\n"))),
    }
}

fn oracle(spec: &str) -> Result<ProblemOracle, Failure> {
    spec.parse()
        .map_err(|e| Failure::Input(format!("invalid oracle `{spec}`: {e}")))
}

fn subject_run(spec: &str, stages: u32, seq: Seq) -> Outcome {
    let oracle = oracle(spec)?;
    let mut text = String::new();
    match seq {
        Seq::Alpha | Seq::Vesley => {
            let x = if seq == Seq::Alpha {
                brouwer_alpha(&oracle)
            } else {
                vesley_x(&oracle)
            };
            for (i, q) in x.trace(stages).iter().enumerate() {
                let _ = writeln!(text, "{i} {q}");
            }
        }
        Seq::Kripke => {
            for (i, bit) in kripke_witness(&oracle).entries(stages).iter().enumerate() {
                let _ = writeln!(text, "{i} {bit}");
            }
        }
    }
    Ok(text)
}

fn subject_probe(spec: &str, fuel: u32) -> Outcome {
    let oracle = oracle(spec)?;
    let x = vesley_x(&oracle);
    let zero = const_rational(int(0));
    let mut text = String::new();
    match archimedean_probe(&x, fuel) {
        Some((n, cert)) => {
            let _ = writeln!(text, "ARCHIMEDEAN n={n} certificate {cert}");
        }
        None => {
            let _ = writeln!(text, "NO WITNESS (fuel={fuel})");
        }
    }
    let _ = writeln!(text, "x ∘> 0 {}", measurably_greater(&x, &zero, fuel));
    let _ = writeln!(text, "x <∘ 0 {}", measurably_smaller(&x, &zero, fuel));
    Ok(text)
}

fn read_proof(path: &Path) -> Result<pastar::Proof, Failure> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_proof(&src).map_err(|e| Failure::Input(e.to_string()))
}

fn pastar_check(path: &Path) -> Outcome {
    let proof = read_proof(path)?;
    match pastar::check(&proof) {
        Ok(()) => Ok("ok\n".to_string()),
        Err(e) => Err(Failure::Check(format!("error {e}\n"))),
    }
}

fn pastar_eliminate(path: &Path, output: &Path) -> Outcome {
    let proof = read_proof(path)?;
    let done = pastar::eliminate_omega(&proof).map_err(|e| Failure::Check(format!("error {e}\n")))?;
    if let Err(e) = pastar::check(&done.proof) {
        return Err(Failure::Check(format!("error in rewritten proof {e}\n")));
    }
    std::fs::write(output, done.proof.to_string())
        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", output.display())))?;
    Ok(format!("{}\nok\n", done.report))
}
