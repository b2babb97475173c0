//! Command-line front end.
//!
//! [`run`] parses arguments, executes one command and returns the exit code
//! together with the text destined for stdout and stderr, so the binary is a
//! thin wrapper and the commands can be driven in-process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 input-file error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::env_post::{eword_census_post, EnvPost};
use crate::env_pre::{EnvError, EnvPre};
use crate::expr::{parse_expr, ParseError};
use crate::free::{FreeError, FreeRb};
use crate::presentation::{load_presentation, parse_presentation, LoadError, Presentation};
use crate::scalar::{parse_rational, BasisSymbol, ScalarError, TensorWord};
use crate::shuffle::{half_shuffle, shuffle};
use crate::verify::{run_verify, Suite, VerifyError, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rbalg", version, about = "Exact computations in commutative Rota-Baxter algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnvKind {
    /// Envelope of a Zinbiel (precommutative) algebra, weight 0.
    Pre,
    /// Envelope of a postcommutative algebra, weight 1.
    Post,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Shuffle product of two dotted tensor words, e.g. `a1.a2 b1.b2`.
    Shuffle {
        left: String,
        right: String,
        /// Half-shuffle `left ≻ right` instead (last letter taken from `right`).
        #[arg(long)]
        half: bool,
    },
    /// Normal form of an expression in the free commutative RB algebra.
    FreeRb {
        /// Rational weight λ.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        weight: String,
        /// Comma- or space-separated generators; defaults to the symbols of EXPR.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        alphabet: Option<Vec<String>>,
        expr: String,
    },
    /// Normal form of an expression in an enveloping RB algebra.
    Normalize {
        #[arg(long, value_enum)]
        env: EnvKind,
        /// Presentation file.
        #[arg(long)]
        algebra: PathBuf,
        expr: String,
    },
    /// Product of two expressions in an enveloping RB algebra.
    Product {
        #[arg(long, value_enum)]
        env: EnvKind,
        #[arg(long)]
        algebra: PathBuf,
        left: String,
        right: String,
    },
    /// E-word counts by R-degree and number of letters.
    Dims {
        #[arg(long, value_enum)]
        env: EnvKind,
        /// Presentation file (required for `pre`).
        #[arg(long)]
        algebra: Option<PathBuf>,
        /// Dimension of the postcommutative algebra (alternative to `--algebra`).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 2)]
        max_rdegree: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Parses a presentation file and checks its defining identities.
    CheckPresentation { file: PathBuf },
    /// Runs a seeded verification suite.
    Verify {
        /// shuffle, free-rb, quotient, env-pre, env-post, ybe or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Presentation replacing the builtin ones of the same kind.
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Free(#[from] FreeError),
    #[error(transparent)]
    Env(#[from] EnvError),
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Load { path: PathBuf, source: LoadError },
    #[error("{}: {message}", path.display())]
    WrongKind { path: PathBuf, message: String },
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Scalar(_) | CliError::Free(_) => EXIT_USAGE,
            CliError::Env(EnvError::UnknownSymbol(_)) => EXIT_USAGE,
            CliError::Env(_) => EXIT_FAILURE,
            CliError::Read { .. } | CliError::Load { .. } | CliError::WrongKind { .. } => EXIT_INPUT,
            CliError::Verify(VerifyError::UnknownSuite(_)) => EXIT_USAGE,
            CliError::Verify(VerifyError::WrongPresentation { .. }) => EXIT_INPUT,
        }
    }
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut stdout = String::new();
    match execute(cli.command, &mut stdout) {
        Ok(code) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.code(), stdout, stderr: format!("error: {e}\n") },
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

fn load(path: &Path) -> Result<Presentation, CliError> {
    load_presentation(&read_file(path)?).map_err(|source| CliError::Load { path: path.to_path_buf(), source })
}

enum Env {
    Pre(EnvPre),
    Post(EnvPost),
}

fn load_env(kind: EnvKind, path: &Path) -> Result<Env, CliError> {
    let wrong = |expected: &str| CliError::WrongKind {
        path: path.to_path_buf(),
        message: format!("expected a {expected} presentation"),
    };
    match (kind, load(path)?) {
        (EnvKind::Pre, Presentation::Zinbiel(p)) => Ok(Env::Pre(EnvPre::new(p))),
        (EnvKind::Post, Presentation::Postcommutative(p)) => Ok(Env::Post(EnvPost::new(p))),
        (EnvKind::Pre, _) => Err(wrong("zinbiel")),
        (EnvKind::Post, _) => Err(wrong("postcommutative")),
    }
}

fn execute(command: Command, out: &mut String) -> Result<i32, CliError> {
    match command {
        Command::Shuffle { left, right, half } => {
            let (a, b): (TensorWord, TensorWord) = (left.parse()?, right.parse()?);
            let result = if half { half_shuffle(&a, &b) } else { shuffle(&a, &b) };
            writeln!(out, "{result}").expect("write to string");
        }
        Command::FreeRb { weight, alphabet, expr } => {
            let e = parse_expr(&expr)?;
            let alphabet = match alphabet {
                Some(names) => names
                    .iter()
                    .flat_map(|n| n.split_whitespace())
                    .map(str::parse)
                    .collect::<Result<Vec<BasisSymbol>, _>>()?,
                None => e.symbols(),
            };
            let alg = FreeRb::new(alphabet, parse_rational(&weight)?);
            writeln!(out, "{}", alg.eval_free(&e)?).expect("write to string");
        }
        Command::Normalize { env, algebra, expr } => {
            let e = parse_expr(&expr)?;
            let text = match load_env(env, &algebra)? {
                Env::Pre(env) => env.eval_env(&e)?.to_string(),
                Env::Post(env) => env.eval_env_post(&e)?.to_string(),
            };
            writeln!(out, "{text}").expect("write to string");
        }
        Command::Product { env, algebra, left, right } => {
            let (x, y) = (parse_expr(&left)?, parse_expr(&right)?);
            let text = match load_env(env, &algebra)? {
                Env::Pre(env) => env.mul(&env.eval_env(&x)?, &env.eval_env(&y)?)?.to_string(),
                Env::Post(env) => env.mul(&env.eval_env_post(&x)?, &env.eval_env_post(&y)?)?.to_string(),
            };
            writeln!(out, "{text}").expect("write to string");
        }
        Command::Dims { env, algebra, n, max_rdegree, max_degree } => {
            if max_degree == 0 {
                return Err(CliError::Usage("--max-degree must be at least 1".into()));
            }
            let census = match (env, algebra, n) {
                (EnvKind::Pre, Some(path), None) => match load_env(EnvKind::Pre, &path)? {
                    Env::Pre(env) => env.eword_census(max_rdegree, max_degree),
                    Env::Post(_) => unreachable!("kind checked by load_env"),
                },
                (EnvKind::Pre, _, _) => return Err(CliError::Usage("dims --env pre needs --algebra FILE".into())),
                (EnvKind::Post, Some(path), None) => match load_env(EnvKind::Post, &path)? {
                    Env::Post(env) => eword_census_post(env.presentation().dim(), max_rdegree, max_degree),
                    Env::Pre(_) => unreachable!("kind checked by load_env"),
                },
                (EnvKind::Post, None, Some(n)) if n > 0 => eword_census_post(n, max_rdegree, max_degree),
                (EnvKind::Post, _, _) => {
                    return Err(CliError::Usage("dims --env post needs exactly one of --algebra FILE or --n N > 0".into()))
                }
            };
            writeln!(out, "r_degree, letters, count").expect("write to string");
            write!(out, "{census}").expect("write to string");
        }
        Command::CheckPresentation { file } => {
            let raw = parse_presentation(&read_file(&file)?)
                .map_err(|source| CliError::Load { path: file.clone(), source })?;
            let violations = raw.violations();
            if violations.is_empty() {
                let p = raw.validate().map_err(|e| CliError::Load { path: file.clone(), source: e.into() })?;
                writeln!(out, "ok: {} presentation of dimension {}", p.kind(), p.dim()).expect("write to string");
            } else {
                for v in &violations {
                    writeln!(out, "violation: {v}").expect("write to string");
                }
                writeln!(out, "invalid: {} identity violation(s)", violations.len()).expect("write to string");
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Verify { suite, trials, seed, algebra } => {
            let suite: Suite = suite.parse()?;
            let presentation = algebra.as_deref().map(load).transpose()?;
            let report = run_verify(suite, &VerifyOptions { trials, seed, presentation })?;
            writeln!(out, "{report}").expect("write to string");
            if !report.passed() {
                return Ok(EXIT_FAILURE);
            }
        }
    }
    Ok(EXIT_OK)
}
