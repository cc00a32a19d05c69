//! The `zeon` command: JSON in, JSON or zeon notation out.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};
use zeon::linalg::{determinant, eliminate, EliminationOptions, Pivoting};
use zeon::poly::{lift_simple_zero, split};
use zeon::spectral::{charpoly, eigenpairs, eigenvalues, spectral_decompose};
use zeon::{Complex64, Tolerances, ZeonElement, ZeonError, ZeonMatrix, ZeonPolynomial};

/// Significant figures in pretty output.
const DIGITS: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "zeon", version, about = "Complex zeon algebra calculator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Coefficients at or below this modulus are dropped from results.
    #[arg(long, global = true, value_name = "X")]
    pub tol_prune: Option<f64>,

    /// Tolerance for approximate equality checks.
    #[arg(long, global = true, value_name = "X")]
    pub tol_compare: Option<f64>,

    /// Scalar parts at or below this modulus count as zero (not invertible).
    #[arg(long, global = true, value_name = "X")]
    pub tol_scalar: Option<f64>,

    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,

    /// Emit zeon notation, e.g. `3 + 0.5*z[1,2]`.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Write the result to this file instead of standard output.
    #[arg(short = 'o', long = "output", global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input JSON file; standard input when omitted or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inverse of an element.
    Inv(Input),
    /// Principal k-th root of an element.
    Root {
        #[arg(short = 'k', default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[command(flatten)]
        input: Input,
    },
    /// Polynomial long division; input `{"dividend": poly, "divisor": poly}`.
    Polydiv(Input),
    /// Zeon zero of a polynomial over a simple complex root.
    Polyzero {
        /// The complex root, `re` or `re,im`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        lambda0: Complex64,
        #[command(flatten)]
        input: Input,
    },
    /// All zeon zeros of a polynomial whose induced roots are simple.
    Split(Input),
    /// Determinant of a square matrix.
    Det(Input),
    /// Inverse of a square matrix.
    Matinv(Input),
    /// Row reduction with invertible pivots.
    Eliminate {
        /// Take the first invertible entry as pivot instead of the largest.
        #[arg(long)]
        first_invertible: bool,
        /// Scale pivot rows so each pivot is 1.
        #[arg(long)]
        unit_pivots: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Characteristic polynomial `|tI - A|`.
    Charpoly(Input),
    /// Zeon eigenvalues and eigenvectors.
    Eigen(Input),
    /// Spectral decomposition of a self-adjoint matrix.
    Spectral(Input),
}

impl Command {
    fn input(&self) -> &Input {
        match self {
            Command::Inv(i)
            | Command::Polydiv(i)
            | Command::Split(i)
            | Command::Det(i)
            | Command::Matinv(i)
            | Command::Charpoly(i)
            | Command::Eigen(i)
            | Command::Spectral(i) => i,
            Command::Root { input, .. }
            | Command::Polyzero { input, .. }
            | Command::Eliminate { input, .. } => input,
        }
    }
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err("expected `re` or `re,im`".into()),
    }
}

/// A failed run: exit status plus the error object.
#[derive(Debug)]
pub struct Failure {
    pub status: i32,
    pub code: String,
    pub detail: String,
}

impl Failure {
    fn malformed(detail: impl Into<String>) -> Self {
        Failure {
            status: 1,
            code: "malformed_input".into(),
            detail: detail.into(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.code, "detail": self.detail })
    }
}

impl From<ZeonError> for Failure {
    fn from(e: ZeonError) -> Self {
        Failure {
            status: if e.is_domain() { 2 } else { 1 },
            code: e.code().into(),
            detail: e.to_string(),
        }
    }
}

/// A result in both output forms.
struct Rendered {
    json: Value,
    pretty: String,
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::malformed(e.to_string()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolydivInput {
    dividend: ZeonPolynomial,
    divisor: ZeonPolynomial,
}

fn tolerances(cli: &Cli) -> Result<Tolerances, Failure> {
    let d = Tolerances::DEFAULT;
    Ok(Tolerances::new(
        cli.tol_prune.unwrap_or(d.prune),
        cli.tol_compare.unwrap_or(d.compare),
        cli.tol_scalar.unwrap_or(d.scalar_zero),
    )?)
}

/// Path of the input file, `None` for standard input.
pub fn input_path(cli: &Cli) -> Option<&PathBuf> {
    cli.command
        .input()
        .input
        .as_ref()
        .filter(|p| p.as_os_str() != "-")
}

/// Runs the command on the input text and returns the formatted result.
pub fn run(cli: &Cli, text: &str) -> Result<String, Failure> {
    let tol = tolerances(cli)?;
    let out = dispatch(&cli.command, text, &tol)?;
    Ok(if cli.pretty {
        let mut s = out.pretty;
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    } else {
        let mut s = serde_json::to_string_pretty(&out.json).expect("json");
        s.push('\n');
        s
    })
}

fn element(u: &ZeonElement) -> Rendered {
    Rendered {
        json: to_value(u),
        pretty: u.to_pretty(DIGITS),
    }
}

fn dispatch(cmd: &Command, text: &str, tol: &Tolerances) -> Result<Rendered, Failure> {
    Ok(match cmd {
        Command::Inv(_) => element(&parse::<ZeonElement>(text)?.inverse(tol)?),
        Command::Root { k, .. } => element(&parse::<ZeonElement>(text)?.kth_root(*k, tol)?),
        Command::Polydiv(_) => {
            let input: PolydivInput = parse(text)?;
            let (q, r) = input.dividend.divide(&input.divisor, tol)?;
            let (q, r) = (q.pruned(tol.prune), r.pruned(tol.prune));
            Rendered {
                json: json!({ "quotient": q, "remainder": r }),
                pretty: format!(
                    "quotient: {}\nremainder: {}",
                    q.to_pretty(DIGITS),
                    r.to_pretty(DIGITS)
                ),
            }
        }
        Command::Polyzero { lambda0, .. } => {
            element(&lift_simple_zero(&parse(text)?, *lambda0, tol)?)
        }
        Command::Split(_) => {
            let zeros = split(&parse(text)?, tol)?;
            Rendered {
                json: json!({ "zeros": zeros }),
                pretty: zeros
                    .iter()
                    .map(|z| z.to_pretty(DIGITS))
                    .collect::<Vec<_>>()
                    .join("\n"),
            }
        }
        Command::Det(_) => element(&determinant(&parse(text)?, tol)?),
        Command::Matinv(_) => {
            let inv = parse::<ZeonMatrix>(text)?.inverse(tol)?;
            Rendered {
                json: to_value(&inv),
                pretty: format!("{inv:.DIGITS$}"),
            }
        }
        Command::Eliminate {
            first_invertible,
            unit_pivots,
            ..
        } => {
            let options = EliminationOptions {
                pivoting: if *first_invertible {
                    Pivoting::FirstInvertible
                } else {
                    Pivoting::MaxModulus
                },
                unit_pivots: *unit_pivots,
            };
            let rep = eliminate(&parse(text)?, options, tol);
            let mut pretty = format!("{:.DIGITS$}", rep.upper);
            let _ = writeln!(pretty, "det_factor: {}", rep.det_factor.to_pretty(DIGITS));
            let _ = write!(pretty, "pivot_count: {}", rep.pivot_count);
            Rendered {
                json: to_value(&rep),
                pretty,
            }
        }
        Command::Charpoly(_) => {
            let chi = charpoly(&parse(text)?)?.pruned(tol.prune);
            Rendered {
                json: to_value(&chi),
                pretty: chi.to_pretty(DIGITS),
            }
        }
        Command::Eigen(_) => {
            let a: ZeonMatrix = parse(text)?;
            let simple = eigenvalues(&a, tol)?.spectrally_simple;
            let pairs = eigenpairs(&a, tol)?;
            let values: Vec<&ZeonElement> = pairs.iter().map(|p| &p.value).collect();
            let vectors: Vec<_> = pairs.iter().map(|p| &p.normalized).collect();
            let mut pretty = String::new();
            for (j, p) in pairs.iter().enumerate() {
                let _ = writeln!(pretty, "lambda_{} = {}", j + 1, p.value.to_pretty(DIGITS));
                let _ = writeln!(pretty, "v_{} = {:.DIGITS$}", j + 1, p.normalized);
            }
            let _ = write!(pretty, "spectrally_simple: {simple}");
            Rendered {
                json: json!({ "eigenvalues": values, "eigenvectors": vectors, "spectrally_simple": simple }),
                pretty,
            }
        }
        Command::Spectral(_) => {
            let d = spectral_decompose(&parse(text)?, tol)?;
            let mut pretty = String::new();
            for (j, (p, pi)) in d.eigenpairs.iter().zip(&d.projections).enumerate() {
                let _ = writeln!(pretty, "lambda_{} = {}", j + 1, p.value.to_pretty(DIGITS));
                let _ = writeln!(pretty, "v_{} = {:.DIGITS$}", j + 1, p.normalized);
                let _ = write!(pretty, "pi_{} =\n{:.DIGITS$}", j + 1, pi);
            }
            let c = d.checks;
            let _ = write!(
                pretty,
                "checks: idempotent {:.1e}, orthogonal {:.1e}, identity {:.1e}, reconstruction {:.1e}, cayley_hamilton {:.1e}",
                c.idempotent, c.orthogonal, c.identity, c.reconstruction, c.cayley_hamilton
            );
            Rendered {
                json: to_value(&d),
                pretty,
            }
        }
    })
}
