//! File formats, parallel enumeration and the `antiring` command line.
//!
//! [`run`] takes the full argument vector (program name first) and returns
//! the exit code and both output streams, so the binary is a thin wrapper
//! and tests can drive every command in-process.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 budget refusal.

pub mod formats;
pub mod parallel;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use antiring::dag_counting::{count_nilpotent, nilpotent_count_polynomial};
use antiring::invertibility::{factorize_invertible, invert, is_invertible, max_orthogonal_decomposition};
use antiring::nilpotency::{digraph_of, is_nilpotent, nilpotency_index};
use antiring::oracle::{EnumerationBudget, DEFAULT_MAX_STATES};
use antiring::squarezero::{capacity, decompose_nilpotent, decompose_trace_zero, n_max};
use antiring::{Matrix, Semiring};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value as Json};

use formats::FormatError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable overriding the enumeration budget.
pub const MAX_STATES_VAR: &str = "ANTIRING_MAX_STATES";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(name = "antiring", version, about = "Matrices over commutative antirings")]
struct Cli {
    /// Output as plain lines or as one JSON object.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Semiring tables.
    Semiring {
        #[command(subcommand)]
        action: SemiringAction,
    },
    /// Print the inverse of an invertible matrix.
    Invert { file: PathBuf },
    /// Print A = D * sum a_s P_s.
    Factorize { file: PathBuf },
    /// Answer yes or no.
    Check { property: Property, file: PathBuf },
    /// Least h with A^h = 0.
    Index { file: PathBuf },
    /// Split into square-zero summands.
    Decompose { kind: DecompositionKind, file: PathBuf },
    /// Count matrices.
    Count {
        #[command(subcommand)]
        what: CountTarget,
    },
    /// Nilpotent-count polynomial in q.
    Poly {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        at: Option<u64>,
    },
    /// The general linear group.
    Gl {
        #[command(subcommand)]
        action: GlAction,
    },
    /// Least N with C(N, ceil(N/2)) >= n.
    Capacity {
        #[arg(short)]
        n: usize,
    },
    /// C(k, ceil(k/2)).
    Nmax {
        #[arg(short)]
        k: usize,
    },
    /// Maximal orthogonal decomposition of 1.
    Orthdecomp {
        #[arg(long)]
        semiring: String,
    },
    /// Edges of D(A), one `i -> j` per line.
    Digraph { file: PathBuf },
}

#[derive(Subcommand)]
enum SemiringAction {
    /// Check the axioms of a table file.
    Validate { file: PathBuf },
    /// Print the tables of a finite semiring.
    Tables { semiring: String },
}

#[derive(Subcommand)]
enum CountTarget {
    Nilpotent {
        #[arg(short)]
        n: usize,
        #[arg(short, required_unless_present = "semiring")]
        q: Option<u64>,
        /// Scan every matrix instead of evaluating the polynomial.
        #[arg(long)]
        brute_force: bool,
        /// Semiring to scan (default chain:<q>).
        #[arg(long, requires = "brute_force")]
        semiring: Option<String>,
    },
}

#[derive(Subcommand)]
enum GlAction {
    Enumerate {
        #[arg(long)]
        semiring: String,
        #[arg(short)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Nilpotent,
    Invertible,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecompositionKind {
    Squarezero,
    Tracezero,
}

enum Failure {
    Domain(String),
    Usage(String),
    Budget(String),
}

impl From<antiring::Error> for Failure {
    fn from(e: antiring::Error) -> Self {
        match e {
            antiring::Error::BudgetExceeded { .. } | antiring::Error::SearchTooLarge { .. } => {
                Failure::Budget(e.to_string())
            }
            e => Failure::Domain(e.to_string()),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Core(e) => e.into(),
            e => Failure::Domain(e.to_string()),
        }
    }
}

/// Text and JSON renderings of one result.
struct Report {
    text: String,
    json: Json,
}

type Outcome = Result<Report, Failure>;

pub struct Settings {
    pub max_states: u64,
}

impl Settings {
    /// Reads [`MAX_STATES_VAR`] from the environment.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(MAX_STATES_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|max_states| Settings { max_states })
                .map_err(|_| format!("{MAX_STATES_VAR} must be a nonnegative integer, got `{v}`")),
            Err(_) => Ok(Settings::default()),
        }
    }
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            max_states: DEFAULT_MAX_STATES,
        }
    }
}

/// Runs one invocation with settings taken from the environment.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Settings::from_env() {
        Ok(settings) => run_with(argv, &settings),
        Err(message) => CommandOutcome {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}

pub fn run_with<I, T>(argv: I, settings: &Settings) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandOutcome {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                CommandOutcome {
                    exit_code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command, settings) {
        Ok(report) => CommandOutcome {
            exit_code: EXIT_OK,
            stdout: match cli.format {
                Format::Text => report.text,
                Format::Json => format!("{}\n", report.json),
            },
            stderr: String::new(),
        },
        Err(failure) => {
            let (exit_code, message) = match failure {
                Failure::Domain(m) => (EXIT_DOMAIN, m),
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Budget(m) => (EXIT_BUDGET, m),
            };
            CommandOutcome {
                exit_code,
                stdout: String::new(),
                stderr: format!("error: {message}\n"),
            }
        }
    }
}

fn dispatch(command: Command, settings: &Settings) -> Outcome {
    let budget = EnumerationBudget::with_max_states(settings.max_states);
    match command {
        Command::Semiring { action } => match action {
            SemiringAction::Validate { file } => validate(&file),
            SemiringAction::Tables { semiring } => tables(&semiring),
        },
        Command::Invert { file } => {
            let a = formats::read_matrix(&file)?;
            let b = invert(&a)?;
            Ok(Report {
                text: formats::write_matrix(&b),
                json: matrix_json(&b),
            })
        }
        Command::Factorize { file } => factorize(&formats::read_matrix(&file)?),
        Command::Check { property, file } => {
            let a = formats::read_matrix(&file)?;
            let (name, holds) = match property {
                Property::Nilpotent => ("nilpotent", is_nilpotent(&a)?),
                Property::Invertible => ("invertible", is_invertible(&a)),
            };
            Ok(Report {
                text: format!("{}\n", if holds { "yes" } else { "no" }),
                json: json!({ "property": name, "holds": holds }),
            })
        }
        Command::Index { file } => {
            let h = nilpotency_index(&formats::read_matrix(&file)?)?;
            Ok(Report {
                text: format!("{h}\n"),
                json: json!({ "index": h }),
            })
        }
        Command::Decompose { kind, file } => {
            let a = formats::read_matrix(&file)?;
            let d = match kind {
                DecompositionKind::Squarezero => decompose_nilpotent(&a)?,
                DecompositionKind::Tracezero => decompose_trace_zero(&a)?,
            };
            let (sum, squares) = formats::verify_decomposition(&a, d.summands());
            let json = json!({
                "summands": d.summands().iter().map(matrix_json).collect::<Vec<_>>(),
                "check": { "sum": sum, "squares": squares },
            });
            Ok(Report {
                text: formats::write_decomposition(&a, &d),
                json,
            })
        }
        Command::Count {
            what: CountTarget::Nilpotent {
                n,
                q,
                brute_force,
                semiring,
            },
        } => count(n, q, brute_force, semiring.as_deref(), &budget),
        Command::Poly { n, at } => poly(n, at),
        Command::Gl {
            action: GlAction::Enumerate { semiring, n },
        } => {
            let s = cli_semiring(&semiring)?;
            let gl = parallel::enumerate_gl(&s, n, &budget)?;
            let mut text = format!("order {}\n", gl.len());
            for a in &gl {
                text.push_str(&formats::write_matrix(a));
            }
            Ok(Report {
                text,
                json: json!({
                    "semiring": s.to_string(),
                    "n": n,
                    "order": gl.len(),
                    "elements": gl.iter().map(matrix_json).collect::<Vec<_>>(),
                }),
            })
        }
        Command::Capacity { n } => {
            if n == 0 {
                return Err(Failure::Domain("n must be positive".into()));
            }
            let c = capacity(n);
            Ok(Report {
                text: format!("{c}\n"),
                json: json!({ "n": n, "capacity": c }),
            })
        }
        Command::Nmax { k } => {
            let m = n_max(k);
            Ok(Report {
                text: format!("{m}\n"),
                json: json!({ "k": k, "n_max": m.to_string() }),
            })
        }
        Command::Orthdecomp { semiring } => {
            let s = cli_semiring(&semiring)?;
            let d = max_orthogonal_decomposition(&s)?;
            let parts: Vec<String> = d.parts().iter().map(|v| s.display(v).to_string()).collect();
            Ok(Report {
                text: format!("k {}\nparts {}\n", d.len(), parts.join(" ")),
                json: json!({ "semiring": s.to_string(), "k": d.len(), "parts": parts }),
            })
        }
        Command::Digraph { file } => {
            let g = digraph_of(&formats::read_matrix(&file)?);
            let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(i, j)| [i + 1, j + 1]).collect();
            Ok(Report {
                text: format!("n {}\n{g}", g.n()),
                json: json!({ "n": g.n(), "edges": edges }),
            })
        }
    }
}

/// Descriptors given on the command line resolve tables against the
/// working directory.
fn cli_semiring(desc: &str) -> Result<Semiring, Failure> {
    formats::parse_semiring(desc, Path::new(".")).map_err(|e| match e {
        FormatError::Descriptor(_) => Failure::Usage(e.to_string()),
        e => e.into(),
    })
}

fn matrix_json(m: &Matrix) -> Json {
    let s = m.semiring();
    let rows: Vec<Vec<String>> = m
        .rows()
        .map(|r| r.iter().map(|v| s.display(v).to_string()).collect())
        .collect();
    json!({ "semiring": s.to_string(), "n": m.n(), "rows": rows })
}

fn validate(file: &Path) -> Outcome {
    let t = formats::parse_tables(&formats::read_file(file)?)?;
    let report = antiring::semiring::validate_axioms(&t);
    let mut text = String::new();
    let mut json = serde_json::Map::new();
    for (name, violation) in report.flags() {
        match violation {
            None => {
                text.push_str(&format!("{name} yes\n"));
                json.insert(name.into(), json!({ "holds": true }));
            }
            Some(v) => {
                let witness: Vec<String> = v.witness.iter().map(usize::to_string).collect();
                text.push_str(&format!("{name} no witness ({}): {}\n", witness.join(", "), v.law));
                json.insert(
                    name.into(),
                    json!({ "holds": false, "law": v.law.to_string(), "witness": v.witness }),
                );
            }
        }
    }
    Ok(Report {
        text,
        json: Json::Object(json),
    })
}

fn tables(desc: &str) -> Outcome {
    let s = cli_semiring(desc)?;
    let t = s.to_tables()?;
    let elements: Vec<String> = s.elements()?.iter().map(|v| s.display(v).to_string()).collect();
    let mut text = format!("# elements {}\n", elements.join(" "));
    text.push_str(&formats::write_tables(&t));
    Ok(Report {
        text,
        json: json!({
            "semiring": s.to_string(),
            "elements": elements,
            "zero": t.zero(),
            "one": t.one(),
            "add": t.add_table(),
            "mul": t.mul_table(),
        }),
    })
}

fn factorize(a: &Matrix) -> Outcome {
    let s = a.semiring();
    let f = factorize_invertible(a)?;
    let diag: Vec<String> = f.diag().iter().map(|v| s.display(v).to_string()).collect();
    let mut text = format!("diag {}\n", diag.join(" "));
    let mut terms = Vec::new();
    for (c, p) in f.terms() {
        let c = s.display(c).to_string();
        text.push_str(&format!("term {c} {p}\n"));
        let images: Vec<usize> = p.images().iter().map(|i| i + 1).collect();
        terms.push(json!({ "coefficient": c, "permutation": images }));
    }
    Ok(Report {
        text,
        json: json!({ "diag": diag, "terms": terms }),
    })
}

fn count(
    n: usize,
    q: Option<u64>,
    brute_force: bool,
    semiring: Option<&str>,
    budget: &EnumerationBudget,
) -> Outcome {
    let (value, q, method) = if brute_force {
        let s = match (semiring, q) {
            (Some(desc), _) => cli_semiring(desc)?,
            (None, Some(q)) => Semiring::chain(
                u32::try_from(q).map_err(|_| Failure::Domain(format!("q = {q} is too large")))?,
            )?,
            (None, None) => unreachable!("clap requires -q or --semiring"),
        };
        let size = s.carrier_size();
        if let (Some(q), Some(k)) = (q, size) {
            if k != q as u128 {
                return Err(Failure::Domain(format!("{s} has {k} elements, not q = {q}")));
            }
        }
        let value = parallel::count_nilpotent_bruteforce(&s, n, budget)?;
        (value, size, "brute-force")
    } else {
        let q = q.expect("clap requires -q without --semiring");
        (count_nilpotent(n, q)?, Some(q as u128), "formula")
    };
    Ok(Report {
        text: format!("{value}\n"),
        json: json!({ "n": n, "q": q, "method": method, "count": value.to_string() }),
    })
}

fn poly(n: usize, at: Option<u64>) -> Outcome {
    let p = nilpotent_count_polynomial(n);
    let degree = p.degree().unwrap_or(0);
    let mut text = String::new();
    let mut coefficients = Vec::new();
    for d in (0..=degree).rev() {
        let c = p.coeff(d);
        text.push_str(&format!("q^{d} {c}\n"));
        coefficients.push(json!({ "degree": d, "coefficient": c.to_string() }));
    }
    let mut json = json!({ "n": n, "polynomial": p.display_in("q").to_string(), "coefficients": coefficients });
    if let Some(q) = at {
        let v = p.eval(&BigInt::from(q));
        text.push_str(&format!("value at q={q}: {v}\n"));
        json["value_at"] = json!({ "q": q, "value": v.to_string() });
    }
    Ok(Report { text, json })
}
