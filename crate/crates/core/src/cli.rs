//! Command-line front end. Exit codes: 0 success, 1 infeasible or failed
//! check (with a witness on stderr), 2 invalid input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arith::{decompose_three_squares, gauss_obstruction, Rational};
use crate::cert::{CertificateFile, Placement};
use crate::constructions::{clique_extension, embed_book_sqrt2, embed_k133_q5, embed_k23_q3, K133Plan};
use crate::diophantine::solve_eq41;
use crate::distance_graph::{best_clique_in_box, schoenberg_c1};
use crate::error::{Error, Result, Witness};
use crate::geometry::{embed_triangle_q4, SpherePointQuery, TriangleSq};
use crate::regularizer::{regular_supergraph_with_attempts, PlaneEmbedding, MAX_ATTEMPTS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "distgraph", version, about = "Exact rational embeddings of distance graphs")]
pub struct Cli {
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    K23,
    Book,
    K133,
    CliqueExt,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an exact embedding and write its certificate.
    Embed {
        #[arg(long, value_enum)]
        graph: GraphKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<Rational>,
        #[arg(long)]
        m: Option<u64>,
    },
    /// Re-check a stored certificate.
    Verify {
        file: PathBuf,
        /// Also require non-edges to avoid the edge distance.
        #[arg(long)]
        faithful: bool,
    },
    /// Is sqrt(r) a distance between two points of Q^n?
    Realized {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Rational,
    },
    /// Largest regular simplex in Q^n versus a brute-force lattice search.
    Cliques {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        height: u32,
        #[arg(long, default_value_t = 1)]
        denominator: u32,
    },
    /// Solve r(4m-1)/(8m) + 2rm x^2 + y^2 + z^2 + w^2 = r.
    Solve41 {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: u64,
    },
    /// Place a triangle with squared sides a, b, c in Q^4.
    Triangle {
        #[arg(long)]
        a: Rational,
        #[arg(long)]
        b: Rational,
        #[arg(long)]
        c: Rational,
    },
    /// Extend a plane unit-distance graph to an r-regular one.
    Regularize {
        file: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also draw the result as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Write k as a sum of three squares.
    ThreeSquares { k: u64 },
}

/// Result of a subcommand: text for the main output and the exit code.
struct Outcome {
    text: String,
    code: i32,
    note: Option<String>,
}

impl Outcome {
    fn ok(value: serde_json::Value) -> Result<Self> {
        Ok(Outcome { text: pretty(&value)?, code: EXIT_OK, note: None })
    }

    fn infeasible(value: serde_json::Value, witness: impl ToString) -> Result<Self> {
        Ok(Outcome { text: pretty(&value)?, code: EXIT_INFEASIBLE, note: Some(format!("infeasible: {}", witness.to_string())) })
    }
}

fn pretty(v: &serde_json::Value) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            if let Some(note) = &outcome.note {
                let _ = writeln!(stderr, "{note}");
            }
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &outcome.text).map_err(Error::from),
                None => stdout.write_all(outcome.text.as_bytes()).map_err(Error::from),
            };
            match written {
                Ok(()) => outcome.code,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    EXIT_INVALID
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Infeasible(_) | Error::ChordExhausted { .. } | Error::Placement { .. } => EXIT_INFEASIBLE,
        _ => EXIT_INVALID,
    }
}

fn require<T>(value: Option<T>, flag: &str, graph: &str) -> Result<T> {
    value.ok_or_else(|| Error::domain(format!("--{flag} is required for --graph {graph}")))
}

fn expect_n(n: Option<usize>, want: usize, graph: &str) -> Result<()> {
    match n {
        Some(n) if n != want => Err(Error::domain(format!("--graph {graph} lives in dimension {want}, not {n}"))),
        _ => Ok(()),
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Embed { graph, n, r, m } => embed(*graph, *n, r.clone(), *m),
        Command::Verify { file, faithful } => {
            let text = std::fs::read_to_string(file)?;
            let cert = CertificateFile::from_json(&text)?;
            let check = cert.recheck(*faithful)?;
            let value = serde_json::to_value(&check)?;
            if check.passed {
                Outcome::ok(value)
            } else {
                let why = check.problems.join("; ");
                Ok(Outcome { text: pretty(&value)?, code: EXIT_INFEASIBLE, note: Some(format!("verification failed: {why}")) })
            }
        }
        Command::Realized { n, r } => {
            let query = SpherePointQuery::new(*n, r.clone())?;
            match query.feasibility() {
                Ok(()) => Outcome::ok(json!({ "n": n, "r": r, "realized": true })),
                Err(w) => Outcome::infeasible(json!({ "n": n, "r": r, "realized": false, "witness": w.to_string() }), w),
            }
        }
        Command::Cliques { n, height, denominator } => {
            let c1 = schoenberg_c1(*n as u64)?;
            let (r, found) = best_clique_in_box(*n, *height, *denominator)?;
            Outcome::ok(json!({
                "n": n,
                "schoenberg_c1": c1,
                "search": { "height": height, "denominator": denominator },
                "lower_bound": found.size,
                "r": r,
                "witness": found.witness,
            }))
        }
        Command::Solve41 { m, r } => Outcome::ok(serde_json::to_value(solve_eq41(*m, *r)?)?),
        Command::Triangle { a, b, c } => {
            let t = TriangleSq::new(a.clone(), b.clone(), c.clone())?;
            let area = t.sixteen_area_sq();
            match t.criterion()? {
                Ok(()) => {
                    let e = embed_triangle_q4(&t)?;
                    Outcome::ok(json!({ "a": a, "b": b, "c": c, "sixteen_area_sq": area, "feasible": true, "coords": e }))
                }
                Err(w) => Outcome::infeasible(
                    json!({ "a": a, "b": b, "c": c, "sixteen_area_sq": area, "feasible": false, "witness": w.to_string() }),
                    w,
                ),
            }
        }
        Command::Regularize { file, r, seed, svg } => {
            let text = std::fs::read_to_string(file)?;
            let input: PlaneEmbedding = serde_json::from_str(&text).map_err(|e| Error::parse(e.to_string()))?;
            let (out, attempts) = regular_supergraph_with_attempts(&input, *r, *seed)?;
            if let Some(path) = svg {
                std::fs::write(path, out.to_svg())?;
            }
            let params = BTreeMap::from([
                ("input".to_string(), file.display().to_string()),
                ("r".to_string(), r.to_string()),
                ("seed".to_string(), seed.to_string()),
            ]);
            let placement = Placement {
                r: *r,
                seed: *seed,
                attempts,
                max_attempts: MAX_ATTEMPTS,
                policy: "generic choices drawn from the seed; restart on any near-coincidence, bounded".into(),
            };
            let cert = CertificateFile::plane("regularize", params, out, placement);
            Ok(Outcome { text: cert.to_json()?, code: EXIT_OK, note: None })
        }
        Command::ThreeSquares { k } => match decompose_three_squares(*k) {
            Some(sq) => Outcome::ok(json!({ "k": k, "squares": sq })),
            None => {
                let (a, b) = gauss_obstruction(*k).expect("only Gauss-form integers fail");
                let w = Witness::GaussForm { value: (*k).into(), a, b: b.into() };
                Outcome::infeasible(json!({ "k": k, "squares": null, "witness": w.to_string() }), w)
            }
        },
    }
}

fn embed(graph: GraphKind, n: Option<usize>, r: Option<Rational>, m: Option<u64>) -> Result<Outcome> {
    let mut params = BTreeMap::new();
    let (name, embedding, construction) = match graph {
        GraphKind::K23 => {
            expect_n(n, 3, "k23")?;
            let r = require(r, "r", "k23")?;
            params.insert("r".into(), r.to_string());
            ("k23", embed_k23_q3(&r)?, None)
        }
        GraphKind::Book => {
            let n = require(n, "n", "book")?;
            if let Some(r) = &r {
                if *r != 2 {
                    return Err(Error::domain(format!("--graph book is built at r = 2, not {r}")));
                }
            }
            params.insert("n".into(), n.to_string());
            ("book", embed_book_sqrt2(n)?, None)
        }
        GraphKind::K133 => {
            expect_n(n, 5, "k133")?;
            let r = require(r, "r", "k133")?;
            params.insert("r".into(), r.to_string());
            let plan = K133Plan::new(&r)?;
            ("k133", embed_k133_q5(&r)?, Some(serde_json::to_value(plan)?))
        }
        GraphKind::CliqueExt => {
            let m = require(m, "m", "clique-ext")?;
            let r = require(r, "r", "clique-ext")?;
            let dim = usize::try_from(m).ok().and_then(|m| m.checked_mul(4)).and_then(|d| d.checked_add(3));
            if let Some(dim) = dim {
                expect_n(n, dim, "clique-ext")?;
            }
            params.insert("m".into(), m.to_string());
            params.insert("r".into(), r.to_string());
            ("clique-ext", clique_extension(m, &r)?, None)
        }
    };
    params.insert("graph".into(), name.into());
    params.insert("n".into(), embedding.n.to_string());
    let cert = CertificateFile::exact("embed", params, &embedding, construction)?;
    Ok(Outcome { text: cert.to_json()?, code: EXIT_OK, note: None })
}
