//! Command-line front end: generate catalog digraphs, compute exact spectra,
//! classify against the radius-2 catalog, decide equivalence, enumerate
//! small orders, and run the verification suites.
//!
//! Exit code 0 means zero failures; verification failures, inequivalent
//! inputs, and classification violations all exit nonzero.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cyclo::catalog::{digraph_family, signed_family, CatalogRef};
use cyclo::classify::classify;
use cyclo::digraph::Digraph;
use cyclo::equivalence::{equiv, strong_equiv};
use cyclo::gaussint::QuadRat;
use cyclo::harness::{enumerate, verify_gm2_table, verify_sqrt2, verify_theorem, EnumFilter};
use cyclo::signed::SignedGraph;

#[derive(Parser)]
#[command(
    name = "cyclo",
    version,
    about = "Exact spectral classification of digraphs with Hermitian spectral radius at most 2"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a catalog family member and print its JSON.
    ///
    /// Digraph families: delta1 K, deltai K, dn N, ctilde N, ctilde1 N,
    /// ctilde2 N, path N, cycle N, square A B C D, y A B C, complete N,
    /// utilde1, utilde6, canonical-u J, s8dagger, s14, s16. Signed-graph
    /// families (print signed-graph JSON): u J, o M, q H K.
    Gen {
        /// Family name, case-insensitive.
        family: String,
        /// Integer parameters of the family.
        params: Vec<usize>,
    },
    /// Print exact spectrum data of a digraph (JSON file, or - for stdin).
    Spectrum {
        /// Path to a digraph JSON file.
        file: String,
    },
    /// Classify a digraph against the radius-2 catalog.
    Classify {
        /// Path to a digraph JSON file.
        file: String,
    },
    /// Decide equivalence of two digraphs; prints the witness when found.
    ///
    /// By default negating one matrix is allowed (matrix equivalence);
    /// --strong restricts to switching equivalence proper. Exits 1 when the
    /// digraphs are not related.
    Equiv {
        a: String,
        b: String,
        /// Strong equivalence only (switchings and converse, no negation).
        #[arg(long)]
        strong: bool,
    },
    /// Enumerate connected digraphs on n vertices and print the run report.
    Enumerate {
        /// Number of vertices, 1..=6 (n = 6 needs a --radius filter).
        #[arg(long)]
        n: usize,
        /// Keep only digraphs with radius ≤ 2 (le2) or < 2 (lt2).
        #[arg(long, value_enum)]
        radius: Option<RadiusArg>,
        /// Keep one representative per switching class.
        #[arg(long)]
        dedup: bool,
        /// Also print the yielded digraphs, not just the report.
        #[arg(long)]
        list: bool,
    },
    /// Run a verification suite; exits nonzero on any failure.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Re-emit a digraph (JSON file, or - for stdin) in another format.
    Export {
        /// Path to a digraph JSON file.
        file: String,
        /// Output format.
        #[arg(long, value_enum)]
        format: ExportFormat,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Exhaustively verify the classification at order n (default 3, 4, 5).
    Theorem {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Exhaustively verify the complete-graph criterion (default 2..=5).
    Sqrt2 {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Verify the comparison table against the earlier catalogue.
    Gm2,
}

#[derive(Clone, Copy, ValueEnum)]
enum RadiusArg {
    /// Spectral radius at most 2.
    Le2,
    /// Spectral radius strictly below 2.
    Lt2,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load_digraph(path: &str) -> Result<Digraph, String> {
    let text = read_input(path)?;
    Digraph::from_json(&text).map_err(|e| format!("parsing {path}: {e}"))
}


/// Print one line to stdout; a closed pipe ends the run quietly.
fn emit(text: impl std::fmt::Display) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing stdout: {e}");
        std::process::exit(1);
    }
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Gen { family, params } => {
            let r = CatalogRef::from_name_params(&family, &params).map_err(|e| e.to_string())?;
            if r.is_signed() {
                let s: SignedGraph = signed_family(&r).map_err(|e| e.to_string())?;
                emit(s.to_json());
            } else {
                let d = digraph_family(&r).map_err(|e| e.to_string())?;
                emit(d.to_json());
            }
            Ok(true)
        }
        Cmd::Spectrum { file } => {
            let d = load_digraph(&file)?;
            let h = d.hermitian_adjacency();
            let poly = h.char_poly();
            let radius = h.radius_class();
            let dr = h.displaced_rank();
            let out = serde_json::json!({
                "n": d.n(),
                "char_poly_coeffs_ascending": poly.to_coeff_strings(),
                "char_poly": poly.to_string(),
                "radius_class": radius.to_string(),
                "displaced_rank": if dr.exceeds_two { None } else { Some(dr.rank) },
                "min_eigen_above_neg_sqrt2": h.min_eigen_exceeds(&QuadRat::neg_sqrt2()),
            });
            emit(serde_json::to_string_pretty(&out).expect("serializable"));
            Ok(true)
        }
        Cmd::Classify { file } => {
            let d = load_digraph(&file)?;
            let res = classify(&d).map_err(|e| e.to_string())?;
            emit(serde_json::to_string_pretty(&res).expect("serializable"));
            Ok(true)
        }
        Cmd::Equiv { a, b, strong } => {
            let da = load_digraph(&a)?;
            let db = load_digraph(&b)?;
            let ha = da.hermitian_adjacency();
            let hb = db.hermitian_adjacency();
            let witness = if strong {
                strong_equiv(&ha, &hb)
            } else {
                equiv(&ha, &hb)
            };
            match witness {
                Some(w) => {
                    emit(serde_json::to_string_pretty(&w).expect("serializable"));
                    Ok(true)
                }
                None => {
                    eprintln!("not equivalent");
                    Ok(false)
                }
            }
        }
        Cmd::Enumerate {
            n,
            radius,
            dedup,
            list,
        } => {
            let filter = match radius {
                None => EnumFilter::All,
                Some(RadiusArg::Le2) => EnumFilter::AtMost2,
                Some(RadiusArg::Lt2) => EnumFilter::LessThan2,
            };
            let (digraphs, report) = enumerate(n, filter, dedup).map_err(|e| e.to_string())?;
            if list {
                let out = serde_json::json!({
                    "digraphs": digraphs
                        .iter()
                        .map(|d| serde_json::from_str::<serde_json::Value>(&d.to_json())
                            .expect("digraph JSON round-trips"))
                        .collect::<Vec<_>>(),
                    "report": report,
                });
                emit(serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                emit(serde_json::to_string_pretty(&report).expect("serializable"));
            }
            Ok(true)
        }
        Cmd::Verify { what } => {
            let mut failures = 0usize;
            let mut reports = Vec::new();
            match what {
                VerifyCmd::Theorem { n } => {
                    let orders: Vec<usize> = n.map_or_else(|| vec![3, 4, 5], |k| vec![k]);
                    for k in orders {
                        let report = verify_theorem(k).map_err(|e| e.to_string())?;
                        failures += report.failures.len();
                        reports.push(serde_json::to_value(&report).expect("serializable"));
                    }
                }
                VerifyCmd::Sqrt2 { n } => {
                    let orders: Vec<usize> = n.map_or_else(|| vec![2, 3, 4, 5], |k| vec![k]);
                    for k in orders {
                        let report = verify_sqrt2(k).map_err(|e| e.to_string())?;
                        failures += report.failures.len();
                        reports.push(serde_json::to_value(&report).expect("serializable"));
                    }
                }
                VerifyCmd::Gm2 => {
                    let report = verify_gm2_table().map_err(|e| e.to_string())?;
                    failures += report.failures.len();
                    reports.push(serde_json::to_value(&report).expect("serializable"));
                }
            }
            emit(
                serde_json::to_string_pretty(&serde_json::Value::Array(reports))
                    .expect("serializable"),
            );
            if failures == 0 {
                eprintln!("PASS: zero failures");
                Ok(true)
            } else {
                eprintln!("FAIL: {failures} failure(s)");
                Ok(false)
            }
        }
        Cmd::Export { file, format } => {
            let d = load_digraph(&file)?;
            match format {
                ExportFormat::Dot => emit(d.to_dot("delta")),
                ExportFormat::Json => emit(d.to_json()),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
