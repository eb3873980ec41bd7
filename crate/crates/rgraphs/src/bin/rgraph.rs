//! Thin command-line front end over the library.
//!
//! Exit codes: 0 success / verdict true, 1 definite negative (not an
//! r-graph, no cover, certificate rejected), 2 usage or parse error,
//! 3 search budget exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rgraphs::certificate::{
    check_certificate, cover_certificate, trace_certificate, trace_to_dot, verdict_certificate,
    Certificate, CheckError,
};
use rgraphs::graph::Multigraph;
use rgraphs::matching::{find_tr_pm, MatchingError};
use rgraphs::reduce::{reduce_crossing_one, reduce_k33_free, reduce_k5_free, PlanarOracle, ReduceError};
use rgraphs::rgraph::verify_r_graph;
use rgraphs::{census, format};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "rgraph", version, about = "r-graph verification, matching covers, and reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is an r-graph; emits a verdict certificate.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Search for a (t,r)-perfect-matching cover; emits a tr-pm certificate.
    Cover {
        graph: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        r: usize,
        /// Node budget for the exact search.
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Reduce a minor-restricted or one-crossing r-graph to planar instances;
    /// emits a tr-pm certificate and a reduction-trace certificate.
    Reduce {
        graph: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Node budget for planar-oracle searches.
        #[arg(long)]
        budget: Option<u64>,
        /// Also write the trace as a DOT graph.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Re-verify a certificate (or an array of them) against a graph.
    Check { graph: PathBuf, certificate: PathBuf },
    /// Enumerate connected r-regular multigraphs and tabulate class-1 status
    /// and (2,r)-PM existence.
    Census {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        max_n: usize,
        /// Maximum edge multiplicity (1 = simple graphs only).
        #[arg(long, default_value_t = 1)]
        max_mu: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args)]
struct OutArg {
    /// Write the JSON output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    K5free,
    K33free,
    Cr1,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    };
    ExitCode::from(code)
}

fn load_graph(path: &Path) -> Result<Multigraph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    format::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: &OutArg, value: &serde_json::Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    match &out.out {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cert_value(cert: &Certificate) -> serde_json::Value {
    serde_json::to_value(cert).expect("certificate serializes")
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Verify { graph, r, out } => {
            let g = load_graph(&graph)?;
            let verdict = verify_r_graph(&g, r).map_err(|e| e.to_string())?;
            let cert = verdict_certificate(&g, &verdict);
            emit(&out, &cert_value(&cert))?;
            if verdict.is_r_graph {
                eprintln!("{}: {r}-graph", graph.display());
                Ok(EXIT_OK)
            } else {
                eprintln!("{}: not a {r}-graph", graph.display());
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Cover { graph, t, r, budget, out } => {
            let g = load_graph(&graph)?;
            match find_tr_pm(&g, t, r, budget) {
                Ok(Some(cover)) => {
                    let cert = cover_certificate(&g, &cover);
                    emit(&out, &cert_value(&cert))?;
                    eprintln!("({t},{r})-PM found: {} matchings", cover.matchings.len());
                    Ok(EXIT_OK)
                }
                Ok(None) => {
                    eprintln!("no ({t},{r})-PM exists");
                    Ok(EXIT_NEGATIVE)
                }
                Err(MatchingError::BudgetExceeded { nodes }) => {
                    eprintln!("budget exceeded after {nodes} nodes");
                    Ok(EXIT_BUDGET)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Reduce { graph, t, r, mode, budget, dot, out } => {
            let g = load_graph(&graph)?;
            let oracle = match budget {
                Some(b) => PlanarOracle::with_budget(b),
                None => PlanarOracle::exact(),
            };
            let result = match mode {
                Mode::K5free => reduce_k5_free(&g, t, r, &oracle),
                Mode::K33free => reduce_k33_free(&g, t, r, &oracle),
                Mode::Cr1 => reduce_crossing_one(&g, t, r, &oracle),
            };
            match result {
                Ok((cover, trace)) => {
                    let certs = serde_json::json!([
                        cert_value(&cover_certificate(&g, &cover)),
                        cert_value(&trace_certificate(&g, &trace)),
                    ]);
                    emit(&out, &certs)?;
                    if let Some(path) = dot {
                        std::fs::write(&path, trace_to_dot(&trace))
                            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    }
                    eprintln!("reduction succeeded: {} steps", trace.steps().len());
                    Ok(EXIT_OK)
                }
                Err(ReduceError::Precondition(msg)) => {
                    eprintln!("precondition violation: {msg}");
                    Ok(EXIT_NEGATIVE)
                }
                Err(ReduceError::OracleGap { graph, t, r }) => {
                    eprintln!(
                        "oracle gap: planar instance with no ({t},{r})-PM — counterexample candidate:"
                    );
                    eprintln!("{}", format::to_text(&graph));
                    Ok(EXIT_NEGATIVE)
                }
                Err(ReduceError::BudgetExceeded) => {
                    eprintln!("budget exceeded");
                    Ok(EXIT_BUDGET)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Check { graph, certificate } => {
            let g = load_graph(&graph)?;
            let text = std::fs::read_to_string(&certificate)
                .map_err(|e| format!("cannot read {}: {e}", certificate.display()))?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| format!("bad JSON: {e}"))?;
            let certs: Vec<Certificate> = if value.is_array() {
                serde_json::from_value(value).map_err(|e| format!("bad certificate array: {e}"))?
            } else {
                vec![serde_json::from_value(value).map_err(|e| format!("bad certificate: {e}"))?]
            };
            let mut all_ok = true;
            for (i, cert) in certs.iter().enumerate() {
                match check_certificate(&g, cert) {
                    Ok(()) => eprintln!("certificate {i} ({}) ok", cert.kind),
                    Err(CheckError::Schema(v)) => {
                        eprintln!("certificate {i}: unsupported schema {v}");
                        all_ok = false;
                    }
                    Err(e) => {
                        eprintln!("certificate {i} ({}) rejected: {e}", cert.kind);
                        all_ok = false;
                    }
                }
            }
            Ok(if all_ok { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Census { r, max_n, max_mu, budget, out } => {
            match census::run_census(r, max_n, max_mu, budget) {
                Ok(report) => {
                    let class2 = report.class2_entries().len();
                    emit(&out, &serde_json::to_value(&report).expect("serializable"))?;
                    eprintln!(
                        "census: {} r-graphs of {} regular graphs, {} class 2",
                        report.entries.len(),
                        report.regular_count,
                        class2
                    );
                    Ok(EXIT_OK)
                }
                Err(MatchingError::BudgetExceeded { nodes }) => {
                    eprintln!("budget exceeded after {nodes} nodes");
                    Ok(EXIT_BUDGET)
                }
                Err(e) => Err(e.to_string()),
            }
        }
    }
}
