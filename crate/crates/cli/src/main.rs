//! `fcrit` — certify k-factor-criticality of t-connected graphs.
//!
//! Graphs travel as graph6 on stdin/stdout so subcommands compose in
//! pipelines; a plain `u v` edge list is accepted as convenience input.
//! Exit codes: 0 = success / property holds, 1 = property fails or a
//! violation was found, 2 = usage or parse error.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use fcrit_core::closure::l_closure;
use fcrit_core::connectivity::{is_t_connected, vertex_connectivity};
use fcrit_core::graph6::{parse_edge_list, parse_graph6, to_graph6};
use fcrit_core::invariants::{clique_number, independence_number};
use fcrit_core::matching::is_k_factor_critical;
use fcrit_core::spectral::{extremal_quotient_rho, hong_bound, spectral_radius, DEFAULT_TOL};
use fcrit_core::verify::{
    search_counterexample, verify_thm4, verify_thm5, CampaignConfig, CampaignReport, Conclusion,
    TheoremReport,
};
use fcrit_core::{Error, ExtremalParams, Graph, VerdictReason};

#[derive(Parser)]
#[command(
    name = "fcrit",
    version,
    about = "Certify k-factor-criticality of t-connected graphs"
)]
struct Cli {
    /// Emit machine-readable JSON instead of human-readable text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the extremal graph K_t ∨ (K_{n+k−2t−1} + (t−k+1)K_1) as graph6
    ConstructExtremal {
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(short = 't', long)]
        t: usize,
        #[arg(short = 'k', long)]
        k: usize,
    },
    /// Decide k-factor-criticality by exhaustive deletion-set check
    CheckCritical {
        #[arg(short = 'k', long)]
        k: usize,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Compute the l-closure; prints the closed graph as graph6
    Closure {
        #[arg(short = 'l', long)]
        l: usize,
        /// Write the trace of added edges as JSON lines to this file
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Exact vertex connectivity, or a t-connectivity test with -t
    Connectivity {
        #[arg(short = 't', long)]
        t: Option<usize>,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Exact clique number with witness
    Clique {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Exact independence number
    Independence {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Adjacency spectral radius by power iteration
    SpectralRadius {
        /// Residual tolerance of the eigen-equation certificate
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        input: GraphInput,
    },
    /// The connected-graph bound sqrt(2e − n + 1) on the spectral radius
    HongBound {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Check the edge-count sufficient condition for k-factor-criticality
    VerifyThm4 {
        #[arg(short = 't', long)]
        t: usize,
        #[arg(short = 'k', long)]
        k: usize,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Check the spectral-radius sufficient condition
    VerifyThm5 {
        #[arg(short = 't', long)]
        t: usize,
        #[arg(short = 'k', long)]
        k: usize,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Random falsification campaign driven by a JSON config file
    Campaign {
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
        /// Also write the full JSON report to this file
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Print the edge threshold, extremal edge count and extremal rho
    Thresholds {
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(short = 't', long)]
        t: usize,
        #[arg(short = 'k', long)]
        k: usize,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Inline graph6 string
    #[arg(long, value_name = "G6", conflicts_with = "input")]
    graph6: Option<String>,
    /// Read the graph from a file instead of stdin (graph6 or edge list)
    #[arg(long, short = 'i', value_name = "PATH")]
    input: Option<PathBuf>,
}

impl GraphInput {
    fn load(&self) -> anyhow::Result<Graph> {
        if let Some(g6) = &self.graph6 {
            return parse_graph6(g6).map_err(|e| anyhow::anyhow!("--graph6: {e}"));
        }
        let text = match &self.input {
            Some(path) => fs::read_to_string(path)
                .with_context(|| format!("--input: cannot read {}", path.display()))?,
            None => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .context("reading graph from stdin")?;
                buf
            }
        };
        parse_graph_auto(&text)
    }
}

/// graph6 unless the first meaningful line is a `u v` integer pair.
fn parse_graph_auto(text: &str) -> anyhow::Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|s| !s.is_empty() && !s.starts_with('#'));
    let Some(line) = first else {
        bail!("empty graph input");
    };
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let edge_list_like =
        tokens.len() == 2 && tokens.iter().all(|t| t.bytes().all(|b| b.is_ascii_digit()));
    if edge_list_like {
        Ok(parse_edge_list(text)?)
    } else {
        Ok(parse_graph6(text)?)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn format_set(set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let json = cli.json;
    match cli.cmd {
        Cmd::ConstructExtremal { n, t, k } => {
            let params = ExtremalParams::new(n, t, k)
                .map_err(|e| anyhow::anyhow!("-n/-t/-k: {e}"))?;
            let g = params.construct();
            let g6 = to_graph6(&g);
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "n": n, "t": t, "k": k,
                        "graph6": g6,
                        "edges": g.edge_count(),
                    })
                );
            } else {
                println!("{g6}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::CheckCritical { k, input } => {
            let g = input.load()?;
            let verdict = match is_k_factor_critical(&g, k) {
                Ok(v) => v,
                Err(e @ Error::KOutOfRange { .. }) => bail!("-k: {e}"),
                Err(e) => bail!("{e}"),
            };
            if json {
                println!("{}", serde_json::to_string(&verdict)?);
            } else if verdict.is_critical {
                println!("critical");
            } else {
                match verdict.reason {
                    VerdictReason::Parity => {
                        println!("not critical, parity (n = {}, k = {})", g.n(), k)
                    }
                    _ => println!(
                        "not critical, witness {}",
                        format_set(verdict.witness.as_deref().unwrap_or(&[]))
                    ),
                }
            }
            Ok(exit_bool(verdict.is_critical))
        }
        Cmd::Closure { l, trace, input } => {
            let g = input.load()?;
            let (closed, tr) = l_closure(&g, l);
            if let Some(path) = trace {
                fs::write(&path, tr.to_jsonl())
                    .with_context(|| format!("--trace: cannot write {}", path.display()))?;
            }
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "l": l,
                        "graph6": to_graph6(&closed),
                        "edges_added": tr.added.len(),
                        "trace": tr.added,
                    })
                );
            } else {
                println!("{}", to_graph6(&closed));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Connectivity { t, input } => {
            let g = input.load()?;
            match t {
                Some(t) => {
                    let ok = is_t_connected(&g, t);
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({ "t": t, "t_connected": ok, "n": g.n() })
                        );
                    } else {
                        println!("{t}-connected: {ok}");
                    }
                    Ok(exit_bool(ok))
                }
                None => {
                    let result = vertex_connectivity(&g);
                    if json {
                        println!("{}", serde_json::to_string(&result)?);
                    } else {
                        match &result.separator {
                            Some(sep) => {
                                println!("kappa = {}, separator = {}", result.kappa, format_set(sep))
                            }
                            None => println!("kappa = {} (no separator)", result.kappa),
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Cmd::Clique { input } => {
            let g = input.load()?;
            let result = clique_number(&g);
            if json {
                println!("{}", serde_json::to_string(&result)?);
            } else {
                println!("omega = {}, witness = {}", result.omega, format_set(&result.witness));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Independence { input } => {
            let g = input.load()?;
            let alpha = independence_number(&g);
            if json {
                println!("{}", serde_json::json!({ "alpha": alpha }));
            } else {
                println!("alpha = {alpha}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::SpectralRadius { tol, input } => {
            let g = input.load()?;
            if tol <= 0.0 {
                bail!("--tol: must be positive, got {tol}");
            }
            match spectral_radius(&g, tol) {
                Ok(est) => {
                    if json {
                        println!("{}", serde_json::to_string(&est)?);
                    } else {
                        println!(
                            "rho = {} (residual {:e}, {} iterations)",
                            est.rho, est.residual, est.iterations
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Cmd::HongBound { input } => {
            let g = input.load()?;
            if !g.is_connected() {
                eprintln!("the bound applies to connected graphs only");
                return Ok(ExitCode::FAILURE);
            }
            let bound = hong_bound(&g);
            if json {
                println!(
                    "{}",
                    serde_json::json!({ "n": g.n(), "edges": g.edge_count(), "bound": bound })
                );
            } else {
                println!("hong_bound = {bound}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::VerifyThm4 { t, k, input } => {
            let g = input.load()?;
            let report = verify_thm4(&g, t, k);
            emit_theorem_report(&report, json)?;
            Ok(exit_bool(report.conclusion != Conclusion::Violation))
        }
        Cmd::VerifyThm5 { t, k, input } => {
            let g = input.load()?;
            let report = verify_thm5(&g, t, k);
            emit_theorem_report(&report, json)?;
            Ok(exit_bool(report.conclusion != Conclusion::Violation))
        }
        Cmd::Campaign { config, out } => {
            let text = fs::read_to_string(&config)
                .with_context(|| format!("--config: cannot read {}", config.display()))?;
            let cfg: CampaignConfig = serde_json::from_str(&text)
                .with_context(|| format!("--config: invalid campaign config {}", config.display()))?;
            let reports = search_counterexample(&cfg).map_err(|e| anyhow::anyhow!("--config: {e}"))?;
            let rendered = serde_json::to_string_pretty(&reports)?;
            if let Some(path) = out {
                fs::write(&path, &rendered)
                    .with_context(|| format!("--out: cannot write {}", path.display()))?;
            }
            if json {
                println!("{rendered}");
            } else {
                print_campaign_summary(&reports);
            }
            let violations: usize = reports.iter().map(|r| r.violations).sum();
            Ok(exit_bool(violations == 0))
        }
        Cmd::Thresholds { n, t, k } => {
            let params = ExtremalParams::new(n, t, k)
                .map_err(|e| anyhow::anyhow!("-n/-t/-k: {e}"))?;
            let threshold = params.thm4_threshold();
            let edges = params.extremal_edge_count();
            let rho = extremal_quotient_rho(&params);
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "n": n, "t": t, "k": k,
                        "thm4_threshold": threshold,
                        "extremal_edge_count": edges,
                        "extremal_rho": rho,
                    })
                );
            } else {
                println!("thm4_threshold = {threshold}");
                println!("extremal_edge_count = {edges}");
                println!("extremal_rho = {rho}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_bool(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn emit_theorem_report(report: &TheoremReport, json: bool) -> anyhow::Result<()> {
    if json {
        println!("{}", serde_json::to_string(report)?);
        return Ok(());
    }
    println!(
        "{}: n = {}, t = {}, k = {}",
        report.theorem, report.n, report.t, report.k
    );
    for h in &report.hypotheses {
        let mark = if h.passed { "pass" } else { "FAIL" };
        println!("  [{mark}] {}: {} (require {})", h.name, h.observed, h.required);
    }
    println!("conclusion: {}", conclusion_name(report.conclusion));
    if let Some(w) = &report.details.witness {
        println!("witness: {}", format_set(w));
    }
    if let Some(rho) = report.details.rho {
        println!(
            "rho = {rho}, threshold = {}",
            report
                .details
                .rho_threshold
                .map_or_else(|| "n/a".to_string(), |v| v.to_string())
        );
    }
    Ok(())
}

fn conclusion_name(c: Conclusion) -> &'static str {
    match c {
        Conclusion::Critical => "CRITICAL",
        Conclusion::ExtremalException => "EXTREMAL_EXCEPTION",
        Conclusion::Violation => "VIOLATION",
        Conclusion::HypothesesUnmet => "HYPOTHESES_UNMET",
        Conclusion::Indeterminate => "INDETERMINATE",
    }
}

fn print_campaign_summary(reports: &[CampaignReport]) {
    for report in reports {
        for cell in &report.cells {
            let extremal = cell
                .extremal_check
                .map_or_else(String::new, |c| format!(", extremal_check={}", conclusion_name(c)));
            println!(
                "{} (t={}, k={}, n={}): critical={}, exception={}, violation={}, unmet={}, indeterminate={}{extremal}",
                report.theorem,
                cell.t,
                cell.k,
                cell.n,
                cell.counts.critical,
                cell.counts.extremal_exception,
                cell.counts.violation,
                cell.counts.hypotheses_unmet,
                cell.counts.indeterminate,
            );
        }
        println!("{} violations: {}", report.theorem, report.violations);
    }
}
