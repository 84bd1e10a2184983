//! End-to-end verifiers for the edge-count condition (THM4) and the
//! spectral condition (THM5), a seeded t-connected graph generator, and
//! falsification campaigns over parameter grids.
//!
//! A campaign samples random t-connected graphs near the relevant
//! threshold, runs both verifiers, and aggregates conclusions per cell. A
//! `VIOLATION` — all hypotheses met, yet the graph is neither critical nor
//! the extremal exception — must never occur; its appearance falsifies the
//! implementation. Per-sample seeds derive deterministically from
//! `(master seed, cell, index)`, so reports replay byte-identically and
//! samples may run on any number of workers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::closure::l_closure;
use crate::connectivity::is_t_connected;
use crate::error::Error;
use crate::graph::{
    binomial, thm4_order_bound_ok, thm4_threshold_raw, thm5_order_bound_ok, ExtremalParams, Graph,
};
use crate::invariants::is_extremal;
use crate::matching::is_k_factor_critical;
use crate::spectral::{
    compare_to_threshold, extremal_quotient_rho, spectral_radius, ThresholdVerdict, DEFAULT_TOL,
    THRESHOLD_SLACK,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremKind {
    #[serde(rename = "THM4")]
    Thm4,
    #[serde(rename = "THM5")]
    Thm5,
}

impl std::fmt::Display for TheoremKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TheoremKind::Thm4 => "THM4",
            TheoremKind::Thm5 => "THM5",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Conclusion {
    /// Hypotheses hold and the graph is k-factor-critical.
    Critical,
    /// Hypotheses hold, the graph is not critical, and the exceptional
    /// structure is present (on the closure for THM4, on the graph for THM5).
    ExtremalException,
    /// Hypotheses hold yet neither conclusion applies — must never occur.
    Violation,
    HypothesesUnmet,
    /// Spectral comparison landed within slack of the threshold (or the
    /// estimate did not converge), so no side can be certified.
    Indeterminate,
}

/// One named hypothesis check with its concrete values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub passed: bool,
    pub observed: String,
    pub required: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ReportDetails {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_threshold: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure_edges_added: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure_is_extremal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph_is_extremal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho_threshold: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral_verdict: Option<ThresholdVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral_error: Option<String>,
}

/// Full verdict of one theorem check, with total hypothesis bookkeeping.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremKind,
    pub n: usize,
    pub t: usize,
    pub k: usize,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Conclusion,
    pub details: ReportDetails,
}

impl TheoremReport {
    pub fn hypotheses_met(&self) -> bool {
        self.hypotheses.iter().all(|h| h.passed)
    }
}

/// Checks the edge-count condition: a t-connected graph of sufficient order
/// and parity with `e(G)` above the threshold is k-factor-critical unless
/// its `(n+k−1)`-closure is the extremal graph.
pub fn verify_thm4(g: &Graph, t: usize, k: usize) -> TheoremReport {
    let n = g.n();
    let mut details = ReportDetails::default();
    let mut hypotheses = Vec::with_capacity(5);

    let params_ok = k >= 1 && t >= k;
    hypotheses.push(Hypothesis {
        name: "parameters".into(),
        passed: params_ok,
        observed: format!("t = {t}, k = {k}"),
        required: "t ≥ k ≥ 1".into(),
    });

    let conn_ok = is_t_connected(g, t);
    hypotheses.push(Hypothesis {
        name: "connectivity".into(),
        passed: conn_ok,
        observed: format!("{t}-connected: {conn_ok}"),
        required: format!("graph is {t}-connected"),
    });

    let order_ok = thm4_order_bound_ok(n, t, k);
    hypotheses.push(Hypothesis {
        name: "order".into(),
        passed: order_ok,
        observed: format!("2n = {}", 2 * n),
        required: format!("2n ≥ 15t − 11k + 29 = {}", thm4_order_rhs(t, k)),
    });

    let parity_ok = n % 2 == k % 2;
    hypotheses.push(parity_hypothesis(n, k, parity_ok));

    let edge_count = g.edge_count() as u64;
    let threshold = thm4_threshold_raw(n, t, k);
    details.edge_count = Some(edge_count);
    details.edge_threshold = Some(threshold);
    let edges_ok = edge_count > threshold;
    hypotheses.push(Hypothesis {
        name: "edge-count".into(),
        passed: edges_ok,
        observed: format!("e = {edge_count}"),
        required: format!("e > {threshold}"),
    });

    let conclusion = if !(params_ok && conn_ok && order_ok && parity_ok && edges_ok) {
        Conclusion::HypothesesUnmet
    } else {
        let params = ExtremalParams::new(n, t, k).expect("hypotheses imply valid parameters");
        let verdict = is_k_factor_critical(g, k).expect("hypotheses imply k ≤ n");
        if verdict.is_critical {
            Conclusion::Critical
        } else {
            details.witness = verdict.witness;
            let (closed, trace) = l_closure(g, n + k - 1);
            details.closure_edges_added = Some(trace.added.len());
            let exceptional = is_extremal(&closed, &params);
            details.closure_is_extremal = Some(exceptional);
            if exceptional {
                Conclusion::ExtremalException
            } else {
                Conclusion::Violation
            }
        }
    };
    TheoremReport {
        theorem: TheoremKind::Thm4,
        n,
        t,
        k,
        hypotheses,
        conclusion,
        details,
    }
}

/// Checks the spectral condition: a t-connected graph of sufficient order
/// and parity with `ρ(G)` at least the extremal family's ρ is
/// k-factor-critical unless the graph itself is the extremal graph.
pub fn verify_thm5(g: &Graph, t: usize, k: usize) -> TheoremReport {
    let n = g.n();
    let mut details = ReportDetails::default();
    let mut hypotheses = Vec::with_capacity(5);

    let params_ok = k >= 1 && t >= k;
    hypotheses.push(Hypothesis {
        name: "parameters".into(),
        passed: params_ok,
        observed: format!("t = {t}, k = {k}"),
        required: "t ≥ k ≥ 1".into(),
    });

    let conn_ok = is_t_connected(g, t);
    hypotheses.push(Hypothesis {
        name: "connectivity".into(),
        passed: conn_ok,
        observed: format!("{t}-connected: {conn_ok}"),
        required: format!("graph is {t}-connected"),
    });

    let order_ok = thm5_order_bound_ok(n, t, k);
    hypotheses.push(Hypothesis {
        name: "order".into(),
        passed: order_ok,
        observed: format!("2n = {}", 2 * n),
        required: format!(
            "2n ≥ max(15t − 11k + 29, 2t² + 5t + 4) = {}",
            thm4_order_rhs(t, k).max(thm5_order_rhs(t)),
        ),
    });

    let parity_ok = n % 2 == k % 2;
    hypotheses.push(parity_hypothesis(n, k, parity_ok));

    let structural_ok = params_ok && order_ok && parity_ok;
    let mut spectral_outcome: Option<ThresholdVerdict> = None;
    let mut spectral_failed = false;
    let (sp_passed, sp_observed, sp_required) = if !structural_ok {
        (
            false,
            "not evaluated (parameter hypotheses failed)".to_string(),
            "ρ(G) ≥ ρ of the extremal graph".to_string(),
        )
    } else if !g.is_connected() {
        (
            false,
            "not evaluated (graph is disconnected)".to_string(),
            "ρ(G) ≥ ρ of the extremal graph".to_string(),
        )
    } else {
        let params = ExtremalParams::new(n, t, k).expect("structural hypotheses imply validity");
        let threshold = extremal_quotient_rho(&params);
        details.rho_threshold = Some(threshold);
        match spectral_radius(g, DEFAULT_TOL) {
            Ok(estimate) => {
                let verdict = compare_to_threshold(estimate.rho, threshold, THRESHOLD_SLACK);
                details.rho = Some(estimate.rho);
                details.spectral_verdict = Some(verdict);
                spectral_outcome = Some(verdict);
                (
                    verdict != ThresholdVerdict::Below,
                    format!("rho = {} ({verdict:?})", estimate.rho),
                    format!("rho ≥ {threshold} (slack {THRESHOLD_SLACK})"),
                )
            }
            Err(err) => {
                spectral_failed = true;
                details.spectral_error = Some(err.to_string());
                (
                    false,
                    format!("power iteration failed: {err}"),
                    format!("rho ≥ {threshold} (slack {THRESHOLD_SLACK})"),
                )
            }
        }
    };
    hypotheses.push(Hypothesis {
        name: "spectral-threshold".into(),
        passed: sp_passed,
        observed: sp_observed,
        required: sp_required,
    });

    let conclusion = if !(structural_ok && conn_ok) {
        Conclusion::HypothesesUnmet
    } else if spectral_failed {
        Conclusion::Indeterminate
    } else {
        let verdict = spectral_outcome.expect("connected graph was evaluated");
        match verdict {
            ThresholdVerdict::Below => Conclusion::HypothesesUnmet,
            ThresholdVerdict::Above | ThresholdVerdict::WithinSlack => {
                let params =
                    ExtremalParams::new(n, t, k).expect("structural hypotheses imply validity");
                let crit = is_k_factor_critical(g, k).expect("hypotheses imply k ≤ n");
                if crit.is_critical {
                    Conclusion::Critical
                } else {
                    details.witness = crit.witness;
                    let exceptional = is_extremal(g, &params);
                    details.graph_is_extremal = Some(exceptional);
                    if exceptional {
                        Conclusion::ExtremalException
                    } else if verdict == ThresholdVerdict::Above {
                        Conclusion::Violation
                    } else {
                        Conclusion::Indeterminate
                    }
                }
            }
        }
    };
    TheoremReport {
        theorem: TheoremKind::Thm5,
        n,
        t,
        k,
        hypotheses,
        conclusion,
        details,
    }
}

fn parity_hypothesis(n: usize, k: usize, passed: bool) -> Hypothesis {
    Hypothesis {
        name: "parity".into(),
        passed,
        observed: format!("n mod 2 = {}, k mod 2 = {}", n % 2, k % 2),
        required: "n ≡ k (mod 2)".into(),
    }
}

fn thm4_order_rhs(t: usize, k: usize) -> i128 {
    15 * t as i128 - 11 * k as i128 + 29
}

fn thm5_order_rhs(t: usize) -> i128 {
    2 * (t as i128) * (t as i128) + 5 * t as i128 + 4
}

/// Seeded t-connected graph: circulant backbone joining each vertex to its
/// `⌈t/2⌉` nearest neighbors on each side, plus `surplus` distinct uniform
/// random non-edges. The result is re-verified t-connected (edges only ever
/// raise connectivity, so the first attempt succeeds); deterministic per
/// seed.
pub fn random_t_connected(n: usize, t: usize, surplus: usize, seed: u64) -> Result<Graph, Error> {
    if t < 1 || n <= t {
        return Err(Error::InvalidGenerator(format!(
            "need n > t ≥ 1 (got n = {n}, t = {t})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..16 {
        let mut g = harary_backbone(n, t);
        add_random_non_edges(&mut g, surplus, &mut rng);
        if is_t_connected(&g, t) {
            return Ok(g);
        }
    }
    Err(Error::InvalidGenerator(format!(
        "failed to generate a {t}-connected graph on {n} vertices"
    )))
}

fn harary_backbone(n: usize, t: usize) -> Graph {
    let reach = t.div_ceil(2).min(n.saturating_sub(1));
    let mut g = Graph::empty(n);
    for v in 0..n {
        for d in 1..=reach {
            g.add_edge(v, (v + d) % n).expect("circulant edge is valid");
        }
    }
    g
}

fn add_random_non_edges(g: &mut Graph, surplus: usize, rng: &mut ChaCha8Rng) {
    let n = g.n();
    let mut non_edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                non_edges.push((u, v));
            }
        }
    }
    let amount = surplus.min(non_edges.len());
    for idx in rand::seq::index::sample(rng, non_edges.len(), amount) {
        let (u, v) = non_edges[idx];
        g.add_edge(u, v).expect("non-edge is valid");
    }
}

/// How many random edges a campaign sample adds over the backbone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurplusSpec {
    /// Target edge count at the edge threshold plus a uniform offset in
    /// `[-below, +above]`, so samples straddle the theorem's bite point.
    Straddle { below: u64, above: u64 },
    /// Uniform raw surplus over the backbone in `[min, max]`.
    Uniform { min: u64, max: u64 },
    /// Near-complete graphs: `uniform(min..=max)` edges below the full
    /// count. This is where the spectral hypothesis is satisfiable.
    Dense { min: u64, max: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    /// Inclusive range of the connectivity parameter.
    pub t_range: (usize, usize),
    /// Inclusive range of k; cells with `k > t` are skipped. Defaults to
    /// `1..=t` per t.
    #[serde(default)]
    pub k_range: Option<(usize, usize)>,
    /// Even offsets added to the minimum valid order of each cell.
    #[serde(default = "default_n_offsets")]
    pub n_offsets: Vec<usize>,
    pub samples_per_cell: usize,
    pub seed: u64,
    #[serde(default = "default_surplus")]
    pub surplus: SurplusSpec,
    #[serde(default = "default_theorems")]
    pub theorems: Vec<TheoremKind>,
    /// Also run each cell's extremal graph through the verifiers, which
    /// must classify it as the exception.
    #[serde(default = "default_true")]
    pub include_extremal: bool,
}

fn default_n_offsets() -> Vec<usize> {
    vec![0]
}

fn default_surplus() -> SurplusSpec {
    SurplusSpec::Straddle { below: 5, above: 25 }
}

fn default_theorems() -> Vec<TheoremKind> {
    vec![TheoremKind::Thm4, TheoremKind::Thm5]
}

fn default_true() -> bool {
    true
}

impl CampaignConfig {
    /// Validates the configuration and expands the cell grid
    /// (t asc, k asc, n asc).
    pub fn grid(&self) -> Result<Vec<(usize, usize, usize)>, Error> {
        let bad = |msg: String| Error::InvalidConfig(msg);
        let (t_lo, t_hi) = self.t_range;
        if t_lo < 1 || t_lo > t_hi {
            return Err(bad(format!("t_range ({t_lo}, {t_hi}) must satisfy 1 ≤ lo ≤ hi")));
        }
        if let Some((k_lo, k_hi)) = self.k_range {
            if k_lo < 1 || k_lo > k_hi {
                return Err(bad(format!("k_range ({k_lo}, {k_hi}) must satisfy 1 ≤ lo ≤ hi")));
            }
        }
        if self.n_offsets.is_empty() {
            return Err(bad("n_offsets must not be empty".into()));
        }
        if let Some(odd) = self.n_offsets.iter().find(|&&o| o % 2 != 0) {
            return Err(bad(format!("n_offsets must be even to preserve parity, got {odd}")));
        }
        if self.theorems.is_empty() {
            return Err(bad("at least one theorem must be selected".into()));
        }
        if self.samples_per_cell == 0 && !self.include_extremal {
            return Err(bad("no samples and no extremal check: nothing to run".into()));
        }
        let mut cells = Vec::new();
        for t in t_lo..=t_hi {
            let (k_lo, k_hi) = self.k_range.unwrap_or((1, t));
            for k in k_lo..=k_hi.min(t) {
                let base = if self.theorems.contains(&TheoremKind::Thm5) {
                    ExtremalParams::min_order_thm5(t, k)
                } else {
                    ExtremalParams::min_order_thm4(t, k)
                };
                for &off in &self.n_offsets {
                    cells.push((t, k, base + off));
                }
            }
        }
        if cells.is_empty() {
            return Err(bad("the parameter grid is empty".into()));
        }
        Ok(cells)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCounts {
    pub critical: usize,
    pub extremal_exception: usize,
    pub violation: usize,
    pub hypotheses_unmet: usize,
    pub indeterminate: usize,
}

impl CellCounts {
    fn add(&mut self, c: Conclusion) {
        match c {
            Conclusion::Critical => self.critical += 1,
            Conclusion::ExtremalException => self.extremal_exception += 1,
            Conclusion::Violation => self.violation += 1,
            Conclusion::HypothesesUnmet => self.hypotheses_unmet += 1,
            Conclusion::Indeterminate => self.indeterminate += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub t: usize,
    pub k: usize,
    pub n: usize,
    pub counts: CellCounts,
    /// Per-sample seeds concluding EXTREMAL_EXCEPTION, for replay.
    pub seeds_of_exceptions: Vec<u64>,
    /// Per-sample seeds concluding VIOLATION, for replay.
    pub seeds_of_violations: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extremal_check: Option<Conclusion>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub theorem: TheoremKind,
    pub config: CampaignConfig,
    pub cells: Vec<CellReport>,
    pub violations: usize,
}

/// Runs the campaign, one report per selected theorem. Samples run on the
/// rayon pool when the `parallel` feature is enabled.
pub fn search_counterexample(cfg: &CampaignConfig) -> Result<Vec<CampaignReport>, Error> {
    run_campaign(cfg, cfg!(feature = "parallel"))
}

/// Sequential campaign driver, available regardless of features; produces
/// byte-identical reports to the parallel one.
pub fn search_counterexample_seq(cfg: &CampaignConfig) -> Result<Vec<CampaignReport>, Error> {
    run_campaign(cfg, false)
}

struct SampleOutcome {
    seed: u64,
    conclusions: Vec<Conclusion>,
}

fn run_campaign(cfg: &CampaignConfig, parallel: bool) -> Result<Vec<CampaignReport>, Error> {
    let cells = cfg.grid()?;
    let mut reports: Vec<CampaignReport> = cfg
        .theorems
        .iter()
        .map(|&theorem| CampaignReport {
            theorem,
            config: cfg.clone(),
            cells: Vec::with_capacity(cells.len()),
            violations: 0,
        })
        .collect();
    for &(t, k, n) in &cells {
        let outcomes = map_samples(cfg, t, k, n, parallel);
        let extremal_outcomes: Option<Vec<Conclusion>> = if cfg.include_extremal {
            let g = ExtremalParams::new(n, t, k)
                .expect("grid cells satisfy the family invariants")
                .construct();
            Some(
                cfg.theorems
                    .iter()
                    .map(|&th| theorem_conclusion(th, &g, t, k))
                    .collect(),
            )
        } else {
            None
        };
        for (ti, report) in reports.iter_mut().enumerate() {
            let mut counts = CellCounts::default();
            let mut seeds_of_exceptions = Vec::new();
            let mut seeds_of_violations = Vec::new();
            for outcome in &outcomes {
                let c = outcome.conclusions[ti];
                counts.add(c);
                match c {
                    Conclusion::ExtremalException => seeds_of_exceptions.push(outcome.seed),
                    Conclusion::Violation => seeds_of_violations.push(outcome.seed),
                    _ => {}
                }
            }
            let extremal_check = extremal_outcomes.as_ref().map(|v| v[ti]);
            report.violations += seeds_of_violations.len();
            if extremal_check == Some(Conclusion::Violation) {
                report.violations += 1;
            }
            report.cells.push(CellReport {
                t,
                k,
                n,
                counts,
                seeds_of_exceptions,
                seeds_of_violations,
                extremal_check,
            });
        }
    }
    Ok(reports)
}

fn map_samples(
    cfg: &CampaignConfig,
    t: usize,
    k: usize,
    n: usize,
    parallel: bool,
) -> Vec<SampleOutcome> {
    #[cfg(feature = "parallel")]
    {
        if parallel {
            use rayon::prelude::*;
            return (0..cfg.samples_per_cell)
                .into_par_iter()
                .map(|i| run_sample(cfg, t, k, n, i))
                .collect();
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = parallel;
    (0..cfg.samples_per_cell)
        .map(|i| run_sample(cfg, t, k, n, i))
        .collect()
}

fn run_sample(cfg: &CampaignConfig, t: usize, k: usize, n: usize, index: usize) -> SampleOutcome {
    let seed = derive_seed(cfg.seed, &[t as u64, k as u64, n as u64, index as u64]);
    let g = campaign_graph(n, t, k, cfg.surplus, seed).expect("grid cells admit generation");
    let conclusions = cfg
        .theorems
        .iter()
        .map(|&th| theorem_conclusion(th, &g, t, k))
        .collect();
    SampleOutcome { seed, conclusions }
}

fn theorem_conclusion(th: TheoremKind, g: &Graph, t: usize, k: usize) -> Conclusion {
    match th {
        TheoremKind::Thm4 => verify_thm4(g, t, k).conclusion,
        TheoremKind::Thm5 => verify_thm5(g, t, k).conclusion,
    }
}

/// Generates one campaign sample: backbone plus a surplus resolved from the
/// distribution spec, re-verified t-connected.
fn campaign_graph(
    n: usize,
    t: usize,
    k: usize,
    spec: SurplusSpec,
    seed: u64,
) -> Result<Graph, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_edges = binomial(n as u64, 2);
    for _ in 0..16 {
        let mut g = harary_backbone(n, t);
        let backbone_edges = g.edge_count() as u64;
        let room = (max_edges - backbone_edges) as i128;
        let surplus: u64 = match spec {
            SurplusSpec::Uniform { min, max } => rng.gen_range(min..=max.max(min)),
            SurplusSpec::Straddle { below, above } => {
                let threshold = thm4_threshold_raw(n, t, k) as i128;
                let offset = rng.gen_range(-(below as i128)..=above as i128);
                (threshold + offset - backbone_edges as i128).clamp(0, room) as u64
            }
            SurplusSpec::Dense { min, max } => {
                let removed = rng.gen_range(min..=max.max(min)) as i128;
                (max_edges as i128 - removed - backbone_edges as i128).clamp(0, room) as u64
            }
        };
        add_random_non_edges(&mut g, surplus as usize, &mut rng);
        if is_t_connected(&g, t) {
            return Ok(g);
        }
    }
    Err(Error::InvalidGenerator(format!(
        "failed to generate a {t}-connected sample on {n} vertices"
    )))
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stable per-sample seed from the master seed and the cell coordinates.
/// Independent of thread scheduling and of the set of selected theorems.
pub fn derive_seed(master: u64, parts: &[u64]) -> u64 {
    let mut s = splitmix64(master);
    for &p in parts {
        s = splitmix64(s ^ p);
    }
    s
}
