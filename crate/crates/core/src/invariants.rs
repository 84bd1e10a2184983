//! Exact clique and independence numbers, the independence-number
//! sufficient condition for criticality, the clique-forcing check on closed
//! graphs, and the structural recognizer for the extremal family.

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::closure::closure_degree_condition;
use crate::connectivity::is_t_connected;
use crate::error::Error;
use crate::graph::{thm4_order_bound_ok, thm4_threshold_raw, ExtremalParams, Graph};
use crate::matching::{is_k_factor_critical, CriticalityVerdict};

/// Exact clique number with a witness clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub omega: usize,
    pub witness: Vec<usize>,
}

/// Exact maximum clique by branch and bound with a greedy-coloring upper
/// bound over bitset candidate sets.
pub fn clique_number(g: &Graph) -> CliqueResult {
    let n = g.n();
    if n == 0 {
        return CliqueResult {
            omega: 0,
            witness: Vec::new(),
        };
    }
    let mut best = vec![0usize];
    let cand = bits::full_row(n);
    let mut current = Vec::new();
    expand(g, &cand, &mut current, &mut best);
    best.sort_unstable();
    debug_assert!(is_clique(g, &best));
    CliqueResult {
        omega: best.len(),
        witness: best,
    }
}

fn expand(g: &Graph, cand: &[u64], current: &mut Vec<usize>, best: &mut Vec<usize>) {
    // greedy coloring: vertices listed in ascending color, so the color is
    // an upper bound on any clique inside the remaining candidates
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut uncolored = cand.to_vec();
    let mut color = 0usize;
    while !bits::is_zero(&uncolored) {
        color += 1;
        let mut class_cand = uncolored.clone();
        while let Some(v) = bits::ones(&class_cand).next() {
            bits::clear(&mut class_cand, v);
            bits::clear(&mut uncolored, v);
            order.push((v, color));
            for (w, r) in class_cand.iter_mut().zip(g.row(v)) {
                *w &= !r;
            }
        }
    }
    let mut cand_local = cand.to_vec();
    for &(v, c) in order.iter().rev() {
        if current.len() + c <= best.len() {
            return;
        }
        current.push(v);
        let next: Vec<u64> = cand_local.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
        if bits::is_zero(&next) {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, &next, current, best);
        }
        current.pop();
        bits::clear(&mut cand_local, v);
    }
}

fn is_clique(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Exact independence number, via the clique number of the complement.
pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement()).omega
}

/// The independence-number sufficient condition: a t-connected graph with
/// `α(G) ≤ t − k + 1` and `n ≡ k (mod 2)` is k-factor-critical. A `true`
/// here with a negative criticality verdict is an implementation bug.
pub fn favaron_condition(g: &Graph, k: usize, t: usize) -> bool {
    if g.n() % 2 != k % 2 {
        return false;
    }
    if !is_t_connected(g, t) {
        return false;
    }
    independence_number(g) as i128 <= t as i128 - k as i128 + 1
}

/// Report of the clique-forcing check on a closed graph: when the
/// hypotheses hold and the edge count clears the threshold, the clique
/// number must reach `n + k − t − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueForcingReport {
    pub n: usize,
    pub t: usize,
    pub k: usize,
    pub edge_count: u64,
    pub edge_threshold: u64,
    pub hypotheses_met: bool,
    /// Names of failed hypotheses, empty when all hold.
    pub unmet: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub required_clique: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
}

/// Validates a supplied graph against the clique-forcing statement: `h`
/// must be t-connected, equal to its own `(n+k−1)`-closure, of large enough
/// order and parity, with `e(h)` above the edge threshold; then
/// `ω(h) ≥ n + k − t − 1` is asserted. Unmet hypotheses are reported, never
/// asserted through.
pub fn lemma8_check(h: &Graph, t: usize, k: usize) -> CliqueForcingReport {
    let n = h.n();
    let edge_count = h.edge_count() as u64;
    let edge_threshold = thm4_threshold_raw(n, t, k);
    let mut unmet = Vec::new();
    if !(k >= 1 && t >= k) {
        unmet.push("parameters (t ≥ k ≥ 1)".to_string());
    }
    if n % 2 != k % 2 {
        unmet.push("parity (n ≡ k mod 2)".to_string());
    }
    if !thm4_order_bound_ok(n, t, k) {
        unmet.push("order (2n ≥ 15t − 11k + 29)".to_string());
    }
    if !closure_degree_condition(h, n + k - 1) {
        unmet.push("graph equals its own (n+k−1)-closure".to_string());
    }
    if !is_t_connected(h, t) {
        unmet.push(format!("{t}-connectivity"));
    }
    if edge_count <= edge_threshold {
        unmet.push(format!("edge count (e = {edge_count} ≤ {edge_threshold})"));
    }
    if !unmet.is_empty() {
        return CliqueForcingReport {
            n,
            t,
            k,
            edge_count,
            edge_threshold,
            hypotheses_met: false,
            unmet,
            omega: None,
            required_clique: None,
            pass: None,
        };
    }
    let omega = clique_number(h).omega;
    let required = n + k - t - 1;
    CliqueForcingReport {
        n,
        t,
        k,
        edge_count,
        edge_threshold,
        hypotheses_met: true,
        unmet,
        omega: Some(omega),
        required_clique: Some(required),
        pass: Some(omega >= required),
    }
}

/// Structural recognizer for `K_t ∨ (K_{n+k−2t−1} + (t−k+1)K_1)`, label
/// invariant and without generic isomorphism search.
///
/// The family is rigid: the hub is exactly the set of vertices adjacent to
/// everything (t of them), and deleting it must leave a clique of the
/// middle size plus isolated vertices. Those two facts force the degrees,
/// the independence of the low-degree class and their common neighborhood.
pub fn is_extremal(g: &Graph, p: &ExtremalParams) -> bool {
    let n = p.n();
    if g.n() != n {
        return false;
    }
    let t = p.t();
    let m = p.middle_size();
    let s = p.independent_size();

    let mut hub_count = 0usize;
    let mut rest = Vec::with_capacity(n - t);
    for v in 0..n {
        if g.degree(v) == n - 1 {
            hub_count += 1;
        } else {
            rest.push(v);
        }
    }
    if hub_count != t {
        return false;
    }

    let mut rest_mask = vec![0u64; bits::words_for(n)];
    for &v in &rest {
        bits::set(&mut rest_mask, v);
    }
    let rest_degree = |v: usize| bits::and_count(g.row(v), &rest_mask);

    if m == 1 {
        // K_1 + s·K_1 is (s+1) isolated vertices
        return rest.iter().all(|&v| rest_degree(v) == 0);
    }
    let mut clique_members = 0usize;
    let mut isolated = 0usize;
    for &v in &rest {
        match rest_degree(v) {
            0 => isolated += 1,
            d if d == m - 1 => clique_members += 1,
            _ => return false,
        }
    }
    clique_members == m && isolated == s
}

/// Bundle returned by [`favaron_implies_critical`]: the condition value and
/// the criticality verdict it must imply.
#[derive(Clone, Debug, Serialize)]
pub struct FavaronCheck {
    pub condition: bool,
    pub verdict: CriticalityVerdict,
}

/// Convenience used by test harnesses: evaluates the sufficient condition
/// and, when it holds, the full criticality decision.
pub fn favaron_implies_critical(g: &Graph, k: usize, t: usize) -> Result<FavaronCheck, Error> {
    let condition = favaron_condition(g, k, t);
    let verdict = is_k_factor_critical(g, k)?;
    Ok(FavaronCheck { condition, verdict })
}
