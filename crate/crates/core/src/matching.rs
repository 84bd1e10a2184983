//! Maximum matching (blossom algorithm), the perfect-matching decision, and
//! the exhaustive k-factor-criticality check.
//!
//! Criticality enumerates all `C(n, k)` deletion sets in lexicographic order
//! and reports the first failing set as witness. With the `parallel` feature
//! the enumeration is partitioned across workers; the reported witness is
//! still the lexicographically smallest failure.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::Error;
use crate::graph::{binomial, Graph};

const NONE: usize = usize::MAX;

/// A set of pairwise-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Matched pairs as `(u, v)` with `u < v`, sorted.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks the matching invariants against a host graph: every pair is an
    /// edge and no vertex is matched twice.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for &(u, v) in &self.pairs {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return false;
            }
            if seen[u] || seen[v] {
                return false;
            }
            seen[u] = true;
            seen[v] = true;
        }
        true
    }
}

/// Maximum-cardinality matching; deterministic for a fixed vertex order.
pub fn max_matching(g: &Graph) -> Matching {
    let active = bits::full_row(g.n());
    let mate = blossom_mates(g, &active);
    let mut pairs = Vec::new();
    for (u, &v) in mate.iter().enumerate() {
        if v != NONE && u < v {
            pairs.push((u, v));
        }
    }
    Matching { pairs }
}

/// True iff a perfect matching exists (`2·|max matching| = n`); graphs of
/// odd order never qualify.
pub fn has_perfect_matching(g: &Graph) -> bool {
    let active = bits::full_row(g.n());
    has_pm_masked(g, &active, g.n())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictReason {
    /// `n ≢ k (mod 2)`: every deletion leaves odd order.
    Parity,
    /// A deletion set without a perfect matching was found.
    WitnessFound,
    /// Every `C(n, k)` deletion set admits a perfect matching.
    AllSubsetsPass,
}

/// Outcome of the k-factor-criticality decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityVerdict {
    pub is_critical: bool,
    /// Lexicographically smallest failing deletion set, present iff the
    /// verdict is negative for a non-parity reason.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub reason: VerdictReason,
}

impl CriticalityVerdict {
    fn parity() -> Self {
        CriticalityVerdict {
            is_critical: false,
            witness: None,
            reason: VerdictReason::Parity,
        }
    }

    fn witness(subset: Vec<usize>) -> Self {
        CriticalityVerdict {
            is_critical: false,
            witness: Some(subset),
            reason: VerdictReason::WitnessFound,
        }
    }

    fn all_pass() -> Self {
        CriticalityVerdict {
            is_critical: true,
            witness: None,
            reason: VerdictReason::AllSubsetsPass,
        }
    }
}

/// Decides whether `G − S` has a perfect matching for every `|S| = k`.
/// Dispatches to the parallel driver when the `parallel` feature is on.
pub fn is_k_factor_critical(g: &Graph, k: usize) -> Result<CriticalityVerdict, Error> {
    #[cfg(feature = "parallel")]
    {
        is_k_factor_critical_par(g, k)
    }
    #[cfg(not(feature = "parallel"))]
    {
        is_k_factor_critical_seq(g, k)
    }
}

/// Sequential driver: lexicographic enumeration with early exit.
pub fn is_k_factor_critical_seq(g: &Graph, k: usize) -> Result<CriticalityVerdict, Error> {
    if let Some(verdict) = criticality_preamble(g, k)? {
        return Ok(verdict);
    }
    let n = g.n();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if !pm_survives_deletion(g, &subset) {
            return Ok(CriticalityVerdict::witness(subset));
        }
        if !next_combination(&mut subset, n) {
            return Ok(CriticalityVerdict::all_pass());
        }
    }
}

/// Parallel driver: the rank space `0..C(n,k)` is split into chunks scanned
/// concurrently; `find_map_first` keeps the reported witness the
/// lexicographically smallest failure.
#[cfg(feature = "parallel")]
pub fn is_k_factor_critical_par(g: &Graph, k: usize) -> Result<CriticalityVerdict, Error> {
    use rayon::prelude::*;

    if let Some(verdict) = criticality_preamble(g, k)? {
        return Ok(verdict);
    }
    let n = g.n();
    let total = binomial(n as u64, k as u64);
    if total <= 1024 {
        return is_k_factor_critical_seq(g, k);
    }
    let workers = rayon::current_num_threads().max(1) as u64;
    let chunk = (total / (workers * 8)).clamp(64, 65_536);
    // chunk indices stay lazy: C(n, k) can dwarf any materialized range list
    let failure = (0..total.div_ceil(chunk))
        .into_par_iter()
        .find_map_first(|i| {
            let lo = i * chunk;
            let hi = ((i + 1) * chunk).min(total);
            first_failure_in_range(g, k, lo, hi)
        });
    Ok(match failure {
        Some(subset) => CriticalityVerdict::witness(subset),
        None => CriticalityVerdict::all_pass(),
    })
}

fn criticality_preamble(g: &Graph, k: usize) -> Result<Option<CriticalityVerdict>, Error> {
    let n = g.n();
    if k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if !(n - k).is_multiple_of(2) {
        return Ok(Some(CriticalityVerdict::parity()));
    }
    Ok(None)
}

fn pm_survives_deletion(g: &Graph, subset: &[usize]) -> bool {
    let mut active = bits::full_row(g.n());
    for &v in subset {
        bits::clear(&mut active, v);
    }
    has_pm_masked(g, &active, g.n() - subset.len())
}

#[cfg(feature = "parallel")]
fn first_failure_in_range(g: &Graph, k: usize, lo: u64, hi: u64) -> Option<Vec<usize>> {
    let n = g.n();
    let mut subset = unrank_combination(n, k, lo);
    for _ in lo..hi {
        if !pm_survives_deletion(g, &subset) {
            return Some(subset);
        }
        if !next_combination(&mut subset, n) {
            break;
        }
    }
    None
}

/// Advances a sorted k-subset of `0..n` to its lexicographic successor.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] != i + n - k {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Subset of `0..n` at position `rank` in lexicographic order.
#[cfg(feature = "parallel")]
fn unrank_combination(n: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut x = 0usize;
    for i in 0..k {
        loop {
            let c = binomial((n - 1 - x) as u64, (k - 1 - i) as u64);
            if rank < c {
                break;
            }
            rank -= c;
            x += 1;
        }
        out.push(x);
        x += 1;
    }
    out
}

/// Perfect-matching decision on the active vertex set.
fn has_pm_masked(g: &Graph, active: &[u64], active_count: usize) -> bool {
    if !active_count.is_multiple_of(2) {
        return false;
    }
    if active_count == 0 {
        return true;
    }
    // an active vertex with no active neighbor can never be covered
    for v in bits::ones(active) {
        if bits::and_count(g.row(v), active) == 0 {
            return false;
        }
    }
    let mate = blossom_mates(g, active);
    let matched = bits::ones(active).filter(|&v| mate[v] != NONE).count();
    matched == active_count
}

/// Edmonds' blossom algorithm restricted to the active vertex set; returns
/// the mate array (`NONE` = exposed). O(V³).
fn blossom_mates(g: &Graph, active: &[u64]) -> Vec<usize> {
    let n = g.n();
    let mut state = BlossomState {
        g,
        active,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom_mark: vec![false; n],
        queue: VecDeque::new(),
    };
    state.greedy_seed();
    let roots: Vec<usize> = bits::ones(active).collect();
    for v in roots {
        if state.mate[v] == NONE {
            if let Some(finish) = state.find_augmenting_path(v) {
                state.augment(finish);
            }
        }
    }
    state.mate
}

struct BlossomState<'g> {
    g: &'g Graph,
    active: &'g [u64],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom_mark: Vec<bool>,
    queue: VecDeque<usize>,
}

impl BlossomState<'_> {
    fn active_neighbors(&self, v: usize) -> Vec<usize> {
        let row = self.g.row(v);
        let masked: Vec<u64> = row.iter().zip(self.active).map(|(a, b)| a & b).collect();
        bits::ones(&masked).collect()
    }

    fn greedy_seed(&mut self) {
        for v in bits::ones(self.active) {
            if self.mate[v] != NONE {
                continue;
            }
            for u in self.active_neighbors(v) {
                if self.mate[u] == NONE {
                    self.mate[u] = v;
                    self.mate[v] = u;
                    break;
                }
            }
        }
    }

    /// Base vertex of the blossom containing the alternating-tree paths of
    /// `a` and `b` (their least common ancestor in contracted terms).
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, stop: usize, mut child: usize) {
        while self.base[v] != stop {
            self.blossom_mark[self.base[v]] = true;
            self.blossom_mark[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.active_neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let cur = self.lca(v, to);
                    self.blossom_mark.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in bits::ones(self.active) {
                        if self.blossom_mark[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[self.mate[to]] = true;
                    self.queue.push_back(self.mate[to]);
                }
            }
        }
        None
    }

    fn augment(&mut self, finish: usize) {
        let mut v = finish;
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}
