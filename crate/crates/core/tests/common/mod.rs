//! Independent brute-force oracles for the integration suites. These avoid
//! the library's algorithm paths on purpose: matching by exhaustive
//! recursion, connectivity by separator enumeration, independence by subset
//! scan, and a rescan-based closure with arbitrary processing order.
//!
//! Each integration binary uses its own subset of the oracles.
#![allow(dead_code)]

use fcrit_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Maximum matching size by exhaustive recursion. Feasible for n ≤ ~12.
pub fn brute_matching_size(g: &Graph) -> usize {
    assert!(g.n() <= 32, "oracle uses a u32 vertex mask");
    fn rec(g: &Graph, used: u32, from: usize) -> usize {
        let n = g.n();
        let mut v = from;
        while v < n && used >> v & 1 == 1 {
            v += 1;
        }
        if v >= n {
            return 0;
        }
        // v stays exposed
        let mut best = rec(g, used | 1 << v, v + 1);
        // all vertices below v are already decided, so unused neighbors are above v
        for u in g.neighbors(v) {
            if used >> u & 1 == 0 && u != v {
                best = best.max(1 + rec(g, used | 1 << v | 1 << u, v + 1));
            }
        }
        best
    }
    rec(g, 0, 0)
}

pub fn brute_has_perfect_matching(g: &Graph) -> bool {
    g.n().is_multiple_of(2) && 2 * brute_matching_size(g) == g.n()
}

/// Criticality by enumerating every deletion set against the brute-force
/// matching oracle.
pub fn brute_is_k_factor_critical(g: &Graph, k: usize) -> bool {
    let n = g.n();
    assert!(k <= n);
    if !(n - k).is_multiple_of(2) {
        return false;
    }
    subsets_of_size(n, k)
        .into_iter()
        .all(|s| brute_has_perfect_matching(&g.induced_without(&s)))
}

/// Connectivity test that shares nothing with the library BFS.
pub fn connected_oracle(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for v in (0..n).filter(|&v| g.has_edge(u, v)) {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

/// Exhaustive separator search: the smallest vertex set whose removal
/// disconnects the graph, `n − 1` when none exists (complete graphs).
pub fn brute_kappa(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if !connected_oracle(g) {
        return 0;
    }
    for size in 1..=n.saturating_sub(2) {
        for s in subsets_of_size(n, size) {
            if !connected_oracle(&g.induced_without(&s)) {
                return size;
            }
        }
    }
    n - 1
}

/// Independence number by bitmask scan. Feasible for n ≤ ~16.
pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let mut best = 0usize;
    'mask: for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        for u in 0..n {
            if mask >> u & 1 == 0 {
                continue;
            }
            for v in u + 1..n {
                if mask >> v & 1 == 1 && g.has_edge(u, v) {
                    continue 'mask;
                }
            }
        }
        best = size;
    }
    best
}

/// All k-subsets of `0..n` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let remaining = k - current.len();
        for v in start..=n.saturating_sub(remaining) {
            current.push(v);
            rec(n, k, v + 1, current, out);
            current.pop();
        }
    }
    if k <= n {
        rec(n, k, 0, &mut current, &mut out);
    }
    out
}

/// Degree-sum closure computed by full rescans with an arbitrary (seeded)
/// choice of the next eligible pair.
pub fn closure_random_order(g: &Graph, l: usize, rng: &mut ChaCha8Rng) -> Graph {
    let n = g.n();
    let mut out = g.clone();
    loop {
        let mut eligible = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !out.has_edge(u, v) && out.degree(u) + out.degree(v) >= l {
                    eligible.push((u, v));
                }
            }
        }
        if eligible.is_empty() {
            return out;
        }
        let (u, v) = eligible[rng.gen_range(0..eligible.len())];
        out.add_edge(u, v).unwrap();
    }
}

pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_connected_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let g = random_graph(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Every labeled graph on n vertices (2^C(n,2) of them; keep n ≤ 6).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    (0..total).map(move |mask| {
        let mut g = Graph::empty(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    })
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
