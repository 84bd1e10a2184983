//! Dense simple undirected graphs stored as fixed-width bit rows, the
//! extremal family `K_t ∨ (K_{n+k−2t−1} + (t−k+1)K_1)`, and the exact
//! integer edge thresholds attached to it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::Error;

/// Simple undirected graph on vertices `0..n`.
///
/// The adjacency matrix is stored row-major as 64-bit words so that degree,
/// neighborhood intersection and complement are word-parallel. Rows stay
/// symmetric and loop-free through every mutation; debug builds assert both
/// after each edit.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let full = bits::full_row(n);
        for v in 0..n {
            g.row_mut(v).copy_from_slice(&full);
            bits::clear(g.row_mut(v), v);
        }
        debug_assert!(g.invariants_ok());
        g
    }

    /// Cycle `C_n` (empty for n < 3).
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n).expect("cycle edges are valid");
            }
        }
        g
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v).expect("path edges are valid");
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.bits[v * self.words..(v + 1) * self.words]
    }

    fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Inserts the edge `{u, v}`. Idempotent; rejects loops and
    /// out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        bits::set(self.row_mut(u), v);
        bits::set(self.row_mut(v), u);
        debug_assert!(self.invariants_ok());
        Ok(())
    }

    /// Removes the edge `{u, v}` if present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        bits::clear(self.row_mut(u), v);
        bits::clear(self.row_mut(v), u);
        debug_assert!(self.invariants_ok());
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        bits::test(self.row(u), v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Number of edges (half the set bits).
    pub fn edge_count(&self) -> usize {
        let total: usize = self.bits.iter().map(|w| w.count_ones() as usize).sum();
        debug_assert!(total.is_multiple_of(2));
        total / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Disjoint union; vertices of `other` are relabeled to `self.n ..`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("relabeled edge is valid");
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)
                .expect("relabeled edge is valid");
        }
        g
    }

    /// Join: disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..self.n + other.n {
                g.add_edge(u, v).expect("join edge is valid");
            }
        }
        g
    }

    /// Edge-complement on the same vertex set (no loops).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let full = bits::full_row(self.n);
        for v in 0..self.n {
            let row = self.row(v);
            let out = g.row_mut(v);
            for w in 0..row.len() {
                out[w] = !row[w] & full[w];
            }
            bits::clear(out, v);
        }
        debug_assert!(g.invariants_ok());
        g
    }

    /// Induced subgraph after deleting `removed`, with the surviving
    /// vertices relabeled compactly in their original order.
    pub fn induced_without(&self, removed: &[usize]) -> Graph {
        let mut gone = vec![false; self.n];
        for &v in removed {
            debug_assert!(v < self.n);
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_label[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        for &u in &keep {
            for v in self.neighbors(u) {
                if v > u && !gone[v] {
                    g.add_edge(new_label[u], new_label[v])
                        .expect("relabeled edge is valid");
                }
            }
        }
        g
    }

    /// Relabels vertex `i` to `perm[i]`; `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permuted edge is valid");
        }
        g
    }

    /// BFS connectivity; graphs with at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![0u64; self.words];
        bits::set(&mut seen, 0);
        let mut frontier = vec![0usize];
        let mut reached = 1;
        while let Some(u) = frontier.pop() {
            for v in self.neighbors(u) {
                if !bits::test(&seen, v) {
                    bits::set(&mut seen, v);
                    reached += 1;
                    frontier.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Symmetry and loop-freeness; used by debug assertions and tests.
    pub fn invariants_ok(&self) -> bool {
        for u in 0..self.n {
            if bits::test(self.row(u), u) {
                return false;
            }
            let tail_start = self.n;
            let row = self.row(u);
            for b in tail_start..self.words * bits::WORD_BITS {
                if bits::test(row, b) {
                    return false;
                }
            }
            for v in 0..u {
                if bits::test(self.row(u), v) != bits::test(self.row(v), u) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, e={})", self.n, self.edge_count())
    }
}

/// Exact binomial coefficient; panics if the value overflows `u64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// `C(x, 2) + (t−k+2)(t+1)` with `x = n+k−t−2`, clamped to zero when the
/// binomial argument is negative. Total in the inputs so that hypothesis
/// checks on arbitrary `(n, t, k)` never panic.
pub(crate) fn thm4_threshold_raw(n: usize, t: usize, k: usize) -> u64 {
    let x = n as i128 + k as i128 - t as i128 - 2;
    let c2 = if x >= 2 { (x * (x - 1) / 2) as u64 } else { 0 };
    let lin = (t as i128 - k as i128 + 2) * (t as i128 + 1);
    c2 + u64::try_from(lin.max(0)).expect("threshold term overflows")
}

/// Parameter triple `(n, t, k)` for the extremal family
/// `K_t ∨ (K_{n+k−2t−1} + (t−k+1)K_1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalParams {
    n: usize,
    t: usize,
    k: usize,
}

impl ExtremalParams {
    /// Validates `t ≥ k ≥ 1`, `n ≡ k (mod 2)` and a nonempty middle clique
    /// (`n + k − 2t − 1 ≥ 1`).
    pub fn new(n: usize, t: usize, k: usize) -> Result<Self, Error> {
        let reject = |reason| Error::InvalidParams { n, t, k, reason };
        if k < 1 || t < k {
            return Err(reject("t ≥ k ≥ 1 is required"));
        }
        if n % 2 != k % 2 {
            return Err(reject("n ≡ k (mod 2) is required"));
        }
        if (n + k) as i128 - 2 * t as i128 - 1 < 1 {
            return Err(reject("middle clique is empty (n + k − 2t − 1 < 1)"));
        }
        Ok(ExtremalParams { n, t, k })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn t(&self) -> usize {
        self.t
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Size of the middle clique, `n + k − 2t − 1`.
    #[inline]
    pub fn middle_size(&self) -> usize {
        self.n + self.k - 2 * self.t - 1
    }

    /// Number of independent vertices, `t − k + 1`.
    #[inline]
    pub fn independent_size(&self) -> usize {
        self.t - self.k + 1
    }

    /// Builds `K_t ∨ (K_{n+k−2t−1} + (t−k+1)K_1)` with a fixed layout:
    /// hub block `[0, t)`, middle clique next, independent vertices last.
    pub fn construct(&self) -> Graph {
        let n = self.n;
        let t = self.t;
        let mid_end = t + self.middle_size();
        let mut g = Graph::empty(n);
        for u in 0..t {
            for v in u + 1..n {
                g.add_edge(u, v).expect("hub edge is valid");
            }
        }
        for u in t..mid_end {
            for v in u + 1..mid_end {
                g.add_edge(u, v).expect("middle-clique edge is valid");
            }
        }
        g
    }

    /// Exact edge count of the family: `C(n+k−t−1, 2) + t(t−k+1)`.
    pub fn extremal_edge_count(&self) -> u64 {
        binomial((self.n + self.k - self.t - 1) as u64, 2)
            + (self.t * self.independent_size()) as u64
    }

    /// The edge threshold `C(n+k−t−2, 2) + (t−k+2)(t+1)`.
    pub fn thm4_threshold(&self) -> u64 {
        thm4_threshold_raw(self.n, self.t, self.k)
    }

    /// Exact order bound `2n ≥ 15t − 11k + 29` for the edge condition.
    pub fn meets_thm4_order_bound(&self) -> bool {
        thm4_order_bound_ok(self.n, self.t, self.k)
    }

    /// Order bound for the spectral condition:
    /// `2n ≥ max(15t − 11k + 29, 2t² + 5t + 4)`.
    pub fn meets_thm5_order_bound(&self) -> bool {
        thm5_order_bound_ok(self.n, self.t, self.k)
    }

    /// Smallest parity-correct order satisfying the edge-condition bound.
    pub fn min_order_thm4(t: usize, k: usize) -> usize {
        min_parity_order(15 * t as i128 - 11 * k as i128 + 29, k)
    }

    /// Smallest parity-correct order satisfying both theorem bounds.
    pub fn min_order_thm5(t: usize, k: usize) -> usize {
        let a = 15 * t as i128 - 11 * k as i128 + 29;
        let b = 2 * (t as i128) * (t as i128) + 5 * t as i128 + 4;
        min_parity_order(a.max(b), k)
    }
}

pub(crate) fn thm4_order_bound_ok(n: usize, t: usize, k: usize) -> bool {
    2 * n as i128 >= 15 * t as i128 - 11 * k as i128 + 29
}

pub(crate) fn thm5_order_bound_ok(n: usize, t: usize, k: usize) -> bool {
    thm4_order_bound_ok(n, t, k)
        && 2 * n as i128 >= 2 * (t as i128) * (t as i128) + 5 * t as i128 + 4
}

/// Smallest `n ≡ k (mod 2)` with `2n ≥ double_bound`.
fn min_parity_order(double_bound: i128, k: usize) -> usize {
    let mut n = ((double_bound + 1) / 2).max(1) as usize;
    if n % 2 != k % 2 {
        n += 1;
    }
    n
}
