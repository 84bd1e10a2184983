//! Exact vertex connectivity via unit-capacity max-flow on the vertex-split
//! digraph, and the t-connectivity predicate.
//!
//! κ is the minimum over flows between one minimum-degree vertex and its
//! non-neighbors, plus all non-adjacent pairs among that vertex's neighbors.
//! The predicate form stops each flow as soon as `t` disjoint paths are
//! certified.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Exact connectivity value plus a minimum separator when one exists.
///
/// Complete graphs (including `K_1`) report `kappa = n − 1` with no
/// separator; disconnected graphs report `kappa = 0` with an empty one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityResult {
    pub kappa: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separator: Option<Vec<usize>>,
}

/// Exact κ(G).
pub fn vertex_connectivity(g: &Graph) -> ConnectivityResult {
    let n = g.n();
    if n <= 1 {
        return ConnectivityResult {
            kappa: 0,
            separator: None,
        };
    }
    if !g.is_connected() {
        return ConnectivityResult {
            kappa: 0,
            separator: Some(Vec::new()),
        };
    }
    let pairs = candidate_pairs(g);
    if pairs.is_empty() {
        // no non-adjacent pair anywhere: complete graph
        return ConnectivityResult {
            kappa: n - 1,
            separator: None,
        };
    }
    let mut best = n; // flows between non-adjacent vertices are ≤ n − 2
    let mut best_cut: Option<Vec<usize>> = None;
    for (s, t) in pairs {
        let (flow, cut) = disjoint_paths(g, s, t, best);
        if flow < best {
            best = flow;
            best_cut = Some(cut);
        }
    }
    ConnectivityResult {
        kappa: best,
        separator: best_cut,
    }
}

/// True iff `n > t` and κ(G) ≥ t. Exits early once `t` vertex-disjoint
/// paths are certified for every required pair.
pub fn is_t_connected(g: &Graph, t: usize) -> bool {
    let n = g.n();
    if n <= t {
        return false;
    }
    if t == 0 {
        return true;
    }
    if !g.is_connected() {
        return false;
    }
    // κ ≤ δ
    match g.min_degree() {
        Some(d) if d >= t => {}
        _ => return false,
    }
    candidate_pairs(g)
        .into_iter()
        .all(|(s, u)| disjoint_paths(g, s, u, t).0 >= t)
}

/// Pair family whose flow minimum equals κ for connected, non-complete
/// graphs: a minimum-degree vertex `v` against each non-neighbor, plus every
/// non-adjacent pair inside `N(v)`.
fn candidate_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let v = (0..n)
        .min_by_key(|&u| g.degree(u))
        .expect("graph has at least two vertices");
    let mut pairs = Vec::new();
    for u in 0..n {
        if u != v && !g.has_edge(u, v) {
            pairs.push((v, u));
        }
    }
    let nb: Vec<usize> = g.neighbors(v).collect();
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if !g.has_edge(x, y) {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

/// Maximum number of internally vertex-disjoint s–t paths for a
/// non-adjacent pair, capped at `bound`, together with a minimum separator
/// when the cap was not hit.
fn disjoint_paths(g: &Graph, s: usize, t: usize, bound: usize) -> (usize, Vec<usize>) {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g);
    let source = SplitNetwork::out_node(s);
    let sink = SplitNetwork::in_node(t);
    let mut flow = 0;
    while flow < bound && net.augment(source, sink) {
        flow += 1;
    }
    let cut = if flow < bound {
        net.separator(source)
    } else {
        Vec::new()
    };
    (flow, cut)
}

/// Vertex-split flow network: vertex `v` becomes arc `in(v) → out(v)` of
/// capacity 1; each edge `{a, b}` becomes arcs `out(a) → in(b)` and
/// `out(b) → in(a)` with capacity `n`, so a minimum cut saturates only
/// vertex arcs.
struct SplitNetwork {
    adj: Vec<Vec<usize>>, // node -> arc indices
    to: Vec<usize>,
    residual: Vec<u32>,
    parent_arc: Vec<usize>,
}

const NO_ARC: usize = usize::MAX;

impl SplitNetwork {
    #[inline]
    fn in_node(v: usize) -> usize {
        2 * v
    }

    #[inline]
    fn out_node(v: usize) -> usize {
        2 * v + 1
    }

    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut net = SplitNetwork {
            adj: vec![Vec::new(); 2 * n],
            to: Vec::new(),
            residual: Vec::new(),
            parent_arc: vec![NO_ARC; 2 * n],
        };
        for v in 0..n {
            net.add_arc(Self::in_node(v), Self::out_node(v), 1);
        }
        let edge_cap = n as u32;
        for (a, b) in g.edges() {
            net.add_arc(Self::out_node(a), Self::in_node(b), edge_cap);
            net.add_arc(Self::out_node(b), Self::in_node(a), edge_cap);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let idx = self.to.len();
        self.adj[from].push(idx);
        self.to.push(to);
        self.residual.push(cap);
        // paired reverse arc at idx ^ 1
        self.adj[to].push(idx + 1);
        self.to.push(from);
        self.residual.push(0);
    }

    /// One BFS augmentation of a single unit; returns false when the sink is
    /// unreachable in the residual network.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        self.parent_arc.fill(NO_ARC);
        let mut queue = std::collections::VecDeque::from([source]);
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        'bfs: while let Some(u) = queue.pop_front() {
            for &arc in &self.adj[u] {
                let v = self.to[arc];
                if !seen[v] && self.residual[arc] > 0 {
                    seen[v] = true;
                    self.parent_arc[v] = arc;
                    if v == sink {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if self.parent_arc[sink] == NO_ARC {
            return false;
        }
        let mut v = sink;
        while v != source {
            let arc = self.parent_arc[v];
            self.residual[arc] -= 1;
            self.residual[arc ^ 1] += 1;
            v = self.to[arc ^ 1];
        }
        true
    }

    /// After a maximal flow: vertices whose split arc crosses the residual
    /// cut, i.e. `in(v)` reachable from the source but `out(v)` not.
    fn separator(&self, source: usize) -> Vec<usize> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &arc in &self.adj[u] {
                let v = self.to[arc];
                if !seen[v] && self.residual[arc] > 0 {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        (0..self.adj.len() / 2)
            .filter(|&v| seen[Self::in_node(v)] && !seen[Self::out_node(v)])
            .collect()
    }
}
