//! Adjacency-list graphs, product constructions, and the edge-list text format.
//!
//! `GeneralGraph` is the materialized representation used by the oracle, the
//! verifier, and the CLI. Combs are only materialized through
//! [`crate::CombGraph::to_general`] when explicitly requested; everything
//! closed-form stays coordinate-based.

use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("root {root} out of range for attachment with {count} vertices")]
    InvalidRoot { root: usize, count: usize },
    #[error("graph must have at least one vertex")]
    Empty,
}

/// Undirected simple graph as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralGraph {
    adj: Vec<Vec<usize>>,
}

impl GeneralGraph {
    pub fn new(vertices: usize) -> Result<Self, GraphError> {
        if vertices == 0 {
            return Err(GraphError::Empty);
        }
        Ok(GeneralGraph {
            adj: vec![Vec::new(); vertices],
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Adds an undirected edge. Duplicate edges are ignored, self-loops rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.adj.len();
        if u >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                count: n,
            });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                count: n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos_v = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos_v, u);
        }
        Ok(())
    }

    /// BFS distances from `src`; `u64::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<u64> {
        let mut dist = vec![u64::MAX; self.adj.len()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == u64::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<u64> {
        let d = self.bfs_distances(u)[v];
        (d != u64::MAX).then_some(d)
    }

    /// Vertices within distance `r` of `v`, ascending by id.
    pub fn ball(&self, v: usize, r: u64) -> Vec<usize> {
        self.bfs_distances(v)
            .iter()
            .enumerate()
            .filter(|(_, &d)| d <= r)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != u64::MAX)
    }

    /// Max distance from `v`; requires a connected graph.
    pub fn eccentricity(&self, v: usize) -> u64 {
        let e = *self.bfs_distances(v).iter().max().unwrap();
        assert_ne!(e, u64::MAX, "eccentricity on a disconnected graph");
        e
    }

    pub fn path(n: usize) -> Self {
        let mut g = GeneralGraph::new(n).expect("path needs n >= 1");
        for i in 1..n {
            g.add_edge(i - 1, i).unwrap();
        }
        g
    }

    /// Star on `n` vertices, center 0.
    pub fn star(n: usize) -> Self {
        let mut g = GeneralGraph::new(n).expect("star needs n >= 1");
        for i in 1..n {
            g.add_edge(0, i).unwrap();
        }
        g
    }

    /// Parses the `p <count>` / `e <u> <v>` text format (0-based ids, one
    /// directive per line; blank lines and `#` comments allowed).
    pub fn from_edge_list_str(text: &str) -> Result<Self, GraphError> {
        let mut graph: Option<GeneralGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut parts = trimmed.split_whitespace();
            let tag = parts.next().unwrap();
            match tag {
                "p" => {
                    if graph.is_some() {
                        return Err(GraphError::Parse {
                            line,
                            reason: "duplicate 'p' line".into(),
                        });
                    }
                    let count: usize = parse_field(parts.next(), line, "vertex count")?;
                    if parts.next().is_some() {
                        return Err(GraphError::Parse {
                            line,
                            reason: "trailing tokens after vertex count".into(),
                        });
                    }
                    graph = Some(GeneralGraph::new(count).map_err(|_| GraphError::Parse {
                        line,
                        reason: "vertex count must be at least 1".into(),
                    })?);
                }
                "e" => {
                    let g = graph.as_mut().ok_or_else(|| GraphError::Parse {
                        line,
                        reason: "'e' line before 'p' line".into(),
                    })?;
                    let u: usize = parse_field(parts.next(), line, "edge endpoint")?;
                    let v: usize = parse_field(parts.next(), line, "edge endpoint")?;
                    if parts.next().is_some() {
                        return Err(GraphError::Parse {
                            line,
                            reason: "trailing tokens after edge".into(),
                        });
                    }
                    g.add_edge(u, v).map_err(|e| GraphError::Parse {
                        line,
                        reason: e.to_string(),
                    })?;
                }
                other => {
                    return Err(GraphError::Parse {
                        line,
                        reason: format!("unknown directive '{other}'"),
                    });
                }
            }
        }
        graph.ok_or(GraphError::Parse {
            line: 0,
            reason: "missing 'p' line".into(),
        })
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("p {}\n", self.vertex_count());
        for u in 0..self.vertex_count() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push_str(&format!("e {u} {v}\n"));
                }
            }
        }
        out
    }
}

fn parse_field<T: std::str::FromStr>(
    tok: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T, GraphError> {
    let tok = tok.ok_or_else(|| GraphError::Parse {
        line,
        reason: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| GraphError::Parse {
        line,
        reason: format!("invalid {what} '{tok}'"),
    })
}

/// Cartesian product of paths `P_n` and `P_m`; vertex `(i, j)` has id `i*m + j`.
pub fn cartesian_grid(n: usize, m: usize) -> GeneralGraph {
    cartesian_product(&GeneralGraph::path(n), &GeneralGraph::path(m))
}

/// Cartesian product `G □ H`; vertex `(g, h)` has id `g*|H| + h`.
pub fn cartesian_product(g: &GeneralGraph, h: &GeneralGraph) -> GeneralGraph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut p = GeneralGraph::new(ng * nh).unwrap();
    for a in 0..ng {
        for b in 0..nh {
            let id = a * nh + b;
            for &a2 in g.neighbors(a) {
                p.add_edge(id, a2 * nh + b).unwrap();
            }
            for &b2 in h.neighbors(b) {
                p.add_edge(id, a * nh + b2).unwrap();
            }
        }
    }
    p
}

/// Rooted product: one attachment copy per base vertex, glued at `root`.
#[derive(Debug, Clone)]
pub struct RootedSpec {
    pub base: GeneralGraph,
    pub attachment: GeneralGraph,
    /// Vertex of `attachment` identified with each base vertex.
    pub root: usize,
}

/// Builds `base ∘ attachment`. Vertex `(i, w)` has id `i*|attachment| + w`;
/// the copy of `root` in slot `i` plays the role of base vertex `i`.
pub fn rooted_product(spec: &RootedSpec) -> Result<GeneralGraph, GraphError> {
    let nh = spec.attachment.vertex_count();
    if spec.root >= nh {
        return Err(GraphError::InvalidRoot {
            root: spec.root,
            count: nh,
        });
    }
    let nb = spec.base.vertex_count();
    let mut g = GeneralGraph::new(nb * nh).unwrap();
    for i in 0..nb {
        for w in 0..nh {
            for &w2 in spec.attachment.neighbors(w) {
                g.add_edge(i * nh + w, i * nh + w2).unwrap();
            }
        }
        for &j in spec.base.neighbors(i) {
            g.add_edge(i * nh + spec.root, j * nh + spec.root).unwrap();
        }
    }
    Ok(g)
}

/// Exact isomorphism test by backtracking; intended for graphs up to ~12
/// vertices (product-construction sanity checks).
pub fn isomorphic(g: &GeneralGraph, h: &GeneralGraph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    // Map g-vertices in order, most-constrained (highest degree) first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_mapping(g, h, &order, 0, &mut mapping, &mut used)
}

fn extend_mapping(
    g: &GeneralGraph,
    h: &GeneralGraph,
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'candidates: for w in 0..h.vertex_count() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        // Adjacency with already-mapped vertices must match exactly.
        for &u in order[..depth].iter() {
            let adj_g = g.neighbors(v).binary_search(&u).is_ok();
            let adj_h = h.neighbors(w).binary_search(&mapping[u]).is_ok();
            if adj_g != adj_h {
                continue 'candidates;
            }
        }
        mapping[v] = w;
        used[w] = true;
        if extend_mapping(g, h, order, depth + 1, mapping, used) {
            return true;
        }
        mapping[v] = usize::MAX;
        used[w] = false;
    }
    false
}

/// Isomorphism for trees of any practical size, via canonical encodings
/// rooted at the tree center.
pub fn tree_isomorphic(g: &GeneralGraph, h: &GeneralGraph) -> bool {
    if g.vertex_count() != h.vertex_count() {
        return false;
    }
    let n = g.vertex_count();
    if g.edge_count() != n - 1 || h.edge_count() != n - 1 || !g.is_connected() || !h.is_connected()
    {
        return false;
    }
    let cg = tree_centers(g);
    let ch = tree_centers(h);
    if cg.len() != ch.len() {
        return false;
    }
    let code_g = cg.iter().map(|&c| encode_rooted(g, c)).min().unwrap();
    let code_h = ch.iter().map(|&c| encode_rooted(h, c)).min().unwrap();
    code_g == code_h
}

fn tree_centers(g: &GeneralGraph) -> Vec<usize> {
    let n = g.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &u in g.neighbors(v) {
                if deg[u] > 1 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

fn encode_rooted(g: &GeneralGraph, root: usize) -> String {
    fn rec(g: &GeneralGraph, v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| Some(u) != parent)
            .map(|&u| rec(g, u, Some(v)))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    rec(g, root, None)
}
