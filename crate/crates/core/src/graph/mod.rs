//! Small simple graphs stored as per-vertex neighbor bitsets.
//!
//! Every vertex set is a [`VertexSet`] (one `u64`), so graphs are capped at
//! [`MAX_VERTICES`] vertices. The game solver, the residual reduction and the
//! closed-form evaluators all work on this representation.

mod domination;
pub mod enumerate;
pub mod generators;
mod isomorphism;
mod matching;
mod vertex_set;

use std::fmt;
use std::str::FromStr;

pub use domination::{domination_stats, domination_stats_capped, gamma_sets, DomStats};
pub use generators::{generate, Family};
pub use isomorphism::{are_isomorphic, MAX_ISOMORPHISM_VERTICES};
pub use matching::{has_perfect_matching, maximum_matching, perfect_matchings};
pub use vertex_set::VertexSet;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has {n} vertices, this operation is capped at {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}

/// A finite simple graph on the vertex set `0..n`.
///
/// Labels are optional metadata (landmarks such as `x1` or `u` placed by the
/// generators). They take no part in equality or isomorphism.
#[derive(Clone, Default)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Vec<Option<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            labels: vec![None; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels[v] = Some(label.into());
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    /// Finds the vertex carrying `label`.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    /// Resolves a vertex token: a label if one matches, otherwise an index.
    pub fn resolve_vertex(&self, token: &str) -> Result<usize, GraphError> {
        if let Some(v) = self.vertex_by_label(token) {
            return Ok(v);
        }
        let v: usize = token.parse().map_err(|_| GraphError::Parse {
            line: 0,
            msg: format!("unknown vertex `{token}`"),
        })?;
        self.check_vertex(v)?;
        Ok(v)
    }

    /// Display name of a vertex: its label, or `x{v+1}` when unlabeled.
    pub fn vertex_name(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => format!("x{}", v + 1),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// `N[v]`, the vertex together with its neighbors.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    #[inline]
    pub(crate) fn closed(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// All closed neighborhoods, indexed by vertex.
    pub fn closed_neighborhoods(&self) -> Vec<VertexSet> {
        (0..self.n).map(|v| self.closed(v)).collect()
    }

    /// `N[u, v] = N[u] ∩ N[v]`.
    pub fn common_closed_neighborhood(&self, u: usize, v: usize) -> VertexSet {
        self.closed(u) & self.closed(v)
    }

    /// Union of closed neighborhoods of `set`.
    pub fn dominated_by(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.closed(v))
    }

    pub fn is_dominating(&self, set: VertexSet) -> bool {
        self.dominated_by(set & self.vertices()) == self.vertices()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0) == self.vertices()
    }

    /// Vertices reachable from `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.dominated_by(frontier) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Subgraph induced by `keep`, renumbered in increasing order. The second
    /// component maps new indices back to original ones.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let keep = keep & self.vertices();
        let map: Vec<usize> = keep.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph {
            n: map.len(),
            adj: vec![VertexSet::EMPTY; map.len()],
            labels: map.iter().map(|&v| self.labels[v].clone()).collect(),
        };
        for (i, &v) in map.iter().enumerate() {
            for w in (self.adj[v] & keep).iter() {
                g.adj[i].insert(index[w]);
            }
        }
        (g, map)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        g.labels = self.labels.iter().chain(other.labels.iter()).cloned().collect();
        Ok(g)
    }

    /// Graph with vertices renamed by `perm` (vertex `v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: vec![VertexSet::EMPTY; self.n],
            labels: vec![None; self.n],
        };
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        for (v, label) in self.labels.iter().enumerate() {
            g.labels[perm[v]] = label.clone();
        }
        g
    }

    /// Serializes to the edge-list text format read by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses the edge-list format: optional `#` comment lines, a header `n m`,
/// then `m` lines `u v`. Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        msg: "missing header `n m`".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;
    if n > MAX_VERTICES {
        return Err(GraphError::Parse {
            line: header_line,
            msg: GraphError::TooManyVertices(n).to_string(),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut seen = 0;
    for (line, text) in lines {
        if seen == m {
            return Err(GraphError::Parse {
                line,
                msg: format!("more than the declared {m} edges"),
            });
        }
        let [u, v] = parse_pair(line, text)?;
        g.add_edge(u, v).map_err(|e| GraphError::Parse {
            line,
            msg: e.to_string(),
        })?;
        seen += 1;
    }
    if seen != m {
        return Err(GraphError::Parse {
            line: text.lines().count().max(1),
            msg: format!("expected {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], GraphError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::Parse {
            line,
            msg: format!("expected two integers, got `{text}`"),
        });
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| GraphError::Parse {
            line,
            msg: format!("`{field}` is not a non-negative integer"),
        })?;
    }
    Ok(out)
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_edge_list(s)
    }
}
