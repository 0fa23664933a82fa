//! Immutable simple undirected graphs and the constructions used to build
//! game instances: paths, cycles, powers, Cartesian products, joins,
//! danglings, bridgings, named families and abelian Cayley graphs.
//!
//! Vertex labels are always `0..n`. Every constructor fixes its labeling
//! (row-major for products, concatenation order for joins), so two runs of
//! the same construction produce identical adjacency lists.

mod cayley;
mod construct;
mod edgelist;
mod involution;
mod named;

pub use cayley::{cayley_abelian, GroupSpec};
pub use construct::{
    bridge, dangle, even_caterpillar, grid, hypercube, join, kneser, kneser_index, star,
    sunlet, Attached, Joined,
};
pub use edgelist::{read_edge_list, write_edge_list};
pub use involution::{
    find_involution, find_involution_with_cap, Involution, InvolutionError,
    DEFAULT_INVOLUTION_VERTEX_CAP,
};
pub use named::{bridged_stars, dangled_stars, named_graph, torus, NAMED_FAMILIES};

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("edge list parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A finite simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    name: Option<String>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            name: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::InvalidVertex { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adjacency[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adjacency[u].insert(pos, v);
                let pos = self.adjacency[v].binary_search(&u).unwrap_err();
                self.adjacency[v].insert(pos, u);
                Ok(())
            }
        }
    }

    /// Inserts an edge unless it is already present.
    pub(crate) fn add_edge_if_absent(&mut self, u: usize, v: usize) {
        if u != v && !self.has_edge(u, v) {
            self.add_edge(u, v).expect("endpoints checked by caller");
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|adj| adj.binary_search(&v).is_ok())
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, adj) in self.adjacency.iter().enumerate() {
            out.extend(adj.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n()).map(|v| self.bfs(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|adj| adj.iter().map(|&v| v + offset).collect()),
        );
        Graph {
            adjacency,
            name: None,
        }
    }

    /// Relabels vertex `v` as `map[v]`. `map` must be a permutation.
    pub fn relabel(&self, map: &[usize]) -> Graph {
        let mut adjacency = vec![Vec::new(); self.n()];
        for (u, adj) in self.adjacency.iter().enumerate() {
            let mut mapped: Vec<usize> = adj.iter().map(|&v| map[v]).collect();
            mapped.sort_unstable();
            adjacency[map[u]] = mapped;
        }
        Graph {
            adjacency,
            name: self.name.clone(),
        }
    }

    /// Whether `perm` maps edges onto edges (and is a bijection).
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.n() {
            return false;
        }
        let mut seen = vec![false; self.n()];
        for &p in perm {
            if p >= self.n() || std::mem::replace(&mut seen[p], true) {
                return false;
            }
        }
        self.edges()
            .into_iter()
            .all(|(u, v)| self.has_edge(perm[u], perm[v]))
    }
}

/// Hop count between two vertices, `Ok(None)` when they lie in different
/// components.
pub fn distance(g: &Graph, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(g.bfs(u)[v])
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("path needs n >= 1".into()));
    }
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i)?;
    }
    Ok(g.with_name(format!("P{n}")))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
    }
    Ok(g.with_name(format!("C{n}")))
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g.with_name(format!("K{n}"))
}

/// Same vertex set, `x ~ y` whenever `1 <= dist(x, y) <= d`.
pub fn power(g: &Graph, d: usize) -> Result<Graph, GraphError> {
    if d == 0 {
        return Err(GraphError::InvalidParameter("power needs d >= 1".into()));
    }
    let mut out = Graph::empty(g.n());
    for u in 0..g.n() {
        for (v, dist) in g.bfs(u).into_iter().enumerate() {
            if v > u && dist.is_some_and(|x| x <= d) {
                out.add_edge(u, v)?;
            }
        }
    }
    out.name = g.name.as_ref().map(|s| format!("{s}^({d})"));
    Ok(out)
}

/// Cartesian product; vertex `(u, v)` is flattened to `u * |V2| + v`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(GraphError::InvalidParameter(
            "cartesian product of an empty graph".into(),
        ));
    }
    let n2 = g2.n();
    let mut out = Graph::empty(g1.n() * n2);
    for u in 0..g1.n() {
        for (v1, v2) in g2.edges() {
            out.add_edge(u * n2 + v1, u * n2 + v2)?;
        }
    }
    for (u1, u2) in g1.edges() {
        for v in 0..n2 {
            out.add_edge(u1 * n2 + v, u2 * n2 + v)?;
        }
    }
    if let (Some(a), Some(b)) = (g1.name(), g2.name()) {
        out.name = Some(format!("{a}x{b}"));
    }
    Ok(out)
}
