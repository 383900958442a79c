//! Simple undirected graphs with sorted adjacency lists, plus the standard
//! families (paths, cycles, complete and complete multipartite graphs) used
//! throughout the crate.
//!
//! Vertices are dense integers `0..n` internally; external formats (DIMACS,
//! coloring files) are 1-based. Graphs are immutable after construction and
//! safely shareable across threads.

use thiserror::Error;

/// Errors raised by graph construction and coloring analysis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    AssignmentSizeMismatch { expected: usize, got: usize },
    #[error("color {color} outside the declared range 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },
}

/// An immutable simple undirected graph: no self-loops, no duplicate edges,
/// symmetric adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse to one;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj, name: None })
    }

    /// Attaches a display name (used in DIMACS comments and reports).
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum vertex degree; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.n >= 1 && self.adj.iter().all(|l| l.len() == self.n - 1)
    }

    pub fn is_odd_cycle(&self) -> bool {
        self.n >= 3
            && self.n % 2 == 1
            && self.adj.iter().all(|l| l.len() == 2)
            && self.is_connected()
    }

    /// Path `P_m` on `m >= 1` vertices in traversal order.
    pub fn path(m: usize) -> Result<Self, GraphError> {
        if m < 1 {
            return Err(GraphError::InvalidParameter("path needs m >= 1".into()));
        }
        let edges: Vec<_> = (0..m.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Ok(Graph::new(m, &edges)?.with_name(format!("P{m}")))
    }

    /// Cycle `C_m` on `m >= 3` vertices in traversal order.
    pub fn cycle(m: usize) -> Result<Self, GraphError> {
        if m < 3 {
            return Err(GraphError::InvalidParameter("cycle needs m >= 3".into()));
        }
        let mut edges: Vec<_> = (0..m - 1).map(|i| (i, i + 1)).collect();
        edges.push((m - 1, 0));
        Ok(Graph::new(m, &edges)?.with_name(format!("C{m}")))
    }

    /// Complete graph `K_m` on `m >= 1` vertices.
    pub fn complete(m: usize) -> Result<Self, GraphError> {
        if m < 1 {
            return Err(GraphError::InvalidParameter("complete needs m >= 1".into()));
        }
        let mut edges = Vec::with_capacity(m * (m - 1) / 2);
        for u in 0..m {
            for v in u + 1..m {
                edges.push((u, v));
            }
        }
        Ok(Graph::new(m, &edges)?.with_name(format!("K{m}")))
    }

    /// Complete multipartite graph with the given part sizes; parts occupy
    /// consecutive vertex ranges in the given order.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Self, GraphError> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(GraphError::InvalidParameter(
                "multipartite needs at least one part, all sizes >= 1".into(),
            ));
        }
        let n: usize = sizes.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &s) in sizes.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, s));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        let label = sizes
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",");
        Ok(Graph::new(n, &edges)?.with_name(format!("K{label}")))
    }

    /// Vertex ranges of the canonical multipartite numbering, handy when a
    /// multipartite graph doubles as an independent-set partition.
    pub fn consecutive_parts(sizes: &[usize]) -> Vec<Vec<usize>> {
        let mut parts = Vec::with_capacity(sizes.len());
        let mut next = 0;
        for &s in sizes {
            parts.push((next..next + s).collect());
            next += s;
        }
        parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_edges() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(2), 0);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn rejects_self_loop_and_out_of_range() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn families() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!((c4.n(), c4.edge_count()), (4, 4));
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        assert_eq!((k33.n(), k33.edge_count()), (6, 9));
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(0).is_err());
        assert!(Graph::complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::new(5, &[(3, 1), (0, 4), (1, 0)]).unwrap();
        for u in 0..5 {
            for &v in g.neighbors(u) {
                assert!(g.has_edge(v, u));
            }
            assert!(g.neighbors(u).windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn classify_shapes() {
        assert!(Graph::complete(4).unwrap().is_complete());
        assert!(Graph::cycle(5).unwrap().is_odd_cycle());
        assert!(!Graph::cycle(6).unwrap().is_odd_cycle());
        assert!(!Graph::path(4).unwrap().is_odd_cycle());
        assert!(Graph::path(4).unwrap().is_connected());
        assert!(!Graph::new(3, &[(0, 1)]).unwrap().is_connected());
    }
}
