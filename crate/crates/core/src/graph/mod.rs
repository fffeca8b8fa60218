//! Simple undirected graphs, shortest-path metrics, unicyclic structure,
//! extremal families and exhaustive enumeration.

mod canon;
mod enumerate;
pub mod families;
pub mod io;
mod metric;
mod unicyclic;

pub use canon::{
    canonical_certificate, canonical_certificate_with_limit, marked_certificate, Certificate,
    DEFAULT_CANON_LIMIT, MAX_CANON_LIMIT,
};
pub use enumerate::{
    enumerate_trees, enumerate_unicyclic, enumerate_unicyclic_with_limit, labeled_trees,
    EnumerationLimit, UnicyclicStream, DEFAULT_ENUMERATION_LIMIT,
};
pub use metric::{
    distance_matrix, eccentricity, transmission, weighted_transmission, wiener_index,
    DistanceMatrix,
};
pub use unicyclic::{unicyclic_decompose, UnicyclicDecomposition};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a connected simple graph.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges, true)
    }

    /// Builds a simple graph, optionally rejecting disconnected input.
    pub fn build(n: usize, edges: &[(usize, usize)], require_connected: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            normalized.push((u.min(v), u.max(v)));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        normalized.sort_unstable();
        let g = Graph {
            n,
            edges: normalized,
            adjacency,
        };
        if require_connected && !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adjacency[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adjacency[x].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adjacency[x].binary_search(&y).is_ok()
    }

    pub fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.n,
            })
        }
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n && self.is_connected()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.m() == self.n && self.is_connected()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Same graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::build(self.n, &edges, false)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::build(self.n, &edges, false)
    }

    /// Adjacency as one bitmask per vertex. Requires `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adjacency
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &w| acc | (1 << w)))
            .collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_triangle_and_edge() {
        let c3 = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.m(), 3);
        assert_eq!(c3.degrees(), vec![2, 2, 2]);
        assert_eq!(c3.edges(), &[(0, 1), (0, 2), (1, 2)]);
        let p2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(p2.degrees(), vec![1, 1]);
        assert!(p2.is_tree());
        assert!(c3.is_unicyclic());
    }

    #[test]
    fn rejects_invalid_input() {
        assert_eq!(
            Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 1)]),
            Err(Error::SelfLoop(1))
        );
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0), (1, 2)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(4, &[(0, 1), (2, 3)]), Err(Error::Disconnected));
        assert!(Graph::build(4, &[(0, 1), (2, 3)], false).is_ok());
        assert_eq!(Graph::new(0, &[]), Err(Error::EmptyGraph));
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let total: usize = (0..g.n()).map(|x| g.degree(x)).sum();
        assert_eq!(total, 2 * g.m());
        for x in 0..g.n() {
            assert_eq!(g.degree(x), g.neighbors(x).len());
        }
    }
}
