//! Undirected simple graphs with BFS distances and exact distance sums.
//!
//! All index computations in this crate reduce to shortest-path distances in
//! a connected graph, so this module is the oracle substrate: single-source
//! BFS, sums of distances to a vertex set, the Wiener index, and the Wiener
//! index of a subset (distances taken in the full graph). Everything is
//! exact integer arithmetic.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex id {id} out of range for graph with {count} vertices")]
    VertexOutOfRange { id: usize, count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex set contains duplicate id {0}")]
    DuplicateInSet(usize),
}

/// Connected undirected simple graph over vertex ids `0..vertex_count`.
///
/// Neighbor lists are kept sorted, so iteration order (and therefore every
/// serialized artifact derived from a `Graph`) is deterministic. Symmetry,
/// simplicity, and connectivity are validated once at construction; all
/// operations rely on them afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Exact hop counts from a single source to every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list, inserting each edge in both
    /// directions. Rejects out-of-range ids, self-loops, duplicate edges,
    /// and disconnected results.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(a, b) in edges {
            for id in [a, b] {
                if id >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        id,
                        count: vertex_count,
                    });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        let g = Graph {
            adjacency,
            edge_count: edges.len(),
        };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list of `u`. Panics on an out-of-range id.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges as `(a, b)` pairs with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&w| w > u).map(move |&w| (u, w)))
    }

    fn check_vertex(&self, id: usize) -> Result<(), GraphError> {
        if id < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                id,
                count: self.vertex_count(),
            })
        }
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }

    /// Single-source BFS; `dist[t]` is the exact shortest-path hop count.
    pub fn bfs_distances(&self, source: usize) -> Result<DistanceRow, GraphError> {
        self.check_vertex(source)?;
        const UNSEEN: u64 = u64::MAX;
        let mut dist = vec![UNSEEN; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for &w in &self.adjacency[u] {
                if dist[w] == UNSEEN {
                    dist[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        debug_assert!(dist.iter().all(|&d| d != UNSEEN));
        Ok(DistanceRow { source, dist })
    }

    /// `d(x, S) = sum over y in S of d(x, y)`. The set must contain each id
    /// at most once; `x` itself may be a member (its term is 0).
    pub fn distance_sum_to_set(&self, x: usize, set: &[usize]) -> Result<u64, GraphError> {
        self.validate_set(set)?;
        let row = self.bfs_distances(x)?;
        Ok(set.iter().map(|&y| row.dist[y]).sum())
    }

    /// `W(G)`: half the sum of all pairwise distances.
    pub fn wiener_index(&self) -> u64 {
        let total: u64 = (0..self.vertex_count())
            .map(|u| {
                let row = self.bfs_distances(u).expect("valid source");
                row.dist.iter().sum::<u64>()
            })
            .sum();
        total / 2
    }

    /// `W(S)`: half the sum of pairwise distances within `set`, distances
    /// measured in the full graph.
    pub fn wiener_of_subset(&self, set: &[usize]) -> Result<u64, GraphError> {
        self.validate_set(set)?;
        let mut total = 0u64;
        for &u in set {
            let row = self.bfs_distances(u)?;
            total += set.iter().map(|&v| row.dist[v]).sum::<u64>();
        }
        Ok(total / 2)
    }

    fn validate_set(&self, set: &[usize]) -> Result<(), GraphError> {
        let mut seen = vec![false; self.vertex_count()];
        for &id in set {
            self.check_vertex(id)?;
            if seen[id] {
                return Err(GraphError::DuplicateInSet(id));
            }
            seen[id] = true;
        }
        Ok(())
    }
}
