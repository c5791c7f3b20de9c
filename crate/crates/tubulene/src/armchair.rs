//! Combinatorial construction of the armchair tubulene graph `AT(n, p)`.
//!
//! `AT(n, p)` models an open-ended armchair nanotube with `n` vertical
//! columns of hexagons (so `n` must be even), each column `p` hexagons tall.
//! Vertices are classified as `v^k_{i,j}`: layer `i` in `0..=p`, kind `k`
//! in `{0, 1}` (kind 0 sits below kind 1 within a layer), ring index `j` in
//! `0..n`. Each layer's `2n` vertices form a ring; consecutive layers are
//! joined by `n` vertical edges. The two open ends are the rim cycles `C1`
//! (through `V^0_0 ∪ V^1_0`) and `C2` (through `V^0_p ∪ V^1_p`), each of
//! length `2n` and each carrying the graph's only degree-2 vertices.
//!
//! With `q` ranging over `0..n/2` and the ring index taken mod `n`, the
//! edge families are:
//!
//! - within each layer `i` in `0..=p`:
//!   - `v^0_{i,2q} ~ v^0_{i,2q+1}`
//!   - `v^1_{i,2q} ~ v^1_{i,2q+1}`
//!   - `v^1_{i,2q} ~ v^0_{i,2q+1}`
//!   - `v^1_{i,2q+1} ~ v^0_{i,2q+2}`
//! - between layers `i` and `i+1` for `i` in `0..p`:
//!   - `v^1_{i,2q} ~ v^0_{i+1,2q+1}`
//!   - `v^1_{i,2q+1} ~ v^0_{i+1,2q+2}`
//!
//! This yields `2n(p+1)` vertices and `3np + 2n` edges.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("n must be even, got {0}")]
    OddN(usize),
    #[error("n must be at least 2, got {0}")]
    NTooSmall(usize),
    #[error("p must be at least 1, got {0}")]
    PTooSmall(usize),
    #[error("layer {layer} out of range 0..={max}")]
    LayerOutOfRange { layer: usize, max: usize },
    #[error("kind must be 0 or 1, got {0}")]
    KindOutOfRange(usize),
}

/// Validated `(n, p)` parameters of an armchair tubulene.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TubuleneParams {
    n: usize,
    p: usize,
}

/// `(layer, kind, index)` coordinate of the vertex `v^kind_{layer, index}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub layer: usize,
    pub kind: usize,
    pub index: usize,
}

/// Which open end of the tube a rim cycle belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RimEnd {
    /// `C1`, through `V^0_0 ∪ V^1_0`; its degree-2 vertices are `V^0_0`.
    Bottom,
    /// `C2`, through `V^0_p ∪ V^1_p`; its degree-2 vertices are `V^1_p`.
    Top,
}

impl TubuleneParams {
    pub fn new(n: usize, p: usize) -> Result<Self, ParamError> {
        if n % 2 != 0 {
            return Err(ParamError::OddN(n));
        }
        if n < 2 {
            return Err(ParamError::NTooSmall(n));
        }
        if p < 1 {
            return Err(ParamError::PTooSmall(p));
        }
        Ok(TubuleneParams { n, p })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.n * (self.p + 1)
    }

    pub fn edge_count(&self) -> usize {
        3 * self.n * self.p + 2 * self.n
    }

    /// Canonical integer id: `layer * 2n + kind * n + index`, a bijection
    /// onto `0..vertex_count`. Panics on a coordinate outside the tube.
    pub fn id_of(&self, v: VertexId) -> usize {
        assert!(
            v.layer <= self.p && v.kind <= 1 && v.index < self.n,
            "vertex {v:?} outside AT({}, {})",
            self.n,
            self.p
        );
        v.layer * 2 * self.n + v.kind * self.n + v.index
    }

    /// Inverse of [`id_of`](Self::id_of). Panics on an out-of-range id.
    pub fn vertex_of(&self, id: usize) -> VertexId {
        assert!(id < self.vertex_count(), "id {id} out of range");
        VertexId {
            layer: id / (2 * self.n),
            kind: (id / self.n) % 2,
            index: id % self.n,
        }
    }

    /// Builds the `AT(n, p)` graph over the canonical id encoding.
    pub fn build(&self) -> Graph {
        let n = self.n;
        let mut edges = Vec::with_capacity(self.edge_count());
        let mut add = |a: VertexId, b: VertexId| edges.push((self.id_of(a), self.id_of(b)));
        let v = |layer, kind, index| VertexId {
            layer,
            kind,
            index: index % n,
        };
        for i in 0..=self.p {
            for q in 0..n / 2 {
                let (a, b) = (2 * q, 2 * q + 1);
                add(v(i, 0, a), v(i, 0, b));
                add(v(i, 1, a), v(i, 1, b));
                add(v(i, 1, a), v(i, 0, b));
                add(v(i, 1, b), v(i, 0, b + 1));
                if i < self.p {
                    add(v(i, 1, a), v(i + 1, 0, b));
                    add(v(i, 1, b), v(i + 1, 0, b + 1));
                }
            }
        }
        Graph::from_edges(self.vertex_count(), &edges)
            .expect("armchair construction yields a valid connected graph")
    }

    /// The rim cycle at the chosen end, in cyclic adjacency order starting
    /// at `v^0_{i,0}`. The kind pattern along the cycle is `0,0,1,1`
    /// repeating and the length is `2n`.
    pub fn rim_cycle(&self, end: RimEnd) -> Vec<VertexId> {
        let layer = match end {
            RimEnd::Bottom => 0,
            RimEnd::Top => self.p,
        };
        let mut cycle = Vec::with_capacity(2 * self.n);
        for q in 0..self.n / 2 {
            for (kind, offset) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                cycle.push(VertexId {
                    layer,
                    kind,
                    index: 2 * q + offset,
                });
            }
        }
        cycle
    }

    /// `V^kind_layer`: the `n` vertices of the given kind in the given
    /// layer, in ring-index order.
    pub fn layer_set(&self, layer: usize, kind: usize) -> Result<Vec<VertexId>, ParamError> {
        if layer > self.p {
            return Err(ParamError::LayerOutOfRange { layer, max: self.p });
        }
        if kind > 1 {
            return Err(ParamError::KindOutOfRange(kind));
        }
        Ok((0..self.n)
            .map(|index| VertexId { layer, kind, index })
            .collect())
    }

    /// Canonical ids of `V^kind_layer`, ascending.
    pub fn layer_ids(&self, layer: usize, kind: usize) -> Result<Vec<usize>, ParamError> {
        Ok(self
            .layer_set(layer, kind)?
            .into_iter()
            .map(|v| self.id_of(v))
            .collect())
    }
}
