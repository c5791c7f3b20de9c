//! Graph serialization: a JSON schema carrying the vertex classification
//! and an edge-list text format. Both are deterministic byte-for-byte for
//! fixed parameters.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::armchair::TubuleneParams;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SerializeError {
    #[error("vertex_count {got} does not match n={n}, p={p}")]
    VertexCountMismatch { got: usize, n: usize, p: usize },
    #[error("vertex entry {0} is inconsistent with the canonical id encoding")]
    BadVertexEntry(usize),
    #[error("invalid parameters: {0}")]
    BadParams(#[from] crate::armchair::ParamError),
    #[error("invalid edge list: {0}")]
    BadEdges(#[from] GraphError),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexJson {
    pub id: usize,
    pub layer: usize,
    pub kind: usize,
    pub index: usize,
}

/// Top-level graph document. `edges` holds id-sorted pairs in
/// lexicographic order; `vertices` carries the `(layer, kind, index)`
/// triple alongside each canonical id for human readability.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub p: usize,
    pub vertex_count: usize,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(params: &TubuleneParams, g: &Graph) -> Self {
        let vertices = (0..g.vertex_count())
            .map(|id| {
                let v = params.vertex_of(id);
                VertexJson {
                    id,
                    layer: v.layer,
                    kind: v.kind,
                    index: v.index,
                }
            })
            .collect();
        let edges = g.edges().map(|(a, b)| [a, b]).collect();
        GraphJson {
            n: params.n(),
            p: params.p(),
            vertex_count: g.vertex_count(),
            vertices,
            edges,
        }
    }

    /// Reconstructs the parameters and adjacency structure, validating the
    /// document against the canonical id encoding.
    pub fn to_graph(&self) -> Result<(TubuleneParams, Graph), SerializeError> {
        let params = TubuleneParams::new(self.n, self.p)?;
        if self.vertex_count != params.vertex_count() || self.vertices.len() != self.vertex_count {
            return Err(SerializeError::VertexCountMismatch {
                got: self.vertex_count,
                n: self.n,
                p: self.p,
            });
        }
        for (pos, entry) in self.vertices.iter().enumerate() {
            let expected = params.vertex_of(pos);
            if entry.id != pos
                || entry.layer != expected.layer
                || entry.kind != expected.kind
                || entry.index != expected.index
            {
                return Err(SerializeError::BadVertexEntry(pos));
            }
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[a, b]| (a, b)).collect();
        let graph = Graph::from_edges(self.vertex_count, &edges)?;
        Ok((params, graph))
    }
}

/// One `a b` line per edge with `a < b`, lexicographically sorted.
pub fn edge_list_text(g: &Graph) -> String {
    let mut out = String::new();
    for (a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
