//! Abstract simple graphs with canonical edge indexing.
//!
//! Vertices are dense ids `0..n`. Edges are unordered pairs stored
//! low–high and sorted lexicographically, so an edge index is stable and
//! every matrix built over edges or edge pairs is reproducible.

pub mod generate;
mod pairs;
mod subdivision;

pub use generate::{Family, generate};
pub use pairs::{EdgePairSet, PairKind, pair_set, pair_set_of_subdivision};
pub use subdivision::{SubdivisionMap, VertexOrigin, barycentric_subdivision};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("c_cbar requires n ≥ 5, got {0}")]
    CCbarTooSmall(usize),
    #[error("subdivision requires k ≥ 1, got {0}")]
    SubdivideTooFew(usize),
}

/// An abstract simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>, // edge indices at each vertex, ascending
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut canon = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        for w in canon.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut incident = vec![Vec::new(); n];
        for (i, &(a, b)) in canon.iter().enumerate() {
            incident[a].push(i);
            incident[b].push(i);
        }
        Ok(Graph {
            n,
            edges: canon,
            incident,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Edge indices incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    /// Does edge `e` contain vertex `v`?
    pub fn edge_contains(&self, e: usize, v: usize) -> bool {
        let (a, b) = self.edges[e];
        a == v || b == v
    }

    /// Are edges `e` and `f` disjoint as vertex sets?
    pub fn edges_disjoint(&self, e: usize, f: usize) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a != c && a != d && b != c && b != d
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Graph, String> {
        let gj: GraphJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
        Graph::new(gj.n, &gj.edges).map_err(|e| e.to_string())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.clone(),
        }
    }
}
