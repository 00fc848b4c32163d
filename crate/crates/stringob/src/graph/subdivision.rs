//! Barycentric subdivision `G*`: one vertex per original vertex, one per
//! original edge, and an edge `vα` for every incidence `v ∈ α`.

use super::Graph;

/// Where a `G*` vertex came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexOrigin {
    /// An original vertex, by id.
    Vertex(usize),
    /// An original edge, by edge index.
    Edge(usize),
}

/// The barycentric subdivision of a graph together with the maps back to
/// the original vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionMap {
    original: Graph,
    star: Graph,
    vertex_origin: Vec<VertexOrigin>,
    /// For each `G*` edge index, the incidence `(v, α)` it represents.
    edge_origin: Vec<(usize, usize)>,
}

impl SubdivisionMap {
    pub fn original(&self) -> &Graph {
        &self.original
    }

    pub fn star(&self) -> &Graph {
        &self.star
    }

    pub fn vertex_origin(&self, star_vertex: usize) -> VertexOrigin {
        self.vertex_origin[star_vertex]
    }

    /// `(v, α)` for a `G*` edge index: the original vertex and the original
    /// edge whose incidence the star edge subdivides.
    pub fn edge_origin(&self, star_edge: usize) -> (usize, usize) {
        self.edge_origin[star_edge]
    }

    /// The `G*` vertex representing original vertex `v`.
    pub fn vertex_node(&self, v: usize) -> usize {
        v
    }

    /// The `G*` vertex representing original edge `α`.
    pub fn edge_node(&self, alpha: usize) -> usize {
        self.original.vertex_count() + alpha
    }

    /// The two `G*` edge indices subdividing original edge `α`, ordered by
    /// their star-edge index.
    pub fn star_edges_of(&self, alpha: usize) -> (usize, usize) {
        let (a, b) = self.original.edge(alpha);
        let node = self.edge_node(alpha);
        let e1 = self
            .star
            .edge_index(a, node)
            .expect("star edge for low endpoint");
        let e2 = self
            .star
            .edge_index(b, node)
            .expect("star edge for high endpoint");
        (e1.min(e2), e1.max(e2))
    }

    /// The `G*` edge for the incidence `v ∈ α`.
    pub fn star_edge_of_incidence(&self, v: usize, alpha: usize) -> usize {
        self.star
            .edge_index(v, self.edge_node(alpha))
            .expect("incidence exists")
    }
}

pub fn barycentric_subdivision(g: &Graph) -> SubdivisionMap {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut edges = Vec::with_capacity(2 * m);
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        edges.push((a, n + e));
        edges.push((b, n + e));
    }
    let star = Graph::new(n + m, &edges).expect("subdivision is simple");
    let mut vertex_origin = Vec::with_capacity(n + m);
    for v in 0..n {
        vertex_origin.push(VertexOrigin::Vertex(v));
    }
    for e in 0..m {
        vertex_origin.push(VertexOrigin::Edge(e));
    }
    let mut edge_origin = Vec::with_capacity(2 * m);
    for &(x, y) in star.edges() {
        // Every star edge joins a vertex node (id < n) to an edge node.
        let (v, enode) = if x < n { (x, y) } else { (y, x) };
        debug_assert!(x < n && y >= n);
        edge_origin.push((v, enode - n));
    }
    SubdivisionMap {
        original: g.clone(),
        star,
        vertex_origin,
        edge_origin,
    }
}
