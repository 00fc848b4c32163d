//! Named graph generators.
//!
//! The `heawood`, `gp` and `c_cbar(6)` edge lists are shipped as data files
//! transcribed from their published circular drawings, with every drawn dot
//! a vertex (including the degree-2 subdivision dots on the outer rings).
//! `c_cbar(n)` for general n follows the same rule: an inner complement of
//! an n-cycle, and an outer n-cycle with every cycle edge and every spoke
//! subdivided once.

use super::{Graph, GraphError};

const HEAWOOD_JSON: &str = include_str!("../../data/heawood.json");
const GP_JSON: &str = include_str!("../../data/gp.json");

#[derive(Clone, Debug)]
pub enum Family {
    Heawood,
    Gp,
    CCbar(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Subdivide(Graph, usize),
}

pub fn generate(family: &Family) -> Result<Graph, GraphError> {
    match family {
        Family::Heawood => Ok(from_data(HEAWOOD_JSON)),
        Family::Gp => Ok(from_data(GP_JSON)),
        Family::CCbar(n) => c_cbar(*n),
        Family::Complete(n) => Ok(complete(*n)),
        Family::CompleteBipartite(m, n) => Ok(complete_bipartite(*m, *n)),
        Family::Subdivide(g, k) => subdivide(g, *k),
    }
}

fn from_data(json: &str) -> Graph {
    Graph::from_json(json).expect("shipped data file is valid")
}

pub fn heawood() -> Graph {
    from_data(HEAWOOD_JSON)
}

pub fn gp() -> Graph {
    from_data(GP_JSON)
}

/// `C * C̄_n`: the complement of an n-cycle joined to an n-cycle, with the
/// outer cycle edges and the spokes each subdivided once. Vertex ids:
/// inner `0..n`, outer `n..2n`, outer-cycle midpoints `2n..3n` (midpoint i
/// between outer i and outer i+1), spoke midpoints `3n..4n`.
pub fn c_cbar(n: usize) -> Result<Graph, GraphError> {
    if n < 5 {
        return Err(GraphError::CCbarTooSmall(n));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let d = j - i;
            if d != 1 && d != n - 1 {
                edges.push((i, j));
            }
        }
    }
    for i in 0..n {
        let w = n + i;
        let w_next = n + (i + 1) % n;
        let z = 2 * n + i;
        let p = 3 * n + i;
        edges.push((w, z));
        edges.push((z, w_next));
        edges.push((i, p));
        edges.push((p, w));
    }
    Graph::new(4 * n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((i, j));
        }
    }
    Graph::new(n, &edges).expect("complete graph is simple")
}

/// Parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            edges.push((i, m + j));
        }
    }
    Graph::new(m + n, &edges).expect("complete bipartite graph is simple")
}

/// Replaces every edge by a path with `k ≥ 1` interior vertices. Interior
/// vertices of the edge with index `e` are `n + e·k .. n + (e+1)·k`, in
/// order from the low endpoint to the high endpoint.
pub fn subdivide(g: &Graph, k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::SubdivideTooFew(0));
    }
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let base = n + e * k;
        let mut prev = a;
        for j in 0..k {
            edges.push((prev, base + j));
            prev = base + j;
        }
        edges.push((prev, b));
    }
    Graph::new(n + g.edge_count() * k, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    const C_CBAR6_JSON: &str = include_str!("../../data/c_cbar6.json");

    #[test]
    fn heawood_is_cubic_with_21_edges() {
        let g = heawood();
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edge_count(), 21);
        for v in 0..14 {
            assert_eq!(g.degree(v), 3);
        }
    }

    #[test]
    fn figure_transcription_counts() {
        let g = gp();
        assert_eq!(g.vertex_count(), 18);
        assert_eq!(g.edge_count(), 23);
        let c = c_cbar(6).unwrap();
        assert_eq!(c.vertex_count(), 24);
        assert_eq!(c.edge_count(), 33);
    }

    #[test]
    fn c_cbar6_rule_matches_shipped_data() {
        assert_eq!(c_cbar(6).unwrap(), from_data(C_CBAR6_JSON));
    }

    #[test]
    fn c_cbar_rejects_small_n() {
        assert_eq!(c_cbar(4), Err(GraphError::CCbarTooSmall(4)));
    }

    #[test]
    fn complete_counts() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
    }

    #[test]
    fn subdivision_structure() {
        let k4 = complete(4);
        let s = subdivide(&k4, 1).unwrap();
        assert_eq!(s.vertex_count(), 4 + 6);
        assert_eq!(s.edge_count(), 12);
        // Every interior vertex has degree 2, originals keep their degree.
        for v in 0..4 {
            assert_eq!(s.degree(v), 3);
        }
        for v in 4..10 {
            assert_eq!(s.degree(v), 2);
        }
        assert!(subdivide(&k4, 0).is_err());
    }
}
