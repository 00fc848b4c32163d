//! Piecewise-linear drawings of graphs in the plane with exact rational
//! coordinates.
//!
//! A drawing maps each vertex to a point and each edge to a polyline from
//! the low endpoint's point to the high endpoint's point. General position
//! is a checkable property ([`Drawing::validate_generic`]), not an
//! assumption: crossing parities are only computed on drawings that pass.

mod finger;
mod layout;
mod subdivide;
mod svg;

pub use finger::apply_finger_move;
pub use layout::{
    c_cbar_figure_layout, gp_figure_layout, layout_convex_order, layout_moment_curve,
    layout_random,
};
pub use subdivide::subdivide_drawing;
pub use svg::{SvgOptions, export_svg};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{Point, SegMeet, on_segment, proper_crossing, segment_meet};
use crate::gf2::BitVec;
use crate::graph::{EdgePairSet, Graph};

#[derive(Debug, Error)]
pub enum DrawingError {
    #[error("drawing structure invalid: {0}")]
    Structure(String),
    #[error("drawing is not in general position ({} violations, first: {first})", .violations.len(), first = .violations[0])]
    NotGeneric { violations: Vec<Violation> },
    #[error("pair set does not index this drawing's graph")]
    GraphMismatch,
    #[error("layout order is not a permutation of the vertices")]
    NotAPermutation,
    #[error("finger move vertex {vertex} lies on edge {edge:?}")]
    VertexOnEdge { vertex: usize, edge: (usize, usize) },
    #[error("finger move rerouting failed after {attempts} attempts")]
    RerouteFailed { attempts: usize },
    #[error("random layout failed to reach general position after {attempts} attempts")]
    LayoutFailed { attempts: usize },
    #[error("subdivision map does not match the drawn graph")]
    SubdivisionMismatch,
}

/// A feature of a drawing: a vertex point or an interior bend of an edge
/// polyline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Feature {
    Vertex(usize),
    Bend { edge: usize, index: usize },
}

impl std::fmt::Display for Feature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Feature::Vertex(v) => write!(f, "vertex {v}"),
            Feature::Bend { edge, index } => write!(f, "bend {index} of edge {edge}"),
        }
    }
}

/// A reason a drawing fails general position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ZeroLengthSegment { edge: usize, segment: usize },
    CoincidentFeatures(Feature, Feature),
    PointOnSegmentInterior { feature: Feature, edge: usize, segment: usize },
    OverlappingSegments { a: (usize, usize), b: (usize, usize) },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::ZeroLengthSegment { edge, segment } => {
                write!(f, "zero-length segment {segment} of edge {edge}")
            }
            Violation::CoincidentFeatures(a, b) => write!(f, "{a} coincides with {b}"),
            Violation::PointOnSegmentInterior { feature, edge, segment } => {
                write!(f, "{feature} lies inside segment {segment} of edge {edge}")
            }
            Violation::OverlappingSegments { a, b } => write!(
                f,
                "segment {} of edge {} overlaps segment {} of edge {}",
                a.1, a.0, b.1, b.0
            ),
        }
    }
}

/// A PL drawing: one point per vertex, one polyline per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    graph: Graph,
    vertex_pos: Vec<Point>,
    edge_paths: Vec<Vec<Point>>,
}

impl Drawing {
    /// Builds a drawing, checking only structure: every edge polyline has
    /// at least two points and starts/ends at its endpoints' positions.
    /// General position is checked separately by [`validate_generic`],
    /// because the string-representation constructions legitimately
    /// produce non-generic drawings.
    ///
    /// [`validate_generic`]: Drawing::validate_generic
    pub fn new(
        graph: Graph,
        vertex_pos: Vec<Point>,
        edge_paths: Vec<Vec<Point>>,
    ) -> Result<Drawing, DrawingError> {
        if vertex_pos.len() != graph.vertex_count() {
            return Err(DrawingError::Structure(format!(
                "{} positions for {} vertices",
                vertex_pos.len(),
                graph.vertex_count()
            )));
        }
        if edge_paths.len() != graph.edge_count() {
            return Err(DrawingError::Structure(format!(
                "{} paths for {} edges",
                edge_paths.len(),
                graph.edge_count()
            )));
        }
        for (e, path) in edge_paths.iter().enumerate() {
            if path.len() < 2 {
                return Err(DrawingError::Structure(format!(
                    "edge {e} path has {} points",
                    path.len()
                )));
            }
            let (lo, hi) = graph.edge(e);
            if path[0] != vertex_pos[lo] || path[path.len() - 1] != vertex_pos[hi] {
                return Err(DrawingError::Structure(format!(
                    "edge {e} path does not join its endpoints"
                )));
            }
        }
        Ok(Drawing {
            graph,
            vertex_pos,
            edge_paths,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_pos(&self, v: usize) -> &Point {
        &self.vertex_pos[v]
    }

    pub fn vertex_positions(&self) -> &[Point] {
        &self.vertex_pos
    }

    pub fn edge_path(&self, e: usize) -> &[Point] {
        &self.edge_paths[e]
    }

    pub fn edge_paths(&self) -> &[Vec<Point>] {
        &self.edge_paths
    }

    fn features(&self) -> Vec<(Feature, &Point)> {
        let mut out: Vec<(Feature, &Point)> = Vec::new();
        for (v, p) in self.vertex_pos.iter().enumerate() {
            out.push((Feature::Vertex(v), p));
        }
        for (e, path) in self.edge_paths.iter().enumerate() {
            for (i, p) in path.iter().enumerate().skip(1).take(path.len() - 2) {
                out.push((Feature::Bend { edge: e, index: i }, p));
            }
        }
        out
    }

    /// Checks general position. An empty result means the drawing is
    /// generic: all feature points pairwise distinct, no feature interior
    /// to a segment it does not terminate, no zero-length segments, and
    /// any two segments of distinct edges (or non-adjacent segments of one
    /// edge) meet in at most one point — a shared endpoint or a proper
    /// transversal crossing.
    pub fn validate_generic(&self) -> Vec<Violation> {
        let mut violations = Vec::new();

        for (e, path) in self.edge_paths.iter().enumerate() {
            for (i, w) in path.windows(2).enumerate() {
                if w[0] == w[1] {
                    violations.push(Violation::ZeroLengthSegment { edge: e, segment: i });
                }
            }
        }

        let mut feats = self.features();
        feats.sort_by(|a, b| a.1.lex_cmp(b.1));
        for w in feats.windows(2) {
            if w[0].1 == w[1].1 {
                violations.push(Violation::CoincidentFeatures(w[0].0, w[1].0));
            }
        }

        for (feat, p) in self.features() {
            for (e, path) in self.edge_paths.iter().enumerate() {
                for (i, w) in path.windows(2).enumerate() {
                    if *p != w[0] && *p != w[1] && on_segment(p, &w[0], &w[1]) {
                        violations.push(Violation::PointOnSegmentInterior {
                            feature: feat,
                            edge: e,
                            segment: i,
                        });
                    }
                }
            }
        }

        let m = self.edge_paths.len();
        for e in 0..m {
            for f in e..m {
                let pa = &self.edge_paths[e];
                let pb = &self.edge_paths[f];
                for i in 0..pa.len() - 1 {
                    let j0 = if e == f { i + 2 } else { 0 };
                    for j in j0..pb.len() - 1 {
                        if let SegMeet::Overlap(_, _) =
                            segment_meet(&pa[i], &pa[i + 1], &pb[j], &pb[j + 1])
                        {
                            violations.push(Violation::OverlappingSegments {
                                a: (e, i),
                                b: (f, j),
                            });
                        }
                    }
                }
            }
        }

        violations
    }

    fn ensure_generic(&self) -> Result<(), DrawingError> {
        let violations = self.validate_generic();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(DrawingError::NotGeneric { violations })
        }
    }

    /// Number of proper crossings between the polylines of two edges.
    pub fn crossing_count(&self, e: usize, f: usize) -> usize {
        let (count, _) = self.crossings_between(e, f);
        count
    }

    /// (count, signed sum) of the proper crossings between edges `e` and
    /// `f`, with `e`'s strand direction taken first in the orientation
    /// frame. Both polylines run from their edge's low vertex to its high
    /// vertex, which fixes the sign convention.
    pub(crate) fn crossings_between(&self, e: usize, f: usize) -> (usize, i64) {
        let pa = &self.edge_paths[e];
        let pb = &self.edge_paths[f];
        let mut count = 0usize;
        let mut signed = 0i64;
        for i in 0..pa.len() - 1 {
            for j in 0..pb.len() - 1 {
                if proper_crossing(&pa[i], &pa[i + 1], &pb[j], &pb[j + 1]) {
                    count += 1;
                    signed += i64::from(crate::geom::direction_det_sign(
                        &pa[i],
                        &pa[i + 1],
                        &pb[j],
                        &pb[j + 1],
                    ));
                }
            }
        }
        (count, signed)
    }

    /// All proper crossing points between the polylines of two edges.
    pub fn crossing_points(&self, e: usize, f: usize) -> Vec<Point> {
        let pa = &self.edge_paths[e];
        let pb = &self.edge_paths[f];
        let mut pts = Vec::new();
        for i in 0..pa.len() - 1 {
            for j in 0..pb.len() - 1 {
                if proper_crossing(&pa[i], &pa[i + 1], &pb[j], &pb[j + 1]) {
                    pts.push(crate::geom::line_intersection(
                        &pa[i],
                        &pa[i + 1],
                        &pb[j],
                        &pb[j + 1],
                    ));
                }
            }
        }
        pts
    }

    pub fn to_json(&self) -> String {
        let dj = DrawingJson {
            vertices: self.vertex_pos.clone(),
            edges: self.edge_paths.clone(),
        };
        serde_json::to_string(&dj).expect("drawing serializes")
    }

    /// Reads a drawing of `graph` from the `{"vertices": …, "edges": …}`
    /// format. Edge paths are listed in the graph's canonical edge order.
    pub fn from_json(graph: &Graph, s: &str) -> Result<Drawing, DrawingError> {
        let dj: DrawingJson =
            serde_json::from_str(s).map_err(|e| DrawingError::Structure(e.to_string()))?;
        Drawing::new(graph.clone(), dj.vertices, dj.edges)
    }
}

#[derive(Serialize, Deserialize)]
struct DrawingJson {
    vertices: Vec<Point>,
    edges: Vec<Vec<Point>>,
}

/// Crossing parities and signed crossing counts of a drawing over a pair
/// set. `mod2` is always the entrywise mod-2 reduction of `signed`.
#[derive(Clone, Debug)]
pub struct CrossingVector {
    pair_set: EdgePairSet,
    mod2: BitVec,
    signed: Vec<i64>,
}

impl CrossingVector {
    pub fn pair_set(&self) -> &EdgePairSet {
        &self.pair_set
    }

    pub fn mod2(&self) -> &BitVec {
        &self.mod2
    }

    pub fn signed(&self) -> &[i64] {
        &self.signed
    }

    pub fn len(&self) -> usize {
        self.signed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signed.is_empty()
    }

    /// Sum of all parities over GF(2): the "even/odd" classification used
    /// by parity-functional certificates.
    pub fn total_parity(&self) -> bool {
        self.mod2.count_ones() % 2 == 1
    }

    pub fn is_mod2_zero(&self) -> bool {
        self.mod2.is_zero()
    }

    pub fn is_signed_zero(&self) -> bool {
        self.signed.iter().all(|&s| s == 0)
    }
}

/// Computes the crossing vector of a generic drawing over `pairs`.
pub fn crossing_vector(d: &Drawing, pairs: &EdgePairSet) -> Result<CrossingVector, DrawingError> {
    if pairs.base() != d.graph() {
        return Err(DrawingError::GraphMismatch);
    }
    d.ensure_generic()?;
    Ok(crossing_vector_unchecked(d, pairs))
}

/// Crossing vector without the genericity check; callers must know the
/// drawing is generic (used by retry loops that validated already).
pub(crate) fn crossing_vector_unchecked(d: &Drawing, pairs: &EdgePairSet) -> CrossingVector {
    let entries: Vec<(bool, i64)> = pairs
        .pairs()
        .par_iter()
        .map(|&(e, f)| {
            let (count, signed) = d.crossings_between(e, f);
            (count % 2 == 1, signed)
        })
        .collect();
    let mut mod2 = BitVec::zeros(entries.len());
    let mut signed = Vec::with_capacity(entries.len());
    for (i, (odd, s)) in entries.into_iter().enumerate() {
        if odd {
            mod2.set(i, true);
        }
        signed.push(s);
    }
    CrossingVector {
        pair_set: pairs.clone(),
        mod2,
        signed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Rational;
    use crate::graph::{PairKind, generate, pair_set};

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn structural_checks() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let err = Drawing::new(g.clone(), vec![pt(0, 0), pt(1, 0)], vec![vec![pt(0, 0)]]);
        assert!(matches!(err, Err(DrawingError::Structure(_))));
        let err = Drawing::new(
            g.clone(),
            vec![pt(0, 0), pt(1, 0)],
            vec![vec![pt(0, 0), pt(2, 0)]],
        );
        assert!(matches!(err, Err(DrawingError::Structure(_))));
        let ok = Drawing::new(
            g,
            vec![pt(0, 0), pt(1, 0)],
            vec![vec![pt(0, 0), pt(1, 0)]],
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn vertex_on_segment_interior_is_flagged() {
        // Path through three collinear vertex points.
        let g = Graph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let d = Drawing::new(
            g,
            vec![pt(0, 0), pt(2, 0), pt(1, 0)],
            vec![
                vec![pt(0, 0), pt(2, 0)],
                vec![pt(0, 0), pt(1, 0)],
            ],
        )
        .unwrap();
        let v = d.validate_generic();
        assert!(
            v.iter()
                .any(|v| matches!(v, Violation::PointOnSegmentInterior { .. })),
            "{v:?}"
        );
    }

    #[test]
    fn partial_overlap_is_flagged() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let d = Drawing::new(
            g,
            vec![pt(0, 0), pt(3, 0), pt(1, 0), pt(4, 0)],
            vec![
                vec![pt(0, 0), pt(3, 0)],
                vec![pt(1, 0), pt(4, 0)],
            ],
        )
        .unwrap();
        let v = d.validate_generic();
        assert!(
            v.iter()
                .any(|v| matches!(v, Violation::OverlappingSegments { .. })),
            "{v:?}"
        );
    }

    #[test]
    fn crossing_vector_requires_genericity() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let d = Drawing::new(
            g.clone(),
            vec![pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 2)],
            vec![
                vec![pt(0, 0), pt(2, 0)],
                vec![pt(1, 0), pt(1, 2)],
            ],
        )
        .unwrap(); // endpoint of edge 1 sits inside edge 0
        let pairs = pair_set(&g, PairKind::Delta);
        assert!(matches!(
            crossing_vector(&d, &pairs),
            Err(DrawingError::NotGeneric { .. })
        ));
    }

    #[test]
    fn empty_pair_set_gives_empty_vector() {
        let g = generate::complete(3);
        let d = layout_moment_curve(&g);
        let pairs = pair_set(&g, PairKind::S);
        let cv = crossing_vector(&d, &pairs).unwrap();
        assert!(cv.is_empty());
    }

    #[test]
    fn signed_matches_mod2() {
        let g = generate::complete(5);
        let d = layout_moment_curve(&g);
        let pairs = pair_set(&g, PairKind::Delta);
        let cv = crossing_vector(&d, &pairs).unwrap();
        for (i, &s) in cv.signed().iter().enumerate() {
            assert_eq!(cv.mod2().get(i), s.rem_euclid(2) == 1);
        }
    }

    #[test]
    fn swapping_operands_flips_signs_but_not_parity() {
        let g = generate::complete(5);
        let d = layout_moment_curve(&g);
        let pairs = pair_set(&g, PairKind::Delta);
        for &(e, f) in pairs.pairs() {
            let (c1, s1) = d.crossings_between(e, f);
            let (c2, s2) = d.crossings_between(f, e);
            assert_eq!(c1, c2);
            assert_eq!(s1, -s2);
        }
    }

    #[test]
    fn drawing_json_round_trip() {
        let g = generate::complete(4);
        let d = layout_moment_curve(&g);
        let s = d.to_json();
        let d2 = Drawing::from_json(&g, &s).unwrap();
        assert_eq!(d, d2);
        // Rationals survive as exact num/den strings.
        let half = Rational::new(1.into(), 2.into());
        assert!(s.contains("\"0/1\""));
        drop(half);
    }
}
