//! String representations: collections of curves whose pairwise
//! intersection pattern realizes a graph, and the two constructions
//! relating them to drawings of the barycentric subdivision.
//!
//! Curves are polylines (a single point is allowed as a degenerate curve)
//! and may retrace themselves; all intersection tests here are set-level
//! and exact. Drawings produced from representations are generally *not*
//! in general position — star edges overlap along their curve by
//! construction — which is fine: the subdivision characterization only
//! needs set disjointness on the forbidden pairs, never crossing parity.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{Point, SegMeet, segment_meet};
use crate::graph::{EdgePairSet, Graph, SubdivisionMap, pair_set_of_subdivision};

use super::drawing::Drawing;

#[derive(Debug, Error)]
pub enum StringsError {
    #[error("representation structure invalid: {0}")]
    Structure(String),
    #[error("representation does not realize the graph: {0} violations, first: {1}")]
    InvalidRepresentation(usize, String),
    #[error("drawing violates subdivision disjointness on {0} pairs")]
    DisjointnessViolation(usize),
    #[error("drawing does not match the subdivision")]
    SubdivisionMismatch,
}

/// A collection of curves, one per vertex.
#[derive(Clone, Debug)]
pub struct StringRepresentation {
    graph: Graph,
    curves: Vec<Vec<Point>>,
}

impl StringRepresentation {
    pub fn new(graph: Graph, curves: Vec<Vec<Point>>) -> Result<Self, StringsError> {
        if curves.len() != graph.vertex_count() {
            return Err(StringsError::Structure(format!(
                "{} curves for {} vertices",
                curves.len(),
                graph.vertex_count()
            )));
        }
        if let Some(i) = curves.iter().position(|c| c.is_empty()) {
            return Err(StringsError::Structure(format!("curve {i} is empty")));
        }
        Ok(StringRepresentation { graph, curves })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn curve(&self, v: usize) -> &[Point] {
        &self.curves[v]
    }

    pub fn to_json(&self) -> String {
        let rj = RepJson {
            n: self.graph.vertex_count(),
            curves: self.curves.clone(),
        };
        serde_json::to_string(&rj).expect("representation serializes")
    }

    /// Reads `{"n": …, "curves": …}`; the intended graph is supplied
    /// separately since the format carries only the curves.
    pub fn from_json(graph: &Graph, s: &str) -> Result<Self, StringsError> {
        let rj: RepJson =
            serde_json::from_str(s).map_err(|e| StringsError::Structure(e.to_string()))?;
        if rj.n != graph.vertex_count() {
            return Err(StringsError::Structure(format!(
                "representation has n={}, graph has {} vertices",
                rj.n,
                graph.vertex_count()
            )));
        }
        StringRepresentation::new(graph.clone(), rj.curves)
    }
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    n: usize,
    curves: Vec<Vec<Point>>,
}

/// A pair of vertices whose curves contradict the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepViolation {
    /// `{v, w}` is an edge but the curves are disjoint.
    MissingIntersection(usize, usize),
    /// `{v, w}` is not an edge but the curves intersect.
    ForbiddenIntersection(usize, usize),
}

impl std::fmt::Display for RepViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepViolation::MissingIntersection(v, w) => {
                write!(f, "edge {{{v},{w}}} has disjoint curves")
            }
            RepViolation::ForbiddenIntersection(v, w) => {
                write!(f, "non-edge {{{v},{w}}} has intersecting curves")
            }
        }
    }
}

/// Set-level intersection test of two polylines (either may be a point).
fn curves_meet(a: &[Point], b: &[Point]) -> bool {
    lex_min_common_point(a, b).is_some()
}

/// The lexicographically least common point of two polylines, if any.
fn lex_min_common_point(a: &[Point], b: &[Point]) -> Option<Point> {
    let mut best: Option<Point> = None;
    let mut update = |p: Point| {
        best = Some(match best.take() {
            None => p,
            Some(q) => {
                if p.lex_cmp(&q) == std::cmp::Ordering::Less {
                    p
                } else {
                    q
                }
            }
        });
    };
    let segs = |c: &[Point]| -> Vec<(Point, Point)> {
        if c.len() == 1 {
            vec![(c[0].clone(), c[0].clone())]
        } else {
            c.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
        }
    };
    for (a1, a2) in segs(a) {
        for (b1, b2) in segs(b) {
            match segment_meet(&a1, &a2, &b1, &b2) {
                SegMeet::Empty => {}
                SegMeet::At(p) => update(p),
                SegMeet::Overlap(lo, _) => update(lo),
            }
        }
    }
    best
}

/// Checks the defining property: curves of `v` and `w` intersect iff
/// `{v,w}` is an edge. Returns all violating pairs.
pub fn verify_string_representation(rep: &StringRepresentation) -> Vec<RepViolation> {
    let g = rep.graph();
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        for w in (v + 1)..g.vertex_count() {
            let meet = curves_meet(&rep.curves[v], &rep.curves[w]);
            match (g.has_edge(v, w), meet) {
                (true, false) => out.push(RepViolation::MissingIntersection(v, w)),
                (false, true) => out.push(RepViolation::ForbiddenIntersection(v, w)),
                _ => {}
            }
        }
    }
    out
}

/// Builds a drawing of `G*` from a valid representation: `g(v)` is the
/// first point of curve v, `g(α)` for `α = vw` is the lexicographically
/// least point of `γ_v ∩ γ_w`, and the edge `vα` runs from `g(v)` to
/// `g(α)` along curve v. The result satisfies `g(vα) ⊆ γ_v`, hence passes
/// the subdivision disjointness check; it is usually not generic.
pub fn drawing_from_strings(
    rep: &StringRepresentation,
) -> Result<(SubdivisionMap, Drawing), StringsError> {
    let violations = verify_string_representation(rep);
    if !violations.is_empty() {
        return Err(StringsError::InvalidRepresentation(
            violations.len(),
            violations[0].to_string(),
        ));
    }
    let g = rep.graph();
    let sub = crate::graph::barycentric_subdivision(g);
    let star = sub.star();

    let vertex_points: Vec<Point> = rep.curves.iter().map(|c| c[0].clone()).collect();
    let mut edge_points: Vec<Point> = Vec::with_capacity(g.edge_count());
    for &(v, w) in g.edges() {
        let p = lex_min_common_point(&rep.curves[v], &rep.curves[w])
            .expect("verified representation has the intersection");
        edge_points.push(p);
    }

    let mut pos: Vec<Point> = Vec::with_capacity(star.vertex_count());
    pos.extend(vertex_points.iter().cloned());
    pos.extend(edge_points.iter().cloned());

    let mut paths: Vec<Vec<Point>> = Vec::with_capacity(star.edge_count());
    for se in 0..star.edge_count() {
        let (v, alpha) = sub.edge_origin(se);
        let path = walk_along_curve(&rep.curves[v], &edge_points[alpha]);
        paths.push(path);
    }

    let drawing =
        Drawing::new(star.clone(), pos, paths).map_err(|e| StringsError::Structure(e.to_string()))?;
    Ok((sub, drawing))
}

/// The subpolyline of `curve` from its first point to `target`, where
/// `target` lies on the curve. Walks to the first occurrence of the
/// target. Degenerate results (target == start) come out as a two-point
/// polyline repeating the point, which set-level tests treat as a point.
fn walk_along_curve(curve: &[Point], target: &Point) -> Vec<Point> {
    if curve.len() == 1 || curve[0] == *target {
        return vec![curve[0].clone(), target.clone()];
    }
    let mut out = vec![curve[0].clone()];
    for w in curve.windows(2) {
        if crate::geom::on_segment(target, &w[0], &w[1]) {
            if out.last() != Some(target) {
                out.push(target.clone());
            }
            return out;
        }
        out.push(w[1].clone());
    }
    unreachable!("target point not on curve");
}

/// Checks `g(vα) ∩ g(wβ) = ∅` for every pair in `P_sd`, set-level. The
/// drawing need not be generic.
pub fn verify_sd_disjointness(sub: &SubdivisionMap, d: &Drawing) -> Vec<(usize, usize)> {
    let pairs: EdgePairSet = pair_set_of_subdivision(sub);
    let mut out = Vec::new();
    for &(e, f) in pairs.pairs() {
        if curves_meet(d.edge_path(e), d.edge_path(f)) {
            out.push((e, f));
        }
    }
    out
}

/// Extracts a string representation from a drawing of `G*` that satisfies
/// the subdivision disjointness: curve v traces the star `T_v` — out and
/// back along each `g(vα)` — so its point set is exactly
/// `{g(v)} ∪ ⋃_{α∋v} g(vα)`.
pub fn strings_from_drawing(
    sub: &SubdivisionMap,
    d: &Drawing,
) -> Result<StringRepresentation, StringsError> {
    if d.graph() != sub.star() {
        return Err(StringsError::SubdivisionMismatch);
    }
    let bad = verify_sd_disjointness(sub, d);
    if !bad.is_empty() {
        return Err(StringsError::DisjointnessViolation(bad.len()));
    }
    let g = sub.original();
    let star = sub.star();
    let mut curves = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let home = d.vertex_pos(v).clone();
        let mut curve = vec![home.clone()];
        for &alpha in g.incident_edges(v) {
            let se = sub.star_edge_of_incidence(v, alpha);
            let path = d.edge_path(se);
            // The star edge joins v (a low id) to the edge node; its path
            // starts at pos(v). Walk out to g(α) and back.
            debug_assert_eq!(path[0], home);
            let (lo, _) = star.edge(se);
            debug_assert_eq!(lo, v);
            for p in &path[1..] {
                curve.push(p.clone());
            }
            for p in path[..path.len() - 1].iter().rev() {
                curve.push(p.clone());
            }
        }
        // Collapse immediate stutters from degenerate star edges.
        curve.dedup();
        curves.push(curve);
    }
    StringRepresentation::new(g.clone(), curves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn k2_crossing() -> StringRepresentation {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        StringRepresentation::new(
            g,
            vec![
                vec![pt(0, 0), pt(2, 2)],
                vec![pt(0, 2), pt(2, 0)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn k2_crossing_segments_verify() {
        assert!(verify_string_representation(&k2_crossing()).is_empty());
    }

    #[test]
    fn k2_disjoint_segments_fail() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let rep = StringRepresentation::new(
            g,
            vec![
                vec![pt(0, 0), pt(1, 0)],
                vec![pt(0, 1), pt(1, 1)],
            ],
        )
        .unwrap();
        assert_eq!(
            verify_string_representation(&rep),
            vec![RepViolation::MissingIntersection(0, 1)]
        );
    }

    #[test]
    fn k3_concurrent_segments_verify() {
        let g = generate::complete(3);
        let rep = StringRepresentation::new(
            g,
            vec![
                vec![pt(-2, 0), pt(2, 0)],
                vec![pt(-2, -2), pt(2, 2)],
                vec![pt(-2, 2), pt(2, -2)],
            ],
        )
        .unwrap();
        assert!(verify_string_representation(&rep).is_empty());
    }

    #[test]
    fn k2_drawing_from_strings() {
        let (sub, d) = drawing_from_strings(&k2_crossing()).unwrap();
        // A 3-vertex path drawn along the two segments, meeting at the
        // crossing point (1,1).
        assert_eq!(d.graph().vertex_count(), 3);
        assert_eq!(*d.vertex_pos(sub.edge_node(0)), pt(1, 1));
        assert!(verify_sd_disjointness(&sub, &d).is_empty());
    }

    #[test]
    fn k3_round_trip() {
        let g = generate::complete(3);
        let rep = StringRepresentation::new(
            g.clone(),
            vec![
                vec![pt(-2, 0), pt(2, 0)],
                vec![pt(-2, -2), pt(2, 2)],
                vec![pt(-2, 2), pt(2, -2)],
            ],
        )
        .unwrap();
        let (sub, d) = drawing_from_strings(&rep).unwrap();
        assert!(verify_sd_disjointness(&sub, &d).is_empty());
        let back = strings_from_drawing(&sub, &d).unwrap();
        assert!(verify_string_representation(&back).is_empty());
        assert_eq!(back.graph(), &g);
    }

    #[test]
    fn invalid_rep_is_rejected() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let rep = StringRepresentation::new(
            g,
            vec![
                vec![pt(0, 0), pt(1, 0)],
                vec![pt(0, 1), pt(1, 1)],
            ],
        )
        .unwrap();
        assert!(matches!(
            drawing_from_strings(&rep),
            Err(StringsError::InvalidRepresentation(..))
        ));
    }

    #[test]
    fn planar_star_drawing_of_triangle_passes_disjointness() {
        // The moment-curve drawing of the triangle's subdivision has no
        // crossings at all, so disjointness holds.
        let g = generate::complete(3);
        let sub = crate::graph::barycentric_subdivision(&g);
        let d = crate::drawing::layout_moment_curve(sub.star());
        assert!(verify_sd_disjointness(&sub, &d).is_empty());
        let rep = strings_from_drawing(&sub, &d).unwrap();
        assert!(verify_string_representation(&rep).is_empty());
    }

    #[test]
    fn crossing_subdivision_halves_fail_disjointness() {
        // Path 0-1-2: bend the far halves so g(0·01) crosses g(2·12).
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let sub = crate::graph::barycentric_subdivision(&g);
        let star = sub.star();
        // Star vertices: 0,1,2 originals; 3 = node(01), 4 = node(12).
        let pos = vec![pt(0, 0), pt(4, 0), pt(8, 0), pt(2, 2), pt(6, 2)];
        let paths: Vec<Vec<Point>> = star
            .edges()
            .iter()
            .map(|&(a, b)| match (a, b) {
                (0, 3) => vec![pt(0, 0), pt(5, 1), pt(2, 2)],
                (2, 4) => vec![pt(8, 0), pt(3, 1), pt(6, 2)],
                _ => vec![pos[a].clone(), pos[b].clone()],
            })
            .collect();
        let d = Drawing::new(star.clone(), pos, paths).unwrap();
        let bad = verify_sd_disjointness(&sub, &d);
        let e = sub.star_edge_of_incidence(0, 0);
        let f = sub.star_edge_of_incidence(2, 1);
        assert_eq!(bad, vec![(e.min(f), e.max(f))]);
        assert!(matches!(
            strings_from_drawing(&sub, &d),
            Err(StringsError::DisjointnessViolation(1))
        ));
    }

    #[test]
    fn tracing_covers_the_star_point_set() {
        let g = generate::complete(3);
        let sub = crate::graph::barycentric_subdivision(&g);
        let d = crate::drawing::layout_moment_curve(sub.star());
        let rep = strings_from_drawing(&sub, &d).unwrap();
        for v in 0..3 {
            let curve = rep.curve(v);
            // Every star-edge endpoint appears on the curve.
            for &alpha in g.incident_edges(v) {
                let se = sub.star_edge_of_incidence(v, alpha);
                for p in d.edge_path(se) {
                    assert!(curve.contains(p));
                }
            }
        }
    }

    #[test]
    fn rep_json_round_trip() {
        let rep = k2_crossing();
        let s = rep.to_json();
        let back = StringRepresentation::from_json(rep.graph(), &s).unwrap();
        assert!(verify_string_representation(&back).is_empty());
    }
}
