//! Subdividing a drawing: realizes the barycentric subdivision on top of
//! an existing generic drawing, splitting every edge's polyline at a point
//! free of crossings. Point sets are unchanged, so per-pair crossing
//! counts are preserved exactly: the original count of `{α,β}` equals the
//! sum of the four sub-pair counts.

use crate::geom::{Point, Rational, proper_crossing};
use crate::graph::SubdivisionMap;

use super::{Drawing, DrawingError};

pub fn subdivide_drawing(d: &Drawing, sub: &SubdivisionMap) -> Result<Drawing, DrawingError> {
    if sub.original() != d.graph() {
        return Err(DrawingError::SubdivisionMismatch);
    }
    let violations = d.validate_generic();
    if !violations.is_empty() {
        return Err(DrawingError::NotGeneric { violations });
    }
    let g = d.graph();
    let n = g.vertex_count();
    let m = g.edge_count();

    // Choose a split point on each edge: on the first segment, halfway
    // between the low endpoint and the first crossing on that segment (or
    // the segment midpoint when the segment is crossing-free). A generic
    // drawing has no features inside segments, so the split point is a
    // fresh point of the plane.
    let mut splits: Vec<Point> = Vec::with_capacity(m);
    for e in 0..m {
        let path = d.edge_path(e);
        let a = &path[0];
        let b = &path[1];
        let mut t_min: Option<Rational> = None;
        for f in 0..m {
            let other = d.edge_path(f);
            for j in 0..other.len() - 1 {
                if e == f && j <= 1 {
                    continue; // segment 0 itself and its neighbour
                }
                if proper_crossing(a, b, &other[j], &other[j + 1]) {
                    let p = crate::geom::line_intersection(a, b, &other[j], &other[j + 1]);
                    let t = param_on_segment(a, b, &p);
                    t_min = Some(match t_min {
                        None => t,
                        Some(cur) => {
                            if t < cur {
                                t
                            } else {
                                cur
                            }
                        }
                    });
                }
            }
        }
        let t = match t_min {
            Some(tm) => tm / Rational::from_integer(2.into()),
            None => Rational::new(1.into(), 2.into()),
        };
        splits.push(Point::new(
            &a.x + &t * (&b.x - &a.x),
            &a.y + &t * (&b.y - &a.y),
        ));
    }

    let star = sub.star();
    let mut pos: Vec<Point> = Vec::with_capacity(n + m);
    pos.extend(d.vertex_positions().iter().cloned());
    pos.extend(splits.iter().cloned());

    let mut paths: Vec<Vec<Point>> = Vec::with_capacity(star.edge_count());
    for se in 0..star.edge_count() {
        let (v, alpha) = sub.edge_origin(se);
        let path = d.edge_path(alpha);
        let (lo, hi) = g.edge(alpha);
        let split = &splits[alpha];
        if v == lo {
            // Low half: from the low endpoint to the split point, which
            // lies on segment 0.
            paths.push(vec![path[0].clone(), split.clone()]);
        } else {
            debug_assert_eq!(v, hi);
            // High half, oriented from the high endpoint (the star edge's
            // low vertex is the original vertex, which precedes all edge
            // nodes) back to the split point.
            let mut p: Vec<Point> = path[1..].iter().rev().cloned().collect();
            p.push(split.clone());
            paths.push(p);
        }
    }

    let out = Drawing::new(star.clone(), pos, paths)?;
    debug_assert!(out.validate_generic().is_empty());
    Ok(out)
}

fn param_on_segment(a: &Point, b: &Point, p: &Point) -> Rational {
    let dx = &b.x - &a.x;
    if !num_traits::Zero::is_zero(&dx) {
        (&p.x - &a.x) / dx
    } else {
        (&p.y - &a.y) / (&b.y - &a.y)
    }
}
