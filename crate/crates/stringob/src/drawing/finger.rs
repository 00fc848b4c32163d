//! Geometric finger moves.
//!
//! A finger move reroutes an edge ω through a thin corridor to a square
//! wrapped once around a vertex u ∉ ω. Crossings created along the
//! corridor come in cancelling pairs; the wrap crosses each edge at u
//! exactly once. The parity change is therefore the finger-move vector
//! φ_{ω,u}: a Jordan-curve argument shows the parity of a pair {ω,β}
//! flips iff exactly one endpoint of β lies inside the region enclosed by
//! the detour, and the construction keeps every feature except u outside.
//!
//! Degenerate geometry (a feature inside the corridor, a non-transversal
//! touch) is not reasoned away: each candidate is checked exactly — the
//! drawing must validate and the recomputed crossing vector must equal the
//! predicted one — and the construction retries with a different segment,
//! anchor point and shrink factor until both checks pass.

use num_traits::{Signed, Zero};

use crate::geom::{Point, Rational, on_segment};
use crate::graph::EdgePairSet;
use crate::obstruction::finger_move_vector;

use super::{Drawing, DrawingError, crossing_vector, crossing_vector_unchecked};

/// Applies the finger move (ω, u) to a generic drawing, returning a new
/// generic drawing whose crossing parities over `pairs` differ from the
/// original's by exactly φ_{ω,u}.
pub fn apply_finger_move(
    d: &Drawing,
    omega: usize,
    u: usize,
    pairs: &EdgePairSet,
) -> Result<Drawing, DrawingError> {
    let g = d.graph();
    if g.edge_contains(omega, u) {
        return Err(DrawingError::VertexOnEdge {
            vertex: u,
            edge: g.edge(omega),
        });
    }
    let phi = finger_move_vector(g, pairs, omega, u).expect("u not on omega");
    let base = crossing_vector(d, pairs)?;
    let mut target = base.mod2().clone();
    target.xor_assign(&phi);

    let path = d.edge_path(omega);
    let segments = path.len() - 1;
    let mid_seg = segments / 2;
    let mut attempts = 0usize;
    let t_choices = [(1i64, 2i64), (1, 3), (2, 3), (2, 5), (3, 5), (1, 7), (5, 7)];

    for seg_off in 0..segments {
        let seg = (mid_seg + seg_off) % segments;
        for &(tn, td) in &t_choices {
            for shrink_pow in [0u32, 2, 4, 6] {
                for swap in [false, true] {
                    attempts += 1;
                    if attempts > 96 {
                        return Err(DrawingError::RerouteFailed { attempts });
                    }
                    let Some(candidate) =
                        build_detour(d, omega, u, seg, tn, td, shrink_pow, swap)
                    else {
                        continue;
                    };
                    if !candidate.validate_generic().is_empty() {
                        continue;
                    }
                    let cv = crossing_vector_unchecked(&candidate, pairs);
                    if *cv.mod2() == target {
                        return Ok(candidate);
                    }
                }
            }
        }
    }
    Err(DrawingError::RerouteFailed { attempts })
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn linf(a: &Point, b: &Point) -> Rational {
    let dx = (&a.x - &b.x).abs();
    let dy = (&a.y - &b.y).abs();
    if dx >= dy { dx } else { dy }
}

/// One detour candidate: split the chosen segment at `m = a + t·(b−a)`,
/// route two corridor lines from points just before/after `m` to two entry
/// points on the near side of an axis-aligned square around `u`, and run
/// the long way around the square between them.
#[allow(clippy::too_many_arguments)]
fn build_detour(
    d: &Drawing,
    omega: usize,
    u: usize,
    seg: usize,
    tn: i64,
    td: i64,
    shrink_pow: u32,
    swap: bool,
) -> Option<Drawing> {
    let path = d.edge_path(omega);
    let a = &path[seg];
    let b = &path[seg + 1];
    if a == b {
        return None;
    }
    let t = rat(tn, td);
    let m = Point::new(&a.x + &t * (&b.x - &a.x), &a.y + &t * (&b.y - &a.y));
    let upos = d.vertex_pos(u);
    if m == *upos {
        return None;
    }

    // Features other than u's position: vertices and bends.
    let mut features: Vec<&Point> = Vec::new();
    for (v, p) in d.vertex_positions().iter().enumerate() {
        if v != u {
            features.push(p);
        }
    }
    for path in d.edge_paths() {
        for p in &path[1..path.len() - 1] {
            features.push(p);
        }
    }

    // The open corridor segment [m, u] must be clear of features.
    for f in &features {
        if on_segment(f, &m, upos) {
            return None;
        }
    }

    let shrink = rat(1, 1 << shrink_pow);

    // Square half-side: a third of the nearest feature distance (L∞),
    // further capped by the distance to m, then shrunk on retries.
    let mut r = linf(upos, &m);
    for f in &features {
        let dist = linf(upos, f);
        if dist < r {
            r = dist;
        }
    }
    let r = r * rat(1, 3) * &shrink;
    if r.is_zero() {
        return None;
    }

    // Entry side of the square: the dominant axis of m − u.
    let dx = &m.x - &upos.x;
    let dy = &m.y - &upos.y;
    let rot = if dx.abs() >= dy.abs() {
        if dx.is_positive() { 0 } else { 2 }
    } else if dy.is_positive() {
        1
    } else {
        3
    };
    // Template for the "right" side (rot = 0), rotated k·90° ccw.
    let spread = &r * rat(1, 4) * &shrink;
    let rotp = |x: &Rational, y: &Rational, k: usize| -> Point {
        let (px, py) = match k {
            0 => (x.clone(), y.clone()),
            1 => (-y.clone(), x.clone()),
            2 => (-x.clone(), -y.clone()),
            _ => (y.clone(), -x.clone()),
        };
        Point::new(&upos.x + px, &upos.y + py)
    };
    let q_high = rotp(&r, &spread, rot);
    let q_low = rotp(&r, &(-spread.clone()), rot);
    let corners = [
        rotp(&r, &r, rot),
        rotp(&(-r.clone()), &r, rot),
        rotp(&(-r.clone()), &(-r.clone()), rot),
        rotp(&r, &(-r.clone()), rot),
    ];
    // Long way around: enter at q_high, walk ccw through all corners, exit
    // at q_low (or the reverse when swapped).
    let mut loop_pts: Vec<Point> = Vec::with_capacity(6);
    loop_pts.push(q_high.clone());
    loop_pts.extend(corners.iter().cloned());
    loop_pts.push(q_low.clone());
    if swap {
        loop_pts.reverse();
    }

    // Anchor points on the split segment, strictly between a and b.
    let margin = if t < rat(1, 2) { t.clone() } else { rat(1, 1) - &t };
    let mu = margin * rat(1, 4) * &shrink;
    let m1 = Point::new(
        &a.x + (&t - &mu) * (&b.x - &a.x),
        &a.y + (&t - &mu) * (&b.y - &a.y),
    );
    let m2 = Point::new(
        &a.x + (&t + &mu) * (&b.x - &a.x),
        &a.y + (&t + &mu) * (&b.y - &a.y),
    );

    let mut new_path: Vec<Point> = Vec::with_capacity(path.len() + 8);
    new_path.extend_from_slice(&path[..=seg]);
    new_path.push(m1);
    new_path.extend(loop_pts);
    new_path.push(m2);
    new_path.extend_from_slice(&path[seg + 1..]);

    let mut paths = d.edge_paths().to_vec();
    paths[omega] = new_path;
    Drawing::new(d.graph().clone(), d.vertex_positions().to_vec(), paths).ok()
}
