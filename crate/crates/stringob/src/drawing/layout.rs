//! Layout constructions.
//!
//! `layout_moment_curve` places vertex `i` at `(i, i²)`; points on a
//! strictly convex curve are never collinear, so straight-line drawings of
//! any simple graph come out generic. `layout_convex_order` does the same
//! on exact rational circle points in a prescribed cyclic order.
//! `layout_random` samples integer coordinates until the drawing is
//! generic. The figure layouts reproduce the published circular drawings
//! of the shipped generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{Point, Rational, circle_point};
use crate::graph::Graph;

use super::{Drawing, DrawingError};

fn straight_paths(g: &Graph, pos: &[Point]) -> Vec<Vec<Point>> {
    g.edges()
        .iter()
        .map(|&(a, b)| vec![pos[a].clone(), pos[b].clone()])
        .collect()
}

/// Vertex `i` at `(i, i²)`, every edge a single segment. Generic for every
/// simple graph: three points of the moment curve are never collinear, and
/// a vertex lies on a chord only if it is one of the chord's endpoints.
pub fn layout_moment_curve(g: &Graph) -> Drawing {
    let pos: Vec<Point> = (0..g.vertex_count())
        .map(|i| Point::from_ints(i as i64, (i * i) as i64))
        .collect();
    let paths = straight_paths(g, &pos);
    let d = Drawing::new(g.clone(), pos, paths).expect("moment layout is structural");
    debug_assert!(d.validate_generic().is_empty());
    d
}

/// Places the vertices on exact rational circle points in the given cyclic
/// order: `order[k]` is the vertex at position `k` counterclockwise.
pub fn layout_convex_order(g: &Graph, order: &[usize]) -> Result<Drawing, DrawingError> {
    let n = g.vertex_count();
    if order.len() != n {
        return Err(DrawingError::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(DrawingError::NotAPermutation);
        }
        seen[v] = true;
    }
    let radius = Rational::from_integer(10.into());
    let mut pos = vec![Point::from_ints(0, 0); n];
    for (k, &v) in order.iter().enumerate() {
        let turn = Rational::new((k as i64).into(), (n.max(1) as i64).into());
        pos[v] = circle_point(&radius, &turn);
    }
    let paths = straight_paths(g, &pos);
    let d = Drawing::new(g.clone(), pos, paths)?;
    debug_assert!(d.validate_generic().is_empty());
    Ok(d)
}

/// Straight-line drawing with seeded random integer coordinates, resampled
/// until generic.
pub fn layout_random(g: &Graph, seed: u64) -> Result<Drawing, DrawingError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_1a10_0000_0000);
    let max_attempts = 64;
    for _ in 0..max_attempts {
        let pos: Vec<Point> = (0..g.vertex_count())
            .map(|_| {
                Point::from_ints(rng.gen_range(0..1i64 << 24), rng.gen_range(0..1i64 << 24))
            })
            .collect();
        let paths = straight_paths(g, &pos);
        let Ok(d) = Drawing::new(g.clone(), pos, paths) else {
            continue;
        };
        if d.validate_generic().is_empty() {
            return Ok(d);
        }
    }
    Err(DrawingError::LayoutFailed {
        attempts: max_attempts,
    })
}

/// Turn fraction for ring position `k` of `n`, matching the published
/// figures' clockwise vertex order starting at the top.
fn ring_turn(k: usize, n: usize) -> Rational {
    // 1/4 - k/n, i.e. angle 90° - k·(360°/n).
    Rational::new(1.into(), 4.into()) - Rational::new((k as i64).into(), (n as i64).into())
}

fn midpoint(a: &Point, b: &Point) -> Point {
    let two = Rational::from_integer(2.into());
    Point::new((&a.x + &b.x) / &two, (&a.y + &b.y) / two)
}

/// The published circular drawing of the GP graph: inner pentagram, outer
/// subdivided 5-cycle, radial spokes. All crossings are pentagram chords
/// crossing each other.
pub fn gp_figure_layout(g: &Graph) -> Result<Drawing, DrawingError> {
    if g != &crate::graph::generate(&crate::graph::Family::Gp).expect("gp generates") {
        return Err(DrawingError::GraphMismatch);
    }
    let r_in = Rational::new(7.into(), 5.into());
    let r_out = Rational::new(5.into(), 2.into());
    let mut pos = vec![Point::from_ints(0, 0); 18];
    for k in 0..5 {
        let turn = ring_turn(k, 5);
        pos[k] = circle_point(&r_in, &turn);
        pos[5 + k] = circle_point(&r_out, &turn);
    }
    for k in 0..5 {
        // Outer-cycle midpoints between outer k and outer k+1.
        pos[10 + k] = midpoint(&pos[5 + k], &pos[5 + (k + 1) % 5]);
    }
    pos[15] = midpoint(&pos[1], &pos[6]);
    pos[16] = midpoint(&pos[3], &pos[8]);
    pos[17] = midpoint(&pos[4], &pos[9]);
    let paths = straight_paths(g, &pos);
    let d = Drawing::new(g.clone(), pos, paths)?;
    d.ensure_generic()?;
    Ok(d)
}

/// The published circular drawing of `C * C̄_n`: inner complement chords
/// (antipodal ones bent slightly off center when n is even), outer
/// subdivided cycle, radial subdivided spokes. Every crossing involves two
/// inner chords.
pub fn c_cbar_figure_layout(g: &Graph, n: usize) -> Result<Drawing, DrawingError> {
    if g != &crate::graph::generate(&crate::graph::Family::CCbar(n))
        .map_err(|_| DrawingError::GraphMismatch)?
    {
        return Err(DrawingError::GraphMismatch);
    }
    let r_in = Rational::new(7.into(), 5.into());
    let r_out = Rational::new(5.into(), 2.into());
    let mut pos = vec![Point::from_ints(0, 0); 4 * n];
    for k in 0..n {
        let turn = ring_turn(k, n);
        pos[k] = circle_point(&r_in, &turn);
        pos[n + k] = circle_point(&r_out, &turn);
    }
    for k in 0..n {
        pos[2 * n + k] = midpoint(&pos[n + k], &pos[n + (k + 1) % n]);
        pos[3 * n + k] = midpoint(&pos[k], &pos[n + k]);
    }
    let mut paths = Vec::with_capacity(g.edge_count());
    for (idx, &(a, b)) in g.edges().iter().enumerate() {
        let antipodal = n.is_multiple_of(2) && a < n && b < n && b - a == n / 2;
        if antipodal {
            // Bend to the left of the directed chord a→b, just off center,
            // with a per-chord offset magnitude so no two bends interact
            // symmetrically.
            let dx = &pos[b].x - &pos[a].x;
            let dy = &pos[b].y - &pos[a].y;
            let scale = Rational::new(((7 + idx) as i64).into(), 1000.into());
            // Divide by the squared chord length: only smallness and
            // rationality of the offset matter, not its exact magnitude.
            let norm = &dx * &dx + &dy * &dy;
            let ox = -&dy * &scale / &norm;
            let oy = &dx * &scale / norm;
            let bend = Point::new(ox, oy);
            paths.push(vec![pos[a].clone(), bend, pos[b].clone()]);
        } else {
            paths.push(vec![pos[a].clone(), pos[b].clone()]);
        }
    }
    let d = Drawing::new(g.clone(), pos, paths)?;
    d.ensure_generic()?;
    Ok(d)
}
