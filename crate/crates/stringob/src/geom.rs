//! Exact planar geometry over arbitrary-precision rationals.
//!
//! Every predicate in this module is decided by exact arithmetic on
//! [`BigRational`] coordinates. There are no epsilons: two segments either
//! cross or they do not, and the answer is the same on every run.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = BigRational;

/// Parses `"num/den"` (or a bare integer) into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator {s:?}: {e}"))?;
    let den = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator {s:?}: {e}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(num, den))
}

/// Formats a rational as the canonical `"num/den"` string (denominator ≥ 1).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A point of the plane with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: Rational::from_integer(x.into()),
            y: Rational::from_integer(y.into()),
        }
    }

    /// Lexicographic order: by x, then by y.
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (format_rational(&self.x), format_rational(&self.y)).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (x, y) = <(String, String)>::deserialize(d)?;
        Ok(Point {
            x: parse_rational(&x).map_err(de::Error::custom)?,
            y: parse_rational(&y).map_err(de::Error::custom)?,
        })
    }
}

/// Sign of the signed area of the triangle `a b c`: +1 for a left turn,
/// −1 for a right turn, 0 for collinear.
pub fn orient(a: &Point, b: &Point, c: &Point) -> i32 {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    if det.is_zero() {
        0
    } else if det.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of `det(u, v)` for direction vectors `u = b−a`, `v = d−c`.
pub fn direction_det_sign(a: &Point, b: &Point, c: &Point, d: &Point) -> i32 {
    let det = (&b.x - &a.x) * (&d.y - &c.y) - (&b.y - &a.y) * (&d.x - &c.x);
    if det.is_zero() {
        0
    } else if det.is_positive() {
        1
    } else {
        -1
    }
}

/// Is `p` on the closed segment `[a, b]`? Degenerate segments (`a == b`)
/// are treated as single points.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if a == b {
        return p == a;
    }
    if orient(a, b, p) != 0 {
        return false;
    }
    in_box(p, a, b)
}

fn in_box(p: &Point, a: &Point, b: &Point) -> bool {
    let (xlo, xhi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    *xlo <= p.x && p.x <= *xhi && *ylo <= p.y && p.y <= *yhi
}

/// Is `p` strictly inside the open segment `(a, b)`?
pub fn strictly_inside(p: &Point, a: &Point, b: &Point) -> bool {
    on_segment(p, a, b) && p != a && p != b
}

/// True iff segments `[a,b]` and `[c,d]` cross in a single point interior
/// to both (a proper transversal crossing).
pub fn proper_crossing(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 * o2 < 0 && o3 * o4 < 0
}

/// The unique intersection point of the lines through `[a,b]` and `[c,d]`.
/// Caller must ensure the lines are not parallel.
pub fn line_intersection(a: &Point, b: &Point, c: &Point, d: &Point) -> Point {
    let r = (&b.x - &a.x, &b.y - &a.y);
    let s = (&d.x - &c.x, &d.y - &c.y);
    let denom = &r.0 * &s.1 - &r.1 * &s.0;
    debug_assert!(!denom.is_zero());
    let t = ((&c.x - &a.x) * &s.1 - (&c.y - &a.y) * &s.0) / denom;
    Point {
        x: &a.x + &t * r.0,
        y: &a.y + t * r.1,
    }
}

/// How two closed segments meet, as a set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegMeet {
    /// No common point.
    Empty,
    /// Exactly one common point.
    At(Point),
    /// A collinear overlap with more than one common point; carries the
    /// lexicographically least and greatest points of the shared segment.
    Overlap(Point, Point),
}

/// Classifies the intersection of closed segments `[a,b]` and `[c,d]`,
/// both possibly degenerate.
pub fn segment_meet(a: &Point, b: &Point, c: &Point, d: &Point) -> SegMeet {
    if a == b {
        return if on_segment(a, c, d) {
            SegMeet::At(a.clone())
        } else {
            SegMeet::Empty
        };
    }
    if c == d {
        return if on_segment(c, a, b) {
            SegMeet::At(c.clone())
        } else {
            SegMeet::Empty
        };
    }
    if proper_crossing(a, b, c, d) {
        return SegMeet::At(line_intersection(a, b, c, d));
    }
    let collinear = orient(a, b, c) == 0 && orient(a, b, d) == 0;
    if collinear {
        // Project on the dominant axis and intersect the parameter intervals.
        let mut pts: Vec<&Point> = vec![a, b, c, d];
        pts.sort_by(|p, q| p.lex_cmp(q));
        // Sorted collinear points: the overlap, if any, is [pts[1], pts[2]].
        let lo = pts[1];
        let hi = pts[2];
        if !on_segment(lo, a, b) || !on_segment(lo, c, d) {
            return SegMeet::Empty;
        }
        return if lo == hi {
            SegMeet::At(lo.clone())
        } else {
            SegMeet::Overlap(lo.clone(), hi.clone())
        };
    }
    // Non-collinear, non-proper: the only candidates are segment endpoints
    // lying on the other segment.
    let mut found: Option<Point> = None;
    for p in [a, b] {
        if on_segment(p, c, d) {
            found = Some(min_point(found, p.clone()));
        }
    }
    for p in [c, d] {
        if on_segment(p, a, b) {
            found = Some(min_point(found, p.clone()));
        }
    }
    match found {
        Some(p) => SegMeet::At(p),
        None => SegMeet::Empty,
    }
}

fn min_point(cur: Option<Point>, cand: Point) -> Point {
    match cur {
        None => cand,
        Some(p) => {
            if cand.lex_cmp(&p) == Ordering::Less {
                cand
            } else {
                p
            }
        }
    }
}

/// A rational point exactly on the circle of radius `radius` around the
/// origin, at an angle of roughly `turn` full turns (counterclockwise from
/// the positive x axis).
///
/// Uses the Pythagorean parametrization `t ↦ ((1−t²)/(1+t²), 2t/(1+t²))`
/// per quadrant with the rational reparametrization `t = u/(2−u)`, so the
/// point lies *exactly* on the circle while the angle is only approximate
/// (within a few degrees). Cyclic order of the points is exact: the angle
/// is strictly increasing in `turn` over a full revolution.
pub fn circle_point(radius: &Rational, turn: &Rational) -> Point {
    let one = Rational::one();
    let four = Rational::from_integer(4.into());
    // Reduce turn into [0, 1).
    let floor = turn.floor();
    let frac = turn - floor;
    let scaled = &frac * &four;
    let quadrant = scaled.floor();
    let u = &scaled - &quadrant; // in [0, 1)
    let t = &u / (Rational::from_integer(2.into()) - &u); // in [0, 1)
    let t2 = &t * &t;
    let denom = &one + &t2;
    let x = (&one - &t2) / &denom;
    let y = (Rational::from_integer(2.into()) * &t) / denom;
    let q = quadrant
        .to_integer()
        .try_into()
        .map(|q: i64| q.rem_euclid(4))
        .unwrap_or(0);
    let (x, y) = match q {
        0 => (x, y),
        1 => (-y, x),
        2 => (-x, -y),
        _ => (y, -x),
    };
    Point {
        x: x * radius,
        y: y * radius,
    }
}
