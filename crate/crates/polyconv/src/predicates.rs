//! Primitive exact geometric predicates.
//!
//! Everything here is decided with rational arithmetic; there is no epsilon
//! anywhere in the crate. `orientation` is the single sign primitive the
//! rest of the geometry is built on.

use crate::counters;
use crate::point::{Line, Point, Segment};
use crate::rational::{sign_of, Rational};
use num_traits::Zero;

/// Exact cross product `(b - a) x (c - a)`.
///
/// Positive iff `c` lies strictly to the left of the directed line `a -> b`.
/// Counted as one orientation call.
pub fn cross(a: &Point, b: &Point, c: &Point) -> Rational {
    counters::bump_orientation();
    let abx = &b.x - &a.x;
    let aby = &b.y - &a.y;
    let acx = &c.x - &a.x;
    let acy = &c.y - &a.y;
    &(&abx * &acy) - &(&aby * &acx)
}

/// Sign of the cross product: +1 counterclockwise, 0 collinear, -1 clockwise.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> i8 {
    sign_of(&cross(a, b, c))
}

/// Membership of `p` in segment `s`.
///
/// Closed mode decides `p in conv{a, b}`. Half-open mode decides
/// `p in [a, b) = {(1-t)a + tb : 0 <= t < 1}`, which is empty when `a == b`.
pub fn point_on_segment(p: &Point, s: &Segment, half_open: bool) -> bool {
    if s.is_degenerate() {
        return !half_open && *p == s.a;
    }
    if half_open && *p == s.b {
        return false;
    }
    if orientation(&s.a, &s.b, p) != 0 {
        return false;
    }
    // Collinear: compare along the dominant axis.
    let (lo, hi, v) = if s.a.x != s.b.x {
        (&s.a.x, &s.b.x, &p.x)
    } else {
        (&s.a.y, &s.b.y, &p.y)
    };
    if lo <= hi {
        lo <= v && v <= hi
    } else {
        hi <= v && v <= lo
    }
}

/// Exact intersection of a closed segment with an infinite line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SegLineIntersection {
    Empty,
    Point(Point),
    Subsegment(Segment),
}

pub fn segment_line_intersection(s: &Segment, l: &Line) -> SegLineIntersection {
    let ca = cross(l.p0(), l.p1(), &s.a);
    let cb = cross(l.p0(), l.p1(), &s.b);
    let sa = sign_of(&ca);
    let sb = sign_of(&cb);
    match (sa, sb) {
        (0, 0) => {
            if s.is_degenerate() {
                SegLineIntersection::Point(s.a.clone())
            } else {
                SegLineIntersection::Subsegment(s.clone())
            }
        }
        (0, _) => SegLineIntersection::Point(s.a.clone()),
        (_, 0) => SegLineIntersection::Point(s.b.clone()),
        (x, y) if x == y => SegLineIntersection::Empty,
        _ => {
            // Endpoints strictly straddle the line: the crossing parameter is
            // t = ca / (ca - cb), exactly.
            let t = &ca / &(&ca - &cb);
            SegLineIntersection::Point(s.a.lerp(&s.b, &t))
        }
    }
}

/// Affine dimension of a finite point set:
/// -1 empty, 0 a single point, 1 collinear, 2 otherwise.
pub fn dimension_of_point_set(points: &[Point]) -> i8 {
    let Some(first) = points.first() else {
        return -1;
    };
    let Some(second) = points.iter().find(|p| *p != first) else {
        return 0;
    };
    for p in points {
        if orientation(first, second, p) != 0 {
            return 2;
        }
    }
    1
}

/// True when the (possibly degenerate) closed triangle `conv{a, b, c}`
/// contains `p`. Used by brute-force oracles.
pub fn point_in_triangle(p: &Point, a: &Point, b: &Point, c: &Point) -> bool {
    if orientation(a, b, c) == 0 {
        return point_on_segment(p, &Segment::new(a.clone(), b.clone()), false)
            || point_on_segment(p, &Segment::new(b.clone(), c.clone()), false)
            || point_on_segment(p, &Segment::new(a.clone(), c.clone()), false);
    }
    let s1 = orientation(a, b, p);
    let s2 = orientation(b, c, p);
    let s3 = orientation(c, a, p);
    (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)
}
