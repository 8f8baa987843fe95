//! Points, segments and lines over exact rational coordinates.

use crate::rational::{parse_rational, Rational};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// A point (interchangeably, a vector) of the rational plane.
///
/// `Ord` is lexicographic on `(x, y)`; the hull construction and all
/// canonical orderings rely on it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Point) -> Point {
        Point::new(
            (&self.x + &other.x) / Rational::from_integer(2.into()),
            (&self.y + &other.y) / Rational::from_integer(2.into()),
        )
    }

    /// `self + t * (other - self)`, the affine interpolation used when
    /// materializing intersection points and witnesses.
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        Point::new(
            &self.x + &(t * &(&other.x - &self.x)),
            &self.y + &(t * &(&other.y - &self.y)),
        )
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point::new(
            Rational::from_integer(x.into()),
            Rational::from_integer(y.into()),
        )
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Point", 2)?;
        s.serialize_field("x", &self.x.to_string())?;
        s.serialize_field("y", &self.y.to_string())?;
        s.end()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParsePointError {
    #[error("expected two whitespace-separated rationals, got {0:?}")]
    WrongArity(String),
    #[error("bad coordinate: {0}")]
    BadCoordinate(#[from] crate::rational::ParseRationalError),
}

/// Parse `"x y"` with rational coordinates.
pub fn parse_point(s: &str) -> Result<Point, ParsePointError> {
    let mut it = s.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(x), Some(y), None) => Ok(Point::new(parse_rational(x)?, parse_rational(y)?)),
        _ => Err(ParsePointError::WrongArity(s.to_owned())),
    }
}

/// Closed segment `conv{a, b}`; degenerate (a single point) when `a == b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn midpoint(&self) -> Point {
        self.a.midpoint(&self.b)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.a, self.b)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("a line requires two distinct points")]
pub struct DegenerateLine;

/// The unique infinite line through two distinct points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Line {
    p0: Point,
    p1: Point,
}

impl Line {
    pub fn through(p0: Point, p1: Point) -> Result<Self, DegenerateLine> {
        if p0 == p1 {
            Err(DegenerateLine)
        } else {
            Ok(Line { p0, p1 })
        }
    }

    pub fn p0(&self) -> &Point {
        &self.p0
    }

    pub fn p1(&self) -> &Point {
        &self.p1
    }

    /// The same line with its defining points swapped.
    pub fn reversed(&self) -> Line {
        Line {
            p0: self.p1.clone(),
            p1: self.p0.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn point_parsing() {
        assert_eq!(parse_point("1/2 -3").unwrap(), Point::new(rat(1, 2), rat(-3, 1)));
        assert!(parse_point("1").is_err());
        assert!(parse_point("1 2 3").is_err());
    }

    #[test]
    fn point_lerp_and_midpoint() {
        let a = Point::from((0, 0));
        let b = Point::from((2, 4));
        assert_eq!(a.midpoint(&b), Point::from((1, 2)));
        assert_eq!(a.lerp(&b, &rat(1, 4)), Point::new(rat(1, 2), rat(1, 1)));
    }

    #[test]
    fn line_requires_distinct_points() {
        assert!(Line::through(Point::from((1, 1)), Point::from((1, 1))).is_err());
        assert!(Line::through(Point::from((0, 0)), Point::from((1, 1))).is_ok());
    }
}
