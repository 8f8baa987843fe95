//! The polygon-as-sequence model.
//!
//! A polygon is a finite *sequence* of points: order matters, duplicates and
//! collinear runs are allowed, and edge `i` is the closed segment
//! `[V_i, V_{i+1}]` with the wraparound convention `V_n := V_0`. Lengths
//! 0, 1 and 2 are first-class; every predicate is total on them.

use crate::error::{Error, Result};
use crate::hull::{convex_hull, Hull};
use crate::point::{parse_point, ParsePointError, Point, Segment};
use crate::predicates::{dimension_of_point_set, orientation};
use serde::{Serialize, Serializer};
use std::collections::HashSet;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polygon {
    pub vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Self {
        Polygon { vertices }
    }

    pub fn empty() -> Self {
        Polygon { vertices: vec![] }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The `n` edges `[V_i, V_{i+1 mod n}]`. A 1-gon has the single
    /// degenerate edge `[V_0, V_0]`; a 0-gon has none.
    pub fn edges(&self) -> Vec<Segment> {
        let n = self.len();
        (0..n)
            .map(|i| Segment::new(self.vertices[i].clone(), self.vertices[(i + 1) % n].clone()))
            .collect()
    }

    /// All vertices pairwise distinct.
    pub fn is_ordinary(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.len());
        self.vertices.iter().all(|v| seen.insert(v))
    }

    /// No three vertices collinear (vacuously true for n <= 2).
    /// Exhaustive over all index triples, mirroring the definition.
    pub fn is_strict(&self) -> bool {
        let n = self.len();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    if orientation(&self.vertices[i], &self.vertices[j], &self.vertices[k]) == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Dimension of the vertex set: -1, 0, 1 or 2.
    pub fn dim(&self) -> i8 {
        dimension_of_point_set(&self.vertices)
    }

    pub fn hull(&self) -> Hull {
        convex_hull(&self.vertices)
    }

    /// The reduced polygon with vertex `alpha` deleted, order preserved.
    pub fn reduce(&self, alpha: usize) -> Result<Polygon> {
        if alpha >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: alpha,
                len: self.len(),
            });
        }
        let mut vertices = self.vertices.clone();
        vertices.remove(alpha);
        Ok(Polygon { vertices })
    }

    /// The sub-polygon of a strictly increasing index list.
    pub fn sub_polygon(&self, indices: &[usize]) -> Result<Polygon> {
        let n = self.len();
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::NotIncreasing);
            }
        }
        if let Some(&last) = indices.last() {
            if last >= n {
                return Err(Error::IndexOutOfRange { index: last, len: n });
            }
        }
        Ok(Polygon {
            vertices: indices.iter().map(|&i| self.vertices[i].clone()).collect(),
        })
    }

    /// Parse the text polygon format: one `"x y"` vertex per line, blank
    /// lines skipped, anything after `#` ignored.
    pub fn parse(text: &str) -> std::result::Result<Polygon, PolygonParseError> {
        let mut vertices = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.split_once('#') {
                Some((before, _)) => before,
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let point = parse_point(line).map_err(|source| PolygonParseError {
                line: lineno + 1,
                source,
            })?;
            vertices.push(point);
        }
        Ok(Polygon { vertices })
    }
}

impl fmt::Display for Polygon {
    /// Writes the text polygon format back out.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            writeln!(f, "{}", v)?;
        }
        Ok(())
    }
}

impl Serialize for Polygon {
    /// A polygon serializes as its vertex list.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(serializer)
    }
}

impl<const N: usize> From<[(i64, i64); N]> for Polygon {
    fn from(coords: [(i64, i64); N]) -> Self {
        Polygon::new(coords.into_iter().map(Point::from).collect())
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("line {line}: {source}")]
pub struct PolygonParseError {
    pub line: usize,
    pub source: ParsePointError,
}
