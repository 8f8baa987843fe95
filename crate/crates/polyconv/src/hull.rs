//! Convex hulls of rational point sets, with explicit dimension.

use crate::point::{Point, Segment};
use crate::predicates::{dimension_of_point_set, orientation, point_on_segment};

/// Convex hull of a finite point set.
///
/// `extremes` lists exactly the extreme points of the hull:
/// counterclockwise when `dim == 2` (no three consecutive collinear),
/// the two endpoints when `dim == 1`, a single point when `dim == 0`,
/// and empty when `dim == -1` (empty input).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hull {
    pub dim: i8,
    pub extremes: Vec<Point>,
}

/// Boundary of a hull as a subset of the plane. For a segment or a point the
/// topological boundary in the plane is the set itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HullBoundary {
    Empty,
    Point(Point),
    Segment(Segment),
    /// Circular facet list `[E_k, E_{k+1}]` over the extreme points.
    Facets(Vec<Segment>),
}

/// Monotone-chain construction with strict turn tests, so collinear
/// non-extreme points are dropped and only extreme points remain.
pub fn convex_hull(points: &[Point]) -> Hull {
    let mut sorted: Vec<Point> = points.to_vec();
    sorted.sort();
    sorted.dedup();

    match sorted.len() {
        0 => return Hull { dim: -1, extremes: vec![] },
        1 => {
            return Hull {
                dim: 0,
                extremes: sorted,
            }
        }
        _ => {}
    }

    if dimension_of_point_set(&sorted) == 1 {
        // Collinear: the lexicographic extremes are the segment endpoints.
        let lo = sorted.first().unwrap().clone();
        let hi = sorted.last().unwrap().clone();
        return Hull {
            dim: 1,
            extremes: vec![lo, hi],
        };
    }

    let mut lower: Vec<Point> = Vec::new();
    for p in &sorted {
        while lower.len() >= 2
            && orientation(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in sorted.iter().rev() {
        while upper.len() >= 2
            && orientation(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Hull {
        dim: 2,
        extremes: lower,
    }
}

impl Hull {
    /// Facet segments `[E_k, E_{k+1}]` in counterclockwise order.
    /// Empty unless `dim == 2`.
    pub fn facets(&self) -> Vec<Segment> {
        if self.dim != 2 {
            return vec![];
        }
        let m = self.extremes.len();
        (0..m)
            .map(|k| Segment::new(self.extremes[k].clone(), self.extremes[(k + 1) % m].clone()))
            .collect()
    }

    pub fn boundary(&self) -> HullBoundary {
        match self.dim {
            -1 => HullBoundary::Empty,
            0 => HullBoundary::Point(self.extremes[0].clone()),
            1 => HullBoundary::Segment(Segment::new(
                self.extremes[0].clone(),
                self.extremes[1].clone(),
            )),
            _ => HullBoundary::Facets(self.facets()),
        }
    }

    /// Exact membership of `p` in the hull (closed).
    pub fn contains(&self, p: &Point) -> bool {
        match self.dim {
            -1 => false,
            0 => *p == self.extremes[0],
            1 => point_on_segment(
                p,
                &Segment::new(self.extremes[0].clone(), self.extremes[1].clone()),
                false,
            ),
            _ => {
                let m = self.extremes.len();
                (0..m).all(|k| {
                    orientation(&self.extremes[k], &self.extremes[(k + 1) % m], p) >= 0
                })
            }
        }
    }

    /// Exact membership of `p` in the hull boundary.
    pub fn on_boundary(&self, p: &Point) -> bool {
        match self.dim {
            -1 | 0 | 1 => self.contains(p),
            _ => self
                .facets()
                .iter()
                .any(|f| point_on_segment(p, f, false)),
        }
    }

    /// Exact membership of `p` in the open interior (empty unless `dim == 2`).
    pub fn contains_interior(&self, p: &Point) -> bool {
        if self.dim != 2 {
            return false;
        }
        let m = self.extremes.len();
        (0..m).all(|k| orientation(&self.extremes[k], &self.extremes[(k + 1) % m], p) > 0)
    }
}
