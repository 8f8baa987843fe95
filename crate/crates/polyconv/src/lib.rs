//! Exact computational geometry for polygon convexity over vertex
//! *sequences*.
//!
//! A polygon here is an ordered, finite sequence of rational points;
//! duplicates and collinear runs are allowed, and a polygon is convex when
//! the union of its edges equals the boundary of the convex hull of its
//! vertex set. The crate provides the definition-based oracle, the faster
//! equivalent tests (quasi-convexity on ordinary polygons, sub-4-gon and
//! incremental tests), hull-boundary coverage, line cuts of convex polygons,
//! dihedral uniqueness of convex orderings, and a verification harness with
//! exhaustive and randomized generators plus operation-count benchmarks.
//!
//! All predicates use exact rational arithmetic; there is no floating point
//! and no epsilon anywhere in a geometric decision.

pub mod convexity;
pub mod counters;
pub mod cut;
pub mod error;
pub mod harness;
pub mod hull;
pub mod ordering;
pub mod permutation;
pub mod point;
pub mod polygon;
pub mod predicates;
pub mod rational;

pub mod cli;

pub use convexity::{
    classify, covers_boundary, is_convex, is_convex_incremental, is_convex_ordinary_fast,
    is_convex_sub4, is_convex_subm, is_quasi_convex, to_one_side, ConvexityReport, Witness,
};
pub use cut::{check_apart, cut, CutResult};
pub use error::{Error, Result};
pub use hull::{convex_hull, Hull, HullBoundary};
pub use ordering::{
    count_strict_convex_orderings, strict_convex_ordering, verify_reduction_sets, OrderingResult,
};
pub use permutation::{dihedral_group, Permutation};
pub use point::{Line, Point, Segment};
pub use polygon::Polygon;
pub use rational::{parse_rational, Rational};
