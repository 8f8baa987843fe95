//! Convexity notions and tests.
//!
//! A polygon is *convex* when the union of its edges equals the boundary of
//! the convex hull of its vertex set. That set equality is decided by two
//! one-sided checks, both exact:
//!
//! * quasi-convexity (`edg P` is contained in the boundary), decided edge by
//!   edge with the to-one-side predicate;
//! * boundary coverage (the boundary is contained in `edg P`), decided facet
//!   by facet with 1-D rational interval unions.
//!
//! [`is_convex`] is the definition-based oracle every faster test is
//! cross-validated against. Each negative verdict carries a witness.

use crate::counters;
use crate::error::{Error, Result};
use crate::hull::{convex_hull, Hull, HullBoundary};
use crate::point::{Point, Segment};
use crate::polygon::Polygon;
use crate::predicates::{orientation, point_on_segment};
use crate::rational::{rat_int, Rational};
use itertools::Itertools;
use serde::Serialize;
use std::collections::HashMap;

/// Orientation signs of a point family against a directed segment line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SideVerdict {
    pub all_nonneg: bool,
    pub all_nonpos: bool,
}

impl SideVerdict {
    /// The to-one-side relation holds iff one weak sign covers the family.
    pub fn holds(&self) -> bool {
        self.all_nonneg || self.all_nonpos
    }
}

/// Signs of every point against the line of a non-degenerate segment,
/// together with the first strictly-positive and strictly-negative indices
/// (the split witness when the relation fails).
pub fn side_verdict(points: &[Point], seg: &Segment) -> (SideVerdict, Option<usize>, Option<usize>) {
    debug_assert!(!seg.is_degenerate());
    let mut first_pos = None;
    let mut first_neg = None;
    for (idx, p) in points.iter().enumerate() {
        match orientation(&seg.a, &seg.b, p) {
            1 => {
                if first_pos.is_none() {
                    first_pos = Some(idx);
                }
            }
            -1 => {
                if first_neg.is_none() {
                    first_neg = Some(idx);
                }
            }
            _ => {}
        }
    }
    (
        SideVerdict {
            all_nonneg: first_neg.is_none(),
            all_nonpos: first_pos.is_none(),
        },
        first_pos,
        first_neg,
    )
}

/// The to-one-side relation: some line containing `seg` supports the whole
/// point family.
///
/// For a non-degenerate segment the supporting line is forced to be the
/// segment's own line, so the relation reduces to a shared weak sign. For a
/// degenerate segment the relation asks for *any* supporting line through
/// the point, which exists iff the point is not interior to the hull of the
/// family together with the point.
pub fn to_one_side(points: &[Point], seg: &Segment) -> bool {
    if seg.is_degenerate() {
        let mut all: Vec<Point> = points.to_vec();
        all.push(seg.a.clone());
        let hull = convex_hull(&all);
        !hull.contains_interior(&seg.a)
    } else {
        side_verdict(points, seg).0.holds()
    }
}

/// Quasi-convexity: the polygon is to one side of each of its edges.
/// On failure reports `(edge, j, k)` with vertices `j` and `k` strictly on
/// opposite sides of the failing edge's line.
pub fn quasi_convex_witness(poly: &Polygon) -> Option<(usize, usize, usize)> {
    let n = poly.len();
    for (e, edge) in poly.edges().iter().enumerate() {
        if edge.is_degenerate() {
            if !to_one_side(&poly.vertices, edge) {
                // Interior vertex: certify with a split of the horizontal
                // line through it (any line through an interior point has
                // vertices strictly on both sides).
                let probe = Point::new(&edge.a.x + &rat_int(1), edge.a.y.clone());
                let horiz = Segment::new(edge.a.clone(), probe);
                let (_, pos, neg) = side_verdict(&poly.vertices, &horiz);
                return Some((e, pos.expect("interior point splits every line"),
                             neg.expect("interior point splits every line")));
            }
        } else {
            let (verdict, pos, neg) = side_verdict(&poly.vertices, edge);
            if !verdict.holds() {
                return Some((e, pos.unwrap(), neg.unwrap()));
            }
        }
    }
    None
}

pub fn is_quasi_convex(poly: &Polygon) -> bool {
    quasi_convex_witness(poly).is_none()
}

/// Boundary of the hull of the polygon's vertex set.
pub fn boundary_of_hull(poly: &Polygon) -> HullBoundary {
    poly.hull().boundary()
}

/// Parameter of `p` along the segment `[a, b]`, assuming `p` lies on it.
fn param_on(a: &Point, b: &Point, p: &Point) -> Rational {
    if a.x != b.x {
        (&p.x - &a.x) / (&b.x - &a.x)
    } else {
        (&p.y - &a.y) / (&b.y - &a.y)
    }
}

/// Closed 1-D intervals (as facet parameters in `[0, 1]`) covered by the
/// polygon's edges on each facet of `hull`. For `dim <= 1` there is a single
/// pseudo-facet (the hull segment, or the hull point with a trivial
/// parameterization). Intervals are returned in normal form: sorted,
/// disjoint and maximal, so two edge sets cover the same points iff their
/// profiles are structurally equal.
pub(crate) fn edge_coverage_profile(poly: &Polygon, hull: &Hull) -> Vec<Vec<(Rational, Rational)>> {
    let facets: Vec<Segment> = match hull.dim {
        -1 => return vec![],
        0 => {
            // Any edge on the single hull point covers it.
            let covered = poly
                .edges()
                .iter()
                .any(|e| e.is_degenerate() && e.a == hull.extremes[0]);
            return vec![if covered {
                vec![(rat_int(0), rat_int(0))]
            } else {
                vec![]
            }];
        }
        1 => vec![Segment::new(hull.extremes[0].clone(), hull.extremes[1].clone())],
        _ => hull.facets(),
    };

    let edges = poly.edges();
    facets
        .iter()
        .map(|facet| {
            let mut intervals: Vec<(Rational, Rational)> = Vec::new();
            for e in &edges {
                if point_on_segment(&e.a, facet, false) && point_on_segment(&e.b, facet, false) {
                    let ta = param_on(&facet.a, &facet.b, &e.a);
                    let tb = param_on(&facet.a, &facet.b, &e.b);
                    let (lo, hi) = if ta <= tb { (ta, tb) } else { (tb, ta) };
                    intervals.push((lo, hi));
                }
            }
            normalize_intervals(intervals)
        })
        .collect()
}

/// Merge closed intervals into sorted disjoint maximal form.
fn normalize_intervals(mut intervals: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    intervals.sort();
    let mut out: Vec<(Rational, Rational)> = Vec::new();
    for (lo, hi) in intervals {
        match out.last_mut() {
            Some((_, chi)) if lo <= *chi => {
                if hi > *chi {
                    *chi = hi;
                }
            }
            _ => out.push((lo, hi)),
        }
    }
    out
}

/// Coverage check `boundary(conv P) is a subset of edg P`, with a rational
/// witness point inside the first gap on failure. The witness is the gap
/// midpoint, so it never touches a covered point.
pub fn covers_boundary_witness(poly: &Polygon) -> Option<(Point, usize)> {
    let hull = poly.hull();
    if hull.dim == -1 {
        return None;
    }
    if hull.dim == 0 {
        // n >= 1 and every vertex equals the hull point, whose degenerate
        // edge covers it; recompute honestly anyway.
        let profile = edge_coverage_profile(poly, &hull);
        return if profile[0].is_empty() {
            Some((hull.extremes[0].clone(), 0))
        } else {
            None
        };
    }
    let facets: Vec<Segment> = if hull.dim == 1 {
        vec![Segment::new(hull.extremes[0].clone(), hull.extremes[1].clone())]
    } else {
        hull.facets()
    };
    let profile = edge_coverage_profile(poly, &hull);
    for (f, covered) in profile.iter().enumerate() {
        let mut reach = rat_int(0);
        let mut gap_at: Option<Rational> = None;
        for (lo, hi) in covered {
            if *lo > reach {
                gap_at = Some((&reach + lo) / rat_int(2));
                break;
            }
            if *hi > reach {
                reach = hi.clone();
            }
        }
        if gap_at.is_none() && reach < rat_int(1) {
            gap_at = Some((&reach + &rat_int(1)) / rat_int(2));
        }
        if let Some(t) = gap_at {
            let facet = &facets[f];
            return Some((facet.a.lerp(&facet.b, &t), f));
        }
    }
    None
}

pub fn covers_boundary(poly: &Polygon) -> bool {
    covers_boundary_witness(poly).is_none()
}

/// The definition-based convexity oracle: `edg P = boundary(conv P)`,
/// decided as containment in both directions. Ground truth for every other
/// test in the crate. Counted as one oracle call.
pub fn is_convex(poly: &Polygon) -> bool {
    counters::bump_oracle();
    is_quasi_convex(poly) && covers_boundary(poly)
}

/// Convexity test for ordinary polygons: quasi-convexity alone suffices.
pub fn is_convex_ordinary_fast(poly: &Polygon) -> Result<bool> {
    if !poly.is_ordinary() {
        return Err(Error::NotOrdinary);
    }
    Ok(is_quasi_convex(poly))
}

/// Sufficient test for any polygon (equivalent to convexity on ordinary
/// ones): every sub-4-gon is convex by the oracle. Trivially true for n < 4.
pub fn is_convex_sub4(poly: &Polygon) -> bool {
    let n = poly.len();
    if n < 4 {
        return true;
    }
    (0..n)
        .combinations(4)
        .all(|idx| is_convex(&poly.sub_polygon(&idx).expect("increasing indices")))
}

/// Every sub-m-gon convex by the oracle, for a fixed m in `4..=n`.
pub fn is_convex_subm(poly: &Polygon, m: usize) -> Result<bool> {
    let n = poly.len();
    if m < 4 || m > n {
        return Err(Error::BadM { m, n });
    }
    Ok((0..n)
        .combinations(m)
        .all(|idx| is_convex(&poly.sub_polygon(&idx).expect("increasing indices"))))
}

const INCREMENTAL_MAX: usize = 63;

/// Incremental convexity test for ordinary polygons: an n-gon with n >= 5 is
/// convex iff all n reduced polygons are. Bases n <= 4 fall back to the
/// oracle. Memoized on the set of surviving original indices, which
/// collapses the naive n! recursion to at most 2^n subset evaluations.
pub fn is_convex_incremental(poly: &Polygon) -> Result<bool> {
    incremental_impl(poly, true)
}

/// The same recursion without memoization; exists so the cost model of the
/// naive test (A_n = n * A_{n-1} oracle calls) can be measured directly.
pub fn is_convex_incremental_unmemoized(poly: &Polygon) -> Result<bool> {
    incremental_impl(poly, false)
}

fn incremental_impl(poly: &Polygon, memoize: bool) -> Result<bool> {
    if !poly.is_ordinary() {
        return Err(Error::NotOrdinary);
    }
    let n = poly.len();
    if n > INCREMENTAL_MAX {
        return Err(Error::GuardrailExceeded(format!(
            "incremental test limited to n <= {INCREMENTAL_MAX}, got {n}"
        )));
    }
    let alive: Vec<usize> = (0..n).collect();
    let mut memo: Option<HashMap<u64, bool>> = if memoize { Some(HashMap::new()) } else { None };
    Ok(incremental_rec(poly, &alive, &mut memo))
}

fn incremental_rec(poly: &Polygon, alive: &[usize], memo: &mut Option<HashMap<u64, bool>>) -> bool {
    if alive.len() <= 4 {
        return is_convex(&poly.sub_polygon(alive).expect("increasing indices"));
    }
    let key: u64 = alive.iter().fold(0u64, |m, &i| m | (1u64 << i));
    if let Some(table) = memo.as_ref() {
        if let Some(&cached) = table.get(&key) {
            return cached;
        }
    }
    let mut result = true;
    for drop in 0..alive.len() {
        let mut child: Vec<usize> = Vec::with_capacity(alive.len() - 1);
        child.extend(alive.iter().take(drop));
        child.extend(alive.iter().skip(drop + 1));
        if !incremental_rec(poly, &child, memo) {
            result = false;
            break;
        }
    }
    if let Some(table) = memo.as_mut() {
        table.insert(key, result);
    }
    result
}

/// Witness attached to a negative verdict.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Edge `edge` fails to-one-side: vertices `j` and `k` lie strictly on
    /// opposite sides of its line (of a horizontal probe line through the
    /// vertex, when the edge is a single interior point).
    SplitEdge { edge: usize, j: usize, k: usize },
    /// A hull-boundary point on facet `facet` not covered by any edge.
    GapPoint {
        #[serde(serialize_with = "crate::rational::serde_string::serialize")]
        x: Rational,
        #[serde(serialize_with = "crate::rational::serde_string::serialize")]
        y: Rational,
        facet: usize,
    },
}

/// Full classification of a polygon, with a witness for the strongest
/// failed property.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConvexityReport {
    pub n: usize,
    pub dim: i8,
    pub ordinary: bool,
    pub strict: bool,
    pub quasi_convex: bool,
    pub convex: bool,
    pub witness: Option<Witness>,
}

pub fn classify(poly: &Polygon) -> ConvexityReport {
    let quasi_witness = quasi_convex_witness(poly);
    let quasi = quasi_witness.is_none();
    let (covers, gap) = match covers_boundary_witness(poly) {
        None => (true, None),
        Some((p, facet)) => (false, Some((p, facet))),
    };
    let witness = match (&quasi_witness, quasi && !covers) {
        (Some((edge, j, k)), _) => Some(Witness::SplitEdge {
            edge: *edge,
            j: *j,
            k: *k,
        }),
        (None, true) => gap.map(|(p, facet)| Witness::GapPoint {
            x: p.x,
            y: p.y,
            facet,
        }),
        _ => None,
    };
    ConvexityReport {
        n: poly.len(),
        dim: poly.dim(),
        ordinary: poly.is_ordinary(),
        strict: poly.is_strict(),
        quasi_convex: quasi,
        convex: quasi && covers,
        witness,
    }
}

/// Direct form of the quasi-convexity definition, used to cross-validate the
/// per-edge to-one-side test: an edge lies in the hull boundary iff some
/// facet contains both of its endpoints (for `dim <= 1` every edge lies in
/// the hull, which equals its own boundary).
pub fn quasi_convex_by_containment(poly: &Polygon) -> bool {
    let hull = poly.hull();
    match hull.dim {
        -1 | 0 | 1 => true,
        _ => {
            let facets = hull.facets();
            poly.edges().iter().all(|e| {
                facets.iter().any(|f| {
                    point_on_segment(&e.a, f, false) && point_on_segment(&e.b, f, false)
                })
            })
        }
    }
}

// Keep the trait imports used only through method syntax visible to rustc.
#[allow(unused_imports)]
use num_traits::sign::Signed as _;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn square() -> Polygon {
        Polygon::from([(0, 0), (1, 0), (1, 1), (0, 1)])
    }

    fn square_0213() -> Polygon {
        Polygon::from([(0, 0), (1, 1), (1, 0), (0, 1)])
    }

    /// (V0, V1, V2, V1) with V0=(1,0), V1=(0,0), V2=(0,1): quasi-convex but
    /// not convex; the uncovered facet midpoint is (1/2, 1/2).
    fn triangle_revisit() -> Polygon {
        Polygon::from([(1, 0), (0, 0), (0, 1), (0, 0)])
    }

    fn double_square() -> Polygon {
        Polygon::from([
            (0, 0),
            (1, 0),
            (1, 1),
            (0, 1),
            (0, 0),
            (1, 0),
            (1, 1),
            (0, 1),
        ])
    }

    fn intro_hexagon() -> Polygon {
        Polygon::from([(3, 0), (8, 1), (11, 6), (6, 7), (2, 5), (1, 1)])
    }

    #[test]
    fn to_one_side_cases() {
        let corners = square().vertices;
        let bottom = Segment::new(Point::from((0, 0)), Point::from((1, 0)));
        assert!(to_one_side(&corners, &bottom));

        // Diagonal of the square: V1 and V3 sit strictly on opposite sides.
        let diag = Segment::new(Point::from((0, 0)), Point::from((1, 1)));
        assert!(!to_one_side(&corners, &diag));

        let single = vec![Point::from((0, 0))];
        let dot = Segment::new(Point::from((0, 0)), Point::from((0, 0)));
        assert!(to_one_side(&single, &dot));

        // Degenerate segment at an interior point has no supporting line.
        let tri = vec![Point::from((0, 0)), Point::from((3, 0)), Point::from((0, 3))];
        let inner = Segment::new(Point::from((1, 1)), Point::from((1, 1)));
        assert!(!to_one_side(&tri, &inner));
        // ...but on the boundary it does.
        let on_edge = Segment::new(Point::from((1, 0)), Point::from((1, 0)));
        assert!(to_one_side(&tri, &on_edge));
    }

    #[test]
    fn quasi_convexity() {
        assert!(is_quasi_convex(&triangle_revisit()));
        let w = quasi_convex_witness(&square_0213()).unwrap();
        // Edge [V0, V2] splits V1=(1,1)? No: in sequence (V0,V2,V1,V3) the
        // first edge is [(0,0),(1,1)] and the split vertices are the other
        // two corners.
        assert_eq!(w.0, 0);
        assert!(is_quasi_convex(&Polygon::from([(0, 0), (1, 0), (2, 0)])));
        assert!(is_quasi_convex(&Polygon::empty()));
        assert!(is_quasi_convex(&Polygon::from([(5, 5)])));
    }

    #[test]
    fn boundary_descriptions() {
        assert_eq!(
            boundary_of_hull(&square()),
            HullBoundary::Facets(square().hull().facets())
        );
        assert_eq!(
            boundary_of_hull(&Polygon::from([(0, 0), (2, 0), (1, 0)])),
            HullBoundary::Segment(Segment::new(Point::from((0, 0)), Point::from((2, 0))))
        );
        assert_eq!(
            boundary_of_hull(&Polygon::from([(7, 7)])),
            HullBoundary::Point(Point::from((7, 7)))
        );
        assert_eq!(boundary_of_hull(&Polygon::empty()), HullBoundary::Empty);
    }

    #[test]
    fn coverage() {
        assert!(covers_boundary(&square()));
        assert!(covers_boundary(&double_square()));
        let (gap, facet) = covers_boundary_witness(&triangle_revisit()).unwrap();
        assert_eq!(gap, Point::new(rat(1, 2), rat(1, 2)));
        assert_eq!(facet, 1);
    }

    #[test]
    fn oracle_on_named_polygons() {
        assert!(is_convex(&square()));
        assert!(!is_convex(&square_0213()));
        assert!(is_convex(&double_square()));
        assert!(!is_convex(&double_square().reduce(1).unwrap()));
        assert!(is_convex(&intro_hexagon()));
        // All n-gons with n <= 3 are convex.
        assert!(is_convex(&Polygon::empty()));
        assert!(is_convex(&Polygon::from([(2, 3)])));
        assert!(is_convex(&Polygon::from([(0, 0), (5, 1)])));
        assert!(is_convex(&Polygon::from([(0, 0), (4, 1), (1, 3)])));
        // The intro 8-gon traces the unit square twice and is convex; its
        // reduction dropping the last vertex is not.
        let p7 = double_square().reduce(7).unwrap();
        assert!(!is_convex(&p7));
    }

    #[test]
    fn fast_equals_oracle_on_ordinary() {
        assert_eq!(is_convex_ordinary_fast(&square()).unwrap(), true);
        assert_eq!(is_convex_ordinary_fast(&square_0213()).unwrap(), false);
        assert_eq!(is_convex_ordinary_fast(&intro_hexagon()).unwrap(), true);
        assert_eq!(
            is_convex_ordinary_fast(&double_square()),
            Err(Error::NotOrdinary)
        );
    }

    #[test]
    fn sub4_test() {
        assert!(!is_convex_sub4(&square_0213()));
        assert!(is_convex_sub4(&intro_hexagon()));
        assert!(is_convex_sub4(&Polygon::from([(0, 0), (4, 1), (1, 3)])));
        // Cross-check against an explicit loop over the quadruples.
        let hex = intro_hexagon();
        let direct = (0..6)
            .combinations(4)
            .all(|idx| is_convex(&hex.sub_polygon(&idx).unwrap()));
        assert_eq!(is_convex_sub4(&hex), direct);
    }

    #[test]
    fn subm_test() {
        assert_eq!(is_convex_subm(&intro_hexagon(), 5).unwrap(), true);
        let padded = Polygon::from([(0, 0), (1, 1), (1, 0), (0, 1), (2, 0)]);
        assert_eq!(is_convex_subm(&padded, 4).unwrap(), false);
        assert_eq!(is_convex_subm(&intro_hexagon(), 6).unwrap(), true);
        assert_eq!(
            is_convex_subm(&square(), 3),
            Err(Error::BadM { m: 3, n: 4 })
        );
        assert_eq!(
            is_convex_subm(&square(), 5),
            Err(Error::BadM { m: 5, n: 4 })
        );
    }

    #[test]
    fn incremental_test() {
        assert_eq!(is_convex_incremental(&intro_hexagon()).unwrap(), true);
        assert_eq!(is_convex_incremental(&square_0213()).unwrap(), false);
        let pentagon = Polygon::from([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]);
        assert!(is_convex(&pentagon));
        assert_eq!(is_convex_incremental(&pentagon).unwrap(), true);
        assert_eq!(
            is_convex_incremental(&double_square()),
            Err(Error::NotOrdinary)
        );
        assert_eq!(
            is_convex_incremental_unmemoized(&pentagon).unwrap(),
            true
        );
    }

    #[test]
    fn classify_reports() {
        let r = classify(&square());
        assert!(r.convex && r.quasi_convex && r.ordinary && r.strict);
        assert_eq!(r.witness, None);

        let r = classify(&triangle_revisit());
        assert!(r.quasi_convex && !r.convex && !r.ordinary && !r.strict);
        assert_eq!(
            r.witness,
            Some(Witness::GapPoint {
                x: rat(1, 2),
                y: rat(1, 2),
                facet: 1
            })
        );

        let r = classify(&square_0213());
        assert!(!r.quasi_convex && !r.convex);
        assert!(matches!(r.witness, Some(Witness::SplitEdge { .. })));
    }

    #[test]
    fn report_invariants_on_samples() {
        let samples = vec![
            square(),
            square_0213(),
            triangle_revisit(),
            double_square(),
            intro_hexagon(),
            Polygon::empty(),
            Polygon::from([(1, 1)]),
            Polygon::from([(0, 0), (1, 0), (0, 0), (2, 0)]),
        ];
        for poly in samples {
            let r = classify(&poly);
            assert!(!r.convex || r.quasi_convex, "convex implies quasi-convex");
            if r.dim <= 1 {
                assert!(r.convex, "dim <= 1 implies convex: {poly:?}");
            }
            if r.ordinary {
                assert_eq!(r.convex, r.quasi_convex, "ordinary: convex iff quasi");
            }
            if r.strict {
                assert!(r.ordinary, "strict implies ordinary");
            }
            assert_eq!(
                is_quasi_convex(&poly),
                quasi_convex_by_containment(&poly),
                "to-one-side vs containment on {poly:?}"
            );
        }
    }

    #[test]
    fn witness_json_shape() {
        let w = Witness::SplitEdge { edge: 0, j: 1, k: 3 };
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"split_edge":{"edge":0,"j":1,"k":3}}"#
        );
        let g = Witness::GapPoint {
            x: rat(1, 2),
            y: rat(1, 2),
            facet: 1,
        };
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"gap_point":{"x":"1/2","y":"1/2","facet":1}}"#
        );
    }
}
