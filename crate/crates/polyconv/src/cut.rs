//! Cutting a convex polygon with a line through its hull interior, and the
//! apart relation on strictly convex polygons.

use crate::convexity::{is_convex, to_one_side};
use crate::error::{Error, Result};
use crate::point::{Line, Point, Segment};
use crate::polygon::Polygon;
use crate::predicates::{orientation, segment_line_intersection, SegLineIntersection};
use serde::Serialize;

/// Result of cutting a convex polygon along a line.
///
/// The line meets the edge union in exactly two points `p in [V_i, V_{i+1})`
/// and `q in [V_j, V_{j+1})` with `i < j` (half-open edge convention). The
/// two halves are
/// `plus  = (V_0, ..., V_i, P, Q, V_{j+1}, ..., V_{n-1})` and
/// `minus = (P, V_{i+1}, ..., V_j, Q)`.
/// For strict input both halves are convex; with `allow_nonstrict` their
/// convexity is reported, never asserted.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CutResult {
    pub i: usize,
    pub j: usize,
    pub p: Point,
    pub q: Point,
    pub plus: Polygon,
    pub minus: Polygon,
    pub plus_convex: bool,
    pub minus_convex: bool,
}

/// Intersection of the half-open edge `[a, b)` with a line. A non-degenerate
/// edge collinear with the line cannot occur on a convex polygon cut by an
/// interior-crossing line; report it as an invariant breach.
fn half_open_hit(edge: &Segment, line: &Line) -> Result<Option<Point>> {
    if edge.is_degenerate() {
        return Ok(None);
    }
    match segment_line_intersection(edge, line) {
        SegLineIntersection::Empty => Ok(None),
        SegLineIntersection::Point(p) => Ok(if p == edge.b { None } else { Some(p) }),
        SegLineIntersection::Subsegment(_) => Err(Error::InvariantBreach(
            "edge collinear with an interior-crossing line".into(),
        )),
    }
}

/// Cut `poly` along `line`.
///
/// Preconditions: the polygon is convex (checked by the oracle); the line
/// crosses the open hull interior, decided exactly as "some vertex strictly
/// left and some strictly right, with a 2-dimensional hull"; and the polygon
/// is strict unless `allow_nonstrict` is set.
pub fn cut(poly: &Polygon, line: &Line, allow_nonstrict: bool) -> Result<CutResult> {
    if !is_convex(poly) {
        return Err(Error::NotConvex);
    }
    let mut has_left = false;
    let mut has_right = false;
    for v in &poly.vertices {
        match orientation(line.p0(), line.p1(), v) {
            1 => has_left = true,
            -1 => has_right = true,
            _ => {}
        }
    }
    if poly.dim() != 2 || !has_left || !has_right {
        return Err(Error::NoInteriorCrossing);
    }
    let strict = poly.is_strict();
    if !strict && !allow_nonstrict {
        return Err(Error::StrictnessRequired);
    }

    let n = poly.len();
    let edges = poly.edges();
    let mut hits: Vec<(usize, Point)> = Vec::new();
    for (e, edge) in edges.iter().enumerate() {
        if let Some(p) = half_open_hit(edge, line)? {
            hits.push((e, p));
        }
    }

    let (i, p) = hits
        .first()
        .cloned()
        .ok_or_else(|| Error::InvariantBreach("no edge meets the cutting line".into()))?;
    let q = hits
        .iter()
        .map(|(_, pt)| pt)
        .find(|pt| **pt != p)
        .cloned()
        .ok_or_else(|| Error::InvariantBreach("expected two distinct intersection points".into()))?;
    if hits.iter().any(|(_, pt)| *pt != p && *pt != q) {
        return Err(Error::InvariantBreach(
            "more than two distinct intersection points on a convex polygon".into(),
        ));
    }

    let q_edges: Vec<usize> = hits
        .iter()
        .filter(|(_, pt)| *pt == q)
        .map(|(e, _)| *e)
        .collect();
    let j = choose_q_edge(poly, line, i, &q_edges);

    let mut plus: Vec<Point> = Vec::with_capacity(i + 1 + 2 + (n - 1 - j));
    plus.extend(poly.vertices[..=i].iter().cloned());
    plus.push(p.clone());
    plus.push(q.clone());
    plus.extend(poly.vertices[j + 1..].iter().cloned());
    let plus = Polygon::new(plus);

    let mut minus: Vec<Point> = Vec::with_capacity(j - i + 2);
    minus.push(p.clone());
    minus.extend(poly.vertices[i + 1..=j].iter().cloned());
    minus.push(q.clone());
    let minus = Polygon::new(minus);

    let plus_convex = is_convex(&plus);
    let minus_convex = is_convex(&minus);
    if strict && !(plus_convex && minus_convex) {
        return Err(Error::InvariantBreach(
            "cut of a strictly convex polygon produced a non-convex half".into(),
        ));
    }

    Ok(CutResult {
        i,
        j,
        p,
        q,
        plus,
        minus,
        plus_convex,
        minus_convex,
    })
}

/// Pick the edge index for the second intersection point.
///
/// For strict input the half-open edges are pairwise disjoint, so there is a
/// single candidate. Degenerate inputs can put the point on several edges
/// (the boundary may walk back and forth along a facet); prefer the
/// candidate whose start vertex lies strictly on the opposite side of the
/// line from `V_{i+1}`, falling back to the first candidate in scan order.
/// This matches the conventional labeling of the back-and-forth example and
/// is independent of the line's own orientation.
fn choose_q_edge(poly: &Polygon, line: &Line, i: usize, q_edges: &[usize]) -> usize {
    debug_assert!(!q_edges.is_empty());
    if q_edges.len() == 1 {
        return q_edges[0];
    }
    let n = poly.len();
    let side_next = orientation(line.p0(), line.p1(), &poly.vertices[(i + 1) % n]);
    if side_next != 0 {
        if let Some(&e) = q_edges
            .iter()
            .find(|&&e| orientation(line.p0(), line.p1(), &poly.vertices[e]) == -side_next)
        {
            return e;
        }
    }
    q_edges[0]
}

/// The apart check of the strictly-convex diagonal proposition: for
/// `1 <= alpha < i < beta <= n-1`, are `V_alpha` and `V_beta` to one side of
/// the diagonal `[V_0, V_i]`? On strictly convex input this is always false,
/// which the verification harness checks exhaustively.
pub fn check_apart(poly: &Polygon, alpha: usize, i: usize, beta: usize) -> Result<bool> {
    if !(poly.is_strict() && is_convex(poly)) {
        return Err(Error::PreconditionViolated(
            "check_apart requires a strictly convex polygon".into(),
        ));
    }
    let n = poly.len();
    if !(1 <= alpha && alpha < i && i < beta && beta <= n - 1) {
        return Err(Error::PreconditionViolated(format!(
            "need 1 <= alpha < i < beta <= n-1, got ({alpha}, {i}, {beta}) with n = {n}"
        )));
    }
    let family = vec![
        poly.vertices[alpha].clone(),
        poly.vertices[beta].clone(),
        poly.vertices[0].clone(),
        poly.vertices[i].clone(),
    ];
    let diagonal = Segment::new(poly.vertices[0].clone(), poly.vertices[i].clone());
    Ok(to_one_side(&family, &diagonal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn square() -> Polygon {
        Polygon::from([(0, 0), (1, 0), (1, 1), (0, 1)])
    }

    fn vline_at_half() -> Line {
        Line::through(
            Point::new(rat(1, 2), rat(0, 1)),
            Point::new(rat(1, 2), rat(1, 1)),
        )
        .unwrap()
    }

    #[test]
    fn cuts_unit_square() {
        let r = cut(&square(), &vline_at_half(), false).unwrap();
        assert_eq!((r.i, r.j), (0, 2));
        assert_eq!(r.p, Point::new(rat(1, 2), rat(0, 1)));
        assert_eq!(r.q, Point::new(rat(1, 2), rat(1, 1)));
        assert_eq!(
            r.plus.vertices,
            vec![
                Point::from((0, 0)),
                Point::new(rat(1, 2), rat(0, 1)),
                Point::new(rat(1, 2), rat(1, 1)),
                Point::from((0, 1)),
            ]
        );
        assert_eq!(
            r.minus.vertices,
            vec![
                Point::new(rat(1, 2), rat(0, 1)),
                Point::from((1, 0)),
                Point::from((1, 1)),
                Point::new(rat(1, 2), rat(1, 1)),
            ]
        );
        assert!(r.plus_convex && r.minus_convex);
        // The polygon is not to one side of [P, Q].
        assert!(!to_one_side(
            &square().vertices,
            &Segment::new(r.p.clone(), r.q.clone())
        ));
    }

    #[test]
    fn cut_is_line_orientation_invariant() {
        let a = cut(&square(), &vline_at_half(), false).unwrap();
        let b = cut(&square(), &vline_at_half().reversed(), false).unwrap();
        assert_eq!((a.i, a.j, a.p, a.q), (b.i, b.j, b.p, b.q));
    }

    /// The ordinary-but-not-strict 5-gon walking along the bottom of a
    /// triangle: the cut through the apex exists, but the plus half is not
    /// convex, showing strictness cannot be dropped.
    #[test]
    fn nonstrict_cut_example() {
        let poly = Polygon::from([(0, 0), (4, 4), (8, 0), (2, 0), (6, 0)]);
        assert!(is_convex(&poly));
        assert!(!poly.is_strict());
        let line = Line::through(Point::from((4, 4)), Point::from((4, 0))).unwrap();

        assert_eq!(cut(&poly, &line, false), Err(Error::StrictnessRequired));

        let r = cut(&poly, &line, true).unwrap();
        assert_eq!((r.i, r.j), (1, 3));
        assert_eq!(r.p, Point::from((4, 4)));
        assert_eq!(r.q, Point::from((4, 0)));
        assert_eq!(
            r.plus,
            Polygon::from([(0, 0), (4, 4), (4, 4), (4, 0), (6, 0)])
        );
        assert!(!r.plus_convex);
        assert!(!is_convex(&r.plus));
    }

    #[test]
    fn rejects_boundary_line() {
        let line = Line::through(Point::from((0, 0)), Point::from((1, 0))).unwrap();
        assert_eq!(cut(&square(), &line, false), Err(Error::NoInteriorCrossing));
    }

    #[test]
    fn rejects_non_convex_input() {
        let bad = Polygon::from([(0, 0), (1, 1), (1, 0), (0, 1)]);
        assert_eq!(cut(&bad, &vline_at_half(), true), Err(Error::NotConvex));
    }

    #[test]
    fn rejects_degenerate_input() {
        let flat = Polygon::from([(0, 0), (2, 0), (1, 0)]);
        let line = Line::through(Point::from((1, -1)), Point::from((1, 1))).unwrap();
        assert_eq!(cut(&flat, &line, true), Err(Error::NoInteriorCrossing));
    }

    #[test]
    fn apart_examples() {
        assert_eq!(check_apart(&square(), 1, 2, 3).unwrap(), false);

        let hexagon = Polygon::from([(3, 0), (8, 1), (11, 6), (6, 7), (2, 5), (1, 1)]);
        assert_eq!(check_apart(&hexagon, 1, 3, 5).unwrap(), false);

        let pentagon = Polygon::from([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]);
        assert_eq!(check_apart(&pentagon, 1, 2, 4).unwrap(), false);
    }

    #[test]
    fn apart_preconditions() {
        assert!(check_apart(&square(), 2, 2, 3).is_err());
        assert!(check_apart(&square(), 0, 1, 2).is_err());
        let nonstrict = Polygon::from([(0, 0), (1, 0), (2, 0), (0, 1)]);
        assert!(check_apart(&nonstrict, 1, 2, 3).is_err());
    }
}
