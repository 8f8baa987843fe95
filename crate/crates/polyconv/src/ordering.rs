//! Convex orderings of point sets and structural facts about reductions.

use crate::convexity::{edge_coverage_profile, is_convex};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::point::Point;
use crate::polygon::Polygon;
use itertools::Itertools;

/// Result of ordering a point set into a strictly convex polygon.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderingResult {
    pub polygon: Polygon,
    /// Number of strictly convex orderings found by brute force; filled in
    /// by [`count_strict_convex_orderings`] only.
    pub orderings_found: usize,
}

/// Order a point set (at least 3 distinct points, all extreme) into a
/// counterclockwise strictly convex polygon.
pub fn strict_convex_ordering(points: &[Point]) -> Result<Polygon> {
    let mut set: Vec<Point> = points.to_vec();
    set.sort();
    set.dedup();
    if set.len() < 3 {
        return Err(Error::TooFew);
    }
    let hull = crate::hull::convex_hull(&set);
    if hull.dim < 2 {
        return Err(Error::Degenerate);
    }
    if hull.extremes.len() != set.len() {
        let offender = set
            .iter()
            .find(|p| !hull.extremes.contains(p))
            .expect("some input point is missing from the extreme set");
        return Err(Error::NotAllExtreme(offender.to_string()));
    }
    let poly = Polygon::new(hull.extremes);
    debug_assert!(poly.is_strict() && is_convex(&poly));
    Ok(poly)
}

/// All permutations sigma for which `P sigma` is strictly convex.
/// Enumeration is factorial; callers guard n.
pub fn strict_convex_permutations(poly: &Polygon) -> Vec<Permutation> {
    let n = poly.len();
    (0..n)
        .permutations(n)
        .filter_map(|map| {
            let sigma = Permutation::new(map).expect("permutations are bijections");
            let candidate = poly.apply_permutation(&sigma).expect("size matches");
            (candidate.is_strict() && is_convex(&candidate)).then_some(sigma)
        })
        .collect()
}

const ORDERING_BRUTE_FORCE_MAX: usize = 7;

/// Brute-force count of the strictly convex orderings of a point set in
/// convex position. A set of n points has exactly 2n of them (the dihedral
/// orbit of any one); the harness verifies the orbit element by element.
pub fn count_strict_convex_orderings(points: &[Point]) -> Result<OrderingResult> {
    let base = strict_convex_ordering(points)?;
    let n = base.len();
    if n > ORDERING_BRUTE_FORCE_MAX {
        return Err(Error::TooLarge {
            n,
            limit: ORDERING_BRUTE_FORCE_MAX,
        });
    }
    let qualifying = strict_convex_permutations(&base);
    debug_assert!(qualifying.contains(&Permutation::identity(n)));
    Ok(OrderingResult {
        polygon: base,
        orderings_found: qualifying.len(),
    })
}

/// Deleting a non-extreme vertex of an ordinary convex polygon changes
/// neither the hull nor the edge union. Returns true when both sets match,
/// comparing edge unions facet by facet as exact interval unions.
pub fn verify_reduction_sets(poly: &Polygon, alpha: usize) -> Result<bool> {
    if !(poly.is_ordinary() && is_convex(poly)) {
        return Err(Error::PreconditionViolated(
            "verify_reduction_sets requires an ordinary convex polygon".into(),
        ));
    }
    if alpha >= poly.len() {
        return Err(Error::IndexOutOfRange {
            index: alpha,
            len: poly.len(),
        });
    }
    let hull = poly.hull();
    if hull.extremes.contains(&poly.vertices[alpha]) {
        return Err(Error::PreconditionViolated(format!(
            "vertex {alpha} is an extreme point of the hull"
        )));
    }
    let reduced = poly.reduce(alpha)?;
    let reduced_hull = reduced.hull();
    let hulls_equal = hull.dim == reduced_hull.dim && {
        let mut a = hull.extremes.clone();
        let mut b = reduced_hull.extremes.clone();
        a.sort();
        b.sort();
        a == b
    };
    if !hulls_equal {
        return Ok(false);
    }
    // Same hull, so the facet parameterizations agree; compare coverage.
    let before = edge_coverage_profile(poly, &hull);
    let after = edge_coverage_profile(&reduced, &hull);
    Ok(before == after)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::dihedral_group;

    fn pts(coords: &[(i64, i64)]) -> Vec<Point> {
        coords.iter().map(|&c| Point::from(c)).collect()
    }

    #[test]
    fn orders_square_corners() {
        let poly = strict_convex_ordering(&pts(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap();
        assert_eq!(poly.len(), 4);
        assert!(poly.is_strict() && is_convex(&poly));
        let mut sorted = poly.vertices.clone();
        sorted.sort();
        assert_eq!(sorted, pts(&[(0, 0), (0, 1), (1, 0), (1, 1)]));
    }

    #[test]
    fn rejects_non_extreme_point() {
        let err = strict_convex_ordering(&pts(&[(0, 0), (2, 0), (1, 0), (0, 1)])).unwrap_err();
        assert_eq!(err, Error::NotAllExtreme("1 0".into()));
    }

    #[test]
    fn rejects_degenerate_sets() {
        assert_eq!(
            strict_convex_ordering(&pts(&[(0, 0), (1, 1)])),
            Err(Error::TooFew)
        );
        assert_eq!(
            strict_convex_ordering(&pts(&[(0, 0), (1, 1), (2, 2)])),
            Err(Error::Degenerate)
        );
    }

    #[test]
    fn ordering_counts() {
        let square = count_strict_convex_orderings(&pts(&[(0, 0), (1, 0), (1, 1), (0, 1)]))
            .unwrap();
        assert_eq!(square.orderings_found, 8);

        let triangle = count_strict_convex_orderings(&pts(&[(0, 0), (3, 0), (0, 3)])).unwrap();
        assert_eq!(triangle.orderings_found, 6);

        let pentagon =
            count_strict_convex_orderings(&pts(&[(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]))
                .unwrap();
        assert_eq!(pentagon.orderings_found, 10);
    }

    #[test]
    fn qualifying_permutations_are_dihedral() {
        for coords in [
            vec![(0i64, 0i64), (3, 0), (0, 3)],
            vec![(0, 0), (1, 0), (1, 1), (0, 1)],
            vec![(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)],
        ] {
            let base = strict_convex_ordering(&pts(&coords)).unwrap();
            let mut got = strict_convex_permutations(&base);
            let mut want = dihedral_group(base.len());
            got.sort();
            want.sort();
            assert_eq!(got, want, "points {coords:?}");
        }
    }

    #[test]
    fn ordering_count_guard() {
        let octagon = pts(&[
            (4, 0),
            (3, 3),
            (0, 4),
            (-3, 3),
            (-4, 0),
            (-3, -3),
            (0, -4),
            (3, -3),
        ]);
        assert_eq!(
            count_strict_convex_orderings(&octagon),
            Err(Error::TooLarge { n: 8, limit: 7 })
        );
    }

    #[test]
    fn reduction_set_preservation() {
        let poly = Polygon::from([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)]);
        assert_eq!(verify_reduction_sets(&poly, 1).unwrap(), true);

        let two_flat = Polygon::from([(0, 0), (2, 0), (3, 0), (4, 0), (4, 4)]);
        assert_eq!(verify_reduction_sets(&two_flat, 2).unwrap(), true);

        let square = Polygon::from([(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert!(matches!(
            verify_reduction_sets(&square, 0),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
