//! The fixed corpus of instructive polygons: the cases that separate the
//! convexity notions from one another and pin down the side conditions of
//! the hereditariness theorems.

use crate::convexity::classify;
use crate::polygon::Polygon;
use std::collections::BTreeMap;

/// A named polygon with its expected classification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counterexample {
    pub name: &'static str,
    pub polygon: Polygon,
    /// Expected values for a subset of the report predicates, keyed by
    /// `ordinary`, `strict`, `quasi_convex`, `convex`.
    pub expected: BTreeMap<&'static str, bool>,
    pub notes: &'static str,
}

fn expect(pairs: &[(&'static str, bool)]) -> BTreeMap<&'static str, bool> {
    pairs.iter().cloned().collect()
}

fn unit_square() -> Polygon {
    Polygon::from([(0, 0), (1, 0), (1, 1), (0, 1)])
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

/// The corpus, in a stable order.
pub fn corpus() -> Vec<Counterexample> {
    vec![
        Counterexample {
            name: "square-0123",
            polygon: unit_square(),
            expected: expect(&[
                ("ordinary", true),
                ("strict", true),
                ("quasi_convex", true),
                ("convex", true),
            ]),
            notes: "unit square corners in hull order: convex",
        },
        Counterexample {
            name: "square-0213",
            polygon: Polygon::from([(0, 0), (1, 1), (1, 0), (0, 1)]),
            expected: expect(&[
                ("ordinary", true),
                ("strict", true),
                ("quasi_convex", false),
                ("convex", false),
            ]),
            notes: "same corner set, swapped order: the vertex set alone never decides convexity",
        },
        Counterexample {
            name: "triangle-revisit",
            polygon: Polygon::from([(1, 0), (0, 0), (0, 1), (0, 0)]),
            expected: expect(&[
                ("ordinary", false),
                ("strict", false),
                ("quasi_convex", true),
                ("convex", false),
            ]),
            notes: "walk out and back along two triangle sides: quasi-convex, but the third \
                    side is uncovered (gap witness (1/2, 1/2)); ordinariness is needed for \
                    quasi-convex to imply convex",
        },
        Counterexample {
            name: "double-square",
            polygon: double_square(),
            expected: expect(&[
                ("ordinary", false),
                ("strict", false),
                ("quasi_convex", true),
                ("convex", true),
            ]),
            notes: "unit square traversed twice counterclockwise: convex although not ordinary",
        },
        Counterexample {
            name: "double-square-reduced",
            polygon: double_square().reduce(1).unwrap(),
            expected: expect(&[("ordinary", false), ("convex", false)]),
            notes: "dropping one copy of a corner from the doubled square breaks convexity: \
                    vertex removal needs ordinariness",
        },
        Counterexample {
            name: "intro-8gon",
            polygon: double_square(),
            expected: expect(&[("ordinary", false), ("convex", true)]),
            notes: "the eight-vertex double traversal of the unit square, p1..p8",
        },
        Counterexample {
            name: "intro-8gon-p7",
            polygon: double_square().reduce(7).unwrap(),
            expected: expect(&[("ordinary", false), ("convex", false)]),
            notes: "p1..p7 (last vertex dropped): the closing edge cuts across the square, \
                    so the incremental build-up test over prefixes is unsound",
        },
        Counterexample {
            name: "remark-cut-5gon",
            polygon: Polygon::from([(0, 0), (4, 4), (8, 0), (2, 0), (6, 0)]),
            expected: expect(&[
                ("ordinary", true),
                ("strict", false),
                ("quasi_convex", true),
                ("convex", true),
            ]),
            notes: "ordinary convex 5-gon walking back and forth along the triangle bottom; \
                    cutting it through the apex with the vertical line x=4 yields a \
                    non-convex half, so cuts need strictness",
        },
        Counterexample {
            name: "intro-hexagon",
            polygon: Polygon::from([(3, 0), (8, 1), (11, 6), (6, 7), (2, 5), (1, 1)]),
            expected: expect(&[
                ("ordinary", true),
                ("strict", true),
                ("quasi_convex", true),
                ("convex", true),
            ]),
            notes: "strictly convex hexagon; removing any vertex keeps it convex",
        },
    ]
}

/// Evaluate every corpus expectation; returns mismatches as
/// `(name, predicate, expected, got)`.
pub fn run_corpus() -> Vec<(&'static str, &'static str, bool, bool)> {
    let mut failures = Vec::new();
    for entry in corpus() {
        let report = classify(&entry.polygon);
        for (&pred, &want) in &entry.expected {
            let got = match pred {
                "ordinary" => report.ordinary,
                "strict" => report.strict,
                "quasi_convex" => report.quasi_convex,
                "convex" => report.convex,
                other => panic!("unknown predicate {other:?} in corpus entry {}", entry.name),
            };
            if got != want {
                failures.push((entry.name, pred, want, got));
            }
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_expectations_hold() {
        assert_eq!(run_corpus(), vec![]);
    }

    #[test]
    fn lookup_by_name() {
        let all = corpus();
        let entry = |name: &str| all.iter().find(|c| c.name == name).unwrap();

        let e = entry("square-0213");
        assert_eq!(e.expected["quasi_convex"], false);
        assert_eq!(e.expected["convex"], false);

        let e = entry("triangle-revisit");
        assert_eq!(e.expected["quasi_convex"], true);
        assert_eq!(e.expected["convex"], false);
        assert_eq!(e.expected["ordinary"], false);

        let e = entry("double-square-reduced");
        assert_eq!(e.expected["convex"], false);
    }
}
