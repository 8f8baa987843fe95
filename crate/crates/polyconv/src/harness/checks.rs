//! Hereditariness checks, differential agreement of the convexity tests,
//! and the fuzzing battery that ties them together.

use super::generators::{
    degenerate_walk, exhaustive_grid_count, exhaustive_grid_polygon, random_convex_polygon,
    GenMode, GeneratorConfig,
};
use crate::convexity::{
    classify, is_convex, is_convex_incremental, is_convex_ordinary_fast, is_convex_sub4,
    is_quasi_convex, quasi_convex_by_containment, Witness,
};
use crate::point::{Point, Segment};
use crate::polygon::Polygon;
use crate::predicates::{orientation, point_on_segment};
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

/// One failed expectation, reported as a JSON line by the CLI.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub kind: String,
    pub polygon: Polygon,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Report {
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub elapsed_ms: u128,
}

fn violation(kind: &str, polygon: &Polygon, detail: String) -> Violation {
    Violation {
        kind: kind.to_owned(),
        polygon: polygon.clone(),
        detail,
    }
}

/// Mix an instance index into the base seed; splitmix-style odd constant
/// keeps per-instance streams independent and reproducible.
fn instance_seed(seed: u64, k: u64) -> u64 {
    seed ^ k.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn instances(config: &GeneratorConfig, budget: Option<u64>) -> Vec<u64> {
    let total = match config.mode {
        GenMode::ExhaustiveGrid => exhaustive_grid_count(config.grid_max, config.n),
        GenMode::RandomConvexPosition | GenMode::DegenerateWalks => budget.unwrap_or(1000),
    };
    let total = match (config.mode, budget) {
        (GenMode::ExhaustiveGrid, Some(b)) => total.min(b),
        _ => total,
    };
    (0..total).collect()
}

fn materialize(config: &GeneratorConfig, k: u64) -> Polygon {
    match config.mode {
        GenMode::ExhaustiveGrid => exhaustive_grid_polygon(config.grid_max, config.n, k),
        GenMode::RandomConvexPosition => {
            random_convex_polygon(config.n, instance_seed(config.seed, k))
                .expect("mode requires n >= 3")
        }
        GenMode::DegenerateWalks => degenerate_walk(config.n, instance_seed(config.seed, k)),
    }
}

fn run_over<F>(config: &GeneratorConfig, budget: Option<u64>, per_instance: F) -> Report
where
    F: Fn(&Polygon) -> Vec<Violation> + Sync,
{
    let start = Instant::now();
    let indices = instances(config, budget);
    let checked = indices.len() as u64;
    let violations: Vec<Violation> = indices
        .into_par_iter()
        .flat_map_iter(|k| per_instance(&materialize(config, k)))
        .collect();
    Report {
        checked,
        violations,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Downward hereditariness: every ordinary convex polygon stays convex after
/// removing any one vertex, and so does every sub-polygon. Polygons that are
/// not ordinary convex are passed over (they are counted, not checked).
pub fn check_downward(config: &GeneratorConfig, budget: Option<u64>) -> Report {
    run_over(config, budget, |poly| {
        let mut out = Vec::new();
        if !(poly.is_ordinary() && is_convex(poly)) {
            return out;
        }
        for alpha in 0..poly.len() {
            let reduced = poly.reduce(alpha).expect("alpha in range");
            if !is_convex(&reduced) {
                out.push(violation(
                    "reduction_not_convex",
                    poly,
                    format!("removing vertex {alpha} broke convexity"),
                ));
            }
        }
        let n = poly.len();
        if n <= 12 {
            for mask in 0u64..(1 << n) {
                let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let sub = poly.sub_polygon(&idx).expect("increasing");
                if !is_convex(&sub) {
                    out.push(violation(
                        "sub_polygon_not_convex",
                        poly,
                        format!("sub-polygon {idx:?} is not convex"),
                    ));
                }
            }
        }
        out
    })
}

/// Upward hereditariness: for n >= 5 (no ordinariness assumed), if every
/// reduced polygon is convex then so is the polygon. Also confirms that the
/// swapped square is a genuine n = 4 counterexample.
pub fn check_upward(config: &GeneratorConfig, budget: Option<u64>) -> Report {
    let mut report = run_over(config, budget, |poly| {
        let mut out = Vec::new();
        if poly.len() < 5 {
            return out;
        }
        if is_convex(poly) {
            return out;
        }
        let all_reductions_convex =
            (0..poly.len()).all(|alpha| is_convex(&poly.reduce(alpha).expect("in range")));
        if all_reductions_convex {
            out.push(violation(
                "upward_hereditariness",
                poly,
                "all reductions convex but the polygon is not".into(),
            ));
        }
        out
    });
    // The n = 4 boundary case: the swapped square has all four 3-gon
    // reductions convex while not being convex itself.
    let swapped = Polygon::from([(0, 0), (1, 1), (1, 0), (0, 1)]);
    let reductions_convex =
        (0..4).all(|alpha| is_convex(&swapped.reduce(alpha).expect("in range")));
    if !(reductions_convex && !is_convex(&swapped)) {
        report.violations.push(violation(
            "n4_counterexample_missing",
            &swapped,
            "expected: all 3-gon reductions convex, polygon not convex".into(),
        ));
    }
    report
}

/// Per-instance differential battery: every equivalence and implication the
/// convexity tests promise, checked on one polygon.
pub fn differential_battery(poly: &Polygon) -> Vec<Violation> {
    let mut out = Vec::new();
    let report = classify(poly);
    let n = poly.len();

    if report.convex && !report.quasi_convex {
        out.push(violation("convex_implies_quasi", poly, String::new()));
    }
    if report.strict && !report.ordinary {
        out.push(violation("strict_implies_ordinary", poly, String::new()));
    }
    if report.dim <= 1 && !report.convex {
        out.push(violation(
            "dim_le_1_convex",
            poly,
            format!("dim {} polygon classified non-convex", report.dim),
        ));
    }
    if is_quasi_convex(poly) != quasi_convex_by_containment(poly) {
        out.push(violation(
            "to_one_side_vs_containment",
            poly,
            "per-edge to-one-side disagrees with direct boundary containment".into(),
        ));
    }
    if report.ordinary {
        let fast = is_convex_ordinary_fast(poly).expect("ordinary checked");
        if fast != report.convex {
            out.push(violation(
                "fast_vs_oracle",
                poly,
                format!("quasi-convexity test says {fast}, oracle says {}", report.convex),
            ));
        }
        if n >= 4 && is_convex_sub4(poly) != report.convex {
            out.push(violation("sub4_vs_oracle", poly, String::new()));
        }
        if (5..=12).contains(&n) {
            let inc = is_convex_incremental(poly).expect("ordinary checked");
            if inc != report.convex {
                out.push(violation("incremental_vs_oracle", poly, String::new()));
            }
        }
    }
    if let Some(w) = &report.witness {
        if let Some(v) = witness_violation(poly, w) {
            out.push(v);
        }
    }
    out
}

/// A reported witness must actually witness the failure it claims.
fn witness_violation(poly: &Polygon, witness: &Witness) -> Option<Violation> {
    match witness {
        Witness::SplitEdge { edge, j, k } => {
            let edges = poly.edges();
            let seg = edges.get(*edge)?;
            if seg.is_degenerate() {
                // Probe-line witness; the failing vertex must be interior,
                // which the quasi-convexity check already established.
                return None;
            }
            let sj = orientation(&seg.a, &seg.b, &poly.vertices[*j]);
            let sk = orientation(&seg.a, &seg.b, &poly.vertices[*k]);
            (sj * sk != -1).then(|| {
                violation(
                    "bad_split_witness",
                    poly,
                    format!("edge {edge}: vertices {j}, {k} have signs {sj}, {sk}"),
                )
            })
        }
        Witness::GapPoint { x, y, facet } => {
            let p = Point::new(x.clone(), y.clone());
            let hull = poly.hull();
            let on_boundary = hull.on_boundary(&p);
            let on_some_edge = poly
                .edges()
                .iter()
                .any(|e| point_on_segment(&p, e, false));
            (!on_boundary || on_some_edge).then(|| {
                violation(
                    "bad_gap_witness",
                    poly,
                    format!(
                        "facet {facet}: on_boundary = {on_boundary}, on_some_edge = {on_some_edge}"
                    ),
                )
            })
        }
    }
}

/// Run the differential battery over a generated stream.
pub fn fuzz(config: &GeneratorConfig, budget: Option<u64>) -> Report {
    run_over(config, budget, differential_battery)
}

/// Check that a degenerate polygon classifies convex and that the basic
/// operations stay total on it.
pub fn degenerate_totality(poly: &Polygon) -> Vec<Violation> {
    let mut out = Vec::new();
    let report = classify(poly);
    if !report.convex || !report.quasi_convex {
        out.push(violation(
            "degenerate_not_convex",
            poly,
            format!("dim {} walk classified non-convex", report.dim),
        ));
    }
    let _ = poly.edges();
    let _ = poly.hull().boundary();
    if poly.len() >= 1 {
        let reduced = poly.reduce(0).expect("n >= 1");
        if !is_convex(&reduced) {
            out.push(violation("degenerate_reduction_not_convex", poly, String::new()));
        }
    }
    out
}

/// Convenience segment constructor used by integration tests.
pub fn segment(a: &Point, b: &Point) -> Segment {
    Segment::new(a.clone(), b.clone())
}
