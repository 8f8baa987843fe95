//! Operation-count benchmarks.
//!
//! Costs are measured in predicate calls, not wall time: orientation calls
//! for the quadratic to-one-side test, oracle calls for the sub-4-gon and
//! incremental tests. Counts are deterministic for a given n, which lets
//! the acceptance suite pin exact ratios (the unmemoized incremental test
//! obeys A_n = n * A_{n-1}) and log-log slopes.

use super::generators::random_convex_polygon;
use crate::convexity::{
    is_convex, is_convex_incremental, is_convex_incremental_unmemoized, is_quasi_convex,
};
use crate::counters::{self, OpCounter};
use crate::error::{Error, Result};
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BenchAlgo {
    /// The definition-based oracle itself.
    Oracle,
    /// The per-edge to-one-side quasi-convexity test (quadratic).
    OneSide,
    /// All sub-4-gons through the oracle (quartic).
    Sub4,
    /// The memoized incremental reduction test.
    Incremental,
    /// The naive incremental recursion without memoization (factorial).
    IncrementalUnmemo,
}

impl BenchAlgo {
    pub fn name(self) -> &'static str {
        match self {
            BenchAlgo::Oracle => "oracle",
            BenchAlgo::OneSide => "one_side",
            BenchAlgo::Sub4 => "sub4",
            BenchAlgo::Incremental => "incremental",
            BenchAlgo::IncrementalUnmemo => "incremental_unmemo",
        }
    }

    fn guardrail(self) -> usize {
        match self {
            BenchAlgo::Oracle | BenchAlgo::OneSide | BenchAlgo::Sub4 => 512,
            BenchAlgo::Incremental => 18,
            // n!/4! oracle calls: n = 10 already costs 151200 of them.
            BenchAlgo::IncrementalUnmemo => 10,
        }
    }
}

impl FromStr for BenchAlgo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(BenchAlgo::Oracle),
            "one_side" => Ok(BenchAlgo::OneSide),
            "sub4" => Ok(BenchAlgo::Sub4),
            "incremental" => Ok(BenchAlgo::Incremental),
            "incremental_unmemo" => Ok(BenchAlgo::IncrementalUnmemo),
            other => Err(Error::PreconditionViolated(format!(
                "unknown bench algorithm {other:?}"
            ))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub counter: OpCounter,
}

const BENCH_SEED: u64 = 0x00C0_FFEE;

/// Run `algo` on a random strictly convex n-gon for every n in `n_values`,
/// returning the per-run counter totals.
pub fn bench(algo: BenchAlgo, n_values: &[usize]) -> Result<Vec<BenchRow>> {
    for &n in n_values {
        if n < 3 {
            return Err(Error::TooFew);
        }
        if n > algo.guardrail() {
            return Err(Error::GuardrailExceeded(format!(
                "{} is limited to n <= {}, got {n}",
                algo.name(),
                algo.guardrail()
            )));
        }
    }
    let mut rows = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let poly = random_convex_polygon(n, BENCH_SEED ^ n as u64)?;
        counters::reset();
        let verdict = match algo {
            BenchAlgo::Oracle => is_convex(&poly),
            BenchAlgo::OneSide => is_quasi_convex(&poly),
            BenchAlgo::Sub4 => crate::convexity::is_convex_sub4(&poly),
            BenchAlgo::Incremental => is_convex_incremental(&poly)?,
            BenchAlgo::IncrementalUnmemo => is_convex_incremental_unmemoized(&poly)?,
        };
        let counter = counters::snapshot();
        if !verdict {
            return Err(Error::InvariantBreach(format!(
                "{} rejected a strictly convex {n}-gon",
                algo.name()
            )));
        }
        rows.push(BenchRow { n, counter });
    }
    Ok(rows)
}

/// Least-squares slope of `ln(count)` against `ln(n)`. Floating point is
/// fine here: this is cost-model analysis, not a geometric predicate.
pub fn loglog_slope(points: &[(usize, u64)]) -> f64 {
    assert!(points.len() >= 2, "slope needs at least two points");
    let xs: Vec<f64> = points.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, c)| (c as f64).ln()).collect();
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_side_counts_are_quadratic() {
        let rows = bench(BenchAlgo::OneSide, &[16, 32]).unwrap();
        // n orientation calls per edge, n edges.
        assert_eq!(rows[0].counter.orientation_calls, 16 * 16);
        assert_eq!(rows[1].counter.orientation_calls, 32 * 32);
    }

    #[test]
    fn sub4_counts_are_binomial() {
        let rows = bench(BenchAlgo::Sub4, &[8]).unwrap();
        // C(8, 4) = 70 oracle calls.
        assert_eq!(rows[0].counter.oracle_calls, 70);
    }

    #[test]
    fn unmemoized_incremental_is_factorial() {
        let rows = bench(BenchAlgo::IncrementalUnmemo, &[4, 5, 6, 7]).unwrap();
        let counts: Vec<u64> = rows.iter().map(|r| r.counter.oracle_calls).collect();
        assert_eq!(counts, vec![1, 5, 30, 210]);
    }

    #[test]
    fn memoized_incremental_is_subfactorial() {
        let rows = bench(BenchAlgo::Incremental, &[8]).unwrap();
        // C(8,4) = 70 base-case oracle calls, once each thanks to the memo.
        assert_eq!(rows[0].counter.oracle_calls, 70);
    }

    #[test]
    fn guardrails() {
        assert!(matches!(
            bench(BenchAlgo::IncrementalUnmemo, &[11]),
            Err(Error::GuardrailExceeded(_))
        ));
        assert!(matches!(
            bench(BenchAlgo::Incremental, &[19]),
            Err(Error::GuardrailExceeded(_))
        ));
        assert!(matches!(
            bench(BenchAlgo::OneSide, &[513]),
            Err(Error::GuardrailExceeded(_))
        ));
    }

    #[test]
    fn slope_fit() {
        let slope = loglog_slope(&[(16, 256), (32, 1024), (64, 4096)]);
        assert!((slope - 2.0).abs() < 1e-9);
    }
}
