//! Verification harness: generators, counterexample corpus, theorem checks
//! and operation-count benchmarks.

pub mod bench;
pub mod checks;
pub mod corpus;
pub mod generators;

pub use bench::{bench, loglog_slope, BenchAlgo, BenchRow};
pub use checks::{check_downward, check_upward, differential_battery, fuzz, Report, Violation};
pub use corpus::{corpus, run_corpus, Counterexample};
pub use generators::{
    degenerate_walk, exhaustive_grid_count, exhaustive_grid_polygon, random_convex_polygon,
    GenMode, GeneratorConfig,
};
