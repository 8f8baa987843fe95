//! Per-thread operation counters for cost benchmarking.
//!
//! The two counted events are calls to the orientation predicate (all exact
//! sign computations funnel through it) and calls to the definition-based
//! convexity oracle. Counters are thread-local: a benchmark resets them,
//! runs an algorithm on the same thread, and snapshots the totals.

use serde::Serialize;
use std::cell::Cell;

thread_local! {
    static ORIENTATION_CALLS: Cell<u64> = const { Cell::new(0) };
    static ORACLE_CALLS: Cell<u64> = const { Cell::new(0) };
}

/// Snapshot of the per-thread counters. Monotone non-decreasing within a
/// run; `reset` starts a new run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct OpCounter {
    pub orientation_calls: u64,
    pub oracle_calls: u64,
}

#[inline]
pub(crate) fn bump_orientation() {
    ORIENTATION_CALLS.with(|c| c.set(c.get() + 1));
}

#[inline]
pub(crate) fn bump_oracle() {
    ORACLE_CALLS.with(|c| c.set(c.get() + 1));
}

/// Zero both counters on the calling thread.
pub fn reset() {
    ORIENTATION_CALLS.with(|c| c.set(0));
    ORACLE_CALLS.with(|c| c.set(0));
}

/// Read both counters on the calling thread.
pub fn snapshot() -> OpCounter {
    OpCounter {
        orientation_calls: ORIENTATION_CALLS.with(Cell::get),
        oracle_calls: ORACLE_CALLS.with(Cell::get),
    }
}
