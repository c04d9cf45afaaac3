//! Shared operation counters for instrumentation and benchmarking.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

#[derive(Debug, Default)]
struct Inner {
    extender_steps: AtomicU64,
    matmul_calls: AtomicU64,
    inner_calls: AtomicU64,
}

/// Cheap to clone; clones share the same counts.
#[derive(Clone, Debug, Default)]
pub struct Counters(Arc<Inner>);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CounterSnapshot {
    pub extender_steps: u64,
    pub matmul_calls: u64,
    pub inner_calls: u64,
}

impl Counters {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_steps(&self, n: u64) {
        self.0.extender_steps.fetch_add(n, Ordering::Relaxed);
    }

    pub fn add_matmul(&self) {
        self.0.matmul_calls.fetch_add(1, Ordering::Relaxed);
    }

    pub fn add_inner_call(&self) {
        self.0.inner_calls.fetch_add(1, Ordering::Relaxed);
    }

    pub fn snapshot(&self) -> CounterSnapshot {
        CounterSnapshot {
            extender_steps: self.0.extender_steps.load(Ordering::Relaxed),
            matmul_calls: self.0.matmul_calls.load(Ordering::Relaxed),
            inner_calls: self.0.inner_calls.load(Ordering::Relaxed),
        }
    }
}
