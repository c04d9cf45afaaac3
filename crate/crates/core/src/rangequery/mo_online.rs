//! Online Mo: for every block start `s = B·j`, snapshots of the window
//! `[s, k]` for all `k ≥ s` are kept in persistent form. A query `[l, r]`
//! resumes the snapshot for `[B·⌈l/B⌉, r]` and extends it leftwards.

use std::sync::Arc;

use crate::array::{IntArray, Range};
use crate::counters::Counters;
use crate::error::Result;
use crate::pairfn::PairFunction;
use crate::solver::RangeSolver;

use super::mo::block_size;
use super::store::PersistentCounts;
use super::window::{Extender, Kernel, Window};

pub struct MoOnline {
    kernel: Arc<Kernel>,
    n: usize,
    q_guess: usize,
    adaptive: bool,
    block: usize,
    rows: Vec<Vec<Window<PersistentCounts>>>,
    answered: usize,
    rebuilds: usize,
    counters: Counters,
}

impl MoOnline {
    /// Starts from a guess of one query and doubles the guess (rebuilding)
    /// whenever it is exceeded.
    pub fn new(f: &PairFunction, a: &IntArray) -> Result<Self> {
        Self::build(f, a, 1, true, Counters::new())
    }

    /// Fixed query-count hint, never rebuilt.
    pub fn with_q_hint(f: &PairFunction, a: &IntArray, q: usize) -> Result<Self> {
        Self::build(f, a, q.max(1), false, Counters::new())
    }

    pub fn with_counters(f: &PairFunction, a: &IntArray, counters: Counters) -> Result<Self> {
        Self::build(f, a, 1, true, counters)
    }

    fn build(
        f: &PairFunction,
        a: &IntArray,
        q_guess: usize,
        adaptive: bool,
        counters: Counters,
    ) -> Result<Self> {
        let kernel = Kernel::new(f, a)?;
        let mut s = MoOnline {
            kernel,
            n: a.len(),
            q_guess,
            adaptive,
            block: 1,
            rows: Vec::new(),
            answered: 0,
            rebuilds: 0,
            counters,
        };
        s.preprocess();
        Ok(s)
    }

    fn preprocess(&mut self) {
        let n = self.n;
        self.block = block_size(n, self.q_guess);
        self.rows.clear();
        let mut steps = 0u64;
        for start in (0..n).step_by(self.block) {
            let mut w = self.kernel.persistent(start);
            let mut row = Vec::with_capacity(n - start);
            for _ in start..n {
                w.extend_right();
                steps += 1;
                row.push(w.clone());
            }
            self.rows.push(row);
        }
        self.counters.add_steps(steps);
    }

    pub fn query(&mut self, range: Range) -> Result<i64> {
        range.check(self.n)?;
        self.answered += 1;
        if self.adaptive && self.answered > self.q_guess {
            self.q_guess *= 2;
            self.rebuilds += 1;
            self.preprocess();
        }
        Ok(self.answer(range))
    }

    /// Answer without touching the query budget. Read-only, so it may be
    /// shared across threads.
    pub fn answer(&self, range: Range) -> i64 {
        let (lo, last) = (range.l - 1, range.r - 1);
        let start = lo.div_ceil(self.block) * self.block;
        let mut w = if start > last {
            let mut w = self.kernel.persistent(last + 1);
            w.extend_left();
            w
        } else {
            self.rows[start / self.block][last - start].clone()
        };
        let mut steps = 0;
        while w.bounds().0 > lo {
            w.extend_left();
            steps += 1;
        }
        self.counters.add_steps(steps);
        w.answer()
    }

    pub fn q_guess(&self) -> usize {
        self.q_guess
    }

    pub fn block(&self) -> usize {
        self.block
    }

    pub fn rebuilds(&self) -> usize {
        self.rebuilds
    }
}

/// Answers a batch by feeding it one query at a time to an adaptive
/// [`MoOnline`].
#[derive(Clone, Debug)]
pub struct MoOnlineSolver {
    pub f: PairFunction,
    pub counters: Counters,
}

impl MoOnlineSolver {
    pub fn new(f: PairFunction) -> Self {
        MoOnlineSolver {
            f,
            counters: Counters::new(),
        }
    }
}

impl RangeSolver for MoOnlineSolver {
    fn solve(&self, a: &IntArray, queries: &[Range]) -> Result<Vec<i64>> {
        let mut s = MoOnline::with_counters(&self.f, a, self.counters.clone())?;
        queries.iter().map(|&r| s.query(r)).collect()
    }
}
