//! Mo's offline algorithm: answer all queries with one sliding window,
//! visiting them sorted by `(⌊l / B⌋, r)`.

use crate::array::{check_ranges, IntArray, Range};
use crate::counters::Counters;
use crate::error::Result;
use crate::pairfn::PairFunction;
use crate::solver::RangeSolver;

use super::window::{Extender, Kernel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoRun {
    pub answers: Vec<i64>,
    /// Total extend/shrink operations performed.
    pub steps: u64,
    pub block: usize,
    /// Set when `q > n²` and every range was tabulated instead.
    pub precomputed: bool,
}

/// `B = max(1, ⌊n / √q⌋)`.
pub fn block_size(n: usize, q: usize) -> usize {
    if q == 0 {
        return n.max(1);
    }
    ((n as f64 / (q as f64).sqrt()).floor() as usize).max(1)
}

pub fn mo_offline(f: &PairFunction, a: &IntArray, queries: &[Range]) -> Result<Vec<i64>> {
    Ok(mo_run(f, a, queries)?.answers)
}

pub fn mo_run(f: &PairFunction, a: &IntArray, queries: &[Range]) -> Result<MoRun> {
    check_ranges(a.len(), queries)?;
    let kernel = Kernel::new(f, a)?;
    let n = a.len();
    let q = queries.len();
    let block = block_size(n, q);

    if q > n * n {
        return Ok(precompute_all(&kernel, n, queries, block));
    }

    let mut order: Vec<usize> = (0..q).collect();
    order.sort_by_key(|&i| ((queries[i].l - 1) / block, queries[i].r, i));

    let mut w = kernel.extender(0);
    let mut steps = 0u64;
    let mut answers = vec![0i64; q];
    for i in order {
        let (lo, hi) = (queries[i].l - 1, queries[i].r);
        steps += move_to(w.as_mut(), lo, hi);
        answers[i] = w.answer();
    }
    Ok(MoRun {
        answers,
        steps,
        block,
        precomputed: false,
    })
}

/// Move the window to `[lo, hi)`, growing before shrinking so it never
/// inverts. Returns the number of steps.
pub(crate) fn move_to(w: &mut (impl Extender + ?Sized), lo: usize, hi: usize) -> u64 {
    let mut steps = 0;
    while w.bounds().0 > lo {
        w.extend_left();
        steps += 1;
    }
    while w.bounds().1 < hi {
        w.extend_right();
        steps += 1;
    }
    while w.bounds().0 < lo {
        w.shrink_left();
        steps += 1;
    }
    while w.bounds().1 > hi {
        w.shrink_right();
        steps += 1;
    }
    steps
}

fn precompute_all(
    kernel: &std::sync::Arc<Kernel>,
    n: usize,
    queries: &[Range],
    block: usize,
) -> MoRun {
    // table[l][r - l] = f([l, r]) in 0-based inclusive terms
    let mut table = Vec::with_capacity(n);
    let mut steps = 0u64;
    for l in 0..n {
        let mut w = kernel.extender(l);
        let mut row = Vec::with_capacity(n - l);
        for _ in l..n {
            w.extend_right();
            steps += 1;
            row.push(w.answer());
        }
        table.push(row);
    }
    let answers = queries.iter().map(|r| table[r.l - 1][r.r - r.l]).collect();
    MoRun {
        answers,
        steps,
        block,
        precomputed: true,
    }
}

/// [`RangeSolver`] backed by [`mo_run`]; adds its step count to `counters`.
#[derive(Clone, Debug)]
pub struct MoSolver {
    pub f: PairFunction,
    pub counters: Counters,
}

impl MoSolver {
    pub fn new(f: PairFunction) -> Self {
        MoSolver {
            f,
            counters: Counters::new(),
        }
    }

    pub fn with_counters(f: PairFunction, counters: Counters) -> Self {
        MoSolver { f, counters }
    }
}

impl RangeSolver for MoSolver {
    fn solve(&self, a: &IntArray, queries: &[Range]) -> Result<Vec<i64>> {
        let run = mo_run(&self.f, a, queries)?;
        self.counters.add_steps(run.steps);
        Ok(run.answers)
    }
}
