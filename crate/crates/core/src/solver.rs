//! Solver contracts. Every algorithm and every reduction in the crate is a
//! value implementing one of these traits, so reductions compose by
//! wrapping one solver in another.

use crate::array::{IntArray, Range, RangePair};
use crate::error::Result;
use crate::graph::Graph;
use crate::oracle;
use crate::pairfn::PairFunction;
use crate::triangle::ListingResult;

/// Answers single-range queries `f([l, r])` for a fixed `f`.
pub trait RangeSolver: Send + Sync {
    fn solve(&self, a: &IntArray, queries: &[Range]) -> Result<Vec<i64>>;
}

/// Answers range-pair queries `f([l', r'], [l'', r''])` for a fixed `f`.
pub trait PairSolver: Send + Sync {
    fn solve_pairs(&self, a: &IntArray, queries: &[RangePair]) -> Result<Vec<i64>>;
}

/// Answers "do these two ranges share no value?".
pub trait DisjointSolver: Send + Sync {
    fn solve_disjoint(&self, a: &IntArray, queries: &[RangePair]) -> Result<Vec<bool>>;
}

/// Per-edge triangle counts, indexed by edge id.
pub trait EdgeCounter: Send + Sync {
    fn edge_counts(&self, g: &Graph) -> Result<Vec<u64>>;
}

/// Per-edge triangle existence, indexed by edge id.
pub trait EdgeDetector: Send + Sync {
    fn detect(&self, g: &Graph) -> Result<Vec<bool>>;
}

/// Lists up to `cap` distinct triangles.
pub trait TriangleLister: Send + Sync {
    fn list(&self, g: &Graph, cap: usize) -> Result<ListingResult>;
}

macro_rules! forward {
    ($tr:ident, $method:ident ( $($arg:ident : $ty:ty),* ) -> $ret:ty) => {
        impl<T: $tr + ?Sized> $tr for &T {
            fn $method(&self, $($arg: $ty),*) -> $ret {
                (**self).$method($($arg),*)
            }
        }
        impl<T: $tr + ?Sized> $tr for Box<T> {
            fn $method(&self, $($arg: $ty),*) -> $ret {
                (**self).$method($($arg),*)
            }
        }
        impl<T: $tr + ?Sized> $tr for std::sync::Arc<T> {
            fn $method(&self, $($arg: $ty),*) -> $ret {
                (**self).$method($($arg),*)
            }
        }
    };
}

forward!(RangeSolver, solve(a: &IntArray, queries: &[Range]) -> Result<Vec<i64>>);
forward!(PairSolver, solve_pairs(a: &IntArray, queries: &[RangePair]) -> Result<Vec<i64>>);
forward!(DisjointSolver, solve_disjoint(a: &IntArray, queries: &[RangePair]) -> Result<Vec<bool>>);
forward!(EdgeCounter, edge_counts(g: &Graph) -> Result<Vec<u64>>);
forward!(EdgeDetector, detect(g: &Graph) -> Result<Vec<bool>>);
forward!(TriangleLister, list(g: &Graph, cap: usize) -> Result<ListingResult>);

#[derive(Clone, Debug)]
pub struct OracleRange(pub PairFunction);

impl RangeSolver for OracleRange {
    fn solve(&self, a: &IntArray, queries: &[Range]) -> Result<Vec<i64>> {
        oracle::range_answers(&self.0, a, queries)
    }
}

#[derive(Clone, Debug)]
pub struct OraclePairs(pub PairFunction);

impl PairSolver for OraclePairs {
    fn solve_pairs(&self, a: &IntArray, queries: &[RangePair]) -> Result<Vec<i64>> {
        oracle::pair_answers(&self.0, a, queries)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct OracleDisjoint;

impl DisjointSolver for OracleDisjoint {
    fn solve_disjoint(&self, a: &IntArray, queries: &[RangePair]) -> Result<Vec<bool>> {
        oracle::disjoint_answers(a, queries)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct OracleCounter;

impl EdgeCounter for OracleCounter {
    fn edge_counts(&self, g: &Graph) -> Result<Vec<u64>> {
        Ok(oracle::edge_triangle_counts(g))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct OracleDetector;

impl EdgeDetector for OracleDetector {
    fn detect(&self, g: &Graph) -> Result<Vec<bool>> {
        Ok(oracle::edge_triangle_detection(g))
    }
}

/// Disjointness read off an equal-pairs counter: disjoint iff the count is 0.
#[derive(Clone, Debug)]
pub struct DisjointFromPairs<P>(pub P);

impl<P: PairSolver> DisjointSolver for DisjointFromPairs<P> {
    fn solve_disjoint(&self, a: &IntArray, queries: &[RangePair]) -> Result<Vec<bool>> {
        Ok(self
            .0
            .solve_pairs(a, queries)?
            .into_iter()
            .map(|c| c == 0)
            .collect())
    }
}

/// Detection read off a counter.
#[derive(Clone, Debug)]
pub struct DetectFromCounts<C>(pub C);

impl<C: EdgeCounter> EdgeDetector for DetectFromCounts<C> {
    fn detect(&self, g: &Graph) -> Result<Vec<bool>> {
        Ok(self.0.edge_counts(g)?.into_iter().map(|c| c > 0).collect())
    }
}
