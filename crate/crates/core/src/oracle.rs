//! Brute-force ground truth for every problem in the crate.
//!
//! Nothing here shares code with the fast solvers beyond the domain types.

use std::collections::BTreeSet;

use crate::array::{IntArray, Range, RangePair};
use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle};
use crate::matrix::DenseMatrix;
use crate::pairfn::PairFunction;

/// A single-range or a range-pair query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Query {
    Single(Range),
    Pair(RangePair),
}

/// `f([l, r])` or `f([l', r'], [l'', r''])` by double loop.
pub fn pairs_query(f: &PairFunction, a: &IntArray, q: Query) -> Result<i64> {
    let v = a.values();
    match q {
        Query::Single(r) => {
            r.check(a.len())?;
            let mut total = 0i64;
            for i in r.l..=r.r {
                for j in i + 1..=r.r {
                    total += f.eval(v[i - 1], v[j - 1]);
                }
            }
            Ok(total)
        }
        Query::Pair(p) => {
            p.check(a.len())?;
            let mut total = 0i64;
            for i in p.first.l..=p.first.r {
                for j in p.second.l..=p.second.r {
                    total += f.eval(v[i - 1], v[j - 1]);
                }
            }
            Ok(total)
        }
    }
}

pub fn range_answers(f: &PairFunction, a: &IntArray, queries: &[Range]) -> Result<Vec<i64>> {
    queries
        .iter()
        .map(|&q| pairs_query(f, a, Query::Single(q)))
        .collect()
}

pub fn pair_answers(f: &PairFunction, a: &IntArray, queries: &[RangePair]) -> Result<Vec<i64>> {
    queries
        .iter()
        .map(|&q| pairs_query(f, a, Query::Pair(q)))
        .collect()
}

/// `true` when the two ranges share no value.
pub fn disjoint(a: &IntArray, q: RangePair) -> Result<bool> {
    Ok(pairs_query(&PairFunction::Eqp, a, Query::Pair(q))? == 0)
}

pub fn disjoint_answers(a: &IntArray, queries: &[RangePair]) -> Result<Vec<bool>> {
    queries.iter().map(|&q| disjoint(a, q)).collect()
}

/// Per-edge triangle counts `|N(u) ∩ N(v)|`, indexed by edge id.
pub fn edge_triangle_counts(g: &Graph) -> Vec<u64> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.neighbors(u as usize), g.neighbors(v as usize));
            a.iter().filter(|x| b.binary_search(x).is_ok()).count() as u64
        })
        .collect()
}

pub fn edge_triangle_detection(g: &Graph) -> Vec<bool> {
    edge_triangle_counts(g).into_iter().map(|c| c > 0).collect()
}

pub fn triangle_list(g: &Graph) -> BTreeSet<Triangle> {
    let mut out = BTreeSet::new();
    for &(u, v) in g.edges() {
        for &w in g.neighbors(u as usize) {
            if w > v && g.neighbors(v as usize).binary_search(&w).is_ok() {
                out.insert(Triangle::new(
                    g.label(u as usize),
                    g.label(v as usize),
                    g.label(w as usize),
                ));
            }
        }
    }
    out
}

/// `C[i][j] = min_k max(A[i][k], B[k][j])` by triple loop.
pub fn minmax(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    if a.cols() != b.rows() {
        return Err(Error::Shape(format!(
            "cannot (min,max)-multiply {}x{} by {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if a.cols() == 0 {
        return Err(Error::Shape("inner dimension is zero".into()));
    }
    let mut c = DenseMatrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let best = (0..a.cols())
                .map(|k| a.get(i, k).max(b.get(k, j)))
                .min()
                .unwrap();
            c.set(i, j, best);
        }
    }
    Ok(c)
}

/// Boolean matrix product by triple loop.
pub fn boolean_product(x: &DenseMatrix, y: &DenseMatrix) -> Result<DenseMatrix> {
    if x.cols() != y.rows() {
        return Err(Error::Shape("boolean product dimension mismatch".into()));
    }
    let mut c = DenseMatrix::zeros(x.rows(), y.cols());
    for i in 0..x.rows() {
        for j in 0..y.cols() {
            let hit = (0..x.cols()).any(|k| x.get(i, k) != 0 && y.get(k, j) != 0);
            c.set(i, j, hit as i64);
        }
    }
    Ok(c)
}
