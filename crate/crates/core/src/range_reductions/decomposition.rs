//! `f`-pairs from equal-pairs through a decomposition
//! `f(x, y) = Σ αᵢ · [gᵢ(x) = hᵢ(y)]`.

use rayon::prelude::*;

use crate::array::{check_pairs, IntArray, RangePair, ValueCap};
use crate::error::{Error, Result};
use crate::pairfn::{Decomposition, PairFunction, Term};
use crate::solver::PairSolver;

/// The length-`2n` array of one term: `g` applied to `a`, then `h` applied
/// to `a`.
pub(crate) fn term_array(t: &Term, a: &IntArray) -> Result<IntArray> {
    let n = a.len();
    let bound = ValueCap::default().bound(2 * n);
    let values: Vec<i64> = a
        .values()
        .iter()
        .map(|&x| (t.g)(x))
        .chain(a.values().iter().map(|&y| (t.h)(y)))
        .collect();
    if let Some(v) = values.iter().find(|v| v.unsigned_abs() > bound) {
        return Err(Error::Encoding(format!(
            "term map produced {v}, outside the value cap {bound}"
        )));
    }
    IntArray::new(values)
}

/// Runs one equal-pairs batch per term and returns the α-weighted sums.
pub fn apply_decomposition<P: PairSolver + ?Sized>(
    d: &Decomposition,
    a: &IntArray,
    queries: &[RangePair],
    inner: &P,
) -> Result<Vec<i64>> {
    check_pairs(a.len(), queries)?;
    let n = a.len();
    let shifted: Vec<RangePair> = queries
        .iter()
        .map(|p| RangePair::from_bounds(p.first.l, p.first.r, n + p.second.l, n + p.second.r))
        .collect();
    let per_term: Vec<Vec<i64>> = d
        .terms
        .par_iter()
        .map(|t| {
            let arr = term_array(t, a)?;
            let ans = inner.solve_pairs(&arr, &shifted)?;
            Ok(ans.into_iter().map(|x| t.alpha * x).collect())
        })
        .collect::<Result<_>>()?;
    let mut out = vec![0i64; queries.len()];
    for ans in per_term {
        for (o, x) in out.iter_mut().zip(ans) {
            *o += x;
        }
    }
    Ok(out)
}

/// `mul([l',r'],[l'',r'']) = (Σ over the first range) · (Σ over the second)`.
pub fn mul_pairs_fast(a: &IntArray, queries: &[RangePair]) -> Result<Vec<i64>> {
    check_pairs(a.len(), queries)?;
    let mut s = vec![0i64; a.len() + 1];
    for (i, &v) in a.values().iter().enumerate() {
        s[i + 1] = s[i] + v;
    }
    Ok(queries
        .iter()
        .map(|p| (s[p.first.r] - s[p.first.l - 1]) * (s[p.second.r] - s[p.second.l - 1]))
        .collect())
}

#[derive(Clone, Copy, Debug, Default)]
pub struct MulPairs;

impl PairSolver for MulPairs {
    fn solve_pairs(&self, a: &IntArray, queries: &[RangePair]) -> Result<Vec<i64>> {
        mul_pairs_fast(a, queries)
    }
}

/// `f`-pairs through the decomposition of `f` and an equal-pairs solver.
/// `mul` takes the prefix-sum path and never calls `inner`.
#[derive(Clone, Debug)]
pub struct DecompositionPairs<P> {
    pub f: PairFunction,
    pub inner: P,
}

impl<P> DecompositionPairs<P> {
    pub fn new(f: PairFunction, inner: P) -> Self {
        DecompositionPairs { f, inner }
    }
}

impl<P: PairSolver> PairSolver for DecompositionPairs<P> {
    fn solve_pairs(&self, a: &IntArray, queries: &[RangePair]) -> Result<Vec<i64>> {
        if let PairFunction::Mul = self.f {
            return mul_pairs_fast(a, queries);
        }
        let (d, arr) = self.f.decompose_for(a)?;
        apply_decomposition(&d, &arr, queries, &self.inner)
    }
}
