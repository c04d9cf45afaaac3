//! Single ranges and range pairs in terms of each other.

use std::collections::HashMap;

use crate::array::{check_pairs, check_ranges, IntArray, Range, RangePair};
use crate::error::Result;
use crate::pairfn::PairFunction;
use crate::solver::{PairSolver, RangeSolver};

/// Range pairs from single ranges by inclusion–exclusion:
/// `f([a,b],[c,d]) = F(a,d) − F(a,c−1) − F(b+1,d) + F(b+1,c−1)`, where
/// `F(x,y)` is the single-range answer and an empty range counts 0.
#[derive(Clone, Debug)]
pub struct PairsViaSingle<S>(pub S);

impl<S: RangeSolver> PairSolver for PairsViaSingle<S> {
    fn solve_pairs(&self, a: &IntArray, queries: &[RangePair]) -> Result<Vec<i64>> {
        check_pairs(a.len(), queries)?;
        let mut singles = Vec::with_capacity(4 * queries.len());
        for p in queries {
            let (x, b, c, d) = (p.first.l, p.first.r, p.second.l, p.second.r);
            singles.push(Range::new(x, d));
            singles.push(Range::new(x, c - 1));
            singles.push(Range::new(b + 1, d));
            if b + 1 < c {
                singles.push(Range::new(b + 1, c - 1));
            }
        }
        let ans = self.0.solve(a, &singles)?;
        let mut it = ans.into_iter();
        Ok(queries
            .iter()
            .map(|p| {
                let mut v = it.next().unwrap() - it.next().unwrap() - it.next().unwrap();
                if p.first.r + 1 < p.second.l {
                    v += it.next().unwrap();
                }
                v
            })
            .collect())
    }
}

/// `F(1, x)` for every prefix, `out[x]` with `out[0] = 0`, in one left to
/// right pass over per-term value counts.
pub fn prefix_values(f: &PairFunction, a: &IntArray) -> Result<Vec<i64>> {
    let n = a.len();
    let mut out = vec![0i64; n + 1];
    if let PairFunction::Mul = f {
        let mut sum = 0i64;
        for (i, &v) in a.values().iter().enumerate() {
            out[i + 1] = out[i] + sum * v;
            sum += v;
        }
        return Ok(out);
    }
    let (d, arr) = f.decompose_for(a)?;
    let mut seen: Vec<HashMap<i64, i64>> = vec![HashMap::new(); d.len()];
    for (i, &v) in arr.values().iter().enumerate() {
        let gain: i64 = d
            .terms
            .iter()
            .zip(&seen)
            .map(|(t, s)| t.alpha * s.get(&(t.h)(v)).copied().unwrap_or(0))
            .sum();
        out[i + 1] = out[i] + gain;
        for (t, s) in d.terms.iter().zip(&mut seen) {
            *s.entry((t.g)(v)).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Single ranges from range pairs:
/// `f([a,b]) = F(1,b) − F(1,a−1) − f([1,a−1],[a,b])`.
#[derive(Clone, Debug)]
pub struct SingleViaPairs<P> {
    pub f: PairFunction,
    pub inner: P,
}

impl<P> SingleViaPairs<P> {
    pub fn new(f: PairFunction, inner: P) -> Self {
        SingleViaPairs { f, inner }
    }
}

impl<P: PairSolver> RangeSolver for SingleViaPairs<P> {
    fn solve(&self, a: &IntArray, queries: &[Range]) -> Result<Vec<i64>> {
        check_ranges(a.len(), queries)?;
        let pre = prefix_values(&self.f, a)?;
        let pairs: Vec<RangePair> = queries
            .iter()
            .filter(|r| r.l > 1)
            .map(|r| RangePair::from_bounds(1, r.l - 1, r.l, r.r))
            .collect();
        let mut cross = self.inner.solve_pairs(a, &pairs)?.into_iter();
        Ok(queries
            .iter()
            .map(|r| {
                let base = pre[r.r] - pre[r.l - 1];
                if r.l > 1 {
                    base - cross.next().unwrap()
                } else {
                    base
                }
            })
            .collect())
    }
}
