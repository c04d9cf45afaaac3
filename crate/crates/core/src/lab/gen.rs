//! Seeded instance generators. Equal seeds give equal instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::array::{IntArray, Range, RangePair};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::matrix::DenseMatrix;
use crate::rng::RandomSource;

fn usage(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

/// Uniform values in `[lo, hi]`.
pub fn random_array(rng: &mut RandomSource, n: usize, lo: i64, hi: i64) -> Result<IntArray> {
    if n == 0 || lo > hi {
        return Err(usage(format!(
            "array needs n ≥ 1 and lo ≤ hi, got n = {n}, [{lo}, {hi}]"
        )));
    }
    IntArray::new((0..n).map(|_| rng.rng().random_range(lo..=hi)).collect())
}

fn random_range_in(rng: &mut RandomSource, lo: usize, hi: usize, max_len: Option<usize>) -> Range {
    let len_cap = max_len.unwrap_or(usize::MAX).clamp(1, hi - lo + 1);
    let len = rng.rng().random_range(1..=len_cap);
    let l = rng.rng().random_range(lo..=hi + 1 - len);
    Range::new(l, l + len - 1)
}

/// `q` ranges of `[1, n]`, lengths uniform in `1..=max_len`.
pub fn random_ranges(
    rng: &mut RandomSource,
    n: usize,
    q: usize,
    max_len: Option<usize>,
) -> Result<Vec<Range>> {
    if n == 0 {
        return Err(usage("queries need n ≥ 1"));
    }
    Ok((0..q)
        .map(|_| random_range_in(rng, 1, n, max_len))
        .collect())
}

/// `q` pairs `[l1, r1], [l2, r2]` with `r1 < l2`.
pub fn random_pairs(
    rng: &mut RandomSource,
    n: usize,
    q: usize,
    max_len: Option<usize>,
) -> Result<Vec<RangePair>> {
    if n < 2 && q > 0 {
        return Err(usage("range pairs need n ≥ 2"));
    }
    Ok((0..q)
        .map(|_| {
            let split = rng.rng().random_range(1..n);
            RangePair::new(
                random_range_in(rng, 1, split, max_len),
                random_range_in(rng, split + 1, n, max_len),
            )
        })
        .collect())
}

/// Relabels the endpoints to `1..=n'` in order of first label so the file
/// has no isolated vertices.
fn compact(edges: Vec<(usize, usize)>) -> Result<Graph> {
    let mut used: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    used.sort_unstable();
    used.dedup();
    let label = |x: usize| (used.binary_search(&x).unwrap() + 1) as Vertex;
    Graph::from_edges(edges.into_iter().map(|(u, v)| (label(u), label(v))))
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(usage(format!("edge probability {p} is not in [0, 1]")));
    }
    Ok(())
}

pub fn gnp(rng: &mut RandomSource, n: usize, p: f64) -> Result<Graph> {
    check_p(p)?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    compact(edges)
}

/// Chung–Lu graph with expected degrees `∝ (i+1)^(−1/(exponent−1))`,
/// scaled to the given average degree.
pub fn power_law(
    rng: &mut RandomSource,
    n: usize,
    avg_degree: f64,
    exponent: f64,
) -> Result<Graph> {
    if exponent <= 2.0 || avg_degree < 0.0 {
        return Err(usage(
            "power-law needs exponent > 2 and a nonnegative average degree",
        ));
    }
    let raw: Vec<f64> = (0..n)
        .map(|i| ((i + 1) as f64).powf(-1.0 / (exponent - 1.0)))
        .collect();
    let scale = avg_degree * n as f64 / raw.iter().sum::<f64>().max(f64::MIN_POSITIVE);
    let w: Vec<f64> = raw.iter().map(|x| x * scale).collect();
    let total: f64 = w.iter().sum();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if total > 0.0 && rng.bernoulli((w[u] * w[v] / total).min(1.0)) {
                edges.push((u, v));
            }
        }
    }
    compact(edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    compact(
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
    )
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(usage("a cycle needs n ≥ 3"));
    }
    compact((0..n).map(|u| (u, (u + 1) % n)).collect())
}

/// Sides of sizes `⌈n/2⌉` and `⌊n/2⌋`, each cross pair present with
/// probability `p`.
pub fn bipartite(rng: &mut RandomSource, n: usize, p: f64) -> Result<Graph> {
    check_p(p)?;
    let left = n.div_ceil(2);
    let mut edges = Vec::new();
    for u in 0..left {
        for v in left..n {
            if rng.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    compact(edges)
}

pub fn random_matrix(
    rng: &mut RandomSource,
    rows: usize,
    cols: usize,
    lo: i64,
    hi: i64,
) -> Result<DenseMatrix> {
    if lo > hi {
        return Err(usage(format!("empty entry range [{lo}, {hi}]")));
    }
    DenseMatrix::from_vec(
        rows,
        cols,
        (0..rows * cols)
            .map(|_| rng.rng().random_range(lo..=hi))
            .collect(),
    )
}

/// A random permutation of `1..=n`.
pub fn permutation(rng: &mut RandomSource, n: usize) -> Result<IntArray> {
    let mut v: Vec<i64> = (1..=n as i64).collect();
    v.shuffle(rng.rng());
    IntArray::new(v)
}
