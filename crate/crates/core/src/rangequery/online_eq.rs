//! Online equal-pairs queries via a block matrix.
//!
//! The array is cut into about `n^β` blocks. `B[i][j]` counts ordered pairs
//! of equal elements with the first in block `i` and the second in block `j`
//! (the diagonal includes each element paired with itself), so `B` is
//! symmetric. Frequent values contribute `M·Mᵀ`, rare values are enumerated
//! pairwise. `S` is the 2D prefix sum of `B`; the tails of a query are
//! handled with binary searches in per-value position lists.

use crate::array::{rank_values, IntArray, Range};
use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::matrix::{matmul, DenseMatrix, MatmulAlgo};
use crate::solver::RangeSolver;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Exponents {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

const EXP_MIN: f64 = 0.01;
const EXP_MAX: f64 = 0.99;

/// `α = log q / log n`; `β` and `γ = 1 + β − α` clamped into `[0.01, 0.99]`.
pub fn exponents(n: usize, q: usize, omega: f64) -> Exponents {
    let alpha = if n <= 1 {
        1.0
    } else {
        (q.max(1) as f64).ln() / (n as f64).ln()
    };
    let beta = if q <= n {
        2.0 * alpha / (omega + 1.0)
    } else {
        (3.0 - alpha + omega * (alpha + 1.0)) / (omega + 1.0)
    };
    let beta = beta.clamp(EXP_MIN, EXP_MAX);
    let gamma = (1.0 + beta - alpha).clamp(EXP_MIN, EXP_MAX);
    Exponents { alpha, beta, gamma }
}

#[derive(Clone, Debug)]
pub struct OnlineEqStructure {
    n: usize,
    codes: Vec<u32>,
    pub exponents: Exponents,
    pub omega: f64,
    pub b_len: usize,
    pub b_cnt: usize,
    /// Values occurring at least `tau` times are frequent.
    pub tau: f64,
    pub frequent_values: usize,
    pub b_f: DenseMatrix,
    pub b_r: DenseMatrix,
    pub b: DenseMatrix,
    pub s: DenseMatrix,
    /// Sorted 0-based positions of each value code.
    positions: Vec<Vec<u32>>,
}

pub fn online_eq_build(a: &IntArray, q_hint: usize, omega: f64) -> Result<OnlineEqStructure> {
    online_eq_build_with(a, q_hint, omega, MatmulAlgo::default(), &Counters::new())
}

pub fn online_eq_build_with(
    a: &IntArray,
    q_hint: usize,
    omega: f64,
    algo: MatmulAlgo,
    counters: &Counters,
) -> Result<OnlineEqStructure> {
    if a.is_empty() {
        return Err(Error::Input(
            "online equal-pairs structure needs a non-empty array".into(),
        ));
    }
    if q_hint == 0 {
        return Err(Error::Input("query hint must be at least 1".into()));
    }
    if !(2.0..=3.0).contains(&omega) {
        return Err(Error::Input(format!(
            "omega must lie in [2, 3], got {omega}"
        )));
    }
    let n = a.len();
    let ex = exponents(n, q_hint, omega);
    let b_cnt = ((n as f64).powf(ex.beta).round() as usize).clamp(1, n);
    let b_len = n.div_ceil(b_cnt);
    let b_cnt = n.div_ceil(b_len);
    let tau = (n as f64).powf(1.0 - ex.gamma);

    let codes: Vec<u32> = rank_values(a.values())
        .into_iter()
        .map(|c| c as u32)
        .collect();
    let domain = codes.iter().max().map_or(0, |&m| m as usize + 1);
    let mut positions = vec![Vec::new(); domain];
    for (i, &c) in codes.iter().enumerate() {
        positions[c as usize].push(i as u32);
    }

    let frequent: Vec<usize> = (0..domain)
        .filter(|&v| positions[v].len() as f64 >= tau)
        .collect();
    let b_f = if frequent.is_empty() {
        DenseMatrix::zeros(b_cnt, b_cnt)
    } else {
        let mut m = DenseMatrix::zeros(b_cnt, frequent.len());
        for (col, &v) in frequent.iter().enumerate() {
            for &p in &positions[v] {
                m.add_at(p as usize / b_len, col, 1);
            }
        }
        counters.add_matmul();
        matmul(&m, &m.transpose(), algo)?
    };

    let mut b_r = DenseMatrix::zeros(b_cnt, b_cnt);
    for list in positions.iter().filter(|l| (l.len() as f64) < tau) {
        for &i in list {
            for &j in list {
                b_r.add_at(i as usize / b_len, j as usize / b_len, 1);
            }
        }
    }

    let mut b = DenseMatrix::zeros(b_cnt, b_cnt);
    for i in 0..b_cnt {
        for j in 0..b_cnt {
            b.set(i, j, b_f.get(i, j) + b_r.get(i, j));
        }
    }
    let mut s = DenseMatrix::zeros(b_cnt + 1, b_cnt + 1);
    for i in 0..b_cnt {
        for j in 0..b_cnt {
            s.set(
                i + 1,
                j + 1,
                s.get(i + 1, j) + s.get(i, j + 1) - s.get(i, j) + b.get(i, j),
            );
        }
    }

    Ok(OnlineEqStructure {
        n,
        codes,
        exponents: ex,
        omega,
        b_len,
        b_cnt,
        tau,
        frequent_values: frequent.len(),
        b_f,
        b_r,
        b,
        s,
        positions,
    })
}

pub fn online_eq_query(s: &OnlineEqStructure, r: Range) -> Result<i64> {
    r.check(s.n)?;
    Ok(s.answer(r))
}

impl OnlineEqStructure {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Occurrences of `code` at positions in `[lo, hi)`.
    fn occurrences(&self, code: u32, lo: usize, hi: usize) -> i64 {
        if hi <= lo {
            return 0;
        }
        let list = &self.positions[code as usize];
        let a = list.partition_point(|&p| (p as usize) < lo);
        let b = list.partition_point(|&p| (p as usize) < hi);
        (b - a) as i64
    }

    /// Assumes `r` is valid.
    pub fn answer(&self, r: Range) -> i64 {
        let (lo, hi) = (r.l - 1, r.r);
        let first = lo.div_ceil(self.b_len);
        let last = hi / self.b_len;
        if first >= last {
            return (lo..hi)
                .map(|x| self.occurrences(self.codes[x], x + 1, hi))
                .sum();
        }
        let (cs, ce) = (first * self.b_len, last * self.b_len);
        let s = &self.s;
        let rect =
            s.get(last, last) - s.get(first, last) - s.get(last, first) + s.get(first, first);
        let core = (rect - (ce - cs) as i64) / 2;
        let left: i64 = (lo..cs)
            .map(|x| self.occurrences(self.codes[x], x + 1, hi))
            .sum();
        let right: i64 = (ce..hi)
            .map(|x| self.occurrences(self.codes[x], cs, x))
            .sum();
        core + left + right
    }
}

/// Online equal-pairs handle: starts by assuming one query and rebuilds with
/// a doubled guess whenever the guess is exceeded.
pub struct OnlineEq {
    a: IntArray,
    omega: f64,
    algo: MatmulAlgo,
    q_guess: usize,
    answered: usize,
    rebuilds: usize,
    structure: OnlineEqStructure,
    counters: Counters,
}

impl OnlineEq {
    pub fn new(a: &IntArray, omega: f64, algo: MatmulAlgo, counters: Counters) -> Result<Self> {
        let structure = online_eq_build_with(a, 1, omega, algo, &counters)?;
        Ok(OnlineEq {
            a: a.clone(),
            omega,
            algo,
            q_guess: 1,
            answered: 0,
            rebuilds: 0,
            structure,
            counters,
        })
    }

    pub fn query(&mut self, r: Range) -> Result<i64> {
        r.check(self.a.len())?;
        self.answered += 1;
        if self.answered > self.q_guess {
            self.q_guess *= 2;
            self.rebuilds += 1;
            self.structure =
                online_eq_build_with(&self.a, self.q_guess, self.omega, self.algo, &self.counters)?;
        }
        Ok(self.structure.answer(r))
    }

    pub fn structure(&self) -> &OnlineEqStructure {
        &self.structure
    }

    pub fn q_guess(&self) -> usize {
        self.q_guess
    }

    pub fn rebuilds(&self) -> usize {
        self.rebuilds
    }
}

/// Equal-pairs [`RangeSolver`] that feeds queries one by one to [`OnlineEq`].
#[derive(Clone, Debug)]
pub struct OnlineEqSolver {
    pub omega: f64,
    pub algo: MatmulAlgo,
    pub counters: Counters,
}

impl OnlineEqSolver {
    pub fn new(algo: MatmulAlgo) -> Self {
        OnlineEqSolver {
            omega: algo.default_omega(),
            algo,
            counters: Counters::new(),
        }
    }

    pub fn with_omega(mut self, omega: f64) -> Self {
        self.omega = omega;
        self
    }
}

impl Default for OnlineEqSolver {
    fn default() -> Self {
        Self::new(MatmulAlgo::default())
    }
}

impl RangeSolver for OnlineEqSolver {
    fn solve(&self, a: &IntArray, queries: &[Range]) -> Result<Vec<i64>> {
        let mut h = OnlineEq::new(a, self.omega, self.algo, self.counters.clone())?;
        queries.iter().map(|&r| h.query(r)).collect()
    }
}
