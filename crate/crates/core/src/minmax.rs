//! The (min,max)-product through batches of range-disjointness queries,
//! one batch per round of a parallel binary search.
//!
//! After ranking all `2n²` entries, `C[i][j] ≤ x` iff some `k` has both
//! `A[i][k] ≤ x` and `B[k][j] ≤ x`, i.e. iff the prefix of row `i` sorted by
//! rank and the prefix of column `j` sorted by rank, each cut at `x`, share
//! an index `k`.

use crate::array::{IntArray, RangePair};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::solver::DisjointSolver;

/// Row and column permutations sorted by rank, concatenated into `𝒯`.
#[derive(Clone, Debug)]
pub struct SortedPermutationTable {
    pub n: usize,
    /// `rows[i]` lists the columns of row `i` of `A` by increasing rank.
    pub rows: Vec<Vec<usize>>,
    /// `cols[j]` lists the rows of column `j` of `B` by increasing rank.
    pub cols: Vec<Vec<usize>>,
    row_ranks: Vec<Vec<usize>>,
    col_ranks: Vec<Vec<usize>>,
    /// `values[r - 1]` is the entry of rank `r`.
    pub values: Vec<i64>,
    pub concatenated: IntArray,
}

impl SortedPermutationTable {
    /// Entries are ranked by `(value, matrix, position)`, so ranks are
    /// distinct and run over `1..=2n²`.
    pub fn build(a: &DenseMatrix, b: &DenseMatrix) -> Result<Self> {
        let n = a.rows();
        if n == 0 || !a.is_square() || !b.is_square() || b.rows() != n {
            return Err(Error::Shape(format!(
                "expected two non-empty square matrices of equal size, got {}x{} and {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        let mut keyed: Vec<(i64, u8, usize)> = Vec::with_capacity(2 * n * n);
        keyed.extend(a.data().iter().enumerate().map(|(p, &v)| (v, 0, p)));
        keyed.extend(b.data().iter().enumerate().map(|(p, &v)| (v, 1, p)));
        keyed.sort_unstable();
        let mut rank_a = vec![0usize; n * n];
        let mut rank_b = vec![0usize; n * n];
        let mut values = Vec::with_capacity(2 * n * n);
        for (r, &(v, src, p)) in keyed.iter().enumerate() {
            values.push(v);
            if src == 0 {
                rank_a[p] = r + 1;
            } else {
                rank_b[p] = r + 1;
            }
        }
        let mut rows = Vec::with_capacity(n);
        let mut row_ranks = Vec::with_capacity(n);
        for i in 0..n {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.sort_unstable_by_key(|&k| rank_a[i * n + k]);
            row_ranks.push(perm.iter().map(|&k| rank_a[i * n + k]).collect());
            rows.push(perm);
        }
        let mut cols = Vec::with_capacity(n);
        let mut col_ranks = Vec::with_capacity(n);
        for j in 0..n {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.sort_unstable_by_key(|&k| rank_b[k * n + j]);
            col_ranks.push(perm.iter().map(|&k| rank_b[k * n + j]).collect());
            cols.push(perm);
        }
        let flat: Vec<i64> = rows
            .iter()
            .chain(&cols)
            .flatten()
            .map(|&k| k as i64)
            .collect();
        Ok(SortedPermutationTable {
            n,
            rows,
            cols,
            row_ranks,
            col_ranks,
            values,
            concatenated: IntArray::new(flat)?,
        })
    }

    /// Length of the prefix of row `i` with rank `≤ x`.
    pub fn row_prefix(&self, i: usize, x: usize) -> usize {
        self.row_ranks[i].partition_point(|&r| r <= x)
    }

    pub fn col_prefix(&self, j: usize, x: usize) -> usize {
        self.col_ranks[j].partition_point(|&r| r <= x)
    }

    /// The disjointness query for the two prefixes, 1-based in `𝒯`.
    pub fn query(&self, i: usize, pa: usize, j: usize, pb: usize) -> RangePair {
        let n = self.n;
        let (a0, b0) = (i * n, n * n + j * n);
        RangePair::from_bounds(a0 + 1, a0 + pa, b0 + 1, b0 + pb)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MinmaxReport {
    pub batches: usize,
    /// Probes per round, `n²` each; empty-prefix probes are answered without
    /// a query.
    pub probes_per_batch: Vec<usize>,
    pub queries_per_batch: Vec<usize>,
    /// Every cell's `C ≤ x` outcomes were monotone in `x`.
    pub monotone: bool,
}

pub fn minmax_product<D: DisjointSolver + ?Sized>(
    a: &DenseMatrix,
    b: &DenseMatrix,
    solver: &D,
) -> Result<DenseMatrix> {
    Ok(minmax_product_traced(a, b, solver)?.0)
}

pub fn minmax_product_traced<D: DisjointSolver + ?Sized>(
    a: &DenseMatrix,
    b: &DenseMatrix,
    solver: &D,
) -> Result<(DenseMatrix, MinmaxReport)> {
    let table = SortedPermutationTable::build(a, b)?;
    let n = table.n;
    let total = 2 * n * n;
    let rounds = total.next_power_of_two().trailing_zeros() as usize;
    let cells = n * n;
    let mut lo = vec![1usize; cells];
    let mut hi = vec![total; cells];
    let mut trace: Vec<Vec<(usize, bool)>> = vec![Vec::new(); cells];
    let mut report = MinmaxReport {
        monotone: true,
        ..Default::default()
    };

    for _ in 0..rounds {
        let mut at_most = vec![false; cells];
        let mut pending = Vec::new();
        let mut queries = Vec::new();
        for c in 0..cells {
            let (i, j) = (c / n, c % n);
            let mid = (lo[c] + hi[c]) / 2;
            let (pa, pb) = (table.row_prefix(i, mid), table.col_prefix(j, mid));
            if pa > 0 && pb > 0 {
                pending.push(c);
                queries.push(table.query(i, pa, j, pb));
            }
        }
        let disjoint = if queries.is_empty() {
            Vec::new()
        } else {
            solver.solve_disjoint(&table.concatenated, &queries)?
        };
        if disjoint.len() != queries.len() {
            return Err(Error::Shape(format!(
                "disjointness solver returned {} answers for {} queries",
                disjoint.len(),
                queries.len()
            )));
        }
        for (&c, d) in pending.iter().zip(disjoint) {
            at_most[c] = !d;
        }
        for c in 0..cells {
            let mid = (lo[c] + hi[c]) / 2;
            trace[c].push((mid, at_most[c]));
            if at_most[c] {
                hi[c] = mid;
            } else {
                lo[c] = (mid + 1).min(hi[c]);
            }
        }
        report.batches += 1;
        report.probes_per_batch.push(cells);
        report.queries_per_batch.push(queries.len());
    }

    for t in &mut trace {
        t.sort_unstable();
        if t.windows(2).any(|w| w[0].1 && !w[1].1) {
            report.monotone = false;
        }
    }
    let mut out = DenseMatrix::zeros(n, n);
    for c in 0..cells {
        if lo[c] != hi[c] {
            return Err(Error::Shape("binary search did not converge".into()));
        }
        out.set(c / n, c % n, table.values[lo[c] - 1]);
    }
    Ok((out, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::solver::OracleDisjoint;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn examples() {
        let a = DenseMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        let b = DenseMatrix::from_rows(&[vec![5, 6], vec![7, 8]]).unwrap();
        let (c, rep) = minmax_product_traced(&a, &b, &OracleDisjoint).unwrap();
        assert_eq!(c.to_rows(), vec![vec![5, 6], vec![5, 6]]);
        assert_eq!(rep.batches, 3);
        assert!(rep.probes_per_batch.iter().all(|&p| p == 4));
        let one = minmax_product(
            &DenseMatrix::from_rows(&[vec![9]]).unwrap(),
            &DenseMatrix::from_rows(&[vec![-2]]).unwrap(),
            &OracleDisjoint,
        );
        assert_eq!(one.unwrap().to_rows(), vec![vec![9]]);
    }

    #[test]
    fn prefix_sets_match_thresholds() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let n = 4;
        let gen = |rng: &mut ChaCha8Rng| {
            DenseMatrix::from_vec(n, n, (0..n * n).map(|_| rng.random_range(0..5)).collect())
                .unwrap()
        };
        let (a, b) = (gen(&mut rng), gen(&mut rng));
        let t = SortedPermutationTable::build(&a, &b).unwrap();
        for x in 1..=2 * n * n {
            let v = t.values[x - 1];
            for i in 0..n {
                let p = t.row_prefix(i, x);
                let mut pre: Vec<usize> = t.rows[i][..p].to_vec();
                pre.sort_unstable();
                // Every entry below the threshold value is inside, every
                // entry above it outside.
                for k in 0..n {
                    if a.get(i, k) < v {
                        assert!(pre.contains(&k));
                    }
                    if a.get(i, k) > v {
                        assert!(!pre.contains(&k));
                    }
                }
            }
        }
    }

    #[test]
    fn random_with_duplicates() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let n = rng.random_range(1..=8);
            let mut gen = || {
                DenseMatrix::from_vec(n, n, (0..n * n).map(|_| rng.random_range(-5..=5)).collect())
                    .unwrap()
            };
            let (a, b) = (gen(), gen());
            let (c, rep) = minmax_product_traced(&a, &b, &OracleDisjoint).unwrap();
            assert_eq!(c, oracle::minmax(&a, &b).unwrap());
            assert!(rep.monotone);
        }
    }

    #[test]
    fn shape_errors() {
        let a = DenseMatrix::zeros(2, 3);
        assert!(matches!(
            minmax_product(&a, &a, &OracleDisjoint),
            Err(Error::Shape(_))
        ));
    }
}
