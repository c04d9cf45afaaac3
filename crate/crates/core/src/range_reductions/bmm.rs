//! Boolean matrix multiplication through one batch of equal-pairs queries.

use crate::array::{IntArray, RangePair};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::solver::PairSolver;

/// Row `i` of `x` and column `j` of `y` become the lists of inner indices
/// holding a 1; `(XY)[i][j] = 1` iff the two lists share an index. Empty
/// lists give 0 without a query.
pub fn bmm_via_2req<P: PairSolver + ?Sized>(
    x: &DenseMatrix,
    y: &DenseMatrix,
    solver: &P,
) -> Result<DenseMatrix> {
    let d = x.rows();
    if !x.is_square() || !y.is_square() || y.rows() != d {
        return Err(Error::Shape(format!(
            "expected two square matrices of equal size, got {}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    if let Some(v) = x.data().iter().chain(y.data()).find(|&&v| v != 0 && v != 1) {
        return Err(Error::Input(format!(
            "boolean matrix entry {v} is neither 0 nor 1"
        )));
    }
    let mut values = Vec::new();
    let mut rows = Vec::with_capacity(d);
    for i in 0..d {
        let start = values.len();
        values.extend((0..d).filter(|&k| x.get(i, k) == 1).map(|k| k as i64));
        rows.push((start + 1, values.len()));
    }
    let mut cols = Vec::with_capacity(d);
    for j in 0..d {
        let start = values.len();
        values.extend((0..d).filter(|&k| y.get(k, j) == 1).map(|k| k as i64));
        cols.push((start + 1, values.len()));
    }
    let mut out = DenseMatrix::zeros(d, d);
    let mut cells = Vec::new();
    let mut queries = Vec::new();
    for (i, &(l1, r1)) in rows.iter().enumerate() {
        for (j, &(l2, r2)) in cols.iter().enumerate() {
            if l1 <= r1 && l2 <= r2 {
                cells.push((i, j));
                queries.push(RangePair::from_bounds(l1, r1, l2, r2));
            }
        }
    }
    if queries.is_empty() {
        return Ok(out);
    }
    let answers = solver.solve_pairs(&IntArray::new(values)?, &queries)?;
    for ((i, j), c) in cells.into_iter().zip(answers) {
        out.set(i, j, (c > 0) as i64);
    }
    Ok(out)
}
