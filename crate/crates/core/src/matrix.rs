//! Dense integer matrices and exact integer multiplication.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.data.chunks(self.cols.max(1)))
            .finish()
    }
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::from_vec(rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MatmulAlgo {
    Naive,
    #[default]
    Strassen,
}

impl MatmulAlgo {
    /// Exponent used only to tune block sizes.
    pub fn default_omega(self) -> f64 {
        match self {
            MatmulAlgo::Naive => 3.0,
            MatmulAlgo::Strassen => 2.807,
        }
    }
}

/// Below this side length Strassen recursion switches to the naive kernel.
pub const STRASSEN_CUTOFF: usize = 32;

pub fn matmul(a: &DenseMatrix, b: &DenseMatrix, algo: MatmulAlgo) -> Result<DenseMatrix> {
    match algo {
        MatmulAlgo::Naive => naive(a, b),
        MatmulAlgo::Strassen => strassen(a, b, STRASSEN_CUTOFF),
    }
}

fn check_shapes(a: &DenseMatrix, b: &DenseMatrix) -> Result<()> {
    if a.cols != b.rows {
        return Err(Error::Shape(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    Ok(())
}

pub fn naive(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    check_shapes(a, b)?;
    let mut c = DenseMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(i, k);
            if x == 0 {
                continue;
            }
            let brow = b.row(k);
            let crow = &mut c.data[i * b.cols..(i + 1) * b.cols];
            for (cv, bv) in crow.iter_mut().zip(brow) {
                *cv += x * bv;
            }
        }
    }
    Ok(c)
}

/// Strassen's algorithm on the operands zero-padded to a common power-of-two
/// side; padding is stripped from the result.
pub fn strassen(a: &DenseMatrix, b: &DenseMatrix, cutoff: usize) -> Result<DenseMatrix> {
    check_shapes(a, b)?;
    let side = a.rows.max(a.cols).max(b.cols).max(1).next_power_of_two();
    let pa = Square::padded(a, side);
    let pb = Square::padded(b, side);
    let pc = strassen_rec(&pa, &pb, cutoff.max(1));
    let mut c = DenseMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        c.data[i * b.cols..(i + 1) * b.cols].copy_from_slice(&pc.data[i * side..i * side + b.cols]);
    }
    Ok(c)
}

#[derive(Clone)]
struct Square {
    n: usize,
    data: Vec<i64>,
}

impl Square {
    fn zeros(n: usize) -> Self {
        Square {
            n,
            data: vec![0; n * n],
        }
    }

    fn padded(m: &DenseMatrix, n: usize) -> Self {
        let mut s = Self::zeros(n);
        for i in 0..m.rows {
            s.data[i * n..i * n + m.cols].copy_from_slice(m.row(i));
        }
        s
    }

    fn quadrant(&self, qi: usize, qj: usize) -> Square {
        let h = self.n / 2;
        let mut q = Square::zeros(h);
        for i in 0..h {
            let src = (qi * h + i) * self.n + qj * h;
            q.data[i * h..(i + 1) * h].copy_from_slice(&self.data[src..src + h]);
        }
        q
    }

    fn place(&mut self, qi: usize, qj: usize, q: &Square) {
        let h = self.n / 2;
        for i in 0..h {
            let dst = (qi * h + i) * self.n + qj * h;
            self.data[dst..dst + h].copy_from_slice(&q.data[i * h..(i + 1) * h]);
        }
    }

    fn add(&self, o: &Square) -> Square {
        Square {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(x, y)| x + y).collect(),
        }
    }

    fn sub(&self, o: &Square) -> Square {
        Square {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(x, y)| x - y).collect(),
        }
    }
}

fn strassen_rec(a: &Square, b: &Square, cutoff: usize) -> Square {
    let n = a.n;
    if n <= cutoff || n == 1 {
        let mut c = Square::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let x = a.data[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    c.data[i * n + j] += x * b.data[k * n + j];
                }
            }
        }
        return c;
    }
    let (a11, a12, a21, a22) = (
        a.quadrant(0, 0),
        a.quadrant(0, 1),
        a.quadrant(1, 0),
        a.quadrant(1, 1),
    );
    let (b11, b12, b21, b22) = (
        b.quadrant(0, 0),
        b.quadrant(0, 1),
        b.quadrant(1, 0),
        b.quadrant(1, 1),
    );

    let m1 = strassen_rec(&a11.add(&a22), &b11.add(&b22), cutoff);
    let m2 = strassen_rec(&a21.add(&a22), &b11, cutoff);
    let m3 = strassen_rec(&a11, &b12.sub(&b22), cutoff);
    let m4 = strassen_rec(&a22, &b21.sub(&b11), cutoff);
    let m5 = strassen_rec(&a11.add(&a12), &b22, cutoff);
    let m6 = strassen_rec(&a21.sub(&a11), &b11.add(&b12), cutoff);
    let m7 = strassen_rec(&a12.sub(&a22), &b21.add(&b22), cutoff);

    let c11 = m1.add(&m4).sub(&m5).add(&m7);
    let c12 = m3.add(&m5);
    let c21 = m2.add(&m4);
    let c22 = m1.sub(&m2).add(&m3).add(&m6);

    let mut c = Square::zeros(n);
    c.place(0, 0, &c11);
    c.place(0, 1, &c12);
    c.place(1, 0, &c21);
    c.place(1, 1, &c22);
    c
}
