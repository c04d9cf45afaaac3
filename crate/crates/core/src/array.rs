//! The query array and the two shapes of range queries asked against it.
//!
//! Ranges are 1-based and inclusive, exactly as they appear in input files.
//! Solvers convert to 0-based offsets internally.

use std::fmt;

use crate::error::{Error, Result};

/// A non-empty integer array `A[1..n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntArray {
    values: Vec<i64>,
}

impl IntArray {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Input(
                "array must contain at least one element".into(),
            ));
        }
        Ok(Self { values })
    }

    /// Like [`IntArray::new`], additionally rejecting values whose magnitude
    /// exceeds `cap`.
    pub fn with_cap(values: Vec<i64>, cap: ValueCap) -> Result<Self> {
        let a = Self::new(values)?;
        let bound = cap.bound(a.len());
        if let Some((i, v)) = a
            .values
            .iter()
            .enumerate()
            .find(|(_, v)| v.unsigned_abs() > bound)
        {
            return Err(Error::Input(format!(
                "value {v} at position {} exceeds the magnitude cap {bound}",
                i + 1
            )));
        }
        Ok(a)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }

    /// 1-based access.
    pub fn get(&self, i: usize) -> i64 {
        self.values[i - 1]
    }

    pub fn negated(&self) -> IntArray {
        IntArray {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    pub fn normalized(&self) -> IntArray {
        normalize(self)
    }
}

/// Magnitude cap on input values, a polynomial `n^degree` in the array length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValueCap {
    pub degree: u32,
}

impl Default for ValueCap {
    fn default() -> Self {
        ValueCap { degree: 3 }
    }
}

impl ValueCap {
    /// `max(n, 2)^degree`, saturating. The floor of 2 keeps a one-element
    /// array from being capped at 1.
    pub fn bound(&self, n: usize) -> u64 {
        (n.max(2) as u64).saturating_pow(self.degree)
    }
}

/// Replace each value by its 0-based rank among the distinct values.
pub fn normalize(a: &IntArray) -> IntArray {
    IntArray {
        values: rank_values(a.values())
            .into_iter()
            .map(|r| r as i64)
            .collect(),
    }
}

/// Dense ranks of `values` in `[0, distinct)`.
pub fn rank_values(values: &[i64]) -> Vec<usize> {
    let mut distinct = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    values
        .iter()
        .map(|v| distinct.binary_search(v).unwrap())
        .collect()
}

/// `[l, r]`, 1-based and inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Range {
    pub l: usize,
    pub r: usize,
}

impl Range {
    pub fn new(l: usize, r: usize) -> Self {
        Range { l, r }
    }

    pub fn len(&self) -> usize {
        self.r + 1 - self.l
    }

    pub fn is_empty(&self) -> bool {
        self.r < self.l
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.l < 1 || self.l > self.r || self.r > n {
            return Err(Error::Range(format!(
                "[{}, {}] is not a valid range of an array of length {n}",
                self.l, self.r
            )));
        }
        Ok(())
    }

    /// 0-based half-open bounds.
    pub fn span(&self) -> std::ops::Range<usize> {
        self.l - 1..self.r
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.l, self.r)
    }
}

/// Two nonoverlapping ranges with `first.r < second.l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RangePair {
    pub first: Range,
    pub second: Range,
}

impl RangePair {
    pub fn new(first: Range, second: Range) -> Self {
        RangePair { first, second }
    }

    pub fn from_bounds(l1: usize, r1: usize, l2: usize, r2: usize) -> Self {
        RangePair {
            first: Range::new(l1, r1),
            second: Range::new(l2, r2),
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        self.first.check(n)?;
        self.second.check(n)?;
        if self.first.r >= self.second.l {
            return Err(Error::Input(format!(
                "ranges [{}, {}] and [{}, {}] overlap or are out of order",
                self.first.l, self.first.r, self.second.l, self.second.r
            )));
        }
        Ok(())
    }
}

impl fmt::Display for RangePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.first, self.second)
    }
}

pub fn check_ranges(n: usize, queries: &[Range]) -> Result<()> {
    queries.iter().try_for_each(|q| q.check(n))
}

pub fn check_pairs(n: usize, queries: &[RangePair]) -> Result<()> {
    queries.iter().try_for_each(|q| q.check(n))
}
