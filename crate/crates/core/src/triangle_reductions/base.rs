//! Dyadic decomposition of intervals, as in a segment tree.

use std::fmt;

use crate::error::{Error, Result};

/// `base(level, index)` covers `[index·2^level, (index+1)·2^level − 1]`,
/// 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseInterval {
    pub level: u32,
    pub index: usize,
}

impl BaseInterval {
    pub fn new(level: u32, index: usize) -> Self {
        BaseInterval { level, index }
    }

    pub fn start(&self) -> usize {
        self.index << self.level
    }

    /// Exclusive end.
    pub fn end(&self) -> usize {
        (self.index + 1) << self.level
    }

    pub fn len(&self) -> usize {
        1 << self.level
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for BaseInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "base({}, {})", self.level, self.index)
    }
}

/// Decomposition result plus, per level, how many visited nodes only
/// partially overlapped the interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposed {
    pub bases: Vec<BaseInterval>,
    pub partial_per_level: Vec<usize>,
}

/// Splits `[lo, hi]` (0-based, inclusive) into maximal base intervals of a
/// tree over `n_pad` leaves, left to right.
pub fn base_decompose(lo: usize, hi: usize, n_pad: usize) -> Result<Vec<BaseInterval>> {
    Ok(base_decompose_traced(lo, hi, n_pad)?.bases)
}

pub fn base_decompose_traced(lo: usize, hi: usize, n_pad: usize) -> Result<Decomposed> {
    if !n_pad.is_power_of_two() {
        return Err(Error::Input(format!(
            "padded length {n_pad} is not a power of two"
        )));
    }
    if lo > hi || hi >= n_pad {
        return Err(Error::Range(format!(
            "[{lo}, {hi}] is not inside [0, {}]",
            n_pad - 1
        )));
    }
    let top = n_pad.trailing_zeros();
    let mut out = Decomposed {
        bases: Vec::new(),
        partial_per_level: vec![0; top as usize + 1],
    };
    descend(BaseInterval::new(top, 0), lo, hi + 1, &mut out);
    Ok(out)
}

fn descend(node: BaseInterval, lo: usize, hi: usize, out: &mut Decomposed) {
    if node.end() <= lo || node.start() >= hi {
        return;
    }
    if lo <= node.start() && node.end() <= hi {
        out.bases.push(node);
        return;
    }
    out.partial_per_level[node.level as usize] += 1;
    let child = node.level - 1;
    descend(BaseInterval::new(child, 2 * node.index), lo, hi, out);
    descend(BaseInterval::new(child, 2 * node.index + 1), lo, hi, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            base_decompose(1, 2, 4).unwrap(),
            vec![BaseInterval::new(0, 1), BaseInterval::new(0, 2)]
        );
        assert_eq!(
            base_decompose(0, 3, 4).unwrap(),
            vec![BaseInterval::new(2, 0)]
        );
        let d = base_decompose(1, 6, 8).unwrap();
        assert_eq!(d.len(), 4);
        let covered: Vec<usize> = d.iter().flat_map(|b| b.start()..b.end()).collect();
        assert_eq!(covered, (1..=6).collect::<Vec<_>>());
    }

    #[test]
    fn exhaustive_small() {
        for n_pad in [1usize, 2, 4, 8, 16, 32] {
            let bound = (2 * n_pad.trailing_zeros() as usize).max(1);
            for lo in 0..n_pad {
                for hi in lo..n_pad {
                    let d = base_decompose_traced(lo, hi, n_pad).unwrap();
                    let covered: Vec<usize> =
                        d.bases.iter().flat_map(|b| b.start()..b.end()).collect();
                    assert_eq!(covered, (lo..=hi).collect::<Vec<_>>());
                    assert!(d.bases.len() <= bound);
                    assert!(d.partial_per_level.iter().all(|&c| c <= 2));
                }
            }
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(base_decompose(2, 4, 4), Err(Error::Range(_))));
        assert!(matches!(base_decompose(0, 1, 6), Err(Error::Input(_))));
    }
}
