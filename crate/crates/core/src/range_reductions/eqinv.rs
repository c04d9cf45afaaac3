//! Equal pairs and inversions in terms of each other.

use crate::array::{check_pairs, IntArray, RangePair};
use crate::error::Result;
use crate::pairfn::Decomposition;
use crate::solver::PairSolver;

use super::decomposition::{apply_decomposition, term_array};

/// Equal pairs from an inversion solver: a cross pair is equal iff it is an
/// inversion neither in `A` nor in `−A`.
#[derive(Clone, Debug)]
pub struct EqpViaInv<P>(pub P);

impl<P: PairSolver> PairSolver for EqpViaInv<P> {
    fn solve_pairs(&self, a: &IntArray, queries: &[RangePair]) -> Result<Vec<i64>> {
        check_pairs(a.len(), queries)?;
        let fwd = self.0.solve_pairs(a, queries)?;
        let back = self.0.solve_pairs(&a.negated(), queries)?;
        Ok(queries
            .iter()
            .zip(fwd.into_iter().zip(back))
            .map(|(p, (x, y))| (p.first.len() * p.second.len()) as i64 - x - y)
            .collect())
    }
}

/// Inversions from an equal-pairs solver over `⌈log₂ n⌉` arrays of length
/// `2n`, one per bit: array `t` pairs up prefixes that agree above bit `t`
/// where `x` has the bit set and `y` has it clear.
#[derive(Clone, Debug)]
pub struct InvViaEqp<P>(pub P);

impl<P: PairSolver> PairSolver for InvViaEqp<P> {
    fn solve_pairs(&self, a: &IntArray, queries: &[RangePair]) -> Result<Vec<i64>> {
        let norm = a.normalized();
        apply_decomposition(&Decomposition::inv(a.len()), &norm, queries, &self.0)
    }
}

/// The per-bit arrays used by [`InvViaEqp`], built from the normalized
/// array.
pub fn bit_arrays(a: &IntArray) -> Result<Vec<IntArray>> {
    let norm = a.normalized();
    Decomposition::inv(a.len())
        .terms
        .iter()
        .map(|t| term_array(t, &norm))
        .collect()
}
