//! Reductions among the range query problems. Each one is a solver that
//! wraps another solver for the target problem.

mod bmm;
mod decomposition;
mod eqinv;
mod interval;

pub use bmm::bmm_via_2req;
pub use decomposition::{apply_decomposition, mul_pairs_fast, DecompositionPairs, MulPairs};
pub use eqinv::{bit_arrays, EqpViaInv, InvViaEqp};
pub use interval::{prefix_values, PairsViaSingle, SingleViaPairs};
