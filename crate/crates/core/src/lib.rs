//! Range-pair queries, edge-triangle problems and executable reductions
//! between them, each checked against brute-force oracles.
//!
//! ```
//! use trirange::range_reductions::{EqpViaInv, PairsViaSingle};
//! use trirange::rangequery::MoSolver;
//! use trirange::solver::PairSolver;
//! use trirange::{IntArray, PairFunction, RangePair};
//!
//! let a = IntArray::new(vec![1, 2, 1, 2, 1])?;
//! let q = [RangePair::from_bounds(1, 2, 3, 5)];
//! let eqp = EqpViaInv(PairsViaSingle(MoSolver::new(PairFunction::Inv)));
//! assert_eq!(eqp.solve_pairs(&a, &q)?, vec![3]);
//! # Ok::<(), trirange::Error>(())
//! ```

pub mod array;
pub mod counters;
pub mod error;
pub mod graph;
pub mod io;
pub mod lab;
pub mod matrix;
pub mod minmax;
pub mod oracle;
pub mod pairfn;
pub mod range_reductions;
pub mod rangequery;
pub mod rng;
pub mod solver;
pub mod triangle;
pub mod triangle_reductions;

pub use array::{normalize, IntArray, Range, RangePair, ValueCap};
pub use error::{Error, Result};
pub use graph::{Graph, Triangle, TripartiteMultigraph};
pub use matrix::{matmul, DenseMatrix, MatmulAlgo};
pub use pairfn::{Decomposition, PairFunction, Term};
pub use rng::RandomSource;
