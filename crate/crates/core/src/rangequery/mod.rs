//! Direct solvers for range queries: Mo's offline algorithm, its persistent
//! online variant and the block-matrix online equal-pairs structure.

pub mod mo;
pub mod mo_online;
pub mod online_eq;
pub mod store;
pub mod window;

pub use mo::{block_size, mo_offline, mo_run, MoRun, MoSolver};
pub use mo_online::{MoOnline, MoOnlineSolver};
pub use online_eq::{
    online_eq_build, online_eq_build_with, online_eq_query, OnlineEq, OnlineEqSolver,
    OnlineEqStructure,
};
pub use window::{Extender, Kernel};
