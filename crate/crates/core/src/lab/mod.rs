//! The experiment layer: generators, solver routing, verification and
//! benchmarking, plus the command-line front end built on them.

pub mod bench;
pub mod cli;
pub mod gen;
pub mod pipeline;
