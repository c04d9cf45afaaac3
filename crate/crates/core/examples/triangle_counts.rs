//! Per-edge triangle counts on a skewed-degree graph: the degree-split
//! matrix-product counter and the route through range-pair queries.
//!
//! cargo run --release --example triangle_counts

use trirange::lab::gen;
use trirange::oracle;
use trirange::range_reductions::PairsViaSingle;
use trirange::rangequery::MoSolver;
use trirange::solver::EdgeCounter;
use trirange::triangle::{default_theta, AyzCounter};
use trirange::triangle_reductions::CountsViaPairs;
use trirange::{PairFunction, RandomSource};

fn main() -> trirange::Result<()> {
    let mut rng = RandomSource::new(5);
    let g = gen::power_law(&mut rng, 400, 10.0, 2.3)?;
    let expect = oracle::edge_triangle_counts(&g);
    println!(
        "n = {}, m = {}, triangles = {}",
        g.n(),
        g.m(),
        expect.iter().sum::<u64>() / 3
    );

    let ayz = AyzCounter::new().edge_counts(&g)?;
    assert_eq!(ayz, expect);
    println!("degree split at {}: ok", default_theta(g.m()));

    let via = CountsViaPairs(PairsViaSingle(MoSolver::new(PairFunction::Eqp))).edge_counts(&g)?;
    assert_eq!(via, expect);
    println!("via range-pair equal pairs: ok");

    let (best, id) = expect.iter().zip(0..).max().unwrap();
    println!(
        "busiest edge {:?} sits in {best} triangles",
        g.edge_labels(id)
    );
    Ok(())
}
