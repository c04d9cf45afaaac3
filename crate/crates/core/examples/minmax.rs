//! (min, max) matrix products by binary search over ranks, each round one
//! batch of range disjointness queries.
//!
//! cargo run --release --example minmax

use trirange::lab::gen;
use trirange::minmax::minmax_product_traced;
use trirange::oracle;
use trirange::range_reductions::PairsViaSingle;
use trirange::rangequery::MoSolver;
use trirange::solver::{DisjointFromPairs, OracleDetector};
use trirange::triangle_reductions::DisjointViaDetection;
use trirange::{PairFunction, RandomSource};

fn main() -> trirange::Result<()> {
    let mut rng = RandomSource::new(8);
    let n = 24;
    let a = gen::random_matrix(&mut rng, n, n, 0, 1000)?;
    let b = gen::random_matrix(&mut rng, n, n, 0, 1000)?;
    let expect = oracle::minmax(&a, &b)?;

    let via_pairs = DisjointFromPairs(PairsViaSingle(MoSolver::new(PairFunction::Eqp)));
    let (c, report) = minmax_product_traced(&a, &b, &via_pairs)?;
    assert_eq!(c, expect);
    println!(
        "via range pairs: {} rounds, queries per round {:?}",
        report.batches, report.queries_per_batch
    );

    let (c, report) = minmax_product_traced(&a, &b, &DisjointViaDetection::new(OracleDetector))?;
    assert_eq!(c, expect);
    println!(
        "via triangle detection: {} rounds, monotone {}",
        report.batches, report.monotone
    );
    println!("C[0][..6] = {:?}", &c.row(0)[..6]);
    Ok(())
}
