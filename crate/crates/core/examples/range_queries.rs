//! Inversions and equal pairs inside ranges with the three direct solvers,
//! checked against the brute-force oracle.
//!
//! cargo run --release --example range_queries

use trirange::lab::gen;
use trirange::oracle;
use trirange::rangequery::{MoOnline, MoSolver, OnlineEq, OnlineEqSolver};
use trirange::solver::RangeSolver;
use trirange::{MatmulAlgo, PairFunction, RandomSource, Range};

fn main() -> trirange::Result<()> {
    let mut rng = RandomSource::new(7);
    let n = 2000;
    let a = gen::random_array(&mut rng, n, 1, 40)?;
    let queries = gen::random_ranges(&mut rng, n, 500, None)?;

    for f in [PairFunction::Inv, PairFunction::Eqp] {
        let expect = oracle::range_answers(&f, &a, &queries)?;
        let mo = MoSolver::new(f.clone());
        assert_eq!(mo.solve(&a, &queries)?, expect);
        println!(
            "{f:?}: offline Mo agrees, {} window steps",
            mo.counters.snapshot().extender_steps
        );

        // The online variant answers each query as it arrives.
        let mut online = MoOnline::new(&f, &a)?;
        for (&r, &want) in queries.iter().zip(&expect) {
            assert_eq!(online.query(r)?, want);
        }
        println!(
            "{f:?}: online Mo agrees after {} rebuilds (block {})",
            online.rebuilds(),
            online.block()
        );
    }

    let eq = OnlineEqSolver::new(MatmulAlgo::Strassen);
    assert_eq!(
        eq.solve(&a, &queries)?,
        oracle::range_answers(&PairFunction::Eqp, &a, &queries)?
    );

    let mut s = OnlineEq::new(
        &a,
        MatmulAlgo::Strassen.default_omega(),
        MatmulAlgo::Strassen,
        Default::default(),
    )?;
    let whole = s.query(Range::new(1, n))?;
    println!("equal pairs in the whole array: {whole}");
    Ok(())
}
