//! Boolean matrix multiplication as one batch of range-pair equal-pairs
//! queries.
//!
//! cargo run --release --example bmm

use trirange::lab::gen;
use trirange::oracle;
use trirange::range_reductions::{bmm_via_2req, PairsViaSingle};
use trirange::rangequery::MoSolver;
use trirange::{matmul, DenseMatrix, MatmulAlgo, PairFunction, RandomSource};

fn main() -> trirange::Result<()> {
    let mut rng = RandomSource::new(6);
    let d = 48;
    // About one entry in sixteen is set, so the product is not all ones.
    let mut sparse = || -> trirange::Result<DenseMatrix> {
        let m = gen::random_matrix(&mut rng, d, d, 0, 15)?;
        DenseMatrix::from_vec(d, d, m.data().iter().map(|&v| (v == 0) as i64).collect())
    };
    let (x, y) = (sparse()?, sparse()?);

    let c = bmm_via_2req(&x, &y, &PairsViaSingle(MoSolver::new(PairFunction::Eqp)))?;
    assert_eq!(c, oracle::boolean_product(&x, &y)?);

    let counted = matmul(&x, &y, MatmulAlgo::Strassen)?;
    assert!(c
        .data()
        .iter()
        .zip(counted.data())
        .all(|(&b, &k)| b == (k > 0) as i64));
    println!(
        "{d}x{d} boolean product: {} ones",
        c.data().iter().sum::<i64>()
    );
    Ok(())
}
