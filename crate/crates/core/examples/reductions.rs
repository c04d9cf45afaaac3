//! Solving one range problem with a solver for another: pairs from single
//! ranges, equal pairs from inversions, inversions from equal pairs, and a
//! user-defined function through its equality decomposition.
//!
//! cargo run --release --example reductions

use trirange::lab::gen;
use trirange::oracle;
use trirange::range_reductions::{
    DecompositionPairs, EqpViaInv, InvViaEqp, PairsViaSingle, SingleViaPairs,
};
use trirange::rangequery::MoSolver;
use trirange::solver::{OraclePairs, PairSolver, RangeSolver};
use trirange::{Decomposition, PairFunction, RandomSource, Term};

fn main() -> trirange::Result<()> {
    let mut rng = RandomSource::new(3);
    let n = 600;
    let a = gen::random_array(&mut rng, n, 0, 30)?;
    let pairs = gen::random_pairs(&mut rng, n, 300, None)?;
    let singles = gen::random_ranges(&mut rng, n, 300, None)?;

    let inv_pairs = PairsViaSingle(MoSolver::new(PairFunction::Inv));
    let eqp_pairs = PairsViaSingle(MoSolver::new(PairFunction::Eqp));

    let checks: [(&str, &dyn PairSolver, PairFunction); 3] = [
        ("2riq from riq", &inv_pairs, PairFunction::Inv),
        ("2req from 2riq", &EqpViaInv(&inv_pairs), PairFunction::Eqp),
        ("2riq from 2req", &InvViaEqp(&eqp_pairs), PairFunction::Inv),
    ];
    for (name, solver, f) in checks {
        let ok = solver.solve_pairs(&a, &pairs)? == oracle::pair_answers(&f, &a, &pairs)?;
        println!("{name:<16} {}", if ok { "ok" } else { "MISMATCH" });
    }

    let back = SingleViaPairs::new(PairFunction::Eqp, &eqp_pairs);
    let ok = back.solve(&a, &singles)? == oracle::range_answers(&PairFunction::Eqp, &a, &singles)?;
    println!(
        "{:<16} {}",
        "req from 2req",
        if ok { "ok" } else { "MISMATCH" }
    );

    // f(x, y) = 2 when x and y agree mod 5, one equality term with weight 2.
    let d = Decomposition::new(vec![Term::new(2, |x| x.rem_euclid(5), |y| y.rem_euclid(5))]);
    let f = PairFunction::custom(
        "mod5",
        |x, y| 2 * (x.rem_euclid(5) == y.rem_euclid(5)) as i64,
        Some(d),
    );
    let via = DecompositionPairs::new(f.clone(), OraclePairs(PairFunction::Eqp));
    let ok = via.solve_pairs(&a, &pairs)? == oracle::pair_answers(&f, &a, &pairs)?;
    println!(
        "{:<16} {}",
        "mod5 via 2req",
        if ok { "ok" } else { "MISMATCH" }
    );
    Ok(())
}
