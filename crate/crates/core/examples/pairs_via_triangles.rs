//! Range-pair equal pairs and disjointness answered by counting and
//! detecting triangles in a tripartite query graph.
//!
//! cargo run --release --example pairs_via_triangles

use trirange::lab::gen;
use trirange::oracle;
use trirange::solver::{DisjointSolver, OracleDetector, PairSolver};
use trirange::triangle::AyzCounter;
use trirange::triangle_reductions::{
    build_query_multigraph, DisjointViaDetection, PairsViaTriangles,
};
use trirange::{PairFunction, RandomSource};

fn main() -> trirange::Result<()> {
    let mut rng = RandomSource::new(11);
    let n = 512;
    let a = gen::random_array(&mut rng, n, 1, 64)?;
    let queries = gen::random_pairs(&mut rng, n, 200, None)?;

    let mg = build_query_multigraph(&a, &queries)?;
    let s = mg.sizes();
    println!(
        "query graph: {s:?}, within size bounds: {}",
        mg.within_bounds()
    );

    let counts = PairsViaTriangles::new(AyzCounter::new());
    let got = counts.solve_pairs(&a, &queries)?;
    assert_eq!(got, oracle::pair_answers(&PairFunction::Eqp, &a, &queries)?);
    println!(
        "equal pairs via triangle counts: ok, {} counter calls",
        counts.counters.snapshot().inner_calls
    );

    let disjoint = DisjointViaDetection::new(OracleDetector).solve_disjoint(&a, &queries)?;
    assert_eq!(disjoint, oracle::disjoint_answers(&a, &queries)?);
    println!(
        "disjoint pairs: {} of {}",
        disjoint.iter().filter(|&&d| d).count(),
        queries.len()
    );
    Ok(())
}
