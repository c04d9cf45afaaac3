//! Listing triangles: the baseline lister, listing from a per-edge detector,
//! and the randomized output-sensitive lister with a capacity `t`.
//!
//! cargo run --release --example listing

use trirange::lab::gen;
use trirange::oracle;
use trirange::solver::OracleDetector;
use trirange::triangle::{
    baseline_list, list_via_detection, main_listing_retry, ListingParams, DEFAULT_RETRIES,
};
use trirange::RandomSource;

fn main() -> trirange::Result<()> {
    let mut rng = RandomSource::new(2);
    let g = gen::gnp(&mut rng, 120, 0.15)?;
    let all = oracle::triangle_list(&g);
    println!("n = {}, m = {}, triangles = {}", g.n(), g.m(), all.len());

    let base = baseline_list(&g, usize::MAX);
    assert_eq!(base.triangles, all);

    let det = list_via_detection(&g, &OracleDetector)?;
    assert_eq!(det.triangles, all);
    println!("via detection: {} triangles, {:?}", det.len(), det.status);

    let params = ListingParams::default();
    for t in [g.m(), all.len(), 4 * all.len()] {
        let res = main_listing_retry(&g, t, params, &RandomSource::new(9), DEFAULT_RETRIES)?;
        assert!(res.triangles.is_subset(&all));
        println!("t = {t:>5}: listed {:>5}, {:?}", res.len(), res.status);
    }
    Ok(())
}
