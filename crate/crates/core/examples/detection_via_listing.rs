//! Deciding for every edge whether it lies in a triangle using only a
//! capacity-bounded triangle lister.
//!
//! cargo run --release --example detection_via_listing

use trirange::lab::gen;
use trirange::oracle;
use trirange::triangle::{detect_via_listing_traced, BaselineLister, DEFAULT_RESTART_CAP};
use trirange::RandomSource;

fn main() -> trirange::Result<()> {
    let mut rng = RandomSource::new(4);
    for (name, g) in [
        ("G(200, 0.05)", gen::gnp(&mut rng, 200, 0.05)?),
        ("bipartite", gen::bipartite(&mut rng, 80, 0.2)?),
        ("K12", gen::complete(12)?),
    ] {
        let (hit, report) = detect_via_listing_traced(
            &g,
            &BaselineLister,
            &RandomSource::new(1),
            DEFAULT_RESTART_CAP,
        )?;
        let hit = hit.expect("verified within the restart cap");
        assert_eq!(hit, oracle::edge_triangle_detection(&g));
        let in_some = hit.iter().filter(|&&h| h).count();
        println!(
            "{name:<13} m = {:>4}, edges in a triangle: {in_some:>4}, {report:?}",
            g.m()
        );
    }
    Ok(())
}
