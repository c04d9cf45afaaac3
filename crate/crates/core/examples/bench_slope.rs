//! A small scaling sweep with the benchmark harness and a log-log fit of
//! wall time against n.
//!
//! cargo run --release --example bench_slope

use trirange::lab::bench::{self, BenchPlan, Target};

fn main() -> trirange::Result<()> {
    let plan = BenchPlan {
        targets: vec![
            Target::parse("riq", "mo")?,
            Target::parse("req", "online-eq")?,
        ],
        sizes: vec![1 << 10, 1 << 11, 1 << 12, 1 << 13],
        reps: 3,
        ..BenchPlan::default()
    };
    let rows = bench::run(&plan);
    bench::write_text(&rows, std::io::stdout())?;

    for target in &plan.targets {
        let pts: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| r.algorithm == target.algorithm() && r.status == "ok")
            .map(|r| (r.n as f64, r.wall_ns as f64))
            .collect();
        println!(
            "{} / {}: time ~ n^{:.2}",
            target.problem(),
            target.algorithm(),
            bench::loglog_slope(&pts)
        );
    }
    Ok(())
}
