//! Benchmark grid: one [`BenchRecord`] per (cell, repetition), rows sorted
//! by cell key.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::io::QueryFile;
use crate::rng::RandomSource;

use super::gen;
use super::pipeline::{self, Algo, Config, CountAlgo, DetectAlgo, ListAlgo, MinmaxAlgo, Problem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub problem: String,
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub q: usize,
    pub t: usize,
    pub seed: u64,
    pub rep: usize,
    pub wall_ns: u64,
    pub extender_steps: u64,
    pub matmul_calls: u64,
    pub inner_calls: u64,
    /// `ok`, or why the cell was skipped or failed.
    pub status: String,
}

pub const FIELDS: &[&str] = &[
    "problem",
    "algorithm",
    "n",
    "m",
    "q",
    "t",
    "seed",
    "rep",
    "wall_ns",
    "extender_steps",
    "matmul_calls",
    "inner_calls",
    "status",
];

/// What one cell runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Target {
    Range(Problem, Algo),
    Count(CountAlgo),
    Detect(DetectAlgo),
    List(ListAlgo),
    Minmax(MinmaxAlgo),
}

impl Target {
    /// `problem` is a range problem, `etc`, `etd`, `list` or `minmax`.
    pub fn parse(problem: &str, algo: &str) -> Result<Target> {
        Ok(match problem {
            "etc" => Target::Count(algo.parse()?),
            "etd" => Target::Detect(algo.parse()?),
            "list" => Target::List(algo.parse()?),
            "minmax" => Target::Minmax(algo.parse()?),
            p => Target::Range(p.parse()?, algo.parse()?),
        })
    }

    pub fn problem(&self) -> &'static str {
        match self {
            Target::Range(p, _) => p.name(),
            Target::Count(_) => "etc",
            Target::Detect(_) => "etd",
            Target::List(_) => "list",
            Target::Minmax(_) => "minmax",
        }
    }

    pub fn algorithm(&self) -> &'static str {
        match self {
            Target::Range(_, a) => a.name(),
            Target::Count(a) => a.name(),
            Target::Detect(a) => a.name(),
            Target::List(a) => a.name(),
            Target::Minmax(a) => a.name(),
        }
    }

    /// Rough peak working set in machine words.
    pub fn estimated_words(&self, n: usize, q: usize) -> f64 {
        let (nf, qf) = (n as f64, q.max(1) as f64);
        let log = nf.max(2.0).log2();
        match self {
            Target::Range(_, Algo::Oracle | Algo::Mo) => nf + qf,
            Target::Range(_, Algo::MoOnline) => nf * nf.sqrt() * qf.sqrt() * log,
            Target::Range(_, Algo::OnlineEq) => nf * nf.sqrt() + nf * log,
            Target::Range(_, Algo::ViaTriangle) => qf * 4.0 * log * log + 2.0 * nf * log,
            Target::Count(_) | Target::Detect(_) | Target::List(_) => 16.0 * nf * log,
            Target::Minmax(_) => 8.0 * nf * nf,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchPlan {
    pub targets: Vec<Target>,
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    /// `q = round(q_factor · n)` for range problems.
    pub q_factor: f64,
    /// Average degree of the `G(n, p)` graphs.
    pub degree: f64,
    pub budget_words: f64,
    pub omega: Option<f64>,
    pub zeta: u64,
}

impl Default for BenchPlan {
    fn default() -> Self {
        BenchPlan {
            targets: Vec::new(),
            sizes: Vec::new(),
            reps: 1,
            seed: 0,
            q_factor: 1.0,
            degree: 8.0,
            budget_words: 1e8,
            omega: None,
            zeta: Config::default().zeta,
        }
    }
}

struct Job {
    target: Target,
    n: usize,
    rep: usize,
}

pub fn run(plan: &BenchPlan) -> Vec<BenchRecord> {
    let mut jobs = Vec::new();
    for &target in &plan.targets {
        for &n in &plan.sizes {
            for rep in 0..plan.reps {
                jobs.push(Job { target, n, rep });
            }
        }
    }
    let mut rows: Vec<BenchRecord> = jobs.par_iter().map(|j| run_cell(plan, j)).collect();
    rows.sort_by(|a, b| {
        (&a.problem, &a.algorithm, a.n, a.rep).cmp(&(&b.problem, &b.algorithm, b.n, b.rep))
    });
    rows
}

fn run_cell(plan: &BenchPlan, job: &Job) -> BenchRecord {
    let (n, target) = (job.n, job.target);
    // Instances depend on (size, repetition) only, so all algorithms in a
    // size class see the same inputs.
    let mut rng = RandomSource::new(plan.seed)
        .split(n as u64)
        .split(job.rep as u64);
    let q = match target {
        Target::Range(..) => (plan.q_factor * n as f64).round() as usize,
        _ => 0,
    };
    let mut rec = BenchRecord {
        problem: target.problem().into(),
        algorithm: target.algorithm().into(),
        n,
        m: 0,
        q,
        t: 0,
        seed: plan.seed,
        rep: job.rep,
        wall_ns: 0,
        extender_steps: 0,
        matmul_calls: 0,
        inner_calls: 0,
        status: "ok".into(),
    };
    let words = target.estimated_words(n, q);
    if words > plan.budget_words {
        rec.status = format!(
            "skipped: estimated {words:.3e} words exceeds budget {:.3e}",
            plan.budget_words
        );
        return rec;
    }
    let cfg = Config {
        seed: plan.seed,
        omega: plan.omega,
        zeta: plan.zeta,
        counters: Counters::new(),
        ..Config::default()
    };
    let outcome = (|| -> Result<u64> {
        let timed = |f: &mut dyn FnMut() -> Result<()>| -> Result<u64> {
            let start = Instant::now();
            f()?;
            Ok(start.elapsed().as_nanos() as u64)
        };
        match target {
            Target::Range(problem, algo) => {
                let a = gen::random_array(&mut rng, n, 0, (n as f64).sqrt().ceil() as i64)?;
                let queries = if problem.is_pairs() {
                    QueryFile::Pairs(gen::random_pairs(&mut rng, n, q, None)?)
                } else {
                    QueryFile::Single(gen::random_ranges(&mut rng, n, q, None)?)
                };
                timed(&mut || pipeline::solve(problem, algo, &a, &queries, &cfg).map(drop))
            }
            Target::Count(_) | Target::Detect(_) | Target::List(_) => {
                let p = if n > 1 {
                    (plan.degree / (n - 1) as f64).min(1.0)
                } else {
                    0.0
                };
                let g = gen::gnp(&mut rng, n, p)?;
                rec.m = g.m();
                rec.t = g.m();
                timed(&mut || match target {
                    Target::Count(a) => pipeline::count(&g, a, &cfg).map(drop),
                    Target::Detect(a) => pipeline::detect(&g, a, &cfg).map(drop),
                    Target::List(a) => pipeline::list(&g, g.m(), a, &cfg).map(drop),
                    _ => unreachable!(),
                })
            }
            Target::Minmax(algo) => {
                let a = gen::random_matrix(&mut rng, n, n, -50, 50)?;
                let b = gen::random_matrix(&mut rng, n, n, -50, 50)?;
                timed(&mut || pipeline::minmax(&a, &b, algo, &cfg).map(drop))
            }
        }
    })();
    match outcome {
        Ok(ns) => rec.wall_ns = ns,
        Err(e) => rec.status = format!("error: {e}"),
    }
    let c = cfg.counters.snapshot();
    rec.extender_steps = c.extender_steps;
    rec.matmul_calls = c.matmul_calls;
    rec.inner_calls = c.inner_calls;
    rec
}

pub fn write_csv<W: Write>(rows: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(FIELDS).map_err(csv_err)?;
    }
    for r in rows {
        w.serialize(r).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

pub fn write_text<W: Write>(rows: &[BenchRecord], mut out: W) -> Result<()> {
    writeln!(
        out,
        "{:<7} {:<14} {:>7} {:>7} {:>7} {:>4} {:>14} {:>14} {:>6} {:>6}  status",
        "problem", "algorithm", "n", "m", "q", "rep", "wall_ns", "steps", "matmul", "inner"
    )?;
    for r in rows {
        writeln!(
            out,
            "{:<7} {:<14} {:>7} {:>7} {:>7} {:>4} {:>14} {:>14} {:>6} {:>6}  {}",
            r.problem,
            r.algorithm,
            r.n,
            r.m,
            r.q,
            r.rep,
            r.wall_ns,
            r.extender_steps,
            r.matmul_calls,
            r.inner_calls,
            r.status
        )?;
    }
    Ok(())
}

/// Least-squares slope of `log y` against `log x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let (mx, my) = (
        logs.iter().map(|p| p.0).sum::<f64>() / k,
        logs.iter().map(|p| p.1).sum::<f64>() / k,
    );
    let num: f64 = logs.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = logs.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    num / den
}
