//! The `trirange` command line. [`run`] takes explicit writers so it can be
//! driven in-process.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::array::IntArray;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{self, QueryFile};
use crate::matrix::DenseMatrix;
use crate::oracle;
use crate::rng::RandomSource;
use crate::triangle::ListingStatus;

use super::bench::{self, BenchPlan, Target};
use super::gen;
use super::pipeline::{
    self, first_mismatch, Algo, Config, CountAlgo, DetectAlgo, Inner, ListAlgo, MinmaxAlgo, Problem,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "trirange",
    version,
    about = "Range-pair queries, edge-triangle problems and the reductions between them"
)]
pub struct Cli {
    /// Seed for every randomized step; runs with equal seeds print equal output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Matrix multiplication exponent used to size online-eq blocks.
    #[arg(long, global = true)]
    pub omega: Option<f64>,
    /// Listing threshold: below t ≤ ζ·m the main lister runs the baseline.
    #[arg(long, global = true, default_value_t = 128)]
    pub zeta: u64,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate an instance file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Write here instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Answer range queries.
    Solve {
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long)]
        array: PathBuf,
        #[arg(long)]
        queries: PathBuf,
        /// Triangle solver behind via-triangle.
        #[arg(long, value_enum, default_value_t = Inner::Oracle)]
        inner: Inner,
    },
    /// Answer queries of one problem through a solver for another.
    Reduce {
        #[arg(long, value_enum)]
        from: Problem,
        #[arg(long, value_enum)]
        to: Problem,
        /// Solver for the target problem.
        #[arg(long, value_enum, default_value_t = Algo::Mo)]
        algo: Algo,
        #[arg(long, value_enum, default_value_t = Inner::Oracle)]
        inner: Inner,
        #[arg(long)]
        array: PathBuf,
        #[arg(long)]
        queries: PathBuf,
        /// Compare with the oracle and print a verdict.
        #[arg(long)]
        verify: bool,
    },
    /// Per-edge triangle counts.
    Count {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = CountAlgo::Oracle)]
        algo: CountAlgo,
    },
    /// Per-edge triangle detection.
    Detect {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = DetectAlgo::Oracle)]
        algo: DetectAlgo,
    },
    /// List up to t triangles.
    List {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = ListAlgo::Baseline)]
        algo: ListAlgo,
    },
    /// (min,max)-product of two square matrices.
    Minmax {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = MinmaxAlgo::Oracle)]
        solver: MinmaxAlgo,
        #[arg(long, value_enum, default_value_t = Inner::Oracle)]
        inner: Inner,
    },
    /// Run an algorithm (or read an answer file) and compare with the oracle.
    Verify(VerifyArgs),
    /// Time a grid of problems, algorithms and sizes.
    Bench(BenchArgs),
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Uniform values in [lo, hi].
    Array {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        lo: i64,
        #[arg(long)]
        hi: Option<i64>,
        /// A random permutation of 1..=n instead.
        #[arg(long)]
        permutation: bool,
    },
    /// Uniform ranges, or non-overlapping range pairs with --pairs.
    Queries {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        pairs: bool,
        #[arg(long)]
        max_len: Option<usize>,
    },
    Graph {
        #[arg(long, value_enum)]
        model: GraphModel,
        #[arg(long)]
        n: usize,
        /// Edge probability for gnp and bipartite.
        #[arg(long, default_value_t = 0.1)]
        p: f64,
        /// Average degree for power-law.
        #[arg(long, default_value_t = 4.0)]
        degree: f64,
        #[arg(long, default_value_t = 2.5)]
        exponent: f64,
    },
    Matrix {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long, default_value_t = -50)]
        lo: i64,
        #[arg(long, default_value_t = 50)]
        hi: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphModel {
    Gnp,
    PowerLaw,
    #[value(name = "K", alias = "k", alias = "complete")]
    Complete,
    #[value(name = "C", alias = "c", alias = "cycle")]
    Cycle,
    Bipartite,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A range problem, etc, etd, list or minmax.
    #[arg(long)]
    pub problem: String,
    /// Algorithm under test; its choices depend on the problem.
    #[arg(long, default_value = "oracle")]
    pub algo: String,
    #[arg(long, value_enum, default_value_t = Inner::Oracle)]
    pub inner: Inner,
    #[arg(long)]
    pub array: Option<PathBuf>,
    #[arg(long)]
    pub queries: Option<PathBuf>,
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub a: Option<PathBuf>,
    #[arg(long)]
    pub b: Option<PathBuf>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Check these answers (last number of each line) instead of running an
    /// algorithm.
    #[arg(long)]
    pub answers: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated: riq, req, 2riq, 2req, 2rdq, etc, etd, list, minmax.
    #[arg(long, value_delimiter = ',', required = true)]
    pub problems: Vec<String>,
    /// Comma-separated; combinations a problem does not support are rejected.
    #[arg(long, value_delimiter = ',', required = true)]
    pub algos: Vec<String>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    #[arg(long, default_value_t = 1.0)]
    pub q_factor: f64,
    #[arg(long, default_value_t = 8.0)]
    pub degree: f64,
    /// Cells whose estimated working set exceeds this many words are skipped.
    #[arg(long, default_value_t = 1e8)]
    pub budget: f64,
}

enum Outcome {
    Ok,
    Fail,
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render().ansi());
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
        }
    };
    if let Some(t) = cli.threads {
        // Only the first configuration in a process takes effect.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build_global();
    }
    match dispatch(&cli, out, err) {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::Fail) => EXIT_FAIL,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Failed(_) => EXIT_FAIL,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn config(cli: &Cli, inner: Inner) -> Config {
    Config {
        seed: cli.seed,
        omega: cli.omega,
        zeta: cli.zeta,
        inner,
        ..Config::default()
    }
}

fn load_array(p: &Path) -> Result<IntArray> {
    io::parse_array(&io::read_file(p)?).map_err(|e| located(p, e))
}

fn load_queries(p: &Path, n: usize) -> Result<QueryFile> {
    io::parse_queries(&io::read_file(p)?, Some(n)).map_err(|e| located(p, e))
}

fn load_graph(p: &Path) -> Result<Graph> {
    io::parse_graph(&io::read_file(p)?).map_err(|e| located(p, e))
}

fn load_matrix(p: &Path) -> Result<DenseMatrix> {
    io::parse_matrix(&io::read_file(p)?).map_err(|e| located(p, e))
}

fn located(p: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{}: {msg}", p.display()),
        },
        e => e,
    }
}

fn need<'a>(p: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path> {
    p.as_deref()
        .ok_or_else(|| Error::Input(format!("--{flag} is required here")))
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let csv = cli.format == Format::Csv;
    match &cli.command {
        Command::Gen { kind, out: path } => {
            let text = generate(kind, cli.seed)?;
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Solve {
            problem,
            algo,
            array,
            queries,
            inner,
        } => {
            let a = load_array(array)?;
            let q = load_queries(queries, a.len())?;
            let answers = pipeline::solve(*problem, *algo, &a, &q, &config(cli, *inner))?;
            print_answers(out, &answers, csv)?;
        }
        Command::Reduce {
            from,
            to,
            algo,
            inner,
            array,
            queries,
            verify,
        } => {
            let a = load_array(array)?;
            let q = load_queries(queries, a.len())?;
            let answers = pipeline::reduce(*from, *to, *algo, &a, &q, &config(cli, *inner))?;
            print_answers(out, &answers, csv)?;
            if *verify {
                let expect = pipeline::oracle_answers(*from, &a, &q)?;
                return verdict(out, "query", &expect, &answers);
            }
        }
        Command::Count { graph, algo } => {
            let g = load_graph(graph)?;
            let c = pipeline::count(&g, *algo, &config(cli, Inner::Oracle))?;
            print_edges(out, &g, &c, csv, "count")?;
        }
        Command::Detect { graph, algo } => {
            let g = load_graph(graph)?;
            let d: Vec<u8> = pipeline::detect(&g, *algo, &config(cli, Inner::Oracle))?
                .into_iter()
                .map(u8::from)
                .collect();
            print_edges(out, &g, &d, csv, "in_triangle")?;
        }
        Command::List { graph, t, algo } => {
            let g = load_graph(graph)?;
            let res = pipeline::list(&g, *t, *algo, &config(cli, Inner::Oracle))?;
            if csv {
                writeln!(out, "a,b,c")?;
            }
            for tri in &res.triangles {
                let [a, b, c] = tri.0;
                if csv {
                    writeln!(out, "{a},{b},{c}")?;
                } else {
                    writeln!(out, "{a} {b} {c}")?;
                }
            }
            let status = match res.status {
                ListingStatus::Complete => "complete".to_string(),
                ListingStatus::Truncated(t) => format!("stopped at {t}"),
                ListingStatus::Failed => "failed".to_string(),
            };
            writeln!(err, "{} triangles, {status}", res.len())?;
        }
        Command::Minmax {
            a,
            b,
            solver,
            inner,
        } => {
            let (a, b) = (load_matrix(a)?, load_matrix(b)?);
            let c = pipeline::minmax(&a, &b, *solver, &config(cli, *inner))?;
            if csv {
                for i in 0..c.rows() {
                    let row: Vec<String> = c.row(i).iter().map(|v| v.to_string()).collect();
                    writeln!(out, "{}", row.join(","))?;
                }
            } else {
                out.write_all(io::format_matrix(&c).as_bytes())?;
            }
        }
        Command::Verify(v) => return verify(cli, v, out),
        Command::Bench(b) => {
            let mut targets = Vec::new();
            for p in &b.problems {
                for a in &b.algos {
                    let t = Target::parse(p, a)?;
                    if !targets.contains(&t) {
                        targets.push(t);
                    }
                }
            }
            let plan = BenchPlan {
                targets,
                sizes: b.sizes.clone(),
                reps: b.reps,
                seed: cli.seed,
                q_factor: b.q_factor,
                degree: b.degree,
                budget_words: b.budget,
                omega: cli.omega,
                zeta: cli.zeta,
            };
            let rows = bench::run(&plan);
            if csv {
                bench::write_csv(&rows, out)?;
            } else {
                bench::write_text(&rows, out)?;
            }
        }
    }
    Ok(Outcome::Ok)
}

fn print_answers(out: &mut dyn Write, answers: &[i64], csv: bool) -> Result<()> {
    if csv {
        writeln!(out, "query,answer")?;
    }
    for (i, x) in answers.iter().enumerate() {
        if csv {
            writeln!(out, "{},{x}", i + 1)?;
        } else {
            writeln!(out, "{x}")?;
        }
    }
    Ok(())
}

fn print_edges<T: std::fmt::Display>(
    out: &mut dyn Write,
    g: &Graph,
    vals: &[T],
    csv: bool,
    name: &str,
) -> Result<()> {
    if csv {
        writeln!(out, "u,v,{name}")?;
    }
    for (id, x) in vals.iter().enumerate() {
        let (u, v) = g.edge_labels(id);
        if csv {
            writeln!(out, "{u},{v},{x}")?;
        } else {
            writeln!(out, "{u} {v} {x}")?;
        }
    }
    Ok(())
}

fn verdict<T: PartialEq + Clone + std::fmt::Debug>(
    out: &mut dyn Write,
    unit: &str,
    expect: &[T],
    got: &[T],
) -> Result<Outcome> {
    match first_mismatch(expect, got) {
        None => {
            writeln!(
                out,
                "PASS: {} {unit} answers agree with the oracle",
                expect.len()
            )?;
            Ok(Outcome::Ok)
        }
        Some((i, e, g)) => {
            let show = |x: Option<T>| x.map_or("nothing".to_string(), |v| format!("{v:?}"));
            writeln!(
                out,
                "FAIL: first mismatch at {unit} {}: expected {}, got {}",
                i + 1,
                show(e),
                show(g)
            )?;
            Ok(Outcome::Fail)
        }
    }
}

/// Last integer of every non-empty line.
fn read_answers(p: &Path) -> Result<Vec<i64>> {
    let text = io::read_file(p)?;
    let mut v = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let Some(tok) = line.split_whitespace().last() else {
            continue;
        };
        v.push(tok.parse().map_err(|_| Error::Parse {
            line: i + 1,
            msg: format!("{}: not an integer: {tok:?}", p.display()),
        })?);
    }
    Ok(v)
}

fn verify(cli: &Cli, v: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome> {
    let cfg = config(cli, v.inner);
    let answers = v.answers.as_deref().map(read_answers).transpose()?;
    match v.problem.as_str() {
        "etc" | "etd" => {
            let g = load_graph(need(&v.graph, "graph")?)?;
            let expect: Vec<i64> = if v.problem == "etc" {
                oracle::edge_triangle_counts(&g)
                    .into_iter()
                    .map(|c| c as i64)
                    .collect()
            } else {
                oracle::edge_triangle_detection(&g)
                    .into_iter()
                    .map(i64::from)
                    .collect()
            };
            let got = match answers {
                Some(a) => a,
                None if v.problem == "etc" => pipeline::count(&g, v.algo.parse()?, &cfg)?
                    .into_iter()
                    .map(|c| c as i64)
                    .collect(),
                None => pipeline::detect(&g, v.algo.parse()?, &cfg)?
                    .into_iter()
                    .map(i64::from)
                    .collect(),
            };
            verdict(out, "edge", &expect, &got)
        }
        "list" => {
            let g = load_graph(need(&v.graph, "graph")?)?;
            let t = v.t.unwrap_or(g.m());
            let all = oracle::triangle_list(&g);
            let res = pipeline::list(&g, t, v.algo.parse()?, &cfg)?;
            let want = t.min(all.len());
            let extra: BTreeSet<_> = res.triangles.difference(&all).collect();
            if let Some(bad) = extra.first() {
                writeln!(out, "FAIL: listed {bad}, which is not a triangle")?;
                Ok(Outcome::Fail)
            } else if res.len() != want {
                writeln!(
                    out,
                    "FAIL: listed {} triangles, expected min(t, total) = {want}",
                    res.len()
                )?;
                Ok(Outcome::Fail)
            } else {
                writeln!(out, "PASS: {want} valid triangles listed")?;
                Ok(Outcome::Ok)
            }
        }
        "minmax" => {
            let (a, b) = (
                load_matrix(need(&v.a, "a")?)?,
                load_matrix(need(&v.b, "b")?)?,
            );
            let expect = oracle::minmax(&a, &b)?;
            let got = match answers {
                Some(x) => x,
                None => pipeline::minmax(&a, &b, v.algo.parse()?, &cfg)?
                    .data()
                    .to_vec(),
            };
            verdict(out, "cell", expect.data(), &got)
        }
        p => {
            let problem: Problem = p.parse()?;
            let a = load_array(need(&v.array, "array")?)?;
            let q = load_queries(need(&v.queries, "queries")?, a.len())?;
            let expect = pipeline::oracle_answers(problem, &a, &q)?;
            let got = match answers {
                Some(x) => x,
                None => pipeline::solve(problem, v.algo.parse()?, &a, &q, &cfg)?,
            };
            verdict(out, "query", &expect, &got)
        }
    }
}

fn generate(kind: &GenKind, seed: u64) -> Result<String> {
    let mut rng = RandomSource::new(seed);
    Ok(match *kind {
        GenKind::Array {
            n,
            lo,
            hi,
            permutation,
        } => {
            let a = if permutation {
                gen::permutation(&mut rng, n)?
            } else {
                gen::random_array(&mut rng, n, lo, hi.unwrap_or(lo + n as i64 - 1))?
            };
            io::format_array(&a)
        }
        GenKind::Queries {
            n,
            q,
            pairs,
            max_len,
        } => io::format_queries(&if pairs {
            QueryFile::Pairs(gen::random_pairs(&mut rng, n, q, max_len)?)
        } else {
            QueryFile::Single(gen::random_ranges(&mut rng, n, q, max_len)?)
        }),
        GenKind::Graph {
            model,
            n,
            p,
            degree,
            exponent,
        } => {
            let g = match model {
                GraphModel::Gnp => gen::gnp(&mut rng, n, p)?,
                GraphModel::PowerLaw => gen::power_law(&mut rng, n, degree, exponent)?,
                GraphModel::Complete => gen::complete(n)?,
                GraphModel::Cycle => gen::cycle(n)?,
                GraphModel::Bipartite => gen::bipartite(&mut rng, n, p)?,
            };
            io::format_graph(&g)
        }
        GenKind::Matrix { rows, cols, lo, hi } => io::format_matrix(&gen::random_matrix(
            &mut rng,
            rows,
            cols.unwrap_or(rows),
            lo,
            hi,
        )?),
    })
}
