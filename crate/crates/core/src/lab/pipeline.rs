//! Maps a (problem, algorithm) choice to a composed solver.

use std::fmt;
use std::str::FromStr;

use crate::array::IntArray;
use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::QueryFile;
use crate::matrix::{DenseMatrix, MatmulAlgo};
use crate::minmax::minmax_product;
use crate::oracle;
use crate::pairfn::PairFunction;
use crate::range_reductions::{EqpViaInv, InvViaEqp, PairsViaSingle, SingleViaPairs};
use crate::rangequery::{MoOnlineSolver, MoSolver, OnlineEqSolver};
use crate::rng::RandomSource;
use crate::solver::{
    DetectFromCounts, DisjointFromPairs, DisjointSolver, EdgeCounter, EdgeDetector, OracleCounter,
    OracleDetector, OracleDisjoint, OraclePairs, OracleRange, PairSolver, RangeSolver,
};
use crate::triangle::{
    baseline_list, list_via_detection, main_listing_retry, AyzCounter, BaselineLister,
    ListingDetector, ListingParams, ListingResult, DEFAULT_RETRIES,
};
use crate::triangle_reductions::{CountsViaPairs, DisjointViaDetection, PairsViaTriangles};

macro_rules! names {
    ($ty:ident { $($variant:ident = $name:literal),* $(,)? }) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum $ty { $($variant),* }

        impl $ty {
            pub const ALL: &'static [$ty] = &[$($ty::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $($ty::$variant => $name),* }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl clap::ValueEnum for $ty {
            fn value_variants<'a>() -> &'a [Self] {
                $ty::ALL
            }

            fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
                Some(clap::builder::PossibleValue::new(self.name()))
            }
        }

        impl FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                $ty::ALL.iter().copied().find(|x| x.name() == s).ok_or_else(|| {
                    let known: Vec<&str> = $ty::ALL.iter().map(|x| x.name()).collect();
                    Error::Input(format!("unknown {} '{s}' (expected one of {})", stringify!($ty).to_lowercase(), known.join(", ")))
                })
            }
        }
    };
}

names!(Problem { Riq = "riq", Req = "req", Riq2 = "2riq", Req2 = "2req", Rdq2 = "2rdq", Etc = "etc", Etd = "etd" });
names!(Algo { Mo = "mo", MoOnline = "mo-online", OnlineEq = "online-eq", ViaTriangle = "via-triangle", Oracle = "oracle" });
names!(Inner { Oracle = "oracle", Ayz = "ayz" });
names!(CountAlgo { Oracle = "oracle", Ayz = "ayz", Via2req = "via-2req" });
names!(DetectAlgo { Oracle = "oracle", Ayz = "ayz", ViaListing = "via-listing" });
names!(ListAlgo { Baseline = "baseline", ViaDetection = "via-detection", Main = "main" });
names!(MinmaxAlgo { Oracle = "oracle", Via2rdq = "via-2rdq", ViaEtd = "via-etd" });

impl Problem {
    pub fn function(self) -> Option<PairFunction> {
        match self {
            Problem::Riq | Problem::Riq2 => Some(PairFunction::Inv),
            Problem::Req | Problem::Req2 | Problem::Rdq2 => Some(PairFunction::Eqp),
            Problem::Etc | Problem::Etd => None,
        }
    }

    pub fn is_pairs(self) -> bool {
        matches!(self, Problem::Riq2 | Problem::Req2 | Problem::Rdq2)
    }

    pub fn is_graph(self) -> bool {
        matches!(self, Problem::Etc | Problem::Etd)
    }
}

/// Knobs shared by every solver built from one configuration.
#[derive(Clone, Debug)]
pub struct Config {
    pub seed: u64,
    pub omega: Option<f64>,
    pub zeta: u64,
    pub inner: Inner,
    pub matmul: MatmulAlgo,
    pub counters: Counters,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            omega: None,
            zeta: ListingParams::default().zeta,
            inner: Inner::Oracle,
            matmul: MatmulAlgo::default(),
            counters: Counters::new(),
        }
    }
}

impl Config {
    pub fn listing_params(&self) -> ListingParams {
        ListingParams {
            zeta: self.zeta,
            ..ListingParams::default()
        }
    }

    fn online_eq(&self) -> OnlineEqSolver {
        let s = OnlineEqSolver {
            counters: self.counters.clone(),
            ..OnlineEqSolver::new(self.matmul)
        };
        match self.omega {
            Some(w) => s.with_omega(w),
            None => s,
        }
    }

    pub fn counter(&self) -> Box<dyn EdgeCounter> {
        match self.inner {
            Inner::Oracle => Box::new(OracleCounter),
            Inner::Ayz => Box::new(AyzCounter {
                counters: self.counters.clone(),
                algo: self.matmul,
                ..AyzCounter::new()
            }),
        }
    }

    pub fn detector(&self) -> Box<dyn EdgeDetector> {
        match self.inner {
            Inner::Oracle => Box::new(OracleDetector),
            Inner::Ayz => Box::new(DetectFromCounts(self.counter())),
        }
    }

    fn triangle_pairs(&self) -> PairsViaTriangles<Box<dyn EdgeCounter>> {
        PairsViaTriangles {
            inner: self.counter(),
            counters: self.counters.clone(),
        }
    }
}

fn unsupported(problem: Problem, algo: Algo) -> Error {
    Error::Capability(format!("algorithm {algo} does not solve {problem}"))
}

/// Solver for `riq` or `req`.
pub fn range_solver(problem: Problem, algo: Algo, cfg: &Config) -> Result<Box<dyn RangeSolver>> {
    let f = match problem {
        Problem::Riq | Problem::Req => problem.function().unwrap(),
        _ => return Err(unsupported(problem, algo)),
    };
    Ok(match (algo, problem) {
        (Algo::Oracle, _) => Box::new(OracleRange(f)),
        (Algo::Mo, _) => Box::new(MoSolver::with_counters(f, cfg.counters.clone())),
        (Algo::MoOnline, _) => Box::new(MoOnlineSolver {
            f,
            counters: cfg.counters.clone(),
        }),
        (Algo::OnlineEq, Problem::Req) => Box::new(cfg.online_eq()),
        (Algo::OnlineEq, _) => Box::new(SingleViaPairs::new(
            f,
            pair_solver(Problem::Riq2, algo, cfg)?,
        )),
        (Algo::ViaTriangle, _) => Box::new(SingleViaPairs::new(
            f,
            pair_solver(problem.pairs_form(), algo, cfg)?,
        )),
    })
}

impl Problem {
    fn pairs_form(self) -> Problem {
        match self {
            Problem::Riq => Problem::Riq2,
            Problem::Req => Problem::Req2,
            p => p,
        }
    }
}

/// Solver for `2riq` or `2req`.
pub fn pair_solver(problem: Problem, algo: Algo, cfg: &Config) -> Result<Box<dyn PairSolver>> {
    let single = match problem {
        Problem::Riq2 => Problem::Riq,
        Problem::Req2 => Problem::Req,
        _ => return Err(unsupported(problem, algo)),
    };
    Ok(match (algo, problem) {
        (Algo::Oracle, _) => Box::new(OraclePairs(problem.function().unwrap())),
        (Algo::Mo | Algo::MoOnline, _) => {
            Box::new(PairsViaSingle(range_solver(single, algo, cfg)?))
        }
        (Algo::OnlineEq, Problem::Req2) => Box::new(PairsViaSingle(cfg.online_eq())),
        (Algo::OnlineEq, _) => Box::new(InvViaEqp(PairsViaSingle(cfg.online_eq()))),
        (Algo::ViaTriangle, Problem::Req2) => Box::new(cfg.triangle_pairs()),
        (Algo::ViaTriangle, _) => Box::new(InvViaEqp(cfg.triangle_pairs())),
    })
}

/// Solver for `2rdq`.
pub fn disjoint_solver(algo: Algo, cfg: &Config) -> Result<Box<dyn DisjointSolver>> {
    Ok(match algo {
        Algo::Oracle => Box::new(OracleDisjoint),
        Algo::ViaTriangle => Box::new(DisjointViaDetection {
            inner: cfg.detector(),
            counters: cfg.counters.clone(),
        }),
        _ => Box::new(DisjointFromPairs(pair_solver(Problem::Req2, algo, cfg)?)),
    })
}

/// Answers in query order; `2rdq` answers are `1` for disjoint, `0`
/// otherwise.
pub fn solve(
    problem: Problem,
    algo: Algo,
    a: &IntArray,
    queries: &QueryFile,
    cfg: &Config,
) -> Result<Vec<i64>> {
    match (problem, queries) {
        (_, q) if q.is_empty() => Ok(Vec::new()),
        (Problem::Riq | Problem::Req, QueryFile::Single(q)) => {
            range_solver(problem, algo, cfg)?.solve(a, q)
        }
        (Problem::Riq2 | Problem::Req2, QueryFile::Pairs(q)) => {
            pair_solver(problem, algo, cfg)?.solve_pairs(a, q)
        }
        (Problem::Rdq2, QueryFile::Pairs(q)) => Ok(disjoint_solver(algo, cfg)?
            .solve_disjoint(a, q)?
            .into_iter()
            .map(i64::from)
            .collect()),
        (p, _) if p.is_graph() => Err(Error::Input(format!("{p} takes a graph, not an array"))),
        (p, _) => Err(Error::Input(format!(
            "{p} expects {} queries",
            if p.is_pairs() {
                "four-number range-pair"
            } else {
                "two-number single-range"
            }
        ))),
    }
}

pub fn oracle_answers(problem: Problem, a: &IntArray, queries: &QueryFile) -> Result<Vec<i64>> {
    solve(problem, Algo::Oracle, a, queries, &Config::default())
}

/// `solve` for `from`, answered by reducing to `to` and running `algo` on
/// the target problem.
pub fn reduce(
    from: Problem,
    to: Problem,
    algo: Algo,
    a: &IntArray,
    queries: &QueryFile,
    cfg: &Config,
) -> Result<Vec<i64>> {
    let no_route = || Error::Capability(format!("no reduction from {from} to {to}"));
    match (from, to, queries) {
        (_, _, q) if q.is_empty() => Ok(Vec::new()),
        (Problem::Riq2 | Problem::Req2, _, QueryFile::Pairs(q)) if to == single_of(from) => {
            PairsViaSingle(range_solver(to, algo, cfg)?).solve_pairs(a, q)
        }
        (Problem::Riq | Problem::Req, _, QueryFile::Single(q)) if to == from.pairs_form() => {
            SingleViaPairs::new(from.function().unwrap(), pair_solver(to, algo, cfg)?).solve(a, q)
        }
        (Problem::Req2, Problem::Riq2, QueryFile::Pairs(q)) => {
            EqpViaInv(pair_solver(to, algo, cfg)?).solve_pairs(a, q)
        }
        (Problem::Riq2, Problem::Req2, QueryFile::Pairs(q)) => {
            InvViaEqp(pair_solver(to, algo, cfg)?).solve_pairs(a, q)
        }
        (Problem::Req2, Problem::Etc, QueryFile::Pairs(q)) => {
            cfg.triangle_pairs().solve_pairs(a, q)
        }
        (Problem::Rdq2, Problem::Etd, QueryFile::Pairs(q)) => {
            let s = DisjointViaDetection {
                inner: cfg.detector(),
                counters: cfg.counters.clone(),
            };
            Ok(s.solve_disjoint(a, q)?.into_iter().map(i64::from).collect())
        }
        (Problem::Rdq2, Problem::Req2, QueryFile::Pairs(q)) => {
            Ok(DisjointFromPairs(pair_solver(to, algo, cfg)?)
                .solve_disjoint(a, q)?
                .into_iter()
                .map(i64::from)
                .collect())
        }
        _ => Err(no_route()),
    }
}

fn single_of(p: Problem) -> Problem {
    match p {
        Problem::Riq2 => Problem::Riq,
        Problem::Req2 => Problem::Req,
        p => p,
    }
}

/// The reductions accepted by [`reduce`], as `(from, to)`.
pub const REDUCTIONS: &[(Problem, Problem)] = &[
    (Problem::Riq2, Problem::Riq),
    (Problem::Req2, Problem::Req),
    (Problem::Riq, Problem::Riq2),
    (Problem::Req, Problem::Req2),
    (Problem::Req2, Problem::Riq2),
    (Problem::Riq2, Problem::Req2),
    (Problem::Req2, Problem::Etc),
    (Problem::Rdq2, Problem::Etd),
    (Problem::Rdq2, Problem::Req2),
];

/// Per-edge triangle counts in edge-id order.
pub fn count(g: &Graph, algo: CountAlgo, cfg: &Config) -> Result<Vec<u64>> {
    match algo {
        CountAlgo::Oracle => Ok(oracle::edge_triangle_counts(g)),
        CountAlgo::Ayz => Config {
            inner: Inner::Ayz,
            ..cfg.clone()
        }
        .counter()
        .edge_counts(g),
        CountAlgo::Via2req => {
            CountsViaPairs(pair_solver(Problem::Req2, Algo::Mo, cfg)?).edge_counts(g)
        }
    }
}

pub fn detect(g: &Graph, algo: DetectAlgo, cfg: &Config) -> Result<Vec<bool>> {
    match algo {
        DetectAlgo::Oracle => Ok(oracle::edge_triangle_detection(g)),
        DetectAlgo::Ayz => Config {
            inner: Inner::Ayz,
            ..cfg.clone()
        }
        .detector()
        .detect(g),
        DetectAlgo::ViaListing => ListingDetector {
            counters: cfg.counters.clone(),
            ..ListingDetector::new(BaselineLister, cfg.seed)
        }
        .detect(g),
    }
}

/// At most `t` triangles. `via-detection` lists `min(m, t*)` and is then
/// cut to `t`.
pub fn list(g: &Graph, t: usize, algo: ListAlgo, cfg: &Config) -> Result<ListingResult> {
    match algo {
        ListAlgo::Baseline => Ok(baseline_list(g, t)),
        ListAlgo::ViaDetection => {
            let mut res = list_via_detection(g, cfg.detector().as_ref())?;
            if res.len() > t {
                res.triangles = res.triangles.into_iter().take(t).collect();
                res.status = crate::triangle::ListingStatus::Truncated(t);
            }
            Ok(res)
        }
        ListAlgo::Main => {
            if t == 0 {
                return Ok(baseline_list(g, 0));
            }
            cfg.counters.add_inner_call();
            main_listing_retry(
                g,
                t,
                cfg.listing_params(),
                &RandomSource::new(cfg.seed),
                DEFAULT_RETRIES,
            )
        }
    }
}

pub fn minmax(
    a: &DenseMatrix,
    b: &DenseMatrix,
    algo: MinmaxAlgo,
    cfg: &Config,
) -> Result<DenseMatrix> {
    match algo {
        MinmaxAlgo::Oracle => oracle::minmax(a, b),
        MinmaxAlgo::Via2rdq => minmax_product(a, b, disjoint_solver(Algo::Mo, cfg)?.as_ref()),
        MinmaxAlgo::ViaEtd => {
            minmax_product(a, b, disjoint_solver(Algo::ViaTriangle, cfg)?.as_ref())
        }
    }
}

/// Index and both values of the first disagreement.
pub fn first_mismatch<T: PartialEq + Clone>(
    expected: &[T],
    got: &[T],
) -> Option<(usize, Option<T>, Option<T>)> {
    (0..expected.len().max(got.len()))
        .find(|&i| expected.get(i) != got.get(i))
        .map(|i| (i, expected.get(i).cloned(), got.get(i).cloned()))
}
