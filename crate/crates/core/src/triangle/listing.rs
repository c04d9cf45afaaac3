//! Output-sensitive listing of up to `t ≥ m` triangles from a lister that
//! handles `t = m`, by random coloring and random vertex sampling.

use std::collections::{BTreeMap, BTreeSet};

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle};
use crate::rng::RandomSource;
use crate::solver::TriangleLister;

use super::baseline::baseline_list;
use super::via_listing::ceil_log2;
use super::{ListingResult, ListingStatus};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ListingParams {
    /// Below `t ≤ ζ·m` the inner algorithm simply runs the baseline lister.
    pub zeta: u64,
    /// `⌈c·log₂ m⌉` coloring rounds.
    pub c: f64,
}

impl Default for ListingParams {
    fn default() -> Self {
        ListingParams { zeta: 128, c: 2.0 }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct InnerReport {
    pub routed_to_baseline: bool,
    pub colors: usize,
    pub rounds: usize,
    pub removed_vertices: usize,
    /// Degree bound `m / r` and the largest degree left after removal.
    pub degree_limit: f64,
    pub max_degree_after: usize,
    pub triples_listed: usize,
    pub triples_failed: usize,
    pub triples_vulnerable: usize,
}

pub fn inner_listing(
    g: &Graph,
    t: usize,
    params: ListingParams,
    rng: &RandomSource,
) -> Result<ListingResult> {
    Ok(inner_listing_traced(g, t, params, rng)?.0)
}

/// Lists every triangle with high probability when there are at most `t`
/// of them, and some subset otherwise. The status is `Complete` unless
/// more than `t` triangles were found.
pub fn inner_listing_traced(
    g: &Graph,
    t: usize,
    params: ListingParams,
    rng: &RandomSource,
) -> Result<(ListingResult, InnerReport)> {
    if t == 0 {
        return Err(Error::Input("listing capacity t must be positive".into()));
    }
    let mut report = InnerReport::default();
    let m = g.m();
    if m == 0 {
        return Ok((
            ListingResult {
                triangles: BTreeSet::new(),
                status: ListingStatus::Complete,
            },
            report,
        ));
    }
    if t as f64 <= params.zeta as f64 * m as f64 {
        report.routed_to_baseline = true;
        return Ok((baseline_list(g, t), report));
    }

    let mf = m as f64;
    let r = t as f64 / mf;
    let colors = r.floor() as usize;
    let limit = mf / r;
    report.colors = colors;
    report.degree_limit = limit;

    let mut found = BTreeSet::new();
    let mut removed = vec![false; g.n()];
    for v in (0..g.n()).filter(|&v| g.degree(v) as f64 > limit) {
        for &(a, b) in g.edges() {
            let (a, b) = (a as usize, b as usize);
            if a != v
                && b != v
                && !removed[a]
                && !removed[b]
                && g.has_edge(v, a)
                && g.has_edge(v, b)
            {
                found.insert(Triangle::new(g.label(v), g.label(a), g.label(b)));
            }
        }
        removed[v] = true;
        report.removed_vertices += 1;
    }
    let h = g.induced(|x| !removed[x]);
    report.max_degree_after = (0..h.n()).map(|x| h.degree(x)).max().unwrap_or(0);
    assert!(
        report.max_degree_after as f64 <= limit,
        "degree bound violated after removal"
    );

    let q = mf * mf * mf / (t as f64 * t as f64);
    let edge_limit = params.zeta as f64 * q;
    let list_cap = edge_limit.floor() as usize;
    let rounds = ((params.c * (mf).log2()).ceil() as usize).max(1);
    report.rounds = rounds;

    for round in 0..rounds {
        let mut rr = rng.split(round as u64);
        let color: Vec<u32> = (0..h.n()).map(|_| rr.below(colors) as u32).collect();
        let mut buckets: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
        for (id, &(a, b)) in h.edges().iter().enumerate() {
            let (ca, cb) = (color[a as usize], color[b as usize]);
            if ca != cb {
                buckets
                    .entry((ca.min(cb), ca.max(cb)))
                    .or_default()
                    .push(id);
            }
        }
        let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &(x, y) in buckets.keys() {
            adj.entry(x).or_default().push(y);
        }
        // Triples with an empty color pair hold no triangle and are skipped.
        for (&a, higher) in &adj {
            for (i, &b) in higher.iter().enumerate() {
                for &c in &higher[i + 1..] {
                    let Some(bc) = buckets.get(&(b, c)) else {
                        continue;
                    };
                    let (ab, ac) = (&buckets[&(a, b)], &buckets[&(a, c)]);
                    let size = ab.len() + ac.len() + bc.len();
                    if size as f64 > edge_limit {
                        report.triples_failed += 1;
                        continue;
                    }
                    let sub = Graph::from_edges(
                        ab.iter().chain(ac).chain(bc).map(|&id| h.edge_labels(id)),
                    )?;
                    let listed = baseline_list(&sub, list_cap);
                    report.triples_listed += 1;
                    if listed.len() == list_cap {
                        report.triples_vulnerable += 1;
                    }
                    found.extend(listed.triangles);
                }
            }
        }
    }
    let status = if found.len() > t {
        ListingStatus::Truncated(t)
    } else {
        ListingStatus::Complete
    };
    Ok((
        ListingResult {
            triangles: found,
            status,
        },
        report,
    ))
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct MainReport {
    pub inner_calls: usize,
    pub last_s: usize,
    /// The full graph was listed exactly by the baseline route.
    pub exact: bool,
}

pub fn main_listing(
    g: &Graph,
    t: usize,
    params: ListingParams,
    rng: &RandomSource,
) -> Result<ListingResult> {
    Ok(main_listing_traced(g, t, params, rng)?.0)
}

/// Samples vertices with probability `2^{-s}` for `s = 0, 1, …, ⌈log₂ m⌉`
/// and asks the inner algorithm for `32t` triangles of each sample, until
/// `t` distinct triangles are collected. Monte Carlo.
pub fn main_listing_traced(
    g: &Graph,
    t: usize,
    params: ListingParams,
    rng: &RandomSource,
) -> Result<(ListingResult, MainReport)> {
    if t == 0 {
        return Err(Error::Input("listing target t must be positive".into()));
    }
    let mut report = MainReport::default();
    let mut found = BTreeSet::new();
    for s in 0..=ceil_log2(g.m()) {
        report.last_s = s;
        let p = 0.5f64.powi(s as i32);
        let mut pick = rng.split(2 * s as u64);
        let keep: Vec<bool> = (0..g.n()).map(|_| pick.bernoulli(p)).collect();
        let sub = g.induced(|x| keep[x]);
        if sub.m() == 0 {
            continue;
        }
        let (res, inner) =
            inner_listing_traced(&sub, 32 * t, params, &rng.split(2 * s as u64 + 1))?;
        report.inner_calls += 1;
        found.extend(res.triangles.into_iter().filter(|tr| g.has_triangle(tr)));
        if found.len() >= t {
            break;
        }
        if sub.m() == g.m() && inner.routed_to_baseline && res.status == ListingStatus::Complete {
            report.exact = true;
            break;
        }
    }
    let status = if !report.exact && found.len() >= t {
        ListingStatus::Truncated(t)
    } else {
        ListingStatus::Complete
    };
    Ok((
        ListingResult {
            triangles: found,
            status,
        },
        report,
    ))
}

/// Union of up to `1 + retries` independent runs, stopping once `t`
/// triangles are known or a run listed the whole graph exactly.
pub fn main_listing_retry(
    g: &Graph,
    t: usize,
    params: ListingParams,
    rng: &RandomSource,
    retries: usize,
) -> Result<ListingResult> {
    let mut found = BTreeSet::new();
    for run in 0..=retries {
        let (res, report) = main_listing_traced(g, t, params, &rng.split(run as u64))?;
        found.extend(res.triangles);
        if report.exact {
            return Ok(ListingResult {
                triangles: found,
                status: ListingStatus::Complete,
            });
        }
        if found.len() >= t {
            return Ok(ListingResult {
                triangles: found,
                status: ListingStatus::Truncated(t),
            });
        }
    }
    Ok(ListingResult {
        triangles: found,
        status: ListingStatus::Complete,
    })
}

pub const DEFAULT_RETRIES: usize = 10;

/// [`TriangleLister`] running [`main_listing_retry`] with `t = cap`.
#[derive(Clone, Debug)]
pub struct MainLister {
    pub params: ListingParams,
    pub rng: RandomSource,
    pub retries: usize,
    pub counters: Counters,
}

impl MainLister {
    pub fn new(params: ListingParams, seed: u64) -> Self {
        MainLister {
            params,
            rng: RandomSource::new(seed),
            retries: DEFAULT_RETRIES,
            counters: Counters::new(),
        }
    }
}

impl TriangleLister for MainLister {
    fn list(&self, g: &Graph, cap: usize) -> Result<ListingResult> {
        self.counters.add_inner_call();
        if cap == 0 {
            let status = if baseline_list(g, 0).status == ListingStatus::Complete {
                ListingStatus::Complete
            } else {
                ListingStatus::Truncated(0)
            };
            return Ok(ListingResult {
                triangles: BTreeSet::new(),
                status,
            });
        }
        main_listing_retry(g, cap, self.params, &self.rng, self.retries)
    }
}
