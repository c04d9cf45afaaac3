//! Las Vegas edge-triangle detection with a triangle lister.
//!
//! Works on the three-part blow-up and detects `V₁–V₂` edges. Phase `s`
//! keeps each third-part vertex with probability `2^{-s}`, so edges in
//! roughly `2^s` triangles are caught while the sample stays small enough
//! for the lister. Detected edges leave the graph at once. A final listing
//! call with capacity 1 proves that nothing was missed.

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rng::RandomSource;
use crate::solver::{EdgeDetector, TriangleLister};

pub const DEFAULT_RESTART_CAP: usize = 20;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DetectReport {
    pub restarts: usize,
    pub lister_calls: usize,
}

pub(crate) fn ceil_log2(m: usize) -> usize {
    m.max(1).next_power_of_two().trailing_zeros() as usize
}

pub fn detect_via_listing<L: TriangleLister + ?Sized>(
    g: &Graph,
    lister: &L,
    rng: &RandomSource,
) -> Result<Vec<bool>> {
    let (out, report) = detect_via_listing_traced(g, lister, rng, DEFAULT_RESTART_CAP)?;
    out.ok_or_else(|| {
        Error::Failed(format!(
            "detection unverified after {} restarts",
            report.restarts
        ))
    })
}

/// `None` when every attempt, the first plus `restart_cap` restarts, failed
/// verification.
pub fn detect_via_listing_traced<L: TriangleLister + ?Sized>(
    g: &Graph,
    lister: &L,
    rng: &RandomSource,
    restart_cap: usize,
) -> Result<(Option<Vec<bool>>, DetectReport)> {
    let mut report = DetectReport::default();
    if g.m() == 0 {
        return Ok((Some(Vec::new()), report));
    }
    for attempt in 0..=restart_cap {
        report.restarts = attempt;
        if let Some(found) = attempt_once(g, lister, &mut rng.split(attempt as u64), &mut report)? {
            return Ok((Some(found), report));
        }
    }
    Ok((None, report))
}

fn attempt_once<L: TriangleLister + ?Sized>(
    g: &Graph,
    lister: &L,
    rng: &mut RandomSource,
    report: &mut DetectReport,
) -> Result<Option<Vec<bool>>> {
    let (n, m) = (g.n(), g.m());
    let nv = n as Vertex;
    let mut slot_base = vec![0usize; n + 1];
    for x in 0..n {
        slot_base[x + 1] = slot_base[x] + g.degree(x);
    }
    let slot = |a: usize, b: usize| {
        slot_base[a] + g.neighbors(a).binary_search(&(b as u32)).expect("adjacent")
    };
    let mut alive = vec![true; 2 * m];
    let mut detected = vec![false; m];

    let build = |alive: &[bool], third: &dyn Fn(usize) -> bool| -> Result<Graph> {
        let mut edges = Vec::new();
        for x in 0..n {
            for (k, &y) in g.neighbors(x).iter().enumerate() {
                if alive[slot_base[x] + k] {
                    edges.push((x as Vertex, nv + y));
                }
            }
        }
        for y in (0..n).filter(|&y| third(y)) {
            for &x in g.neighbors(y) {
                edges.push((x, 2 * nv + y as Vertex));
                edges.push((nv + x, 2 * nv + y as Vertex));
            }
        }
        Graph::from_edges(edges)
    };

    let levels = ceil_log2(m);
    let iters = (2 * levels).max(1);
    let cap = 100 * m;
    for s in (0..=levels).rev() {
        let p = 0.5f64.powi(s as i32);
        for _ in 0..iters {
            let keep: Vec<bool> = (0..n).map(|_| rng.bernoulli(p)).collect();
            let sample = build(&alive, &|y| keep[y])?;
            if sample.m() == 0 {
                continue;
            }
            report.lister_calls += 1;
            for t in lister.list(&sample, cap)?.triangles {
                let [a, b, _] = t.0;
                let (a, b) = (a as usize, (b - nv) as usize);
                alive[slot(a, b)] = false;
                detected[g.edge_id(a, b).expect("blow-up edge maps back")] = true;
            }
        }
    }
    let rest = build(&alive, &|_| true)?;
    report.lister_calls += 1;
    if !lister.list(&rest, 1)?.is_empty() {
        return Ok(None);
    }
    Ok(Some(detected))
}

/// [`EdgeDetector`] over a lister, seeded once at construction.
#[derive(Clone, Debug)]
pub struct ListingDetector<L> {
    pub lister: L,
    pub rng: RandomSource,
    pub restart_cap: usize,
    pub counters: Counters,
}

impl<L> ListingDetector<L> {
    pub fn new(lister: L, seed: u64) -> Self {
        ListingDetector {
            lister,
            rng: RandomSource::new(seed),
            restart_cap: DEFAULT_RESTART_CAP,
            counters: Counters::new(),
        }
    }
}

impl<L: TriangleLister> EdgeDetector for ListingDetector<L> {
    fn detect(&self, g: &Graph) -> Result<Vec<bool>> {
        let (out, report) =
            detect_via_listing_traced(g, &self.lister, &self.rng, self.restart_cap)?;
        for _ in 0..report.lister_calls {
            self.counters.add_inner_call();
        }
        out.ok_or_else(|| {
            Error::Failed(format!(
                "detection unverified after {} restarts",
                report.restarts
            ))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::solver::OracleDetector;
    use crate::triangle::{BaselineLister, ViaDetectionLister};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_examples() {
        let c3 = Graph::from_edges([(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            detect_via_listing(&c3, &BaselineLister, &RandomSource::new(1)).unwrap(),
            vec![true; 3]
        );
        let pendant = Graph::from_edges([(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let got = detect_via_listing(&pendant, &BaselineLister, &RandomSource::new(2)).unwrap();
        assert_eq!(got, oracle::edge_triangle_detection(&pendant));
        assert_eq!(got.iter().filter(|&&x| !x).count(), 1);
    }

    #[test]
    fn random_graphs_match_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for seed in 0..8 {
            let edges: Vec<(u32, u32)> = (0..25)
                .flat_map(|u| (u + 1..25).map(move |v| (u, v)))
                .filter(|_| rng.random_bool(0.25))
                .collect();
            let g = Graph::from_edges(edges).unwrap();
            let got = detect_via_listing(&g, &BaselineLister, &RandomSource::new(seed)).unwrap();
            assert_eq!(got, oracle::edge_triangle_detection(&g));
        }
    }

    #[test]
    fn works_with_a_padded_fixed_capacity_lister() {
        let g = Graph::from_edges([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        let got = detect_via_listing(
            &g,
            &ViaDetectionLister(OracleDetector),
            &RandomSource::new(4),
        )
        .unwrap();
        assert_eq!(got, oracle::edge_triangle_detection(&g));
    }
}
