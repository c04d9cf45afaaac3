//! Solver wrappers for the four directions.

use crate::array::{IntArray, RangePair};
use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{DisjointSolver, EdgeCounter, EdgeDetector, PairSolver};

use super::multigraph::{build_query_multigraph, QueryMultigraph};

/// Triangle counts through every `E_VW` edge, multiplicities included:
/// `Δ_e = Σ 2^{i+j} Δ_e^{i,j}` over the bit-split simple graphs.
pub fn split_counts<C: EdgeCounter + ?Sized>(
    mg: &QueryMultigraph,
    counter: &C,
    counters: &Counters,
) -> Result<Vec<u64>> {
    let mut delta = vec![0u64; mg.graph.e_vw.len()];
    for (i, j) in mg.bit_pairs() {
        let g = mg.simple_graph(Some((i, j)));
        counters.add_inner_call();
        let counts = counter.edge_counts(&g)?;
        if counts.len() != g.m() {
            return Err(Error::Shape(format!(
                "edge counter returned {} counts for {} edges",
                counts.len(),
                g.m()
            )));
        }
        for (d, gid) in delta.iter_mut().zip(mg.vw_edge_ids(&g)) {
            *d += counts[gid] << (i + j);
        }
    }
    Ok(delta)
}

/// Equal pairs over range pairs through an edge-triangle counter.
#[derive(Clone, Debug)]
pub struct PairsViaTriangles<C> {
    pub inner: C,
    pub counters: Counters,
}

impl<C> PairsViaTriangles<C> {
    pub fn new(inner: C) -> Self {
        PairsViaTriangles {
            inner,
            counters: Counters::new(),
        }
    }
}

impl<C: EdgeCounter> PairSolver for PairsViaTriangles<C> {
    fn solve_pairs(&self, a: &IntArray, queries: &[RangePair]) -> Result<Vec<i64>> {
        let mg = build_query_multigraph(a, queries)?;
        let delta = split_counts(&mg, &self.inner, &self.counters)?;
        Ok(mg
            .query_edges
            .iter()
            .map(|ids| ids.iter().map(|&e| delta[e as usize] as i64).sum())
            .collect())
    }
}

/// Disjointness through an edge-triangle detector on the collapsed
/// multigraph: a query is disjoint iff none of its `V–W` edges is in a
/// triangle.
#[derive(Clone, Debug)]
pub struct DisjointViaDetection<D> {
    pub inner: D,
    pub counters: Counters,
}

impl<D> DisjointViaDetection<D> {
    pub fn new(inner: D) -> Self {
        DisjointViaDetection {
            inner,
            counters: Counters::new(),
        }
    }
}

impl<D: EdgeDetector> DisjointSolver for DisjointViaDetection<D> {
    fn solve_disjoint(&self, a: &IntArray, queries: &[RangePair]) -> Result<Vec<bool>> {
        let mg = build_query_multigraph(a, queries)?;
        if mg.graph.e_vw.is_empty() {
            return Ok(vec![true; queries.len()]);
        }
        let g = mg.simple_graph(None);
        self.counters.add_inner_call();
        let hit = self.inner.detect(&g)?;
        let ids = mg.vw_edge_ids(&g);
        Ok(mg
            .query_edges
            .iter()
            .map(|es| !es.iter().any(|&e| hit[ids[e as usize]]))
            .collect())
    }
}

/// Concatenated neighbor lists, one segment per vertex in local order, and
/// the 1-based segment bounds. Values are local neighbor indices.
pub fn neighbor_array(g: &Graph) -> Option<(IntArray, Vec<(usize, usize)>)> {
    if g.m() == 0 {
        return None;
    }
    let mut values = Vec::with_capacity(2 * g.m());
    let mut segments = Vec::with_capacity(g.n());
    for u in 0..g.n() {
        let start = values.len() + 1;
        values.extend(g.neighbors(u).iter().map(|&x| x as i64));
        segments.push((start, values.len()));
    }
    Some((IntArray::new(values).expect("non-empty"), segments))
}

fn edge_queries(g: &Graph, segments: &[(usize, usize)]) -> Vec<RangePair> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = segments[u as usize];
            let (c, d) = segments[v as usize];
            RangePair::from_bounds(a, b, c, d)
        })
        .collect()
}

/// Edge-triangle counts as equal pairs between the two endpoints' neighbor
/// lists.
#[derive(Clone, Debug)]
pub struct CountsViaPairs<P>(pub P);

impl<P: PairSolver> EdgeCounter for CountsViaPairs<P> {
    fn edge_counts(&self, g: &Graph) -> Result<Vec<u64>> {
        let Some((a, segments)) = neighbor_array(g) else {
            return Ok(Vec::new());
        };
        let ans = self.0.solve_pairs(&a, &edge_queries(g, &segments))?;
        Ok(ans.into_iter().map(|x| x as u64).collect())
    }
}

/// Edge-triangle detection as non-disjointness of neighbor lists.
#[derive(Clone, Debug)]
pub struct DetectionViaDisjoint<D>(pub D);

impl<D: DisjointSolver> EdgeDetector for DetectionViaDisjoint<D> {
    fn detect(&self, g: &Graph) -> Result<Vec<bool>> {
        let Some((a, segments)) = neighbor_array(g) else {
            return Ok(Vec::new());
        };
        Ok(self
            .0
            .solve_disjoint(&a, &edge_queries(g, &segments))?
            .into_iter()
            .map(|d| !d)
            .collect())
    }
}
