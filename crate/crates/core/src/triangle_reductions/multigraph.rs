//! The tripartite multigraph built from an array and a batch of range-pair
//! queries.
//!
//! `U` holds values, `V` the base intervals used by first ranges and `W`
//! those used by second ranges. A `U–V` edge has the number of occurrences
//! of the value inside the base interval as multiplicity. Each query links
//! every base of its first range to every base of its second range, so the
//! triangles through those `V–W` edges count exactly its equal pairs.

use std::collections::{BTreeMap, HashMap};

use crate::array::{check_pairs, rank_values, IntArray, RangePair};
use crate::error::Result;
use crate::graph::{Graph, TripartiteMultigraph};

use super::base::{base_decompose, BaseInterval};

#[derive(Clone, Debug)]
pub struct QueryMultigraph {
    pub graph: TripartiteMultigraph,
    /// `E_VW` edge ids induced by each query.
    pub query_edges: Vec<Vec<u32>>,
    pub v_bases: Vec<BaseInterval>,
    pub w_bases: Vec<BaseInterval>,
    pub n_pad: usize,
    /// `log₂ n_pad`.
    pub levels: u32,
    pub queries: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultigraphSizes {
    pub e_uv: usize,
    pub e_uw: usize,
    pub e_vw: usize,
}

/// Builds the multigraph. Padding positions past the array end carry no
/// value and get no `U` edges. Values that occur under only one side of the
/// queries cannot close a triangle and are left out of `U`.
pub fn build_query_multigraph(a: &IntArray, queries: &[RangePair]) -> Result<QueryMultigraph> {
    check_pairs(a.len(), queries)?;
    let n = a.len();
    let n_pad = n.next_power_of_two();
    let levels = n_pad.trailing_zeros();
    let codes = rank_values(a.values());

    let mut v_ids: BTreeMap<BaseInterval, u32> = BTreeMap::new();
    let mut w_ids: BTreeMap<BaseInterval, u32> = BTreeMap::new();
    let mut per_query: Vec<(Vec<BaseInterval>, Vec<BaseInterval>)> =
        Vec::with_capacity(queries.len());
    for p in queries {
        let first = base_decompose(p.first.l - 1, p.first.r - 1, n_pad)?;
        let second = base_decompose(p.second.l - 1, p.second.r - 1, n_pad)?;
        for b in &first {
            v_ids.entry(*b).or_insert(0);
        }
        for b in &second {
            w_ids.entry(*b).or_insert(0);
        }
        per_query.push((first, second));
    }
    let v_bases: Vec<BaseInterval> = v_ids.keys().copied().collect();
    let w_bases: Vec<BaseInterval> = w_ids.keys().copied().collect();
    for (i, id) in v_ids.values_mut().enumerate() {
        *id = i as u32;
    }
    for (i, id) in w_ids.values_mut().enumerate() {
        *id = i as u32;
    }

    let domain = codes.iter().max().map_or(0, |m| m + 1);
    let side = |bases: &[BaseInterval]| -> Vec<(u32, u32, u64)> {
        let mut counts = vec![0u64; domain];
        let mut touched = Vec::new();
        let mut out = Vec::new();
        for (id, b) in bases.iter().enumerate() {
            for &c in &codes[b.start().min(n)..b.end().min(n)] {
                if counts[c] == 0 {
                    touched.push(c);
                }
                counts[c] += 1;
            }
            touched.sort_unstable();
            for &c in &touched {
                out.push((c as u32, id as u32, counts[c]));
                counts[c] = 0;
            }
            touched.clear();
        }
        out
    };
    let uv = side(&v_bases);
    let uw = side(&w_bases);
    let mut on_v = vec![false; domain];
    let mut on_w = vec![false; domain];
    uv.iter().for_each(|&(c, _, _)| on_v[c as usize] = true);
    uw.iter().for_each(|&(c, _, _)| on_w[c as usize] = true);
    let mut u_id = vec![u32::MAX; domain];
    let mut u_count = 0;
    for c in 0..domain {
        if on_v[c] && on_w[c] {
            u_id[c] = u_count;
            u_count += 1;
        }
    }
    let keep = |list: Vec<(u32, u32, u64)>| -> BTreeMap<(u32, u32), u64> {
        list.into_iter()
            .filter(|&(c, _, _)| u_id[c as usize] != u32::MAX)
            .map(|(c, x, m)| ((u_id[c as usize], x), m))
            .collect()
    };

    let mut vw_index: HashMap<(u32, u32), u32> = HashMap::new();
    let mut e_vw = Vec::new();
    let mut query_edges = Vec::with_capacity(queries.len());
    for (first, second) in &per_query {
        let mut ids = Vec::with_capacity(first.len() * second.len());
        for f in first {
            for s in second {
                let key = (v_ids[f], w_ids[s]);
                let id = *vw_index.entry(key).or_insert_with(|| {
                    e_vw.push(key);
                    (e_vw.len() - 1) as u32
                });
                ids.push(id);
            }
        }
        query_edges.push(ids);
    }

    let graph = TripartiteMultigraph {
        u_count: u_count as usize,
        v_count: v_bases.len(),
        w_count: w_bases.len(),
        e_uv: keep(uv),
        e_uw: keep(uw),
        e_vw,
    };
    let mg = QueryMultigraph {
        graph,
        query_edges,
        v_bases,
        w_bases,
        n_pad,
        levels,
        queries: queries.len(),
    };
    assert!(
        mg.within_bounds(),
        "multigraph exceeds its size bounds: {:?}",
        mg.sizes()
    );
    Ok(mg)
}

impl QueryMultigraph {
    pub fn sizes(&self) -> MultigraphSizes {
        MultigraphSizes {
            e_uv: self.graph.e_uv.len(),
            e_uw: self.graph.e_uw.len(),
            e_vw: self.graph.e_vw.len(),
        }
    }

    /// `2·n_pad·(log₂ n_pad + 1)`.
    pub fn value_edge_bound(&self) -> usize {
        2 * self.n_pad * (self.levels as usize + 1)
    }

    /// `q·(2·log₂ n_pad)²`, with the per-range factor at least 1.
    pub fn base_edge_bound(&self) -> usize {
        let per = (2 * self.levels as usize).max(1);
        self.queries * per * per
    }

    pub fn within_bounds(&self) -> bool {
        let s = self.sizes();
        s.e_uv + s.e_uw <= self.value_edge_bound() && s.e_vw <= self.base_edge_bound()
    }

    /// Simple graph keeping `U–V` edges whose multiplicity has bit `i` set
    /// and `U–W` edges with bit `j` set; `None` keeps every edge once.
    pub fn simple_graph(&self, bits: Option<(u32, u32)>) -> Graph {
        let g = &self.graph;
        let has = |m: u64, b: Option<u32>| b.is_none_or(|b| (m >> b) & 1 == 1);
        let (bi, bj) = (bits.map(|b| b.0), bits.map(|b| b.1));
        let mut edges = Vec::with_capacity(g.e_uv.len() + g.e_uw.len() + g.e_vw.len());
        edges.extend(
            g.e_uv
                .iter()
                .filter(|(_, &m)| has(m, bi))
                .map(|(&(u, v), _)| (g.u_label(u), g.v_label(v))),
        );
        edges.extend(
            g.e_uw
                .iter()
                .filter(|(_, &m)| has(m, bj))
                .map(|(&(u, w), _)| (g.u_label(u), g.w_label(w))),
        );
        edges.extend(g.e_vw.iter().map(|&(v, w)| (g.v_label(v), g.w_label(w))));
        Graph::from_edges(edges).expect("multigraph parts are disjoint and deduplicated")
    }

    /// Graph edge id of every `E_VW` edge in `g`.
    pub fn vw_edge_ids(&self, g: &Graph) -> Vec<usize> {
        let mg = &self.graph;
        mg.e_vw
            .iter()
            .map(|&(v, w)| {
                g.edge_id_by_label(mg.v_label(v), mg.w_label(w))
                    .expect("every V-W edge is present")
            })
            .collect()
    }

    /// Bit positions occurring in some `U–V` and some `U–W` multiplicity.
    pub fn bit_pairs(&self) -> Vec<(u32, u32)> {
        let mask = |m: &BTreeMap<(u32, u32), u64>| m.values().fold(0u64, |acc, &x| acc | x);
        let (mv, mw) = (mask(&self.graph.e_uv), mask(&self.graph.e_uw));
        let bits = |m: u64| (0..64).filter(move |b| (m >> b) & 1 == 1);
        bits(mv)
            .flat_map(|i| bits(mw).map(move |j| (i, j)))
            .collect()
    }
}
