//! Undirected simple graphs in compressed adjacency form.
//!
//! Vertices carry arbitrary `u32` labels. The vertex set is exactly the set
//! of edge endpoints, so a `Graph` never has isolated vertices. Internally
//! vertices are renumbered `0..n` in label order; "local" indices below
//! refer to that numbering. Per-edge results are `Vec`s indexed by edge id,
//! where ids follow the lexicographic order of `(min label, max label)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<Vertex>,
    offsets: Vec<usize>,
    adj: Vec<u32>,
    adj_edge: Vec<u32>,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Build from an edge list of labels. Self-loops and repeated edges are
    /// rejected.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list: Vec<(Vertex, Vertex)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Input(format!("parallel edge {} {}", w[0].0, w[0].1)));
        }
        Ok(Self::from_sorted_unique(list))
    }

    /// Build from labels `0..n` where every vertex must have an edge.
    pub fn with_vertex_count<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let g = Self::from_edges(edges)?;
        if let Some(&max) = g.labels.last() {
            if max as usize >= n {
                return Err(Error::Input(format!(
                    "vertex {max} out of range for n = {n}"
                )));
            }
        }
        if g.n() != n {
            let missing = (0..n as Vertex)
                .find(|v| g.local(*v).is_none())
                .unwrap_or(0);
            return Err(Error::Input(format!("vertex {missing} is isolated")));
        }
        Ok(g)
    }

    pub fn empty() -> Self {
        Self::from_sorted_unique(Vec::new())
    }

    fn from_sorted_unique(list: Vec<(Vertex, Vertex)>) -> Self {
        let mut labels: Vec<Vertex> = list.iter().flat_map(|&(u, v)| [u, v]).collect();
        labels.sort_unstable();
        labels.dedup();
        let local = |x: Vertex| labels.binary_search(&x).unwrap() as u32;
        let edges: Vec<(u32, u32)> = list.iter().map(|&(u, v)| (local(u), local(v))).collect();

        let n = labels.len();
        let mut deg = vec![0usize; n];
        for &(u, v) in &edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for i in 0..n {
            offsets[i + 1] = offsets[i] + deg[i];
        }
        let mut fill = offsets.clone();
        let mut adj = vec![0u32; 2 * edges.len()];
        let mut adj_edge = vec![0u32; 2 * edges.len()];
        // Edges are sorted by (u, v), so every neighbor list comes out sorted:
        // v's list receives smaller neighbors u in increasing u order before
        // any larger neighbor is appended from v's own outgoing edges.
        for (id, &(u, v)) in edges.iter().enumerate() {
            let (u, v) = (u as usize, v as usize);
            adj[fill[u]] = v as u32;
            adj_edge[fill[u]] = id as u32;
            fill[u] += 1;
            adj[fill[v]] = u as u32;
            adj_edge[fill[v]] = id as u32;
            fill[v] += 1;
        }
        let mut g = Graph {
            labels,
            offsets,
            adj,
            adj_edge,
            edges,
        };
        g.sort_adjacency();
        g
    }

    fn sort_adjacency(&mut self) {
        for u in 0..self.n() {
            let (s, e) = (self.offsets[u], self.offsets[u + 1]);
            if self.adj[s..e].windows(2).all(|w| w[0] < w[1]) {
                continue;
            }
            let mut pairs: Vec<(u32, u32)> =
                (s..e).map(|i| (self.adj[i], self.adj_edge[i])).collect();
            pairs.sort_unstable();
            for (k, (x, id)) in pairs.into_iter().enumerate() {
                self.adj[s + k] = x;
                self.adj_edge[s + k] = id;
            }
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn label(&self, local: usize) -> Vertex {
        self.labels[local]
    }

    pub fn local(&self, label: Vertex) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn neighbors(&self, local: usize) -> &[u32] {
        &self.adj[self.offsets[local]..self.offsets[local + 1]]
    }

    /// Edge ids parallel to [`Graph::neighbors`].
    pub fn incident_edges(&self, local: usize) -> &[u32] {
        &self.adj_edge[self.offsets[local]..self.offsets[local + 1]]
    }

    pub fn degree(&self, local: usize) -> usize {
        self.offsets[local + 1] - self.offsets[local]
    }

    /// Edges as local index pairs `(u, v)` with `u < v`, indexed by edge id.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_labels(&self, id: usize) -> (Vertex, Vertex) {
        let (u, v) = self.edges[id];
        (self.labels[u as usize], self.labels[v as usize])
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        let nb = self.neighbors(a);
        nb.binary_search(&(b as u32))
            .ok()
            .map(|i| self.incident_edges(a)[i] as usize)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edge_id(u, v).is_some()
    }

    pub fn edge_id_by_label(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edge_id(self.local(u)?, self.local(v)?)
    }

    pub fn has_triangle(&self, t: &Triangle) -> bool {
        let [a, b, c] = t.0;
        match (self.local(a), self.local(b), self.local(c)) {
            (Some(a), Some(b), Some(c)) => {
                self.has_edge(a, b) && self.has_edge(a, c) && self.has_edge(b, c)
            }
            _ => false,
        }
    }

    pub fn edge_label_list(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.m()).map(|id| self.edge_labels(id)).collect()
    }

    /// Subgraph induced by the vertices (local indices) for which `keep`
    /// holds. Vertices left without edges disappear.
    pub fn induced(&self, keep: impl Fn(usize) -> bool) -> Graph {
        let list = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep(u as usize) && keep(v as usize))
            .map(|&(u, v)| (self.labels[u as usize], self.labels[v as usize]))
            .collect();
        Self::from_sorted_unique(list)
    }

    /// Subgraph with the edges (by id) for which `keep` holds.
    pub fn filter_edges(&self, keep: impl Fn(usize) -> bool) -> Graph {
        let list = (0..self.m())
            .filter(|&id| keep(id))
            .map(|id| self.edge_labels(id))
            .collect();
        Self::from_sorted_unique(list)
    }
}

/// A triangle, vertex labels in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle(pub [Vertex; 3]);

impl Triangle {
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        Triangle(t)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.0[0], self.0[1], self.0[2])
    }
}

/// Three-part multigraph with parallel `U–V` and `U–W` edges.
///
/// `e_uv` and `e_uw` map `(u, v)` / `(u, w)` to a positive multiplicity;
/// `e_vw` is a simple edge list. Part-local ids are independent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TripartiteMultigraph {
    pub u_count: usize,
    pub v_count: usize,
    pub w_count: usize,
    pub e_uv: BTreeMap<(u32, u32), u64>,
    pub e_uw: BTreeMap<(u32, u32), u64>,
    pub e_vw: Vec<(u32, u32)>,
}

impl TripartiteMultigraph {
    /// Vertex labels for the simple-graph encoding: `U` first, then `V`,
    /// then `W`.
    pub fn u_label(&self, u: u32) -> Vertex {
        u
    }

    pub fn v_label(&self, v: u32) -> Vertex {
        self.u_count as Vertex + v
    }

    pub fn w_label(&self, w: u32) -> Vertex {
        (self.u_count + self.v_count) as Vertex + w
    }

    pub fn check(&self) -> Result<()> {
        let bad = self
            .e_uv
            .values()
            .chain(self.e_uw.values())
            .any(|&m| m == 0);
        if bad {
            return Err(Error::Input(
                "multigraph edge with zero multiplicity".into(),
            ));
        }
        Ok(())
    }

    /// Triangle count through `e_vw[id]` with parallel edges multiplied out.
    pub fn vw_triangle_count(&self, id: usize) -> u64 {
        let (v, w) = self.e_vw[id];
        self.e_uv
            .iter()
            .filter(|((_, vv), _)| *vv == v)
            .map(|(&(u, _), &m1)| m1 * self.e_uw.get(&(u, w)).copied().unwrap_or(0))
            .sum()
    }
}
