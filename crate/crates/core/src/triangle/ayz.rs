//! Per-edge triangle counts with a heavy/light split on the third vertex.

use crate::counters::Counters;
use crate::error::Result;
use crate::graph::Graph;
use crate::matrix::{matmul, DenseMatrix, MatmulAlgo};
use crate::solver::EdgeCounter;

/// `⌈√m⌉`.
pub fn default_theta(m: usize) -> usize {
    ((m as f64).sqrt().ceil() as usize).max(1)
}

/// Light third vertices (`deg ≤ θ`) are found by enumerating wedges centred
/// on them; heavy ones through `N·Nᵀ`, where `N` is the adjacency between
/// all vertices and the heavy vertices.
pub fn ayz_edge_counts(g: &Graph, theta: usize, algo: MatmulAlgo) -> Result<Vec<u64>> {
    ayz_counted(g, theta, algo, &Counters::new())
}

fn ayz_counted(g: &Graph, theta: usize, algo: MatmulAlgo, counters: &Counters) -> Result<Vec<u64>> {
    let mut count = vec![0u64; g.m()];
    let heavy: Vec<usize> = (0..g.n()).filter(|&x| g.degree(x) > theta).collect();
    for w in (0..g.n()).filter(|&x| g.degree(x) <= theta) {
        let nb = g.neighbors(w);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if let Some(id) = g.edge_id(x as usize, y as usize) {
                    count[id] += 1;
                }
            }
        }
    }
    if !heavy.is_empty() {
        // Only vertices next to a heavy vertex get a row.
        let mut row = vec![usize::MAX; g.n()];
        let mut rows = 0;
        for &h in &heavy {
            for &x in g.neighbors(h) {
                if row[x as usize] == usize::MAX {
                    row[x as usize] = rows;
                    rows += 1;
                }
            }
        }
        let mut n = DenseMatrix::zeros(rows, heavy.len());
        for (k, &h) in heavy.iter().enumerate() {
            for &x in g.neighbors(h) {
                n.set(row[x as usize], k, 1);
            }
        }
        counters.add_matmul();
        let p = matmul(&n, &n.transpose(), algo)?;
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            let (ru, rv) = (row[u as usize], row[v as usize]);
            if ru != usize::MAX && rv != usize::MAX {
                count[id] += p.get(ru, rv) as u64;
            }
        }
    }
    Ok(count)
}

/// [`EdgeCounter`] running [`ayz_edge_counts`]; `theta = None` picks
/// [`default_theta`] per graph.
#[derive(Clone, Debug, Default)]
pub struct AyzCounter {
    pub theta: Option<usize>,
    pub algo: MatmulAlgo,
    pub counters: Counters,
}

impl AyzCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_theta(theta: usize) -> Self {
        AyzCounter {
            theta: Some(theta),
            ..Self::default()
        }
    }
}

impl EdgeCounter for AyzCounter {
    fn edge_counts(&self, g: &Graph) -> Result<Vec<u64>> {
        let theta = self.theta.unwrap_or_else(|| default_theta(g.m()));
        ayz_counted(g, theta, self.algo, &self.counters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn k4_and_triangle_free() {
        let k4 = Graph::from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for theta in [1, 2, 3, 10] {
            assert_eq!(
                ayz_edge_counts(&k4, theta, MatmulAlgo::Strassen).unwrap(),
                vec![2; 6]
            );
        }
        let c6 = Graph::from_edges((0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(
            ayz_edge_counts(&c6, 1, MatmulAlgo::Naive).unwrap(),
            vec![0; 6]
        );
    }

    #[test]
    fn random_graphs_all_thresholds() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let edges: Vec<(u32, u32)> = (0..40)
                .flat_map(|u| (u + 1..40).map(move |v| (u, v)))
                .filter(|_| rng.random_bool(0.2))
                .collect();
            let g = Graph::from_edges(edges).unwrap();
            let expect = oracle::edge_triangle_counts(&g);
            for theta in [1, 4, 16, 40] {
                assert_eq!(
                    ayz_edge_counts(&g, theta, MatmulAlgo::Strassen).unwrap(),
                    expect
                );
            }
        }
    }
}
