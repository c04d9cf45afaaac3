//! Degree-ordered wedge enumeration with a listing cap.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::graph::{Graph, Triangle};
use crate::solver::TriangleLister;

use super::{ListingResult, ListingStatus};

/// Visits every triangle once, at its lowest vertex in `(degree, index)`
/// order, until `visit` returns `false`.
pub(crate) fn for_each_triangle(g: &Graph, mut visit: impl FnMut(usize, usize, usize) -> bool) {
    let n = g.n();
    let rank_key = |x: usize| (g.degree(x), x);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&x| rank_key(x));
    let mut rank = vec![0usize; n];
    for (i, &x) in order.iter().enumerate() {
        rank[x] = i;
    }
    let out: Vec<Vec<u32>> = (0..n)
        .map(|u| {
            let mut o: Vec<u32> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&v| rank[v as usize] > rank[u])
                .collect();
            o.sort_unstable();
            o
        })
        .collect();
    for &u in &order {
        let nb = &out[u];
        for (i, &v) in nb.iter().enumerate() {
            let ov = &out[v as usize];
            for &w in &nb[i + 1..] {
                let hit = if rank[w as usize] > rank[v as usize] {
                    ov.binary_search(&w).is_ok()
                } else {
                    out[w as usize].binary_search(&v).is_ok()
                };
                if hit && !visit(u, v as usize, w as usize) {
                    return;
                }
            }
        }
    }
}

/// Lists up to `cap` triangles. The status is complete exactly when no
/// triangle was left out.
pub fn baseline_list(g: &Graph, cap: usize) -> ListingResult {
    let mut triangles = BTreeSet::new();
    let mut more = false;
    for_each_triangle(g, |u, v, w| {
        if triangles.len() == cap {
            more = true;
            return false;
        }
        triangles.insert(Triangle::new(g.label(u), g.label(v), g.label(w)));
        true
    });
    let status = if more {
        ListingStatus::Truncated(cap)
    } else {
        ListingStatus::Complete
    };
    ListingResult { triangles, status }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BaselineLister;

impl TriangleLister for BaselineLister {
    fn list(&self, g: &Graph, cap: usize) -> Result<ListingResult> {
        Ok(baseline_list(g, cap))
    }
}
