//! Listing up to `m` triangles with an edge-triangle detector.
//!
//! Every vertex `x` gets copies `x₁, x₂, x₃` and every edge `{u, v}` the six
//! edges `(uᵢ, vⱼ)`, `i ≠ j`. Components are split repeatedly on their
//! third part; after each split the detector prunes `V₁–V₂` edges that lie
//! in no triangle. Once every component has a single third-part vertex,
//! each surviving `V₁–V₂` edge closes exactly one triangle.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle, Vertex};
use crate::solver::{EdgeDetector, TriangleLister};

use super::{ListingResult, ListingStatus};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ViaDetectionReport {
    /// Detector calls, one per split round.
    pub iterations: usize,
    /// Whether `V₁–V₂` edges were ever dropped to respect the `6m` cap.
    pub capped: bool,
    pub max_e12: usize,
}

struct Group {
    v3: Vec<u32>,
    e12: Vec<(u32, u32)>,
}

fn components(g: &Graph) -> Vec<Vec<u32>> {
    let mut comp = vec![usize::MAX; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s as u32];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let x = members[i] as usize;
            i += 1;
            for &y in g.neighbors(x) {
                if comp[y as usize] == usize::MAX {
                    comp[y as usize] = id;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

pub fn list_via_detection<D: EdgeDetector + ?Sized>(
    g: &Graph,
    detector: &D,
) -> Result<ListingResult> {
    Ok(list_via_detection_traced(g, detector)?.0)
}

pub fn list_via_detection_traced<D: EdgeDetector + ?Sized>(
    g: &Graph,
    detector: &D,
) -> Result<(ListingResult, ViaDetectionReport)> {
    let (n, m) = (g.n(), g.m());
    let mut report = ViaDetectionReport::default();
    if m == 0 {
        return Ok((
            ListingResult {
                triangles: BTreeSet::new(),
                status: ListingStatus::Complete,
            },
            report,
        ));
    }
    if (4 * n as u64) * (n as u64) + 2 * n as u64 >= u32::MAX as u64 {
        return Err(Error::Overflow(format!(
            "blow-up labels for {n} vertices do not fit in 32 bits"
        )));
    }
    let t = 6 * m;
    let mut groups: Vec<Group> = components(g)
        .into_iter()
        .map(|members| {
            let mut e12 = Vec::new();
            for &x in &members {
                for &y in g.neighbors(x as usize) {
                    e12.push((x, y));
                }
            }
            e12.sort_unstable();
            Group { v3: members, e12 }
        })
        .collect();
    report.max_e12 = 2 * m;

    while groups.iter().any(|gr| gr.v3.len() > 1) {
        let mut next = Vec::with_capacity(2 * groups.len());
        for gr in groups {
            if gr.v3.len() == 1 {
                next.push(gr);
                continue;
            }
            let half = gr.v3.len().div_ceil(2);
            next.push(Group {
                v3: gr.v3[..half].to_vec(),
                e12: gr.e12.clone(),
            });
            next.push(Group {
                v3: gr.v3[half..].to_vec(),
                e12: gr.e12,
            });
        }
        groups = next;

        let block = 2 * n as Vertex;
        let third = groups.len() as Vertex * block;
        let v1 = |gi: usize, x: u32| gi as Vertex * block + x;
        let v2 = |gi: usize, x: u32| gi as Vertex * block + n as Vertex + x;
        let mut edges = Vec::new();
        for (gi, gr) in groups.iter().enumerate() {
            edges.extend(gr.e12.iter().map(|&(a, b)| (v1(gi, a), v2(gi, b))));
            for &y in &gr.v3 {
                for &x in g.neighbors(y as usize) {
                    edges.push((v1(gi, x), third + y));
                    edges.push((v2(gi, x), third + y));
                }
            }
        }
        let blow = Graph::from_edges(edges)?;
        let hit = detector.detect(&blow)?;
        report.iterations += 1;
        for (gi, gr) in groups.iter_mut().enumerate() {
            gr.e12.retain(|&(a, b)| {
                let id = blow
                    .edge_id_by_label(v1(gi, a), v2(gi, b))
                    .expect("edge present");
                hit[id]
            });
        }
        let total: usize = groups.iter().map(|gr| gr.e12.len()).sum();
        report.max_e12 = report.max_e12.max(total);
        if total > t {
            report.capped = true;
            let mut excess = total - t;
            for gr in groups.iter_mut().rev() {
                let cut = excess.min(gr.e12.len());
                gr.e12.truncate(gr.e12.len() - cut);
                excess -= cut;
                if excess == 0 {
                    break;
                }
            }
        }
        groups.retain(|gr| !gr.e12.is_empty());
    }

    let mut all = BTreeSet::new();
    for gr in &groups {
        let y = g.label(gr.v3[0] as usize);
        for &(a, b) in &gr.e12 {
            all.insert(Triangle::new(g.label(a as usize), g.label(b as usize), y));
        }
    }
    let over = all.len() > m;
    let triangles: BTreeSet<Triangle> = all.into_iter().take(m).collect();
    let status = if report.capped || over {
        ListingStatus::Truncated(m)
    } else {
        ListingStatus::Complete
    };
    Ok((ListingResult { triangles, status }, report))
}

/// A lister whose natural capacity is the edge count of its input. Larger
/// capacities are reached by adding a triangle-free star gadget of dummy
/// edges before listing.
#[derive(Clone, Debug)]
pub struct ViaDetectionLister<D>(pub D);

impl<D: EdgeDetector> TriangleLister for ViaDetectionLister<D> {
    fn list(&self, g: &Graph, cap: usize) -> Result<ListingResult> {
        let r = if cap > g.m() {
            let mut edges = g.edge_label_list();
            let centre = g.labels().last().map_or(0, |&x| x + 1);
            let extra = cap - g.m();
            if centre as u64 + extra as u64 >= u32::MAX as u64 {
                return Err(Error::Overflow(
                    "star gadget labels do not fit in 32 bits".into(),
                ));
            }
            edges.extend((1..=extra as Vertex).map(|i| (centre, centre + i)));
            list_via_detection(&Graph::from_edges(edges)?, &self.0)?
        } else {
            list_via_detection(g, &self.0)?
        };
        if r.len() > cap {
            let triangles = r.triangles.into_iter().take(cap).collect();
            return Ok(ListingResult {
                triangles,
                status: ListingStatus::Truncated(cap),
            });
        }
        Ok(r)
    }
}
