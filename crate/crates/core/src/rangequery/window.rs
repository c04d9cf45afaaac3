//! Incremental windows: the answer `f([lo, hi))` maintained under one-step
//! moves of either endpoint.

use std::sync::Arc;

use crate::array::{rank_values, IntArray};
use crate::error::{Error, Result};
use crate::pairfn::PairFunction;

use super::store::{CountStore, CountTable, Fenwick, PersistentCounts};

/// A range answer that can grow or shrink by one element at either end.
pub trait Extender {
    fn extend_right(&mut self);
    fn extend_left(&mut self);
    fn shrink_right(&mut self);
    fn shrink_left(&mut self);
    fn answer(&self) -> i64;
    /// Current window as 0-based half-open bounds.
    fn bounds(&self) -> (usize, usize);
    /// Whether clones are independent snapshots.
    fn supports_snapshots(&self) -> bool;
}

#[derive(Debug)]
enum Rule {
    Inv {
        codes: Vec<u32>,
        domain: usize,
    },
    Eqp {
        codes: Vec<u32>,
        domain: usize,
    },
    Mul {
        values: Vec<i64>,
    },
    /// Per term: `g` codes and `h` codes share one domain.
    Terms {
        alpha: Vec<i64>,
        g: Vec<Vec<u32>>,
        h: Vec<Vec<u32>>,
        domains: Vec<usize>,
    },
}

/// Precomputed per-position data for one `(f, array)` pair.
#[derive(Debug)]
pub struct Kernel {
    rule: Rule,
    len: usize,
}

impl Kernel {
    pub fn new(f: &PairFunction, a: &IntArray) -> Result<Arc<Kernel>> {
        let codes = || -> (Vec<u32>, usize) {
            let r = rank_values(a.values());
            let d = r.iter().max().map_or(0, |m| m + 1);
            (r.into_iter().map(|x| x as u32).collect(), d)
        };
        let rule = match f {
            PairFunction::Inv => {
                let (codes, domain) = codes();
                Rule::Inv { codes, domain }
            }
            PairFunction::Eqp => {
                let (codes, domain) = codes();
                Rule::Eqp { codes, domain }
            }
            PairFunction::Mul => Rule::Mul {
                values: a.values().to_vec(),
            },
            PairFunction::Custom(c) => {
                let d = c.decomposition.as_ref().ok_or_else(|| {
                    Error::Capability(format!(
                        "custom function '{}' has no decomposition, so no incremental window",
                        c.name
                    ))
                })?;
                let mut alpha = Vec::new();
                let (mut gs, mut hs, mut domains) = (Vec::new(), Vec::new(), Vec::new());
                for t in &d.terms {
                    let gv: Vec<i64> = a.values().iter().map(|&x| (t.g)(x)).collect();
                    let hv: Vec<i64> = a.values().iter().map(|&x| (t.h)(x)).collect();
                    let both: Vec<i64> = gv.iter().chain(&hv).copied().collect();
                    let ranks = rank_values(&both);
                    let domain = ranks.iter().max().map_or(0, |m| m + 1);
                    let n = gv.len();
                    alpha.push(t.alpha);
                    gs.push(ranks[..n].iter().map(|&x| x as u32).collect());
                    hs.push(ranks[n..].iter().map(|&x| x as u32).collect());
                    domains.push(domain);
                }
                Rule::Terms {
                    alpha,
                    g: gs,
                    h: hs,
                    domains,
                }
            }
        };
        Ok(Arc::new(Kernel { rule, len: a.len() }))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn needs_order(&self) -> bool {
        matches!(self.rule, Rule::Inv { .. })
    }

    fn domains(&self) -> Vec<usize> {
        match &self.rule {
            Rule::Inv { domain, .. } | Rule::Eqp { domain, .. } => vec![*domain],
            Rule::Mul { .. } => vec![],
            Rule::Terms { domains, .. } => domains.iter().flat_map(|&d| [d, d]).collect(),
        }
    }

    /// A mutable window starting empty at `pos`, with the store best suited
    /// to `f`.
    pub fn extender(self: &Arc<Self>, pos: usize) -> Box<dyn Extender + Send> {
        if self.needs_order() {
            Box::new(Window::<Fenwick>::empty_at(self.clone(), pos))
        } else {
            Box::new(Window::<CountTable>::empty_at(self.clone(), pos))
        }
    }

    pub fn persistent(self: &Arc<Self>, pos: usize) -> Window<PersistentCounts> {
        Window::empty_at(self.clone(), pos)
    }
}

/// Window `[lo, hi)` over the kernel's array.
#[derive(Clone)]
pub struct Window<S> {
    kernel: Arc<Kernel>,
    stores: Vec<S>,
    sum: i64,
    answer: i64,
    lo: usize,
    hi: usize,
}

impl<S: CountStore> Window<S> {
    pub fn empty_at(kernel: Arc<Kernel>, pos: usize) -> Self {
        let stores = kernel.domains().into_iter().map(S::with_domain).collect();
        Window {
            kernel,
            stores,
            sum: 0,
            answer: 0,
            lo: pos,
            hi: pos,
        }
    }

    /// `Σ_{y in window} f(y, A[x])`, for `x` joining on the right.
    fn gain_back(&self, x: usize) -> i64 {
        match &self.kernel.rule {
            Rule::Inv { codes, .. } => self.stores[0].count_greater(codes[x] as usize),
            Rule::Eqp { codes, .. } => self.stores[0].count_eq(codes[x] as usize),
            Rule::Mul { values } => self.sum * values[x],
            Rule::Terms { alpha, h, .. } => alpha
                .iter()
                .enumerate()
                .map(|(i, a)| a * self.stores[2 * i].count_eq(h[i][x] as usize))
                .sum(),
        }
    }

    /// `Σ_{y in window} f(A[x], y)`, for `x` joining on the left.
    fn gain_front(&self, x: usize) -> i64 {
        match &self.kernel.rule {
            Rule::Inv { codes, .. } => self.stores[0].count_less(codes[x] as usize),
            Rule::Eqp { codes, .. } => self.stores[0].count_eq(codes[x] as usize),
            Rule::Mul { values } => self.sum * values[x],
            Rule::Terms { alpha, g, .. } => alpha
                .iter()
                .enumerate()
                .map(|(i, a)| a * self.stores[2 * i + 1].count_eq(g[i][x] as usize))
                .sum(),
        }
    }

    fn apply(&mut self, x: usize, insert: bool) {
        let op = |s: &mut S, v: u32| {
            if insert {
                s.insert(v as usize)
            } else {
                s.remove(v as usize)
            }
        };
        match &self.kernel.rule {
            Rule::Inv { codes, .. } | Rule::Eqp { codes, .. } => op(&mut self.stores[0], codes[x]),
            Rule::Mul { values } => self.sum += if insert { values[x] } else { -values[x] },
            Rule::Terms { g, h, .. } => {
                for i in 0..g.len() {
                    op(&mut self.stores[2 * i], g[i][x]);
                    op(&mut self.stores[2 * i + 1], h[i][x]);
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.hi == self.lo
    }
}

impl<S: CountStore> Extender for Window<S> {
    fn extend_right(&mut self) {
        let x = self.hi;
        self.answer += self.gain_back(x);
        self.apply(x, true);
        self.hi += 1;
    }

    fn extend_left(&mut self) {
        let x = self.lo - 1;
        self.answer += self.gain_front(x);
        self.apply(x, true);
        self.lo -= 1;
    }

    fn shrink_right(&mut self) {
        let x = self.hi - 1;
        self.apply(x, false);
        self.answer -= self.gain_back(x);
        self.hi -= 1;
    }

    fn shrink_left(&mut self) {
        let x = self.lo;
        self.apply(x, false);
        self.answer -= self.gain_front(x);
        self.lo += 1;
    }

    fn answer(&self) -> i64 {
        self.answer
    }

    fn bounds(&self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    fn supports_snapshots(&self) -> bool {
        S::PERSISTENT
    }
}
