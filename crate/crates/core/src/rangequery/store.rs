//! Multisets of small integer codes `0..domain`, the bookkeeping behind
//! every incremental window.

use std::sync::Arc;

pub trait CountStore: Clone + Send + Sync {
    const PERSISTENT: bool;

    fn with_domain(domain: usize) -> Self;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn count_eq(&self, v: usize) -> i64;
    fn count_less(&self, v: usize) -> i64;
    fn len(&self) -> i64;

    fn count_greater(&self, v: usize) -> i64 {
        self.len() - self.count_less(v) - self.count_eq(v)
    }

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Value → count table. `count_less` is linear; use [`Fenwick`] when order
/// queries matter.
#[derive(Clone, Debug)]
pub struct CountTable {
    counts: Vec<i64>,
    total: i64,
}

impl CountStore for CountTable {
    const PERSISTENT: bool = false;

    fn with_domain(domain: usize) -> Self {
        CountTable {
            counts: vec![0; domain],
            total: 0,
        }
    }

    fn insert(&mut self, v: usize) {
        self.counts[v] += 1;
        self.total += 1;
    }

    fn remove(&mut self, v: usize) {
        self.counts[v] -= 1;
        self.total -= 1;
    }

    fn count_eq(&self, v: usize) -> i64 {
        self.counts[v]
    }

    fn count_less(&self, v: usize) -> i64 {
        self.counts[..v].iter().sum()
    }

    fn len(&self) -> i64 {
        self.total
    }
}

/// Order-statistic counts: a binary indexed tree over the code domain plus a
/// plain table for equality lookups.
#[derive(Clone, Debug)]
pub struct Fenwick {
    tree: Vec<i64>,
    counts: Vec<i64>,
    total: i64,
}

impl Fenwick {
    fn add(&mut self, v: usize, delta: i64) {
        let mut i = v + 1;
        while i < self.tree.len() {
            self.tree[i] += delta;
            i += i & i.wrapping_neg();
        }
        self.counts[v] += delta;
        self.total += delta;
    }

    /// Count of codes `< v`.
    fn prefix(&self, v: usize) -> i64 {
        let mut i = v;
        let mut s = 0;
        while i > 0 {
            s += self.tree[i];
            i &= i - 1;
        }
        s
    }
}

impl CountStore for Fenwick {
    const PERSISTENT: bool = false;

    fn with_domain(domain: usize) -> Self {
        Fenwick {
            tree: vec![0; domain + 1],
            counts: vec![0; domain],
            total: 0,
        }
    }

    fn insert(&mut self, v: usize) {
        self.add(v, 1);
    }

    fn remove(&mut self, v: usize) {
        self.add(v, -1);
    }

    fn count_eq(&self, v: usize) -> i64 {
        self.counts[v]
    }

    fn count_less(&self, v: usize) -> i64 {
        self.prefix(v)
    }

    fn len(&self) -> i64 {
        self.total
    }
}

#[derive(Debug)]
struct Node {
    count: i64,
    left: Link,
    right: Link,
}

type Link = Option<Arc<Node>>;

/// Fully persistent count tree over the code domain.
///
/// Updates copy the root-to-leaf path and share everything else, so a clone
/// is an O(1) snapshot and later updates on either copy never affect the
/// other.
#[derive(Clone, Debug)]
pub struct PersistentCounts {
    root: Link,
    domain: usize,
}

fn count_of(link: &Link) -> i64 {
    link.as_ref().map_or(0, |n| n.count)
}

fn update(link: &Link, lo: usize, hi: usize, v: usize, delta: i64) -> Link {
    let (left, right) = match link {
        Some(n) => (n.left.clone(), n.right.clone()),
        None => (None, None),
    };
    let count = count_of(link) + delta;
    if hi - lo == 1 {
        return Some(Arc::new(Node {
            count,
            left: None,
            right: None,
        }));
    }
    let mid = lo + (hi - lo) / 2;
    let (left, right) = if v < mid {
        (update(&left, lo, mid, v, delta), right)
    } else {
        (left, update(&right, mid, hi, v, delta))
    };
    Some(Arc::new(Node { count, left, right }))
}

/// Count of codes in `[lo, hi) ∩ [0, v)`.
fn prefix(link: &Link, lo: usize, hi: usize, v: usize) -> i64 {
    match link {
        None => 0,
        Some(_) if v <= lo => 0,
        Some(n) if v >= hi => n.count,
        Some(n) => {
            let mid = lo + (hi - lo) / 2;
            prefix(&n.left, lo, mid, v) + prefix(&n.right, mid, hi, v)
        }
    }
}

fn point(link: &Link, lo: usize, hi: usize, v: usize) -> i64 {
    match link {
        None => 0,
        Some(n) if hi - lo == 1 => n.count,
        Some(n) => {
            let mid = lo + (hi - lo) / 2;
            if v < mid {
                point(&n.left, lo, mid, v)
            } else {
                point(&n.right, mid, hi, v)
            }
        }
    }
}

impl CountStore for PersistentCounts {
    const PERSISTENT: bool = true;

    fn with_domain(domain: usize) -> Self {
        PersistentCounts {
            root: None,
            domain: domain.max(1),
        }
    }

    fn insert(&mut self, v: usize) {
        self.root = update(&self.root, 0, self.domain, v, 1);
    }

    fn remove(&mut self, v: usize) {
        self.root = update(&self.root, 0, self.domain, v, -1);
    }

    fn count_eq(&self, v: usize) -> i64 {
        point(&self.root, 0, self.domain, v)
    }

    fn count_less(&self, v: usize) -> i64 {
        prefix(&self.root, 0, self.domain, v)
    }

    fn len(&self) -> i64 {
        count_of(&self.root)
    }
}
