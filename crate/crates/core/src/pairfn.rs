//! Binary pair functions `f(x, y)` and their decompositions into weighted
//! sums of equality predicates, `f(x, y) = Σ αᵢ · [gᵢ(x) = hᵢ(y)]`.

use std::fmt;
use std::sync::Arc;

use crate::array::IntArray;
use crate::error::{Error, Result};

pub type ValueMap = Arc<dyn Fn(i64) -> i64 + Send + Sync>;
pub type Evaluator = Arc<dyn Fn(i64, i64) -> i64 + Send + Sync>;

/// One weighted equality term `α · [g(x) = h(y)]`.
#[derive(Clone)]
pub struct Term {
    pub alpha: i64,
    pub g: ValueMap,
    pub h: ValueMap,
}

impl Term {
    pub fn new(
        alpha: i64,
        g: impl Fn(i64) -> i64 + Send + Sync + 'static,
        h: impl Fn(i64) -> i64 + Send + Sync + 'static,
    ) -> Self {
        Term {
            alpha,
            g: Arc::new(g),
            h: Arc::new(h),
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Term")
            .field("alpha", &self.alpha)
            .finish_non_exhaustive()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Decomposition {
    pub terms: Vec<Term>,
}

impl Decomposition {
    pub fn new(terms: Vec<Term>) -> Self {
        Decomposition { terms }
    }

    /// `eqp` itself: one term with identity maps.
    pub fn eqp() -> Self {
        Decomposition::new(vec![Term::new(1, |x| x, |y| y)])
    }

    /// `inv(x, y) = [x > y]` on the domain `[0, n-1]`, one term per bit.
    ///
    /// Term `t` matches exactly the pairs whose most significant differing
    /// bit is bit `t` (counted from the top), with that bit set in `x`.
    /// Values of `x` with a 0 at that bit map to `-1`; values of `y` with a 1
    /// map to `2n`. Neither sentinel can equal a prefix value in `[0, n-1]`.
    pub fn inv(n: usize) -> Self {
        let k = bits_for(n);
        let high = 2 * n as i64;
        let terms = (1..=k)
            .map(|t| {
                let bit = k - t;
                Term::new(
                    1,
                    move |x| {
                        if (x >> bit) & 1 == 1 {
                            x >> (bit + 1)
                        } else {
                            -1
                        }
                    },
                    move |y| {
                        if (y >> bit) & 1 == 0 {
                            y >> (bit + 1)
                        } else {
                            high
                        }
                    },
                )
            })
            .collect();
        Decomposition::new(terms)
    }

    pub fn scaled(mut self, factor: i64) -> Self {
        for t in &mut self.terms {
            t.alpha *= factor;
        }
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.terms
            .iter()
            .filter(|t| (t.g)(x) == (t.h)(y))
            .map(|t| t.alpha)
            .sum()
    }

    /// Exhaustively compare against `f` on `domain × domain`; returns the
    /// first disagreeing pair.
    pub fn first_mismatch(
        &self,
        f: &PairFunction,
        domain: impl IntoIterator<Item = i64> + Clone,
    ) -> Option<(i64, i64)> {
        for x in domain.clone() {
            for y in domain.clone() {
                if self.eval(x, y) != f.eval(x, y) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// `k = ⌈log₂ n⌉`, at least 1.
pub fn bits_for(n: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < n {
        k += 1;
    }
    k.max(1)
}

#[derive(Clone)]
pub struct CustomFn {
    pub name: String,
    pub eval: Evaluator,
    pub decomposition: Option<Decomposition>,
}

#[derive(Clone)]
pub enum PairFunction {
    /// `[x > y]`
    Inv,
    /// `[x = y]`
    Eqp,
    /// `x · y`
    Mul,
    Custom(CustomFn),
}

impl fmt::Debug for PairFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl PairFunction {
    pub fn custom(
        name: impl Into<String>,
        eval: impl Fn(i64, i64) -> i64 + Send + Sync + 'static,
        decomposition: Option<Decomposition>,
    ) -> Self {
        PairFunction::Custom(CustomFn {
            name: name.into(),
            eval: Arc::new(eval),
            decomposition,
        })
    }

    pub fn name(&self) -> &str {
        match self {
            PairFunction::Inv => "inv",
            PairFunction::Eqp => "eqp",
            PairFunction::Mul => "mul",
            PairFunction::Custom(c) => &c.name,
        }
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        match self {
            PairFunction::Inv => (x > y) as i64,
            PairFunction::Eqp => (x == y) as i64,
            PairFunction::Mul => x * y,
            PairFunction::Custom(c) => (c.eval)(x, y),
        }
    }

    /// The array on which to run a decomposition of `f`, together with the
    /// decomposition. `inv` is decomposed on rank-normalized values, which
    /// leaves every `inv` answer unchanged.
    pub fn decompose_for(&self, a: &IntArray) -> Result<(Decomposition, IntArray)> {
        match self {
            PairFunction::Inv => Ok((Decomposition::inv(a.len()), a.normalized())),
            PairFunction::Eqp => Ok((Decomposition::eqp(), a.clone())),
            PairFunction::Mul => Err(Error::Capability(
                "mul has no equality decomposition; use the prefix-sum path".into(),
            )),
            PairFunction::Custom(c) => match &c.decomposition {
                Some(d) => Ok((d.clone(), a.clone())),
                None => Err(Error::Capability(format!(
                    "custom function '{}' has no decomposition",
                    c.name
                ))),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_for_small_n() {
        assert_eq!(bits_for(1), 1);
        assert_eq!(bits_for(2), 1);
        assert_eq!(bits_for(3), 2);
        assert_eq!(bits_for(4), 2);
        assert_eq!(bits_for(5), 3);
        assert_eq!(bits_for(128), 7);
    }

    #[test]
    fn inv_decomposition_is_exact_up_to_64() {
        for n in 1..=64usize {
            let d = Decomposition::inv(n);
            assert_eq!(d.len(), bits_for(n));
            assert_eq!(
                d.first_mismatch(&PairFunction::Inv, 0..n as i64),
                None,
                "n = {n}"
            );
        }
    }

    #[test]
    fn eqp_and_scaled() {
        let d = Decomposition::eqp();
        assert_eq!(d.first_mismatch(&PairFunction::Eqp, -5..5), None);
        let triple = PairFunction::custom("3eqp", |x, y| 3 * (x == y) as i64, None);
        assert_eq!(
            Decomposition::eqp()
                .scaled(3)
                .first_mismatch(&triple, -5..5),
            None
        );
    }

    #[test]
    fn mismatch_is_reported() {
        let d = Decomposition::eqp();
        assert!(d.first_mismatch(&PairFunction::Inv, 0..3).is_some());
    }

    #[test]
    fn decompose_for_capabilities() {
        let a = IntArray::new(vec![5, 1, 5]).unwrap();
        assert!(PairFunction::Mul.decompose_for(&a).is_err());
        let bare = PairFunction::custom("f", |x, y| x - y, None);
        assert!(matches!(bare.decompose_for(&a), Err(Error::Capability(_))));
        let (_, normalized) = PairFunction::Inv.decompose_for(&a).unwrap();
        assert_eq!(normalized.values(), &[1, 0, 1]);
    }
}
