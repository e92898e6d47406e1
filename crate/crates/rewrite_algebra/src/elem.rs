//! Exact-rational linear combinations of generalized paths.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::path::GenPath;

/// Coefficient field.
pub type Q = BigRational;

/// Integer → rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// A finite linear combination of generalized paths with nonzero rational
/// coefficients; the empty combination is zero. Terms are kept in the
/// canonical monomial order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgElem {
    terms: BTreeMap<GenPath, Q>,
}

impl AlgElem {
    pub fn zero() -> AlgElem {
        AlgElem::default()
    }

    pub fn from_path(p: GenPath) -> AlgElem {
        AlgElem::term(Q::one(), p)
    }

    pub fn term(c: Q, p: GenPath) -> AlgElem {
        let mut a = AlgElem::zero();
        a.add_term(c, p);
        a
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·p`, pruning a coefficient that cancels to zero.
    pub fn add_term(&mut self, c: Q, p: GenPath) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, c: &Q, other: &AlgElem) {
        for (p, x) in &other.terms {
            self.add_term(c * x, p.clone());
        }
    }

    pub fn add(&self, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        out.add_scaled(&Q::one(), other);
        out
    }

    pub fn sub(&self, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        out.add_scaled(&-Q::one(), other);
        out
    }

    pub fn scale(&self, c: &Q) -> AlgElem {
        let mut out = AlgElem::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GenPath, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &GenPath) -> Q {
        self.terms.get(p).cloned().unwrap_or_else(Q::zero)
    }

    /// The support (paths with nonzero coefficient), in canonical order.
    pub fn support(&self) -> impl Iterator<Item = &GenPath> {
        self.terms.keys()
    }

    /// Splits by `ℤ`-degree; the components sum to `self`.
    pub fn degree_components(&self) -> BTreeMap<i64, AlgElem> {
        let mut out: BTreeMap<i64, AlgElem> = BTreeMap::new();
        for (p, c) in &self.terms {
            out.entry(p.degree()).or_default().add_term(c.clone(), p.clone());
        }
        out
    }

    /// The involution: reverse each path and star every letter
    /// (coefficients are fixed, the involution of `ℚ` being trivial).
    pub fn star(&self) -> AlgElem {
        let mut out = AlgElem::zero();
        for (p, c) in &self.terms {
            out.add_term(c.clone(), p.star());
        }
        out
    }
}

impl FromIterator<(Q, GenPath)> for AlgElem {
    fn from_iter<I: IntoIterator<Item = (Q, GenPath)>>(iter: I) -> Self {
        let mut a = AlgElem::zero();
        for (c, p) in iter {
            a.add_term(c, p);
        }
        a
    }
}

/// Splits `a` by degree (free-function form).
pub fn degree_components(a: &AlgElem) -> BTreeMap<i64, AlgElem> {
    a.degree_components()
}
