//! Effective divisors over a fixed set of marked points, with the
//! pointwise partial order and join that intersection posets are built
//! from.

use crate::error::Error;
use num::{BigUint, One};
use std::collections::BTreeSet;

/// Distinct labels for the marked points a divisor can charge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    labels: Vec<String>,
}

impl PointSet {
    /// The labels must be non-empty and pairwise distinct.
    pub fn new(labels: Vec<String>) -> Result<Self, Error> {
        if labels.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { labels })
    }

    /// Points labelled `x1..xk`.
    pub fn numbered(k: usize) -> Result<Self, Error> {
        Self::new((1..=k).map(|i| format!("x{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// An effective divisor supported on marked points: one multiplicity per
/// point.
///
/// The derived `Ord` is lexicographic on multiplicities and is used only
/// for canonical storage; the geometric (pointwise) order is
/// [`Divisor::leq`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Divisor {
    mults: Vec<u32>,
}

impl Divisor {
    pub fn new(mults: Vec<u32>) -> Self {
        Self { mults }
    }

    /// Multiplicity 1 at position `i` among `len` points.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut mults = vec![0; len];
        mults[i] = 1;
        Self { mults }
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mults
    }

    /// Total multiplicity `|D|`.
    pub fn order(&self) -> u32 {
        let sum: u64 = self.mults.iter().map(|&m| u64::from(m)).sum();
        u32::try_from(sum).expect("divisor order overflows u32")
    }

    /// Pointwise comparison: true when `other` dominates `self`
    /// everywhere.
    ///
    /// # Panics
    /// Panics when the divisors live over point sets of different sizes.
    pub fn leq(&self, other: &Self) -> bool {
        assert_eq!(
            self.len(),
            other.len(),
            "divisors live over different point sets"
        );
        self.mults.iter().zip(&other.mults).all(|(a, b)| a <= b)
    }

    /// Least upper bound: the pointwise maximum.
    ///
    /// # Panics
    /// Panics when the divisors live over point sets of different sizes.
    pub fn join(&self, other: &Self) -> Self {
        assert_eq!(
            self.len(),
            other.len(),
            "divisors live over different point sets"
        );
        Self {
            mults: self
                .mults
                .iter()
                .zip(&other.mults)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// Injective encoding into the positive integers:
    /// `prod primes[i] ^ mults[i]`. Under it, `join` becomes lcm and
    /// [`Divisor::leq`] becomes divisibility.
    pub fn encode_integer(&self, primes: &[u64]) -> Result<BigUint, Error> {
        if primes.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: primes.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for &p in primes {
            if !is_prime(p) {
                return Err(Error::BadPrimes(format!("{p} is not prime")));
            }
            if !seen.insert(p) {
                return Err(Error::BadPrimes(format!("{p} appears more than once")));
            }
        }
        let mut acc = BigUint::one();
        for (&p, &m) in primes.iter().zip(&self.mults) {
            acc *= BigUint::from(p).pow(m);
        }
        Ok(acc)
    }

    /// Human-readable form such as `2*x1 + x3`; the zero divisor prints
    /// as `0`.
    pub fn label(&self, points: &PointSet) -> String {
        assert_eq!(
            points.len(),
            self.len(),
            "divisor does not match the point set"
        );
        let parts: Vec<String> = self
            .mults
            .iter()
            .zip(points.labels())
            .filter(|(&m, _)| m > 0)
            .map(|(&m, l)| if m == 1 { l.clone() } else { format!("{m}*{l}") })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
