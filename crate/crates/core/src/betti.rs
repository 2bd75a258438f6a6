//! Degree-indexed tables of homology ranks.
//!
//! Only non-zero entries are stored, so two tables compare equal exactly
//! when they describe the same graded ranks, regardless of how they were
//! assembled.

use std::collections::BTreeMap;
use std::fmt;

/// Ranks of a graded vector space, indexed by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    ranks: BTreeMap<usize, u64>,
}

impl BettiTable {
    /// The all-zero table (the table of the empty space).
    pub fn zero() -> Self {
        Self::default()
    }

    /// Rank 1 in degree 0: the table of a non-empty contractible space.
    pub fn point() -> Self {
        let mut t = Self::default();
        t.add(0, 1);
        t
    }

    /// Builds a table from a dense list where the index is the degree.
    pub fn from_ranks(ranks: &[u64]) -> Self {
        let mut t = Self::default();
        for (d, &r) in ranks.iter().enumerate() {
            t.add(d, r);
        }
        t
    }

    /// Adds `r` to the rank in degree `d`.
    pub fn add(&mut self, d: usize, r: u64) {
        if r > 0 {
            *self.ranks.entry(d).or_insert(0) += r;
        }
    }

    pub fn rank(&self, d: usize) -> u64 {
        self.ranks.get(&d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Largest degree with a non-zero rank.
    pub fn max_degree(&self) -> Option<usize> {
        self.ranks.keys().next_back().copied()
    }

    /// Non-zero entries in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.ranks.iter().map(|(&d, &r)| (d, r))
    }

    /// Degreewise sum.
    pub fn sum(&self, other: &Self) -> Self {
        let mut t = self.clone();
        for (d, r) in other.iter() {
            t.add(d, r);
        }
        t
    }

    /// Künneth product: the table of a product space,
    /// `c_d = sum_p a_p * b_(d-p)`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut t = Self::default();
        for (p, a) in self.iter() {
            for (q, b) in other.iter() {
                t.add(p + q, a * b);
            }
        }
        t
    }

    /// Every rank multiplied by `c`.
    pub fn scale(&self, c: u64) -> Self {
        let mut t = Self::default();
        for (d, r) in self.iter() {
            t.add(d, r * c);
        }
        t
    }

    /// Alternating sum of the ranks.
    pub fn euler(&self) -> i64 {
        let mut chi: i64 = 0;
        for (d, r) in self.iter() {
            let r = i64::try_from(r).expect("rank too large for an Euler sum");
            if d % 2 == 0 {
                chi += r;
            } else {
                chi -= r;
            }
        }
        chi
    }

    /// Dense prefix of the table: the ranks in degrees `0..len`.
    pub fn to_vec(&self, len: usize) -> Vec<u64> {
        (0..len).map(|d| self.rank(d)).collect()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.max_degree().map_or(0, |d| d + 1);
        write!(f, "[")?;
        for d in 0..len {
            if d > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.rank(d))?;
        }
        write!(f, "]")
    }
}
