//! Finite simplicial complexes with exact rational homology.
//!
//! Betti numbers come from boundary-matrix ranks over the rationals,
//! computed by fraction-free (Bareiss) elimination: a machine-word
//! (`i128`) path handles typical matrices and falls back to arbitrary-
//! precision integers whenever an intermediate value would overflow.
//! No floating point is involved anywhere.

use crate::betti::BettiTable;
use crate::error::Error;
use crate::par;
use itertools::Itertools;
use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering};

/// A finite simplicial complex on `usize` vertex ids.
///
/// Simplices are stored per dimension as strictly ascending vertex
/// lists, each level sorted lexicographically and closed under taking
/// faces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds the downward closure of the given simplices. Vertex lists
    /// may come in any order; duplicate vertices and simplices merge.
    pub fn from_maximal_simplices(maximal: &[Vec<usize>]) -> Self {
        let mut levels: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for simplex in maximal {
            let mut verts = simplex.clone();
            verts.sort_unstable();
            verts.dedup();
            assert!(!verts.is_empty(), "a simplex needs at least one vertex");
            while levels.len() < verts.len() {
                levels.push(BTreeSet::new());
            }
            for size in 1..=verts.len() {
                for face in verts.iter().copied().combinations(size) {
                    levels[size - 1].insert(face);
                }
            }
        }
        Self {
            simplices: levels
                .into_iter()
                .map(|level| level.into_iter().collect())
                .collect(),
        }
    }

    /// Constructor for families that are already face-closed (chains of
    /// a poset): sorts each level and trims empty top levels.
    pub(crate) fn from_chain_lists(mut by_dim: Vec<Vec<Vec<usize>>>) -> Self {
        for level in &mut by_dim {
            level.sort_unstable();
        }
        while by_dim.last().is_some_and(Vec::is_empty) {
            by_dim.pop();
        }
        let complex = Self { simplices: by_dim };
        debug_assert!(complex.is_closed_under_faces());
        complex
    }

    /// Dimension of the complex; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Number of `d`-simplices.
    pub fn simplex_count(&self, d: usize) -> usize {
        self.simplices.get(d).map_or(0, Vec::len)
    }

    /// The `d`-simplices: ascending vertex lists in lexicographic order.
    pub fn simplices(&self, d: usize) -> &[Vec<usize>] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn total_simplices(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    /// Alternating count of simplices by dimension.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, level)| {
                let count = i64::try_from(level.len()).expect("simplex count overflow");
                if d % 2 == 0 {
                    count
                } else {
                    -count
                }
            })
            .sum()
    }

    /// True when every level is strictly sorted, every simplex is an
    /// ascending vertex list of the right size, and every face of every
    /// simplex is present.
    pub fn is_closed_under_faces(&self) -> bool {
        for (d, level) in self.simplices.iter().enumerate() {
            if !level.windows(2).all(|w| w[0] < w[1]) {
                return false;
            }
            for simplex in level {
                if simplex.len() != d + 1 || !simplex.windows(2).all(|w| w[0] < w[1]) {
                    return false;
                }
                if d > 0 {
                    for i in 0..simplex.len() {
                        let mut face = simplex.clone();
                        face.remove(i);
                        if self.simplices[d - 1].binary_search(&face).is_err() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// The boundary operator from `d`-chains to `(d-1)`-chains in the
/// canonical bases; entries are in `{-1, 0, +1}`, with the sign of the
/// i-th face of an ascending simplex equal to `(-1)^i`.
///
/// # Panics
/// Panics for `d = 0`; callers treat the 0-th boundary as the zero map.
pub fn boundary_matrix(complex: &SimplicialComplex, d: usize) -> RationalMatrix {
    assert!(d >= 1, "the boundary matrix is defined for d >= 1");
    let rows = complex.simplex_count(d - 1);
    let cols = complex.simplex_count(d);
    let mut m = RationalMatrix::zeros(rows, cols);
    let faces = complex.simplices(d - 1);
    for (c, simplex) in complex.simplices(d).iter().enumerate() {
        for i in 0..simplex.len() {
            let mut face = simplex.clone();
            face.remove(i);
            let r = faces
                .binary_search(&face)
                .expect("complex is closed under faces");
            m.set_int(r, c, if i % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Betti numbers over the rationals. Independent boundary ranks are
/// computed on the rayon pool when the `parallel` feature is active.
pub fn betti(complex: &SimplicialComplex) -> BettiTable {
    betti_impl(complex, true)
}

/// Sequential twin of [`betti`]; the benchmark suite compares the two
/// and tests assert they agree.
pub fn betti_seq(complex: &SimplicialComplex) -> BettiTable {
    betti_impl(complex, false)
}

pub(crate) fn betti_impl(complex: &SimplicialComplex, parallel: bool) -> BettiTable {
    let Some(dim) = complex.dim() else {
        return BettiTable::zero();
    };
    let ranks: Vec<usize> = par::map(parallel, (1..=dim).collect(), |d| {
        boundary_matrix(complex, d).rank_impl(parallel)
    });
    let rank_of = |d: usize| -> usize {
        if d == 0 || d > dim {
            0
        } else {
            ranks[d - 1]
        }
    };
    let mut t = BettiTable::zero();
    for d in 0..=dim {
        let b = complex.simplex_count(d) - rank_of(d) - rank_of(d + 1);
        t.add(d, b as u64);
    }
    t
}

/// Reduced Betti numbers: the same as [`betti`] except that degree 0
/// drops one rank for the base component (the empty complex stays zero).
pub fn reduced_betti(complex: &SimplicialComplex) -> BettiTable {
    let full = betti(complex);
    if complex.is_empty() {
        return full;
    }
    let mut t = BettiTable::zero();
    for (d, r) in full.iter() {
        t.add(d, if d == 0 { r - 1 } else { r });
    }
    t
}

/// Dense matrix over the rationals with exact arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>, // row-major
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    /// Builds from integer rows; the rows must form a rectangle.
    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set_int(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.data[r * self.cols + c] = value;
    }

    pub(crate) fn set_int(&mut self, r: usize, c: usize, value: i64) {
        self.set(r, c, BigRational::from_integer(BigInt::from(value)));
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Exact rank over the rationals via fraction-free elimination.
    /// Row updates run on the rayon pool when the `parallel` feature is
    /// active.
    pub fn rank(&self) -> usize {
        self.rank_impl(true)
    }

    /// Sequential twin of [`Self::rank`] for benchmarking and verification.
    pub fn rank_seq(&self) -> usize {
        self.rank_impl(false)
    }

    pub(crate) fn rank_impl(&self, parallel: bool) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // clear denominators row by row; row scaling preserves rank
        let int_rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = &self.data[r * self.cols..(r + 1) * self.cols];
                let mut scale = BigInt::one();
                for e in row {
                    scale = num::integer::lcm(scale, e.denom().clone());
                }
                row.iter().map(|e| e.numer() * (&scale / e.denom())).collect()
            })
            .collect();
        if let Some(small) = to_i128_rows(&int_rows) {
            if let Some(rank) = bareiss_rank_i128(small, parallel) {
                return rank;
            }
        }
        bareiss_rank_big(int_rows, parallel)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, Error> {
        if self.rows != other.rows {
            return Err(Error::RowMismatch {
                left: self.rows,
                right: other.rows,
            });
        }
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(m)
    }

    /// Matrix product; used by the boundary-composition checks.
    pub fn multiply(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let prod = a * b;
                        let cur = m.get(r, c) + prod;
                        m.set(r, c, cur);
                    }
                }
            }
        }
        Ok(m)
    }
}

fn to_i128_rows(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|row| row.iter().map(ToPrimitive::to_i128).collect())
        .collect()
}

/// One-step fraction-free elimination on machine words; returns `None`
/// if any intermediate product would overflow `i128`.
fn bareiss_rank_i128(mut m: Vec<Vec<i128>>, parallel: bool) -> Option<usize> {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    let overflow = AtomicBool::new(false);
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let (done, rest) = m.split_at_mut(rank + 1);
        let pivot_row: &[i128] = &done[rank];
        let pivot = pivot_row[col];
        par::for_each_mut(parallel, rest, |row| {
            if overflow.load(Ordering::Relaxed) {
                return;
            }
            let head = std::mem::replace(&mut row[col], 0);
            for j in col + 1..cols {
                let t = pivot
                    .checked_mul(row[j])
                    .and_then(|a| head.checked_mul(pivot_row[j]).and_then(|b| a.checked_sub(b)));
                match t {
                    // exact by the fraction-free invariant
                    Some(t) => row[j] = t / prev,
                    None => {
                        overflow.store(true, Ordering::Relaxed);
                        return;
                    }
                }
            }
        });
        if overflow.load(Ordering::Relaxed) {
            return None;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

/// The same elimination on arbitrary-precision integers.
fn bareiss_rank_big(mut m: Vec<Vec<BigInt>>, parallel: bool) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (done, rest) = m.split_at_mut(rank + 1);
        let pivot_row: &Vec<BigInt> = &done[rank];
        let prev_ref = &prev;
        par::for_each_mut(parallel, rest, |row| {
            let head = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let t = &pivot_row[col] * &row[j] - &head * &pivot_row[j];
                row[j] = t / prev_ref;
            }
        });
        prev = done[rank][col].clone();
        rank += 1;
    }
    rank
}
