//! Arrangements of sub-symmetric products and exact Betti tables of
//! their unions and complements.
//!
//! A generator divisor `D` of order `1..=n` spans the subspace
//! `D + SP^(n-|D|)(X)` of `SP^n(X)`: all order-n divisors dominating
//! `D`. The union of these subspaces is glued along the intersection
//! poset, and its homology splits into one band per weight `j`: the
//! relative table of `(SP^j, SP^(j-1))` tensored with the homology of
//! the order complex of the weight-`j` ideal.

use crate::betti::BettiTable;
use crate::divisor::{Divisor, PointSet};
use crate::error::Error;
use crate::par;
use crate::poset::IntersectionPoset;
use crate::simplicial;
use crate::spaces::{binomial, SpaceModel};
use std::collections::BTreeMap;

/// A finite arrangement of sub-symmetric products of `SP^n(X)`, one
/// subspace per generator divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    space: SpaceModel,
    n: u32,
    points: PointSet,
    generators: Vec<Divisor>,
    duplicates_removed: usize,
}

impl Arrangement {
    /// Validates and normalizes the input: every generator must match
    /// the point set and have order in `1..=n`. Repeated generators
    /// describe the same subspace; they are dropped, and the count of
    /// dropped copies is kept so interfaces can warn about them.
    pub fn new(
        space: SpaceModel,
        n: u32,
        points: PointSet,
        generators: Vec<Divisor>,
    ) -> Result<Self, Error> {
        space.validate()?;
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        let mut kept: Vec<Divisor> = Vec::new();
        let mut duplicates_removed = 0usize;
        for (index, g) in generators.into_iter().enumerate() {
            if g.len() != points.len() {
                return Err(Error::DimensionMismatch {
                    expected: points.len(),
                    found: g.len(),
                });
            }
            let order = g.order();
            if order == 0 || order > n {
                return Err(Error::GeneratorOrder {
                    index,
                    order,
                    max: n,
                });
            }
            if kept.contains(&g) {
                duplicates_removed += 1;
            } else {
                kept.push(g);
            }
        }
        Ok(Self {
            space,
            n,
            points,
            generators: kept,
            duplicates_removed,
        })
    }

    /// The arrangement of `k` distinct single points labelled `x1..xk`.
    pub fn distinct_points(space: SpaceModel, n: u32, k: u32) -> Result<Self, Error> {
        let points = PointSet::numbered(k as usize)?;
        let generators = (0..k as usize).map(|i| Divisor::unit(k as usize, i)).collect();
        Self::new(space, n, points, generators)
    }

    pub fn space(&self) -> SpaceModel {
        self.space
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    /// The deduplicated generators, in input order.
    pub fn generators(&self) -> &[Divisor] {
        &self.generators
    }

    /// How many repeated generators were dropped during validation.
    pub fn duplicates_removed(&self) -> usize {
        self.duplicates_removed
    }

    pub fn intersection_poset(&self) -> IntersectionPoset {
        IntersectionPoset::from_generators(self.n, &self.generators)
    }
}

/// One band of the union decomposition: the weight-`j` stratum
/// contributes `multiplicity` copies of degree `p + q`, where `p` ranges
/// over the relative table of `(SP^j, SP^(j-1))` and `q` over the
/// homology of the order complex of the weight-`j` ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecompositionTerm {
    pub j: u32,
    pub p: usize,
    pub q: usize,
    pub multiplicity: u64,
}

/// Homology tables of the order complexes of all weight ideals.
struct UnionAnalysis {
    min_mu: u32,
    max_mu: u32,
    /// Index `j` in `0..=max_mu`; equal ideals share one computation.
    ideal_betti: Vec<BettiTable>,
}

fn analyze(arr: &Arrangement, parallel: bool) -> Option<UnionAnalysis> {
    let poset = arr.intersection_poset();
    let max_mu = poset.max_mu()?;
    let min_mu = poset.min_mu().expect("non-empty poset");
    let ideals: Vec<IntersectionPoset> = (0..=max_mu).map(|j| poset.ideal(j)).collect();
    // ideals are nested, so equal element counts mean equal posets:
    // compute the homology of each distinct one exactly once
    let mut representative: Vec<usize> = Vec::new();
    let mut position: BTreeMap<usize, usize> = BTreeMap::new();
    let assignment: Vec<usize> = ideals
        .iter()
        .enumerate()
        .map(|(j, ideal)| {
            *position.entry(ideal.len()).or_insert_with(|| {
                representative.push(j);
                representative.len() - 1
            })
        })
        .collect();
    let computed: Vec<BettiTable> = par::map(parallel, representative, |j| {
        simplicial::betti_impl(&ideals[j].order_complex(), parallel)
    });
    let ideal_betti = assignment.into_iter().map(|pos| computed[pos].clone()).collect();
    Some(UnionAnalysis {
        min_mu,
        max_mu,
        ideal_betti,
    })
}

fn decomposition_from(analysis: &UnionAnalysis, space: SpaceModel) -> Vec<DecompositionTerm> {
    let mut terms = Vec::new();
    for j in 0..=analysis.max_mu {
        let relative = space.sp_relative_betti(j);
        for (p, rp) in relative.iter() {
            for (q, bq) in analysis.ideal_betti[j as usize].iter() {
                terms.push(DecompositionTerm {
                    j,
                    p,
                    q,
                    multiplicity: rp * bq,
                });
            }
        }
    }
    terms
}

/// The per-band decomposition of the homology of the union, ordered by
/// `(j, p, q)`. Empty arrangements decompose into nothing.
pub fn union_decomposition(arr: &Arrangement) -> Vec<DecompositionTerm> {
    union_decomposition_impl(arr, true)
}

/// Sequential twin of [`union_decomposition`]; the benchmark suite
/// compares the two.
pub fn union_decomposition_seq(arr: &Arrangement) -> Vec<DecompositionTerm> {
    union_decomposition_impl(arr, false)
}

fn union_decomposition_impl(arr: &Arrangement, parallel: bool) -> Vec<DecompositionTerm> {
    match analyze(arr, parallel) {
        Some(analysis) => decomposition_from(&analysis, arr.space()),
        None => Vec::new(),
    }
}

/// Betti table of the union of the arrangement's subspaces.
///
/// Two equivalent assemblies are computed — the flat sum over all
/// decomposition terms, and the layered form that keeps the full
/// product `SP^min_mu x order complex` in one piece — and they are
/// asserted to agree before the result is returned.
pub fn union_betti(arr: &Arrangement) -> BettiTable {
    let Some(analysis) = analyze(arr, true) else {
        return BettiTable::zero();
    };
    let space = arr.space();
    let mut flat = BettiTable::zero();
    for term in decomposition_from(&analysis, space) {
        flat.add(term.p + term.q, term.multiplicity);
    }
    let mut layered = space
        .sp_betti(analysis.min_mu)
        .tensor(&analysis.ideal_betti[0]);
    for j in analysis.min_mu + 1..=analysis.max_mu {
        layered = layered.sum(
            &space
                .sp_relative_betti(j)
                .tensor(&analysis.ideal_betti[j as usize]),
        );
    }
    assert_eq!(flat, layered, "the two union assemblies disagree");
    flat
}

/// Betti table of the p-skeleton of a simplex on `k` vertices: one
/// component plus `binomial(k-1, p+1)` spheres in degree `p`. For
/// `p = 0` both contributions land in degree 0, giving `k` points; a
/// full simplex (`p = k-1`) is contractible.
fn simplex_skeleton_betti(k: u32, p: u32) -> BettiTable {
    let mut t = BettiTable::zero();
    t.add(0, 1);
    t.add(p as usize, binomial(i64::from(k) - 1, i64::from(p) + 1));
    t
}

/// Closed-form Betti table for the union over `k` distinct single-point
/// generators, bypassing the poset machinery entirely: the weight
/// ideals of that arrangement are skeleta of a simplex on `k` vertices.
pub fn points_case_betti(space: SpaceModel, n: u32, k: u32) -> BettiTable {
    assert!(n >= 1, "the symmetric power must be at least 1");
    assert!(k >= 1, "needs at least one point");
    let m = n.min(k);
    let mut acc = space
        .sp_betti(n - m)
        .tensor(&simplex_skeleton_betti(k, m - 1));
    for p in 0..i64::from(m) - 1 {
        let band = space.sp_relative_betti(n - p as u32 - 1);
        acc = acc.sum(&band.tensor(&simplex_skeleton_betti(k, p as u32)));
    }
    acc
}

/// Complement cohomology of an arrangement union inside `SP^n` of a
/// closed surface, assembled degreewise by duality from two homology
/// tables: `a` collects the poset strata (with the degree-0 rank of
/// each order complex reduced by its base component), `b` the bands
/// above the deepest stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementTable {
    pub n: u32,
    /// Stratum contributions, indexed by homology degree `0..=2n`.
    pub a: Vec<u64>,
    /// Band contributions above the deepest stratum, same indexing.
    pub b: Vec<u64>,
    /// Complement cohomology ranks, indexed by cohomological degree
    /// `0..=2n`: `cohomology[t] = a[2n-t-1] + b[2n-t]`.
    pub cohomology: Vec<u64>,
}

/// Computes [`ComplementTable`] for a closed-surface arrangement with at
/// least one generator.
pub fn complement_tables(arr: &Arrangement) -> Result<ComplementTable, Error> {
    if !matches!(arr.space(), SpaceModel::ClosedSurface { .. }) {
        return Err(Error::ClosedSurfaceRequired("complement_tables"));
    }
    let Some(analysis) = analyze(arr, true) else {
        return Err(Error::EmptyArrangement);
    };
    let n = arr.n();
    let len = 2 * n as usize + 1;
    let space = arr.space();
    let mut a = vec![0u64; len];
    for j in 0..=analysis.max_mu {
        let relative = space.sp_relative_betti(j);
        let ideal = &analysis.ideal_betti[j as usize];
        for (p, rp) in relative.iter() {
            for (q, bq) in ideal.iter() {
                if q >= 1 {
                    a[p + q] += rp * bq;
                } else {
                    // reduced degree-0 rank: drop the base component
                    a[p] += rp * (bq - 1);
                }
            }
        }
    }
    let mut b = vec![0u64; len];
    for j in analysis.max_mu + 1..=n {
        for (d, r) in space.sp_relative_betti(j).iter() {
            b[d] += r;
        }
    }
    let mut cohomology = vec![0u64; len];
    for (t, slot) in cohomology.iter_mut().enumerate() {
        let dual = 2 * n as usize - t;
        *slot = b[dual] + if dual >= 1 { a[dual - 1] } else { 0 };
    }
    Ok(ComplementTable {
        n,
        a,
        b,
        cohomology,
    })
}
