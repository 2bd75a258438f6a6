//! Intersection posets: join-closures of generator divisors, graded by
//! the weight `mu = n - order`, with their order complexes.

use crate::divisor::Divisor;
use crate::simplicial::SimplicialComplex;
use std::collections::BTreeSet;

/// The poset of all joins of generator divisors with order at most `n`,
/// ordered by pointwise domination. An element `I` carries the weight
/// `mu(I) = n - |I|`, which is antitone: going up the poset lowers it.
///
/// Elements are stored sorted by (order, multiplicities), so any two
/// posets over the same data compare equal and indices are stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPoset {
    n: u32,
    elements: Vec<Divisor>,
}

impl IntersectionPoset {
    /// Closes the generators under pairwise join, dropping any join of
    /// order above `n`. Generators are assumed validated: equal lengths
    /// and orders in `1..=n` (see [`crate::arrangement::Arrangement`]).
    pub fn from_generators(n: u32, generators: &[Divisor]) -> Self {
        debug_assert!(generators
            .iter()
            .all(|g| (1..=n).contains(&g.order())));
        let mut set: BTreeSet<Divisor> = generators.iter().cloned().collect();
        loop {
            let snapshot: Vec<Divisor> = set.iter().cloned().collect();
            let mut grew = false;
            for i in 0..snapshot.len() {
                for j in i + 1..snapshot.len() {
                    let join = snapshot[i].join(&snapshot[j]);
                    if join.order() <= n && set.insert(join) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut elements: Vec<Divisor> = set.into_iter().collect();
        elements.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.multiplicities().cmp(b.multiplicities()))
        });
        Self { n, elements }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Divisor] {
        &self.elements
    }

    /// Weight of element `i`.
    pub fn mu(&self, i: usize) -> u32 {
        self.n - self.elements[i].order()
    }

    /// Largest weight; carried by the first (smallest-order) element.
    pub fn max_mu(&self) -> Option<u32> {
        self.elements.first().map(|d| self.n - d.order())
    }

    /// Smallest weight; carried by the last (largest-order) element.
    pub fn min_mu(&self) -> Option<u32> {
        self.elements.last().map(|d| self.n - d.order())
    }

    /// The sub-poset of weight >= `j` (a down-set in the divisor order).
    /// Equal to the whole poset for `j <= min_mu` and empty past
    /// `max_mu`.
    pub fn ideal(&self, j: u32) -> Self {
        if j > self.n {
            return Self {
                n: self.n,
                elements: Vec::new(),
            };
        }
        let cutoff = self.n - j;
        Self {
            n: self.n,
            elements: self
                .elements
                .iter()
                .filter(|d| d.order() <= cutoff)
                .cloned()
                .collect(),
        }
    }

    /// True when element `i` lies below element `j` in the divisor
    /// order (strictly or not).
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].leq(&self.elements[j])
    }

    /// The chains of the strict order as a simplicial complex on the
    /// element indices: a chain of m elements is an (m-1)-simplex.
    pub fn order_complex(&self) -> SimplicialComplex {
        if self.is_empty() {
            return SimplicialComplex::empty();
        }
        let k = self.len();
        // the sort by order makes the strict relation point forward in
        // index space, so chains are increasing index sequences
        let successors: Vec<Vec<usize>> = (0..k)
            .map(|i| ((i + 1)..k).filter(|&j| self.leq(i, j)).collect())
            .collect();
        let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut chain: Vec<usize> = Vec::new();
        for v in 0..k {
            collect_chains(v, &successors, &mut chain, &mut by_dim);
        }
        SimplicialComplex::from_chain_lists(by_dim)
    }
}

/// Depth-first enumeration of all chains extending `chain` by `v`.
/// Transitivity of the order makes checking against the last element
/// sufficient, and each chain is produced exactly once.
fn collect_chains(
    v: usize,
    successors: &[Vec<usize>],
    chain: &mut Vec<usize>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    chain.push(v);
    let d = chain.len() - 1;
    if out.len() <= d {
        out.push(Vec::new());
    }
    out[d].push(chain.clone());
    for &w in &successors[v] {
        collect_chains(w, successors, chain, out);
    }
    chain.pop();
}
