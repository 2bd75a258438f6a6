//! Independent cross-checks for the main computations.
//!
//! Every routine here reaches the same quantity as the main pipeline
//! through a different route — inclusion–exclusion for Euler
//! characteristics, a two-piece gluing argument for Betti tables, rank
//! identities for the exact linear algebra, band summation for the
//! symmetric-product tables — so agreement is meaningful evidence and a
//! disagreement pinpoints the broken layer. [`run_selftest`] bundles
//! them into a deterministic, seedable battery.

use crate::arrangement::{complement_tables, points_case_betti, union_betti, union_decomposition, union_decomposition_seq, Arrangement};
use crate::betti::BettiTable;
use crate::divisor::{Divisor, PointSet};
use crate::endspace::{end_cohomology_closed, end_cohomology_pipeline};
use crate::error::Error;
use crate::simplicial::RationalMatrix;
use crate::spaces::SpaceModel;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// One verified fact: what was checked, on which inputs, and whether the
/// two independently computed sides agreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl VerificationReport {
    /// Builds a report by comparing two values of the same type.
    pub fn compare<T: PartialEq + fmt::Debug>(
        check: impl Into<String>,
        inputs: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> Self {
        Self {
            check: check.into(),
            inputs: inputs.into(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
            pass: expected == actual,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{verdict}] {} ({}): expected {}, got {}",
            self.check, self.inputs, self.expected, self.actual
        )
    }
}

/// Folds a family of case outcomes into one report.
fn family_report(check: &str, total: usize, failures: Vec<String>) -> VerificationReport {
    VerificationReport {
        check: check.to_string(),
        inputs: match failures.first() {
            None => format!("{total} cases"),
            Some(first) => format!("{total} cases; first failure: {first}"),
        },
        expected: format!("{total} matches"),
        actual: format!("{} matches", total - failures.len()),
        pass: failures.is_empty(),
    }
}

/// Euler characteristic of the arrangement's union by
/// inclusion–exclusion over generator subsets: each non-empty subset
/// meets in a translate of `SP^(n - |join|)` (or in nothing, when the
/// join is too deep), counted with the sign of the subset size.
pub fn euler_inclusion_exclusion(arr: &Arrangement) -> Result<i64, Error> {
    let gens = arr.generators();
    let r = gens.len();
    if r > 16 {
        return Err(Error::TooManyGenerators(r));
    }
    let mut total: i64 = 0;
    for mask in 1u32..1 << r {
        let mut join: Option<Divisor> = None;
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                join = Some(match join {
                    Some(j) => j.join(g),
                    None => g.clone(),
                });
            }
        }
        let order = join.expect("non-empty mask").order();
        if order > arr.n() {
            continue;
        }
        let chi = arr.space().sp_euler(arr.n() - order);
        if mask.count_ones() % 2 == 1 {
            total += chi;
        } else {
            total -= chi;
        }
    }
    Ok(total)
}

/// Betti table of a two-generator union, glued by hand: each piece is a
/// translate of a symmetric product, their intersection includes
/// split-injectively into both, so the union's rank in each degree is
/// `piece + piece - intersection`.
pub fn mayer_vietoris_pair_betti(arr: &Arrangement) -> Result<BettiTable, Error> {
    let gens = arr.generators();
    if gens.len() != 2 {
        return Err(Error::NotTwoGenerators(gens.len()));
    }
    let space = arr.space();
    let n = arr.n();
    let first = space.sp_betti(n - gens[0].order());
    let second = space.sp_betti(n - gens[1].order());
    let join = gens[0].join(&gens[1]);
    let meet = if join.order() <= n {
        space.sp_betti(n - join.order())
    } else {
        BettiTable::zero()
    };
    let top = first.max_degree().max(second.max_degree());
    let mut out = BettiTable::zero();
    if let Some(top) = top {
        for d in 0..=top {
            let rank = (first.rank(d) + second.rank(d))
                .checked_sub(meet.rank(d))
                .expect("intersection ranks exceed the pieces'");
            out.add(d, rank);
        }
    }
    Ok(out)
}

/// Exercises the exact rank engine on three related matrices: for the
/// side-by-side stack `[A | B]`, the kernel dimension
/// `cols(A) + cols(B) - rank[A|B]` must equal
/// `ker(A) + ker(B) + (rank A + rank B - rank[A|B])`, the last summand
/// being the overlap of the two column spans.
pub fn kernel_sum_identity_check(
    a: &RationalMatrix,
    b: &RationalMatrix,
) -> Result<VerificationReport, Error> {
    let stacked = a.hstack(b)?;
    let ra = a.rank();
    let rb = b.rank();
    let rab = stacked.rank();
    let lhs = a.cols() + b.cols() - rab;
    let rhs = (a.cols() - ra) + (b.cols() - rb) + (ra + rb - rab);
    Ok(VerificationReport::compare(
        "stacked kernel = kernels + column-span overlap",
        format!("{}x{} and {}x{}", a.rows(), a.cols(), b.rows(), b.cols()),
        &lhs,
        &rhs,
    ))
}

/// Checks that the relative band tables of `SP^0 .. SP^n` sum degreewise
/// to the Betti table of `SP^n` itself.
pub fn steenrod_sum_check(space: SpaceModel, n: u32) -> VerificationReport {
    let summed = (0..=n)
        .map(|j| space.sp_relative_betti(j))
        .fold(BettiTable::zero(), |acc, t| acc.sum(&t));
    VerificationReport::compare(
        "relative bands sum to the full symmetric product",
        format!("space {space:?}, n {n}"),
        &space.sp_betti(n),
        &summed,
    )
}

/// Draws a small random arrangement: up to 3 marked points, power in
/// `1..=5`, up to 4 generators with entries at most 2 and orders in
/// `1..=n`, over a randomly chosen base space.
pub fn random_arrangement<R: Rng>(rng: &mut R) -> Arrangement {
    let space = match rng.gen_range(0..3u32) {
        0 => SpaceModel::ClosedSurface {
            genus: rng.gen_range(0..=2),
        },
        1 => SpaceModel::PuncturedSurface {
            genus: rng.gen_range(0..=2),
            punctures: rng.gen_range(1..=3),
        },
        _ => SpaceModel::WedgeOfCircles {
            circles: rng.gen_range(1..=4),
        },
    };
    let n = rng.gen_range(1..=5u32);
    let k = rng.gen_range(1..=3usize);
    let points = PointSet::numbered(k).expect("k >= 1");
    let mut generators = Vec::new();
    for _ in 0..rng.gen_range(1..=4usize) {
        loop {
            let mults: Vec<u32> = (0..k).map(|_| rng.gen_range(0..=2u32)).collect();
            let order: u32 = mults.iter().sum();
            if (1..=n).contains(&order) {
                generators.push(Divisor::new(mults));
                break;
            }
        }
    }
    Arrangement::new(space, n, points, generators).expect("drawn within the valid ranges")
}

fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set_int(i, j, rng.gen_range(-3..=3));
        }
    }
    m
}

/// Runs the whole battery with a deterministic seed and returns one
/// report per check (random families are folded into one report each).
pub fn run_selftest(seed: u64) -> Vec<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();

    // band summation for every space family
    for space in [
        SpaceModel::ClosedSurface { genus: 0 },
        SpaceModel::ClosedSurface { genus: 1 },
        SpaceModel::ClosedSurface { genus: 2 },
        SpaceModel::WedgeOfCircles { circles: 3 },
        SpaceModel::PuncturedSurface {
            genus: 1,
            punctures: 2,
        },
        SpaceModel::PuncturedSurface {
            genus: 2,
            punctures: 3,
        },
    ] {
        for n in [3, 6] {
            reports.push(steenrod_sum_check(space, n));
        }
    }

    // the end pipeline against the closed form, over a grid
    {
        let mut failures = Vec::new();
        let mut total = 0;
        for genus in 0..=3 {
            for punctures in 1..=4 {
                for n in 1..=6 {
                    total += 1;
                    let closed = end_cohomology_closed(genus, punctures, n).expect("valid");
                    let pipeline = end_cohomology_pipeline(genus, punctures, n).expect("valid");
                    if closed != pipeline {
                        failures.push(format!("genus {genus}, punctures {punctures}, n {n}"));
                    }
                }
            }
        }
        reports.push(family_report(
            "end pipeline matches the closed form",
            total,
            failures,
        ));
    }

    // the points-case closed form against the poset route
    {
        let mut failures = Vec::new();
        let mut total = 0;
        for space in [
            SpaceModel::ClosedSurface { genus: 1 },
            SpaceModel::WedgeOfCircles { circles: 2 },
        ] {
            for n in 1..=3u32 {
                for k in 1..=3u32 {
                    total += 1;
                    let arr = Arrangement::distinct_points(space, n, k).expect("valid");
                    if union_betti(&arr) != points_case_betti(space, n, k) {
                        failures.push(format!("space {space:?}, n {n}, k {k}"));
                    }
                }
            }
        }
        reports.push(family_report(
            "distinct-points closed form matches the poset route",
            total,
            failures,
        ));
    }

    // random arrangements, drawn up front so the evaluation order cannot
    // disturb the stream
    let arrangements: Vec<Arrangement> = (0..100).map(|_| random_arrangement(&mut rng)).collect();
    {
        let mut failures = Vec::new();
        for arr in &arrangements {
            let via_union = union_betti(arr).euler();
            let via_subsets = euler_inclusion_exclusion(arr).expect("at most 4 generators");
            if via_union != via_subsets {
                failures.push(format!(
                    "space {:?}, n {}, generators {:?} ({via_union} vs {via_subsets})",
                    arr.space(),
                    arr.n(),
                    arr.generators()
                ));
            }
        }
        reports.push(family_report(
            "inclusion-exclusion Euler matches the union decomposition",
            arrangements.len(),
            failures,
        ));
    }
    {
        let mut failures = Vec::new();
        let pairs: Vec<&Arrangement> = arrangements
            .iter()
            .filter(|arr| arr.generators().len() == 2)
            .collect();
        for arr in &pairs {
            if union_betti(arr) != mayer_vietoris_pair_betti(arr).expect("two generators") {
                failures.push(format!(
                    "space {:?}, n {}, generators {:?}",
                    arr.space(),
                    arr.n(),
                    arr.generators()
                ));
            }
        }
        reports.push(family_report(
            "two-piece gluing matches the union decomposition",
            pairs.len(),
            failures,
        ));
    }
    {
        let mut failures = Vec::new();
        for arr in &arrangements {
            if union_decomposition(arr) != union_decomposition_seq(arr) {
                failures.push(format!("space {:?}, n {}", arr.space(), arr.n()));
            }
        }
        reports.push(family_report(
            "parallel and sequential decompositions agree",
            arrangements.len(),
            failures,
        ));
    }

    // the exact rank engine, on random integer matrices
    {
        let mut failures = Vec::new();
        let total = 200;
        for case in 0..total {
            let a = random_matrix(&mut rng, 5, 7);
            let b = random_matrix(&mut rng, 5, 7);
            let report = kernel_sum_identity_check(&a, &b).expect("equal row counts");
            if !report.pass {
                failures.push(format!("case {case}: {report}"));
            }
        }
        reports.push(family_report(
            "rank identities on random matrices",
            total,
            failures,
        ));
    }

    // frozen desk checks
    let two_points = Arrangement::distinct_points(SpaceModel::ClosedSurface { genus: 1 }, 2, 2)
        .expect("valid");
    reports.push(VerificationReport::compare(
        "union of two points on the torus in SP^2",
        "genus 1, n 2, k 2",
        &BettiTable::from_ranks(&[1, 4, 2]),
        &union_betti(&two_points),
    ));
    reports.push(VerificationReport::compare(
        "complement of two points on the torus in SP^2",
        "genus 1, n 2, k 2",
        &vec![1, 3, 3, 0, 0],
        &complement_tables(&two_points).expect("closed surface").cohomology,
    ));

    reports
}
