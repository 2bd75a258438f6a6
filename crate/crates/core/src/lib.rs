//! Exact-arithmetic homology of arrangements inside symmetric products
//! of surfaces.
//!
//! A point of the n-th symmetric product `SP^n(X)` of a surface `X` is an
//! effective divisor of order n. Fixing a divisor `D` supported on marked
//! points singles out the subspace `D + SP^(n-|D|)(X)` of divisors
//! dominating `D`; a finite family of such subspaces is an *arrangement*.
//! This crate computes, entirely over exact integers and rationals:
//!
//! * the intersection poset of an arrangement ([`poset`]),
//! * rational Betti numbers of order complexes ([`simplicial`]),
//! * Betti tables of arrangement unions, with their per-stratum
//!   decomposition, and cohomology tables of arrangement complements
//!   ([`arrangement`]),
//! * end-cohomology tables of symmetric products of punctured surfaces,
//!   which separate homotopy-equivalent open surfaces ([`endspace`]),
//! * independent cross-checks for all of the above ([`oracle`]).
//!
//! Supported base spaces are closed orientable surfaces, punctured
//! surfaces, and wedges of circles ([`spaces::SpaceModel`]).
//!
//! With the default `parallel` feature the rank computations fan out
//! over rayon; disabling it (or calling the `*_seq` twins) forces the
//! sequential path, which produces bit-identical results.

pub mod arrangement;
pub mod betti;
pub mod divisor;
pub mod endspace;
pub mod error;
pub mod oracle;
mod par;
pub mod poset;
pub mod simplicial;
pub mod spaces;

pub use arrangement::{
    complement_tables, points_case_betti, union_betti, union_decomposition,
    union_decomposition_seq, Arrangement, ComplementTable, DecompositionTerm,
};
pub use betti::BettiTable;
pub use divisor::{Divisor, PointSet};
pub use endspace::{
    distinguish, end_cohomology_closed, end_cohomology_pipeline, DistinguishReport,
    EndCohomologyTable,
};
pub use error::Error;
pub use oracle::{
    euler_inclusion_exclusion, kernel_sum_identity_check, mayer_vietoris_pair_betti,
    run_selftest, steenrod_sum_check, VerificationReport,
};
pub use poset::IntersectionPoset;
pub use simplicial::{betti, betti_seq, boundary_matrix, reduced_betti, RationalMatrix, SimplicialComplex};
pub use spaces::{binomial, im_cap, ker_im_beta, phi, SpaceModel};
