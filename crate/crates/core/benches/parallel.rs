//! Compares the rayon-backed entry points with their sequential twins
//! on the three rank-bound layers: raw matrix rank, order-complex
//! homology, and a full union decomposition.

use criterion::{criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symprod::{
    union_decomposition, union_decomposition_seq, Arrangement, RationalMatrix, SimplicialComplex,
    SpaceModel,
};

fn seeded_matrix(rows: usize, cols: usize, seed: u64) -> RationalMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect())
        .collect();
    RationalMatrix::from_integer_rows(&data)
}

fn heavy_arrangement() -> Arrangement {
    Arrangement::distinct_points(SpaceModel::ClosedSurface { genus: 1 }, 4, 4)
        .expect("valid arrangement")
}

fn heavy_complex() -> SimplicialComplex {
    heavy_arrangement().intersection_poset().order_complex()
}

fn bench_matrix_rank(c: &mut Criterion) {
    let matrix = seeded_matrix(40, 55, 7);
    let mut group = c.benchmark_group("matrix_rank_40x55");
    group.sample_size(20);
    group.bench_function("parallel", |b| b.iter(|| matrix.rank()));
    group.bench_function("sequential", |b| b.iter(|| matrix.rank_seq()));
    group.finish();
}

fn bench_order_complex_betti(c: &mut Criterion) {
    let complex = heavy_complex();
    let mut group = c.benchmark_group("order_complex_betti");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| symprod::betti(&complex)));
    group.bench_function("sequential", |b| b.iter(|| symprod::betti_seq(&complex)));
    group.finish();
}

fn bench_union_decomposition(c: &mut Criterion) {
    let arr = heavy_arrangement();
    let mut group = c.benchmark_group("union_decomposition");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| union_decomposition(&arr)));
    group.bench_function("sequential", |b| b.iter(|| union_decomposition_seq(&arr)));
    group.finish();
}

criterion_group!(
    benches,
    bench_matrix_rank,
    bench_order_complex_betti,
    bench_union_decomposition
);
criterion_main!(benches);
