//! Sequential vs rayon execution of the data-parallel kernel paths.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ga_core::stereo::{stereo_unproject_many, PlanePoint};
use ga_core::{
    cayley_table_with, geometric_product_with, rotate_many, rotor_between, BladeIndex, Execution, Multivector,
    Signature,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MODES: [Execution; 2] = [Execution::Sequential, Execution::Parallel];

fn dense(sig: Signature, rng: &mut ChaCha8Rng) -> Multivector {
    Multivector::from_terms(
        sig,
        (0..sig.blade_count()).map(|i| (BladeIndex::from_bits(i as u16), rng.gen_range(-1.0..1.0))),
    )
    .unwrap()
}

fn bench_cayley(c: &mut Criterion) {
    let mut group = c.benchmark_group("cayley_table");
    for dim in [4, 6] {
        let sig = Signature::euclidean(dim).unwrap();
        for exec in MODES {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), dim), &sig, |b, &sig| {
                b.iter(|| cayley_table_with(black_box(sig), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_dense_product(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut group = c.benchmark_group("dense_geometric_product");
    group.sample_size(20);
    for dim in [8, 10] {
        let sig = Signature::euclidean(dim).unwrap();
        let (a, b) = (dense(sig, &mut rng), dense(sig, &mut rng));
        for exec in MODES {
            group.bench_with_input(
                BenchmarkId::new(format!("{exec:?}"), dim),
                &(&a, &b),
                |bench, (a, b)| bench.iter(|| geometric_product_with(a, b, exec).unwrap()),
            );
        }
    }
    group.finish();
}

fn bench_batches(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g3 = Signature::G3;
    let xs: Vec<Multivector> = (0..50_000)
        .map(|_| {
            let c: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
            Multivector::vector(g3, &c).unwrap()
        })
        .collect();
    let a = Multivector::basis_vector(g3, 1).unwrap();
    let b = Multivector::vector(g3, &[0.0, 0.6, 0.8]).unwrap();
    let r = rotor_between(&a, &b).unwrap();
    let points: Vec<PlanePoint> = (0..50_000)
        .map(|_| PlanePoint::from_xy(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)))
        .collect();

    let mut group = c.benchmark_group("batch_50k");
    group.sample_size(20);
    for exec in MODES {
        group.bench_function(BenchmarkId::new("rotate", format!("{exec:?}")), |bench| {
            bench.iter(|| rotate_many(&xs, &r, exec).unwrap())
        });
        group.bench_function(BenchmarkId::new("unproject", format!("{exec:?}")), |bench| {
            bench.iter(|| stereo_unproject_many(&points, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_cayley, bench_dense_product, bench_batches);
criterion_main!(benches);
