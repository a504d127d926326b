use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use t3embed::exactlin::snf;
use t3embed::{build_witness, decide};
use t3embed_bench::{embeddable_maps, random_maps, surfaces};

fn bench_snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("snf");
    for (name, s) in surfaces() {
        let maps = random_maps(&s, 16, 50);
        group.bench_with_input(BenchmarkId::from_parameter(name), &maps, |b, maps| {
            b.iter(|| maps.iter().map(|f| snf(black_box(f.matrix())).invariant_factors.len()).sum::<usize>())
        });
    }
    group.finish();
}

fn bench_decide(c: &mut Criterion) {
    let mut group = c.benchmark_group("decide");
    for (name, s) in surfaces() {
        let maps = random_maps(&s, 16, 3);
        group.bench_with_input(BenchmarkId::from_parameter(name), &maps, |b, maps| {
            b.iter(|| maps.iter().filter(|f| decide(black_box(f)).embeddable).count())
        });
    }
    group.finish();
}

fn bench_witness(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_witness");
    for (name, s) in surfaces() {
        let maps = embeddable_maps(&s, 8, 3);
        group.bench_with_input(BenchmarkId::from_parameter(name), &maps, |b, maps| {
            b.iter(|| {
                for f in maps {
                    black_box(build_witness(f).unwrap());
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_snf, bench_decide, bench_witness);
criterion_main!(benches);
