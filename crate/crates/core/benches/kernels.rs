//! Criterion benches for the heavy kernels, comparing the rayon path against
//! the sequential one in a single run. Build with `--no-default-features` to
//! measure the pure sequential crate as well.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use planar_cycles::{
    blowup_cycle, count_induced_cycles_with, is_planar, max_induced_6cycles, property_suite,
    random_planar, Parallelism,
};

fn modes() -> [(&'static str, Parallelism); 2] {
    [("seq", Parallelism::Sequential), ("rayon", Parallelism::Rayon)]
}

fn bench_count_blowup(c: &mut Criterion) {
    let (g, _) = blowup_cycle(60, 6).unwrap();
    let mut group = c.benchmark_group("count_induced_6cycles/blowup_60");
    for (name, par) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &par, |b, &par| {
            b.iter(|| count_induced_cycles_with(&g, 6, par).unwrap().total)
        });
    }
    group.finish();
}

fn bench_count_triangulation(c: &mut Criterion) {
    let g = random_planar(40, 11, 3 * 40 - 6).unwrap();
    let mut group = c.benchmark_group("count_induced_6cycles/triangulation_40");
    for (name, par) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &par, |b, &par| {
            b.iter(|| count_induced_cycles_with(&g, 6, par).unwrap().total)
        });
    }
    group.finish();
}

fn bench_stream_search(c: &mut Criterion) {
    let graphs: Vec<_> = (0..64)
        .map(|i| random_planar(24, 1000 + i, 40).unwrap())
        .collect();
    let mut group = c.benchmark_group("max_induced_6cycles/stream_64x24");
    group.sample_size(20);
    for (name, par) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &par, |b, &par| {
            b.iter(|| max_induced_6cycles(graphs.iter().cloned(), 24, par).unwrap().empirical_max)
        });
    }
    group.finish();
}

fn bench_planarity(c: &mut Criterion) {
    let (g, _) = blowup_cycle(60, 6).unwrap();
    c.bench_function("is_planar/blowup_60", |b| b.iter(|| is_planar(&g).planar));
}

fn bench_property_suite(c: &mut Criterion) {
    let g = random_planar(24, 3, 50).unwrap();
    let mut group = c.benchmark_group("property_suite/random_24");
    group.sample_size(20);
    group.bench_function("single", |b| b.iter(|| property_suite(&g).unwrap().len()));
    group.finish();
}

criterion_group!(
    benches,
    bench_count_blowup,
    bench_count_triangulation,
    bench_stream_search,
    bench_planarity,
    bench_property_suite
);
criterion_main!(benches);
