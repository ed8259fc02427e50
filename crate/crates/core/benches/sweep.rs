use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use regraph::grid::{spectrum_sweep_sequential, SweepSpec};

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum_sweep");
    for &(n, steps) in &[(4u32, 1_000usize), (50, 1_000), (200, 10_000)] {
        let spec = SweepSpec::new(n, 1.0 / n as f64, 10.0, steps).unwrap();
        let id = format!("n{n}_steps{steps}");
        group.bench_with_input(BenchmarkId::new("sequential", &id), &spec, |b, s| {
            b.iter(|| spectrum_sweep_sequential(s).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", &id), &spec, |b, s| {
            b.iter(|| regraph::grid::spectrum_sweep(s).unwrap())
        });
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = sweep
}
criterion_main!(benches);
