use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use phfe_bench::sample_phfes;
use phfe_core::{comprehensive_entropy, entropy_distance, EntropyConfig, PsiFunction};

fn entropy(c: &mut Criterion) {
    let cfg = EntropyConfig::default();
    let mut group = c.benchmark_group("comprehensive_entropy");
    for len in [1, 4, 16, 64] {
        let inputs = sample_phfes(1, 32, len);
        group.bench_with_input(BenchmarkId::from_parameter(len), &inputs, |b, xs| {
            b.iter(|| xs.iter().map(|x| comprehensive_entropy(black_box(x), &cfg)).sum::<f64>())
        });
    }
    group.finish();
}

fn distance(c: &mut Criterion) {
    let cfg = EntropyConfig::default();
    let mut group = c.benchmark_group("entropy_distance");
    for len in [1, 3, 6] {
        let xs = sample_phfes(2, 16, len);
        group.bench_with_input(BenchmarkId::from_parameter(len), &xs, |b, xs| {
            b.iter(|| {
                xs.windows(2)
                    .map(|w| entropy_distance(black_box(&w[0]), &w[1], PsiFunction::Identity, &cfg))
                    .sum::<f64>()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, entropy, distance);
criterion_main!(benches);
