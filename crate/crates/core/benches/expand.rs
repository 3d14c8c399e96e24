use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cylkit::par::{expand_batch, expand_batch_sequential};
use cylkit::suites::{cylindric_inputs, default_types, random_element};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn random_batch() -> Vec<cylkit::AffinePermutation> {
    let mut rng = StdRng::seed_from_u64(11);
    (0..64).map(|i| random_element(5 + i % 2, 8, &mut rng)).collect()
}

fn batches(c: &mut Criterion) {
    let inputs = [
        ("random n=5,6 len 8", random_batch()),
        ("cylindric skew words", cylindric_inputs(&default_types(), 8)),
    ];
    let mut group = c.benchmark_group("expand_batch");
    group.sample_size(10);
    for (label, ws) in &inputs {
        group.bench_with_input(BenchmarkId::new("sequential", label), ws, |b, ws| {
            b.iter(|| expand_batch_sequential(ws))
        });
        group.bench_with_input(BenchmarkId::new("parallel", label), ws, |b, ws| b.iter(|| expand_batch(ws)));
    }
    group.finish();
}

criterion_group!(benches, batches);
criterion_main!(benches);
