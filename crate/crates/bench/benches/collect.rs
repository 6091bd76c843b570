use braidnil::{BraidWord, NilElement};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_word(n: usize, len: usize, rng: &mut ChaCha8Rng) -> BraidWord {
    let pairs: Vec<(usize, i64)> = (0..len)
        .map(|_| (rng.gen_range(1..n), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    BraidWord::from_pairs(n, &pairs).unwrap()
}

fn bench_collect(c: &mut Criterion) {
    let mut group = c.benchmark_group("collect");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [5usize, 8, 12] {
        let w = random_word(n, 200, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(n), &w, |b, w| {
            b.iter(|| NilElement::collect(black_box(w)).unwrap())
        });
    }
    group.finish();
}

fn bench_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("mul");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [5usize, 8, 12] {
        let x = NilElement::collect(&random_word(n, 100, &mut rng)).unwrap();
        let y = NilElement::collect(&random_word(n, 100, &mut rng)).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &(x, y), |b, (x, y)| {
            b.iter(|| black_box(x).mul(black_box(y)).unwrap())
        });
    }
    group.finish();
}

fn bench_delta_power(c: &mut Criterion) {
    c.bench_function("delta7_pow7", |b| {
        let d = NilElement::collect(&BraidWord::delta_word(0, 7, 7).unwrap()).unwrap();
        b.iter(|| black_box(&d).pow(7).unwrap())
    });
}

criterion_group!(benches, bench_collect, bench_mul, bench_delta_power);
criterion_main!(benches);
