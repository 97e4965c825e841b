use caprng_bench::standard_pair;
use caprng_core::bitlinalg::BitVector;
use caprng_core::ca::RuleVector;
use criterion::{black_box, criterion_group, criterion_main, Criterion, Throughput};

fn bench_step(c: &mut Criterion) {
    let mut group = c.benchmark_group("ca_step");
    for k in [32usize, 64, 128] {
        let rv = RuleVector::with_rule150_at(k, &[0]).unwrap();
        let mut config = BitVector::unit(k, k / 2).unwrap();
        group.throughput(Throughput::Elements(1));
        group.bench_function(format!("k{k}"), |b| {
            b.iter(|| {
                rv.step_in_place(black_box(&mut config)).unwrap();
            })
        });
    }
    group.finish();
}

fn bench_next(c: &mut Criterion) {
    let mut group = c.benchmark_group("combined_next");
    for (k1, k2, s) in [(31, 32, 1), (31, 32, 7), (59, 64, 10), (63, 80, 10)] {
        let spec = standard_pair(k1, k2, s);
        let mut state = spec.seed(&spec.middle_bit_seeds()).unwrap();
        group.throughput(Throughput::Elements(1));
        group.bench_function(format!("{k1}_{k2}_s{s}"), |b| {
            b.iter(|| black_box(spec.next(&mut state)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_step, bench_next);
criterion_main!(benches);
