use caprng_bench::standard_pair;
use caprng_core::equidist::me_verdict;
use caprng_core::equidist::{build_test_matrix, EquidistQuery, RankMode};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn bench_rank(c: &mut Criterion) {
    let spec = standard_pair(31, 32, 7);
    let m = build_test_matrix(&spec, EquidistQuery { t: 2, l: 31 }, 4096).unwrap();
    c.bench_function("rank_gf2_62x63", |b| b.iter(|| black_box(m.rank())));
    c.bench_function("rank_rational_62x63", |b| {
        b.iter(|| black_box(m.rational_rank()))
    });
}

fn bench_verdict(c: &mut Criterion) {
    let spec = standard_pair(31, 32, 7);
    let mut group = c.benchmark_group("me_verdict_31_32_s7");
    group.sample_size(10);
    group.bench_function("rational", |b| {
        b.iter(|| black_box(me_verdict(&spec, 32, RankMode::Rational).unwrap().total_gap))
    });
    group.bench_function("gf2", |b| {
        b.iter(|| black_box(me_verdict(&spec, 32, RankMode::Gf2).unwrap().total_gap))
    });
    group.finish();
}

criterion_group!(benches, bench_rank, bench_verdict);
criterion_main!(benches);
