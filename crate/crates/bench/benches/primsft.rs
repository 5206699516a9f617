use criterion::{criterion_group, criterion_main, Criterion};
use primsft::inverse_limit::{gamma_inv, gamma_pow, EvpPoint};
use primsft::quasi_orbit::{quasi_orbit_space, Bounds};
use primsft::rep_oracle::{build_cycle_rep, kernels_equal, williams_check};
use primsft::Angle;
use primsft_bench::{full_shift, golden_mean, mixed_permutation, twelfth_roots};

fn bench_cycles(c: &mut Criterion) {
    let full = full_shift();
    let gm = golden_mean();
    c.bench_function("enumerate_cycles full2 len 10", |b| {
        b.iter(|| full.enumerate_cycles(10))
    });
    c.bench_function("enumerate_cycles golden len 12", |b| {
        b.iter(|| gm.enumerate_cycles(12))
    });
    c.bench_function("count_periodic_points golden n 40", |b| {
        b.iter(|| gm.count_periodic_points(40).unwrap())
    });
}

fn bench_gamma(c: &mut Criterion) {
    let full = full_shift();
    let x = EvpPoint::parse_literal(&full, "001^inf.0110.01^inf@0").unwrap();
    c.bench_function("gamma_inv step", |b| b.iter(|| gamma_inv(&full, &x)));
    c.bench_function("gamma_pow 10^6", |b| {
        b.iter(|| gamma_pow(&full, &x, 1_000_000))
    });
    c.bench_function("parse literal", |b| {
        b.iter(|| EvpPoint::parse_literal(&full, "001^inf.0110.01^inf@7[paths]").unwrap())
    });
}

fn bench_quasi_orbits(c: &mut Criterion) {
    let full = full_shift();
    c.bench_function("quasi_orbit_space full2 (3,2)", |b| {
        b.iter(|| quasi_orbit_space(&full, Bounds::new(3, 2)).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let perm = mixed_permutation();
    let cycle = perm.enumerate_cycles(6).pop().unwrap();
    let m1 = build_cycle_rep(&perm, &cycle, Angle::rational(1, 12).unwrap()).unwrap();
    let m2 = build_cycle_rep(&perm, &cycle, Angle::rational(5, 12).unwrap()).unwrap();
    c.bench_function("kernel scan 3-cycle", |b| {
        b.iter(|| kernels_equal(&m1, &m2, 6).unwrap())
    });
    let roots = twelfth_roots();
    let mut group = c.benchmark_group("williams");
    group.sample_size(10);
    group.bench_function("williams_check (1)(2)(3) roots:12", |b| {
        b.iter(|| williams_check(&perm, &roots).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_cycles,
    bench_gamma,
    bench_quasi_orbits,
    bench_oracle
);
criterion_main!(benches);
