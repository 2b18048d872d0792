use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use gti_bench::cgt_spec;
use gti_core::decode::{algorithm1_decode, comp_decode, make_single_isolation_pair};
use gti_core::matrix::{min_gap_order, MeasurementMatrix, OrderingMode};
use gti_core::model::sample_ground_truth;
use gti_core::oracle::run_tests;

fn bench_tensor_product(c: &mut Criterion) {
    let outer = MeasurementMatrix::isolation(1024, 4, 32, 1);
    let inner = MeasurementMatrix::bit_test(1024);
    c.bench_function("tensor_product_32x11_n1024", |b| {
        b.iter(|| black_box(&outer).tensor_product(black_box(&inner)).unwrap())
    });
}

fn bench_run_tests(c: &mut Criterion) {
    let spec = cgt_spec(1024, 4);
    let truth = sample_ground_truth(&spec, 3).unwrap();
    let design = MeasurementMatrix::bernoulli(352, 1024, 0.25, 5).unwrap();
    c.bench_function("run_tests_352x1024", |b| {
        b.iter(|| run_tests(black_box(&design), &truth, &spec).unwrap())
    });
}

fn bench_block_decode(c: &mut Criterion) {
    let spec = cgt_spec(1024, 4);
    let truth = sample_ground_truth(&spec, 9).unwrap();
    let pair = make_single_isolation_pair(1024, 4, 11);
    let y = run_tests(&pair.measurement_matrix(), &truth, &spec).unwrap();
    c.bench_function("algorithm1_decode_n1024_m0_4", |b| {
        b.iter(|| algorithm1_decode(black_box(&y), &pair).unwrap())
    });
}

fn bench_comp_decode(c: &mut Criterion) {
    let spec = cgt_spec(1024, 4);
    let truth = sample_ground_truth(&spec, 2).unwrap();
    let design = MeasurementMatrix::bernoulli(400, 1024, 0.2, 8).unwrap();
    let y = run_tests(&design, &truth, &spec).unwrap();
    c.bench_function("comp_decode_400x1024", |b| {
        b.iter(|| comp_decode(black_box(&y), &design).unwrap())
    });
}

fn bench_row_ordering(c: &mut Criterion) {
    let small = MeasurementMatrix::bernoulli(12, 64, 0.4, 4).unwrap();
    c.bench_function("min_gap_order_exact_t12", |b| {
        b.iter(|| min_gap_order(black_box(&small), OrderingMode::Exact).unwrap())
    });
    let large = MeasurementMatrix::bernoulli(64, 256, 0.4, 6).unwrap();
    c.bench_function("min_gap_order_greedy_t64", |b| {
        b.iter(|| min_gap_order(black_box(&large), OrderingMode::Greedy).unwrap())
    });
}

criterion_group!(
    benches,
    bench_tensor_product,
    bench_run_tests,
    bench_block_decode,
    bench_comp_decode,
    bench_row_ordering
);
criterion_main!(benches);
