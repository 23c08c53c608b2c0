use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use sbath_bench::fixture;
use sbath_core::comparators::{tn_sigma_cf, TnChain};
use sbath_core::sweep::default_omega_grid;
use sbath_core::{full_resolvent_oracle, run_sweep_with, Execution, SweepAxis};

fn single_point(c: &mut Criterion) {
    let p = fixture();
    let net = p.spec.compile().unwrap();
    let out = net.output_position(&p.output_node).unwrap();
    c.bench_function("sigma 6-node", |b| b.iter(|| net.sigma(black_box(6.7)).unwrap()));
    c.bench_function("evaluate 6-node", |b| b.iter(|| net.evaluate(black_box(6.7), out).unwrap()));
    c.bench_function("dense oracle 6-node", |b| {
        b.iter(|| full_resolvent_oracle(&p.spec, black_box(6.7)).unwrap())
    });
    let chain = TnChain::new(0.3, vec![0.1; 20], vec![0.4; 19]).with_eta(1e-3);
    c.bench_function("continued fraction depth 20", |b| {
        b.iter(|| tn_sigma_cf(&chain, black_box(0.2)).unwrap())
    });
}

fn full_sweep(c: &mut Criterion) {
    let p = fixture();
    let axis = SweepAxis::pump_default();
    let grid = default_omega_grid();
    let mut g = c.benchmark_group("pump sweep 121x601");
    g.sample_size(10);
    g.bench_function("serial", |b| {
        b.iter(|| run_sweep_with(&p, &axis, &grid, Execution::Serial).unwrap())
    });
    g.bench_function("parallel", |b| {
        b.iter(|| run_sweep_with(&p, &axis, &grid, Execution::Parallel).unwrap())
    });
    g.finish();
}

criterion_group!(benches, single_point, full_sweep);
criterion_main!(benches);
