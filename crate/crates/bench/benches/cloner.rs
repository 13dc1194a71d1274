use std::f64::consts::FRAC_PI_4;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use twopair_bench::optimal_setup;
use twopair_core::cloner::simulated_fidelity;
use twopair_core::{
    angle_grid, build_isometry, numeric_optimize, optimal_coefficients, AncillaAssignment, OptimalSolution,
};

fn closed_form(c: &mut Criterion) {
    let grid = angle_grid(1000);
    c.bench_function("closed form sweep, 1000 angles", |b| {
        b.iter(|| {
            for &phi in &grid {
                black_box(OptimalSolution::at(black_box(phi)).unwrap());
            }
        })
    });
}

fn simulation(c: &mut Criterion) {
    let (ensemble, v) = optimal_setup(FRAC_PI_4);
    c.bench_function("build isometry", |b| {
        let coeffs = optimal_coefficients(FRAC_PI_4).unwrap();
        let anc = AncillaAssignment::default();
        b.iter(|| build_isometry(black_box(&coeffs), &anc).unwrap())
    });
    c.bench_function("simulate four states", |b| {
        b.iter(|| {
            for psi in ensemble.states() {
                black_box(simulated_fidelity(&v, black_box(psi)).unwrap());
            }
        })
    });
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("numeric oracle");
    group.sample_size(10);
    for n in [64, 256] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| numeric_optimize(black_box(0.6), n, 1e-12).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, closed_form, simulation, oracle);
criterion_main!(benches);
