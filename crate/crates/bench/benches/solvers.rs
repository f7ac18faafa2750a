use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use isopoly_core::optimize::{lap_max, psi_n_max, psi_nn_max};
use isopoly_core::polytope::{graph_complete, is_edge, phi_vertices};
use isopoly_core::{sample, Caps, Method, SolveOptions};

fn psi_methods(c: &mut Criterion) {
    let mut group = c.benchmark_group("psi_n_max");
    group.sample_size(10);
    for n in [5, 6, 7] {
        let w = sample::integer_tensor(&mut sample::rng(n as u64), n, -9, 9);
        for method in [Method::Exhaustive, Method::BranchAndBound] {
            let opts = SolveOptions::with_method(method);
            group.bench_with_input(BenchmarkId::new(method.to_string(), n), &w, |b, w| {
                b.iter(|| psi_n_max(w, &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn psinn(c: &mut Criterion) {
    let mut group = c.benchmark_group("psi_nn_max");
    group.sample_size(10);
    for n in [4, 5] {
        let w = sample::integer_tensor(&mut sample::rng(100 + n as u64), n, -9, 9);
        let opts = SolveOptions::default();
        group.bench_with_input(BenchmarkId::from_parameter(n), &w, |b, w| b.iter(|| psi_nn_max(w, &opts).unwrap()));
    }
    group.finish();
}

fn lap(c: &mut Criterion) {
    let mut group = c.benchmark_group("lap_max");
    for n in [6, 12, 24] {
        let m = sample::integer_matrix(&mut sample::rng(200 + n as u64), n, -50, 50);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| lap_max(m)));
    }
    group.finish();
}

fn adjacency(c: &mut Criterion) {
    let caps = Caps::default();
    let phi4 = phi_vertices(4, &caps).unwrap();
    let mut group = c.benchmark_group("phi_adjacency");
    group.sample_size(10);
    group.bench_function("is_edge/phi_4", |b| b.iter(|| is_edge(&phi4, 0, 23).unwrap()));
    group.bench_function("graph_complete/phi_4", |b| b.iter(|| graph_complete(&phi4, &caps, 1).unwrap()));
    group.finish();
}

criterion_group!(benches, psi_methods, psinn, lap, adjacency);
criterion_main!(benches);
