//! Parallel-versus-sequential comparison on the two hot kernels: spectral
//! scans over enumerated classes and the randomized interlacing sweep.
//!
//! `cargo bench` runs with rayon dispatch (default features);
//! `cargo bench --no-default-features` measures the same entry points in
//! the sequential build. The `*_seq` targets below always run the plain
//! iterator path, so a default-features run shows both side by side.

use criterion::{criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qdom::domination;
use qdom::enumerate::{enumerate_connected, ClassFilter};
use qdom::graph::Graph;
use qdom::parallel::{par_map, seq_map};
use qdom::random::random_connected;
use qdom::spectral;

fn class_graphs(n: usize) -> Vec<Graph> {
    enumerate_connected(n, &ClassFilter::default())
        .expect("within bounds")
        .into_iter()
        .map(|cg| cg.graph)
        .collect()
}

fn bench_spectral_scan(c: &mut Criterion) {
    let graphs = class_graphs(7);
    let mut group = c.benchmark_group("least_eigenpair_over_classes_n7");
    group.bench_function("dispatched", |b| {
        b.iter(|| {
            par_map(&graphs, |g| {
                spectral::least_q_eigenpair(g).expect("connected").value
            })
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            seq_map(&graphs, |g| {
                spectral::least_q_eigenpair(g).expect("connected").value
            })
        })
    });
    group.finish();
}

fn bench_domination_scan(c: &mut Criterion) {
    let graphs = class_graphs(7);
    let mut group = c.benchmark_group("domination_over_classes_n7");
    group.bench_function("dispatched", |b| {
        b.iter(|| par_map(&graphs, |g| domination::gamma(g).expect("in bounds")))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| seq_map(&graphs, |g| domination::gamma(g).expect("in bounds")))
    });
    group.finish();
}

fn bench_interlacing_sweep(c: &mut Criterion) {
    let trials: Vec<u64> = (0..200).collect();
    let run = |t: &u64| {
        let mut rng = ChaCha8Rng::seed_from_u64(*t);
        let g = random_connected(2..=12, &mut rng);
        let edges = g.edges();
        let e = edges[rng.gen_range(0..edges.len())];
        spectral::interlacing_check(&g, e)
            .expect("edge present")
            .passed()
    };
    let mut group = c.benchmark_group("interlacing_sweep_200");
    group.bench_function("dispatched", |b| b.iter(|| par_map(&trials, run)));
    group.bench_function("sequential", |b| b.iter(|| seq_map(&trials, run)));
    group.finish();
}

criterion_group!(
    benches,
    bench_spectral_scan,
    bench_domination_scan,
    bench_interlacing_sweep
);
criterion_main!(benches);
