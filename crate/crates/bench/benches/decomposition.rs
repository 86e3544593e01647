use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use msr_core::bargmann::verify_npc;
use msr_core::geodesic::{decompose_curve, geodesic_curve, GeodesicSpec};
use msr_core::{decompose, reconstruct, PureState};
use num_complex::Complex64;

fn fixed_state(dim: usize) -> PureState {
    let amps = (0..dim).map(|k| Complex64::from_polar(1.0 + k as f64 * 0.3, 0.7 * k as f64)).collect();
    PureState::normalized(amps).unwrap()
}

fn single_state(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    for dim in [3, 6, 10] {
        let psi = fixed_state(dim);
        group.bench_with_input(BenchmarkId::from_parameter(dim), &psi, |b, psi| b.iter(|| decompose(black_box(psi))));
    }
    group.finish();
    let stars = decompose(&fixed_state(10)).unwrap();
    c.bench_function("reconstruct/10", |b| b.iter(|| reconstruct(black_box(&stars))));
}

fn curves(c: &mut Criterion) {
    let spec = GeodesicSpec::canonical(5, 1.0, 401).unwrap();
    let curve = geodesic_curve(&spec).unwrap();
    c.bench_function("decompose_curve/5x401", |b| b.iter(|| decompose_curve(black_box(&curve))));
    c.bench_function("verify_npc/1e4", |b| b.iter(|| verify_npc(black_box(&curve), 10_000, 7)));
}

criterion_group!(benches, single_state, curves);
criterion_main!(benches);
