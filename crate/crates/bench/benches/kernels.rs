use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use dioph_bench::{coordinate_family, four_lines_config, plane_point};
use dioph_core::beta::beta_truncated;
use dioph_core::experiments::{sample_points, scan_inequality};
use dioph_core::filtration::{build_profile, common_adapted_basis};
use dioph_core::heights::{proximity, ProjectivePoint};
use dioph_core::surface::{
    beta_surface_truncated, four_lines_divisor, four_lines_polarization, seshadri,
};

fn beta(c: &mut Criterion) {
    let y = plane_point();
    c.bench_function("beta_truncated point N=6", |b| {
        b.iter(|| beta_truncated(black_box(&y), 1, 6).unwrap())
    });
}

fn filtration(c: &mut Criterion) {
    let (ys, t) = coordinate_family();
    c.bench_function("build_profile P3 degree 4", |b| {
        b.iter(|| build_profile(black_box(&ys), &t, 4).unwrap())
    });
    let p = build_profile(&ys, &t, 3).unwrap();
    let u = dioph_core::monomial_order::WeightVector::from_ints(&[0, 1, 2]).unwrap();
    let q = build_profile(&ys, &u, 3).unwrap();
    c.bench_function("common_adapted_basis P3 degree 3", |b| {
        b.iter(|| common_adapted_basis(black_box(&p), &q).unwrap())
    });
}

fn surface(c: &mut Criterion) {
    let a = four_lines_polarization(3);
    let d = four_lines_divisor(1);
    c.bench_function("seshadri four lines", |b| {
        b.iter(|| seshadri(black_box(&a), &d).unwrap())
    });
    c.bench_function("beta_surface_truncated N=12", |b| {
        b.iter(|| beta_surface_truncated(black_box(&a), &d, 12).unwrap())
    });
}

fn heights(c: &mut Criterion) {
    let cfg = four_lines_config();
    let p: ProjectivePoint = "360:-1001:77".parse().unwrap();
    c.bench_function("proximity one line", |b| {
        b.iter(|| proximity(&cfg.subschemes[0], &cfg.places, black_box(&p)).unwrap())
    });
    let points = sample_points(2, 8);
    c.bench_function("scan four lines bound 8", |b| {
        b.iter(|| scan_inequality(&cfg, black_box(&points), false).unwrap())
    });
}

criterion_group!(benches, beta, filtration, surface, heights);
criterion_main!(benches);
