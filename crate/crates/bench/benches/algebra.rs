use criterion::{criterion_group, criterion_main, Criterion};
use min3gen::dihedral_algebra::{audit_type, AlgebraType, DEFAULT_SEED};
use min3gen::shape_enum::shape_report;

fn dihedral(c: &mut Criterion) {
    let mut group = c.benchmark_group("dihedral_audit");
    group.sample_size(10);
    for ty in [AlgebraType::T3C, AlgebraType::T6A] {
        group.bench_function(ty.to_string(), |b| b.iter(|| audit_type(ty, DEFAULT_SEED).pass()));
    }
    group.finish();
}

fn shapes(c: &mut Criterion) {
    let mut group = c.benchmark_group("shape_report");
    group.sample_size(10);
    for (name, k) in [("S4", 3), ("3^(1+2):2", 3), ("A5", 1)] {
        group.bench_function(format!("{name}/{k}"), |b| b.iter(|| shape_report(name, k).unwrap().systems.len()));
    }
    group.finish();
}

criterion_group!(benches, dihedral, shapes);
criterion_main!(benches);
