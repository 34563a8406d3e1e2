use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use min3gen::fpgroup::{coset_enumeration, Strategy, DEFAULT_MAX_COSETS};
use min3gen_bench::{presentation, PRESENTATIONS};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("coset_enumeration");
    group.sample_size(10);
    for &(label, spec) in PRESENTATIONS {
        let p = presentation(spec);
        for strategy in [Strategy::Hlt, Strategy::Felsch] {
            group.bench_with_input(BenchmarkId::new(format!("{strategy:?}"), label), &p, |b, p| {
                b.iter(|| coset_enumeration(p, &[], DEFAULT_MAX_COSETS, strategy).unwrap().n_cosets())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, enumeration);
criterion_main!(benches);
