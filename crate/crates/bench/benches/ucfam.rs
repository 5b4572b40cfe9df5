use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use ucfam_bench::{boolean_lattice, largest_pure};
use ucfam_core::{
    canonical_form, extract_hyperisomorphism, find_isomorphisms, union_closed_masks, Method,
};

fn isomorphisms(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_isomorphisms");
    for n in [3, 4] {
        let f = boolean_lattice(n);
        group.bench_with_input(BenchmarkId::new("boolean", n), &f, |b, f| {
            b.iter(|| find_isomorphisms(black_box(f), black_box(f), None))
        });
    }
    let pure = largest_pure(4, 8);
    group.bench_function("largest_pure_4_first", |b| {
        b.iter(|| {
            for f in &pure {
                black_box(find_isomorphisms(f, f, Some(1)));
            }
        })
    });
    group.finish();
}

fn extraction(c: &mut Criterion) {
    let maps: Vec<_> = largest_pure(4, 8)
        .iter()
        .flat_map(|f| find_isomorphisms(f, f, None))
        .collect();
    c.bench_function("extract_hyperisomorphism", |b| {
        b.iter(|| {
            for h in &maps {
                black_box(extract_hyperisomorphism(h).unwrap());
            }
        })
    });
}

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for n in [4, 6] {
        let f = boolean_lattice(n);
        group.bench_with_input(BenchmarkId::new("boolean", n), &f, |b, f| {
            b.iter(|| canonical_form(black_box(f)).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for method in [Method::Direct, Method::Generator] {
        group.bench_function(format!("{method:?}_4"), |b| {
            b.iter(|| union_closed_masks(4, false, method).unwrap().count())
        });
    }
    group.bench_function("Generator_5", |b| {
        b.iter(|| {
            union_closed_masks(5, false, Method::Generator)
                .unwrap()
                .count()
        })
    });
    group.finish();
}

criterion_group!(benches, isomorphisms, extraction, canonical, enumeration);
criterion_main!(benches);
