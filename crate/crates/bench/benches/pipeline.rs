//! End-to-end benchmarks for the hot paths: classification, nerve
//! construction, flat enumeration, Smith normal form, and the audits.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use coxkit_core::classify::{classify, is_quasi_lanner, TemplateTable};
use coxkit_core::homology::{reduced_homology, smith_normal_form, IntegerMatrix};
use coxkit_core::nerve::{build_nerve, enumerate_affine_flats, DEFAULT_CAP};
use coxkit_core::polytope::PolytopeModel;
use coxkit_core::presets;
use coxkit_core::weights;

fn bench_classify(c: &mut Criterion) {
    let table = TemplateTable::global();
    let entries: Vec<_> = table
        .quasi_lanner()
        .iter()
        .map(|e| e.matrix.to_diagram())
        .collect();
    c.bench_function("classify quasi-Lanner catalogue", |b| {
        b.iter(|| {
            for d in &entries {
                black_box(classify(black_box(d)));
            }
        })
    });
    let e10 = entries.iter().find(|d| d.vertex_count() == 10).unwrap();
    c.bench_function("is_quasi_lanner rank 10", |b| {
        b.iter(|| is_quasi_lanner(black_box(e10)).unwrap())
    });
}

fn bench_nerve(c: &mut Criterion) {
    let m = presets::rac_cube(8);
    c.bench_function("build_nerve rac_cube(8)", |b| {
        b.iter(|| build_nerve(black_box(&m), DEFAULT_CAP).unwrap())
    });
    let pv = presets::pv_example();
    c.bench_function("enumerate_affine_flats pv_example", |b| {
        b.iter(|| enumerate_affine_flats(black_box(&pv), DEFAULT_CAP).unwrap())
    });
}

fn bench_homology(c: &mut Criterion) {
    let complex = presets::icosahedron_complex();
    c.bench_function("reduced_homology icosahedron", |b| {
        b.iter(|| reduced_homology(black_box(&complex)).unwrap())
    });
    let mut state = 0x2545f4914f6cdd1du64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % 19) as i64 - 9
    };
    let rows: Vec<Vec<i64>> = (0..12).map(|_| (0..12).map(|_| next()).collect()).collect();
    let m = IntegerMatrix::from_rows(&rows);
    c.bench_function("smith_normal_form 12x12", |b| {
        b.iter(|| smith_normal_form(black_box(&m)))
    });
}

fn bench_audits(c: &mut Criterion) {
    let nerve = build_nerve(&presets::ideal_octahedron(), DEFAULT_CAP).unwrap();
    let model = PolytopeModel::build(&nerve, 3).unwrap();
    c.bench_function("audit_section4 ideal octahedron", |b| {
        b.iter(|| black_box(&model).audit_section4())
    });
    c.bench_function("good_face_audit ideal octahedron", |b| {
        b.iter(|| weights::good_face_audit(black_box(&model)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_classify,
    bench_nerve,
    bench_homology,
    bench_audits
);
criterion_main!(benches);
