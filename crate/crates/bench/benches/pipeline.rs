use std::hint::black_box;

use arank_core::betti::{ideal_betti, Field};
use arank_core::constructions::{adual_line_family, bt_cone_elements, construct_h2cm};
use arank_core::monomial::VarSet;
use arank_core::poly::{parse_polynomial, GroebnerBasis, MonomialOrder};
use arank_core::simplicial::SimplicialComplex;
use arank_core::verifier::verify_up_to_radical;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn family(c: &mut Criterion) {
    let mut group = c.benchmark_group("line_family");
    for n in [5, 6, 7, 8] {
        let fam = adual_line_family(n).unwrap();
        group.bench_with_input(BenchmarkId::new("construct_h2cm", n), &fam.ideal, |b, i| {
            b.iter(|| construct_h2cm(black_box(i)).unwrap())
        });
        let els = [fam.q1.clone(), fam.q2.clone()];
        group.bench_with_input(BenchmarkId::new("verify", n), &fam.ideal, |b, i| {
            b.iter(|| verify_up_to_radical(black_box(&els), i).unwrap())
        });
    }
    group.finish();
}

fn cone(c: &mut Criterion) {
    let square = SimplicialComplex::from_faces(
        4,
        &[
            VarSet::from_indices([1, 2]),
            VarSet::from_indices([1, 4]),
            VarSet::from_indices([2, 3]),
            VarSet::from_indices([3, 4]),
        ],
    )
    .unwrap();
    let qs = [parse_polynomial("x1*x3", Some(4)).unwrap(), parse_polynomial("x2*x4", Some(4)).unwrap()];
    c.bench_function("bt_cone_elements/square", |b| {
        b.iter(|| bt_cone_elements(black_box(&square), VarSet::singleton(4), &qs).unwrap())
    });
}

fn groebner(c: &mut Criterion) {
    let fam = adual_line_family(7).unwrap();
    let gens = [fam.q1, fam.q2];
    c.bench_function("groebner/family7_degrevlex", |b| {
        b.iter(|| GroebnerBasis::compute(7, black_box(&gens), &MonomialOrder::degrevlex()).unwrap())
    });
    c.bench_function("groebner/family7_tracked", |b| {
        b.iter(|| GroebnerBasis::compute_tracked(7, black_box(&gens), &MonomialOrder::degrevlex()).unwrap())
    });
}

fn betti(c: &mut Criterion) {
    let fam = adual_line_family(8).unwrap();
    c.bench_function("ideal_betti/family8", |b| {
        b.iter(|| ideal_betti(black_box(&fam.ideal), Field::Rationals).unwrap())
    });
}

criterion_group!(benches, family, cone, groebner, betti);
criterion_main!(benches);
