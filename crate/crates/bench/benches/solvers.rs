use criterion::{black_box, criterion_group, criterion_main, Criterion};

use cutdom_core::cutdom::{ct_profile, gamma_ct, DEFAULT_GAMMA_CT_CAP, DEFAULT_PROFILE_CAP};
use cutdom_core::predicates::Mode;
use cutdom_core::{families, io};

fn bench_gamma_ct(c: &mut Criterion) {
    let k7 = families::complete(7).unwrap();
    c.bench_function("gamma_ct K7", |b| {
        b.iter(|| gamma_ct(black_box(&k7), DEFAULT_GAMMA_CT_CAP).unwrap())
    });
    let w8 = families::wheel(8).unwrap();
    c.bench_function("gamma_ct W8", |b| {
        b.iter(|| gamma_ct(black_box(&w8), DEFAULT_GAMMA_CT_CAP).unwrap())
    });
}

fn bench_profile(c: &mut Criterion) {
    let k6 = families::complete(6).unwrap();
    c.bench_function("ct_profile K6 literal", |b| {
        b.iter(|| ct_profile(black_box(&k6), Mode::Literal, DEFAULT_PROFILE_CAP).unwrap())
    });
    let (fig1, _) = families::figure1();
    c.bench_function("ct_profile figure1 both modes", |b| {
        b.iter(|| {
            ct_profile(black_box(&fig1), Mode::Literal, DEFAULT_PROFILE_CAP).unwrap();
            ct_profile(black_box(&fig1), Mode::Strict, DEFAULT_PROFILE_CAP).unwrap()
        })
    });
}

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("all_connected_graphs n=6", |b| {
        b.iter(|| families::all_connected_graphs(black_box(6)).unwrap().len())
    });
    let graphs = families::all_connected_graphs(5).unwrap();
    c.bench_function("graph6 round trip n=5 catalogue", |b| {
        b.iter(|| {
            for g in &graphs {
                let s = io::write_graph6(g).unwrap();
                black_box(io::parse_graph6(&s).unwrap());
            }
        })
    });
}

criterion_group!(benches, bench_gamma_ct, bench_profile, bench_enumeration);
criterion_main!(benches);
