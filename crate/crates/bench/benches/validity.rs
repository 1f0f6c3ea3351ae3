use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use k4c_core::algebra::{algebra_validates, complex_algebra};
use k4c_core::formula::scheme_instance;
use k4c_core::kripke::{frame_valid, DEFAULT_VALUATION_CAP};
use k4c_core::topology::{alexandroff, valid_d};
use k4c_core::Frame;

// Cycle schemes on clusters one larger than their index, where they fail
// only under the cyclic labelling, so most of the search space is visited.
fn frame_validity(c: &mut Criterion) {
    let mut g = c.benchmark_group("frame_valid");
    for n in 1..=3 {
        let phi = scheme_instance("c", n).unwrap();
        let cluster = Frame::cluster(n + 1);
        g.bench_with_input(BenchmarkId::new("c_on_cluster", n), &n, |b, _| {
            b.iter(|| {
                frame_valid(black_box(&cluster), black_box(&phi), DEFAULT_VALUATION_CAP).unwrap()
            })
        });
        let chain = Frame::strict_chain(5);
        g.bench_with_input(BenchmarkId::new("c_on_chain", n), &n, |b, _| {
            b.iter(|| {
                frame_valid(black_box(&chain), black_box(&phi), DEFAULT_VALUATION_CAP).unwrap()
            })
        });
    }
    g.finish();
}

fn other_semantics(c: &mut Criterion) {
    let phi = scheme_instance("c", 2).unwrap();
    let cluster = Frame::cluster(3);
    let space = alexandroff(&cluster).unwrap();
    c.bench_function("valid_d/c2_on_3_cluster", |b| {
        b.iter(|| valid_d(black_box(&space), black_box(&phi), DEFAULT_VALUATION_CAP).unwrap())
    });
    let a = complex_algebra(&cluster).unwrap();
    c.bench_function("algebra_validates/c2_on_3_cluster", |b| {
        b.iter(|| algebra_validates(black_box(&a), black_box(&phi), 1 << 24).unwrap())
    });
}

criterion_group!(benches, frame_validity, other_semantics);
criterion_main!(benches);
