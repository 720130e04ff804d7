use criterion::{black_box, criterion_group, criterion_main, Criterion};
use spacecross::crossing::{count_line_crossings, CountOptions};
use spacecross::generate::stacked_hopf_pairs;
use spacecross::geom::transversal_exists_segments;
use spacecross::stair::count_candidate_quadruples;
use spacecross::topology::linking_number;
use spacecross_bench::{around_axis, lifted_k6s, segment_quadruples};

fn transversal(c: &mut Criterion) {
    let quads = segment_quadruples(64, 1);
    c.bench_function("transversal/random64", |b| {
        b.iter(|| {
            for q in &quads {
                black_box(transversal_exists_segments(q).unwrap());
            }
        })
    });
    let axis = around_axis();
    c.bench_function("transversal/around_axis", |b| {
        b.iter(|| black_box(transversal_exists_segments(&axis).unwrap()))
    });
}

fn linking(c: &mut Criterion) {
    let cycles = stacked_hopf_pairs(1);
    c.bench_function("linking/hopf", |b| {
        b.iter(|| black_box(linking_number(&cycles[0], &cycles[1]).unwrap()))
    });
}

fn counting(c: &mut Criterion) {
    c.bench_function("stair/candidates_n64_m256", |b| {
        b.iter(|| black_box(count_candidate_quadruples(64, 256).unwrap()))
    });
    let d = lifted_k6s(1, 2);
    let opts = CountOptions::default();
    let mut g = c.benchmark_group("count");
    g.sample_size(10);
    g.bench_function("lifted_k6_sub2", |b| b.iter(|| black_box(count_line_crossings(&d, 4, &opts).unwrap())));
    g.finish();
}

criterion_group!(benches, transversal, linking, counting);
criterion_main!(benches);
