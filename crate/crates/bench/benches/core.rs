use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use eliahou_core::{
    classify, closed_form_e, construct, run_search, ExplorerState, FamilyParams, Fraction, IntSet, SearchConfig,
    Semigroup,
};

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    for c_max in [72, 90] {
        g.bench_function(format!("cmax {c_max}"), |b| b.iter(|| run_search(&SearchConfig::new(black_box(c_max))).unwrap()));
    }
    g.finish();
}

fn transitions(c: &mut Criterion) {
    let root = ExplorerState::<4>::init_root(14, 22).unwrap();
    c.bench_function("explorer walk to 56", |b| {
        b.iter(|| {
            let mut st = black_box(root);
            st.add_left_gen();
            while st.c() < 56 {
                if st.c_is_double() {
                    st.add_non_gen();
                } else {
                    st.add_gap();
                }
            }
            st.eliahou_test()
        })
    });
}

fn classification(c: &mut Criterion) {
    let s: Semigroup = "105,176,181,182;806".parse().unwrap();
    c.bench_function("classify 105,176,181,182;806", |b| b.iter(|| classify(black_box(&s), 5).unwrap()));
    c.bench_function("numbers 105,176,181,182;806", |b| b.iter(|| black_box(&s).numbers()));
}

fn closed_forms(c: &mut Criterion) {
    let p = FamilyParams::new(5, Fraction::new(7, 4).unwrap(), IntSet::from([0, 1, 6]), 7, 105).unwrap();
    c.bench_function("closed form E", |b| b.iter(|| closed_form_e(black_box(&p), 0).unwrap()));
    c.bench_function("construct", |b| b.iter(|| construct(black_box(&p)).unwrap()));
}

criterion_group!(benches, search, transitions, classification, closed_forms);
criterion_main!(benches);
