//! Rayon path against the sequential fallback on the data-parallel kernels.

use std::hint::black_box;

use autorbit_core::autgrp::{automorphism_group, DEFAULT_MAX_NODES};
use autorbit_core::multinomial::{pmf_bound_check, PmfMode};
use autorbit_core::stypes::simple_with_aut;
use autorbit_core::wreath::WreathGroup;
use autorbit_core::{catalog, par};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, bool); 2] = [("parallel", true), ("sequential", false)];

fn wreath_classes(c: &mut Criterion) {
    let aut = simple_with_aut("alt5").unwrap().aut;
    let wr = WreathGroup::full(&aut, 2).unwrap();
    let mut group = c.benchmark_group("wreath_classes_aut_alt5_wr_sym2");
    group.sample_size(10);
    for (name, on) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_parallel(on);
            b.iter(|| black_box(wr.conjugacy_classes_brute().unwrap()))
        });
    }
    group.finish();
}

fn automorphism_search(c: &mut Criterion) {
    let g = catalog::by_name("psl(2,8)").unwrap();
    let mut group = c.benchmark_group("automorphism_search_psl2_8");
    group.sample_size(10);
    for (name, on) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_parallel(on);
            b.iter(|| black_box(automorphism_group(&g, DEFAULT_MAX_NODES).unwrap().order()))
        });
    }
    group.finish();
}

fn pmf_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("pmf_sweep");
    group.sample_size(10);
    let mode = PmfMode::Exhaustive { max_den: 5, max_k: 4, max_n: 6 };
    for (name, on) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_parallel(on);
            b.iter(|| black_box(pmf_bound_check(mode).checked))
        });
    }
    group.finish();
}

criterion_group!(benches, wreath_classes, automorphism_search, pmf_sweep);
criterion_main!(benches);
