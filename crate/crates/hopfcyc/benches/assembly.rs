use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use hopfcyc::complexes::cyclic::{basis_tensors, HChain, HopfCyclic};
use hopfcyc::complexes::lie::LieComplex;
use hopfcyc::hopf::{h1s_cop, hdeg};
use hopfcyc::lie::gl;
use hopfcyc::par;
use hopfcyc::sayd::{schwarzian_4dim, v_n_proj};

fn hochschild_columns(c: &mut Criterion) {
    let s = schwarzian_4dim(Arc::new(h1s_cop(6))).unwrap();
    let cyc = HopfCyclic::new(&s.module);
    let monos: Vec<_> = s.module.hopf.monomials(2).into_iter().filter(|m| hdeg(m) >= 1).collect();
    let xs: Vec<HChain> = basis_tensors(4, &monos, 2);
    let mut g = c.benchmark_group("b on C^2(H1S-cop, V)");
    g.sample_size(10);
    g.bench_function("parallel", |b| b.iter(|| black_box(par::map(&xs, |x| cyc.b(x)))));
    g.bench_function("sequential", |b| b.iter(|| black_box(par::map_seq(&xs, |x| cyc.b(x)))));
    g.finish();
}

fn cocyclic_checks(c: &mut Criterion) {
    let s = schwarzian_4dim(Arc::new(h1s_cop(6))).unwrap();
    let monos: Vec<_> = s.module.hopf.monomials(1).into_iter().filter(|m| hdeg(m) >= 1).collect();
    let xs: Vec<HChain> = basis_tensors(4, &monos, 2);
    let mut g = c.benchmark_group("cocyclic identities, degree 2");
    g.sample_size(10);
    // a fresh operator each time so the memo tables start cold
    g.bench_function("parallel", |b| {
        b.iter(|| {
            let cyc = HopfCyclic::new(&s.module);
            black_box(par::map(&xs, |x| cyc.verify_cocyclic_identities(std::slice::from_ref(x)).is_ok()))
        })
    });
    g.bench_function("sequential", |b| {
        b.iter(|| {
            let cyc = HopfCyclic::new(&s.module);
            black_box(par::map_seq(&xs, |x| cyc.verify_cocyclic_identities(std::slice::from_ref(x)).is_ok()))
        })
    });
    g.finish();
}

fn koszul_assembly(c: &mut Criterion) {
    let g = gl(2);
    let v = v_n_proj(2);
    let lc = LieComplex::new(&g, &v);
    let (even, odd) = lc.periodic_keys();
    let keys: Vec<_> = even.into_iter().chain(odd).collect();
    let mut grp = c.benchmark_group("d_CE + d_K on W(gl(2), V_2)");
    grp.sample_size(10);
    let apply = |k: &(Vec<usize>, usize)| lc.d_total(&hopfcyc::complexes::lie::chain(k.0.clone(), k.1));
    grp.bench_function("parallel", |b| b.iter(|| black_box(par::map(&keys, apply))));
    grp.bench_function("sequential", |b| b.iter(|| black_box(par::map_seq(&keys, apply))));
    grp.bench_function("periodic handle", |b| b.iter(|| black_box(lc.koszul_periodic().unwrap())));
    grp.finish();
}

fn benches(c: &mut Criterion) {
    hochschild_columns(c);
    cocyclic_checks(c);
    koszul_assembly(c);
}

criterion_group!(assembly, benches);
criterion_main!(assembly);
