//! Sequential vs rayon grid evaluation.
//!
//! Without the `parallel` feature both arms run the sequential path, which
//! makes the comparison a no-op by construction.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lc_core::engine::{verify_all_with, verify_identity_with, ExecMode, Grid, Suite};
use lc_core::families::FamilyId;
use lc_core::identities::{find, registry};

const MODES: [(&str, ExecMode); 2] = [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)];

fn family_suites(c: &mut Criterion) {
    let grid = Grid { n_max: 6, k_max: 2, samples: 2, seed: 7 };
    let mut g = c.benchmark_group("family_suite");
    g.sample_size(10);
    for fam in [FamilyId::L, FamilyId::C, FamilyId::SW] {
        for (name, mode) in MODES {
            g.bench_with_input(BenchmarkId::new(name, fam.label()), &fam, |b, &fam| {
                b.iter(|| verify_all_with(registry(), Suite::Family(fam), &grid, mode))
            });
        }
    }
    g.finish();
}

fn single_ladder(c: &mut Criterion) {
    let ident = find("L.LnRF").expect("registered");
    let mut g = c.benchmark_group("ladder_grid");
    g.sample_size(10);
    for n_max in [4usize, 8] {
        let grid = Grid { n_max, k_max: 3, samples: 3, seed: 1 };
        for (name, mode) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n_max), &grid, |b, grid| {
                b.iter(|| verify_identity_with(ident, grid, mode))
            });
        }
    }
    g.finish();
}

criterion_group!(benches, family_suites, single_ladder);
criterion_main!(benches);
