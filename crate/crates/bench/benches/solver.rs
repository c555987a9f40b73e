use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use aquiflow_core::{
    assemble_system, picard_iterate, run_simulation, AquiferParams, FractionalOrder, Grid,
    HeadField, InitialProfile, WeightTables,
};

fn default_profile() -> InitialProfile {
    InitialProfile::Gaussian {
        center: 50.5,
        width: 19.8,
        amplitude: 1.0,
    }
}

fn bench_weights(c: &mut Criterion) {
    let order = FractionalOrder::new(0.5).unwrap();
    let mut group = c.benchmark_group("weight_tables");
    for n in [64usize, 256, 1024] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| {
                black_box(
                    WeightTables::build(&order, 0.05 / n as f64, n, 99.0 / n as f64, n).unwrap(),
                )
            })
        });
    }
    group.finish();
}

fn bench_simulation(c: &mut Criterion) {
    let params = AquiferParams::new(1.0, 0.01).unwrap();
    let order = FractionalOrder::new(0.5).unwrap();
    let profile = default_profile();

    let mut group = c.benchmark_group("run_simulation");
    // memory cost grows with the step count, so sweep the time axis
    for n_steps in [50usize, 100, 200] {
        let grid = Grid::new(1.0, 100.0, 50, 0.05, n_steps).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(n_steps),
            &grid,
            |b, grid| b.iter(|| black_box(run_simulation(&params, grid, &order, &profile).unwrap())),
        );
    }
    group.finish();

    let grid = Grid::new(1.0, 100.0, 50, 0.05, 100).unwrap();
    let weights =
        WeightTables::build(&order, grid.tau(), grid.n_steps(), grid.xi(), grid.n_cells()).unwrap();
    c.bench_function("assemble_system 50x100", |b| {
        b.iter(|| black_box(assemble_system(&params, &grid, &weights).unwrap()))
    });
}

fn bench_picard_sweep(c: &mut Criterion) {
    let params = AquiferParams::new(0.005, 1.0).unwrap();
    let order = FractionalOrder::new(0.47).unwrap();
    let grid = Grid::new(1.0, 2.0, 8, 0.25, 16).unwrap();
    let profile = InitialProfile::Gaussian {
        center: 1.5,
        width: 1.0 / 6.0,
        amplitude: 1.0,
    };
    let mut start = HeadField::new(&grid, &profile);
    for k in 1..=grid.n_steps() {
        for j in 1..grid.n_cells() {
            start.set_value(j, k, start.value(j, 0));
        }
    }
    c.bench_function("picard_iterate 8x16", |b| {
        b.iter(|| black_box(picard_iterate(&start, &params, &grid, &order).unwrap()))
    });
}

criterion_group!(benches, bench_weights, bench_simulation, bench_picard_sweep);
criterion_main!(benches);
