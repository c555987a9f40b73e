//! Field serialization: CSV (`r,t,h`, one row per node and level, k-major)
//! and JSON (`grid` / `params` / `field` with the field as nested arrays,
//! field[k][j]). All floats print in the shortest representation that
//! round-trips, so re-parsing an output recovers the bits.

use std::io::{Read, Write};

use aquiflow_core::HeadField;
use serde_json::json;

use crate::config::RunConfig;

pub fn write_csv(out: impl Write, field: &HeadField) -> csv::Result<()> {
    let grid = field.grid();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["r", "t", "h"])?;
    for k in 0..=grid.n_steps() {
        for j in 0..=grid.n_cells() {
            w.write_record([
                format!("{}", grid.r(j)),
                format!("{}", grid.t(k)),
                format!("{}", field.value(j, k)),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Rows of an `r,t,h` CSV stream, in file order.
pub fn read_csv(input: impl Read) -> Result<Vec<(f64, f64, f64)>, String> {
    let mut r = csv::Reader::from_reader(input);
    let headers = r.headers().map_err(|e| e.to_string())?;
    if headers != vec!["r", "t", "h"] {
        return Err(format!("unexpected header {headers:?}"));
    }
    let mut rows = Vec::new();
    for record in r.records() {
        let record = record.map_err(|e| e.to_string())?;
        let mut nums = record
            .iter()
            .map(|s| s.parse::<f64>().map_err(|e| format!("bad number `{s}`: {e}")));
        let (a, b, c) = (
            nums.next().ok_or("short row")??,
            nums.next().ok_or("short row")??,
            nums.next().ok_or("short row")??,
        );
        rows.push((a, b, c));
    }
    Ok(rows)
}

pub fn write_json(mut out: impl Write, field: &HeadField, config: &RunConfig) -> std::io::Result<()> {
    let grid = field.grid();
    let levels: Vec<Vec<f64>> = (0..=grid.n_steps())
        .map(|k| (0..=grid.n_cells()).map(|j| field.value(j, k)).collect())
        .collect();
    let doc = json!({
        "grid": {
            "r_min": grid.r_min(),
            "r_max": grid.r_max(),
            "n_cells": grid.n_cells(),
            "n_steps": grid.n_steps(),
            "t_max": grid.t_max(),
        },
        "params": {
            "alpha": config.alpha,
            "transmissivity": config.transmissivity,
            "storativity": config.storativity,
        },
        "field": levels,
    });
    serde_json::to_writer_pretty(&mut out, &doc)?;
    out.write_all(b"\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use aquiflow_core::{run_simulation, InitialProfile};

    fn small_field() -> (RunConfig, HeadField) {
        let cfg = RunConfig {
            r_max: 2.0,
            n_cells: 4,
            n_steps: 3,
            initial_profile: InitialProfile::Gaussian {
                center: 1.5,
                width: 0.4,
                amplitude: 1.0,
            },
            ..RunConfig::default()
        };
        let field = run_simulation(&cfg.params(), &cfg.grid(), &cfg.order(), &cfg.initial_profile)
            .unwrap();
        (cfg, field)
    }

    #[test]
    fn csv_round_trips_bit_exactly() {
        let (_, field) = small_field();
        let mut buf = Vec::new();
        write_csv(&mut buf, &field).unwrap();
        let rows = read_csv(buf.as_slice()).unwrap();
        let grid = field.grid();
        assert_eq!(rows.len(), (grid.n_cells() + 1) * (grid.n_steps() + 1));
        let mut it = rows.iter();
        for k in 0..=grid.n_steps() {
            for j in 0..=grid.n_cells() {
                let &(r, t, h) = it.next().unwrap();
                assert_eq!(r, grid.r(j));
                assert_eq!(t, grid.t(k));
                assert_eq!(h, field.value(j, k));
            }
        }
    }

    #[test]
    fn csv_is_k_major_with_header() {
        let (_, field) = small_field();
        let mut buf = Vec::new();
        write_csv(&mut buf, &field).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("r,t,h"));
        // first block is level k = 0: t stays at 0 across n_cells + 1 rows
        for _ in 0..=field.grid().n_cells() {
            let line = lines.next().unwrap();
            assert_eq!(line.split(',').nth(1), Some("0"));
        }
    }

    #[test]
    fn json_has_grid_params_field_shape() {
        let (cfg, field) = small_field();
        let mut buf = Vec::new();
        write_json(&mut buf, &field, &cfg).unwrap();
        let doc: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(doc["grid"]["n_cells"], 4);
        assert_eq!(doc["params"]["alpha"], 0.5);
        let levels = doc["field"].as_array().unwrap();
        assert_eq!(levels.len(), field.grid().n_steps() + 1);
        assert_eq!(levels[0].as_array().unwrap().len(), field.grid().n_cells() + 1);
        // spot value round-trips through the JSON text
        assert_eq!(levels[1][2].as_f64().unwrap(), field.value(2, 1));
    }

    #[test]
    fn identical_fields_serialize_identically() {
        let (cfg, field) = small_field();
        let again = run_simulation(&cfg.params(), &cfg.grid(), &cfg.order(), &cfg.initial_profile)
            .unwrap();
        let (mut a, mut b) = (Vec::new(), Vec::new());
        write_csv(&mut a, &field).unwrap();
        write_csv(&mut b, &again).unwrap();
        assert_eq!(a, b);
    }
}
