use dsi_core::angular::{classify_phase, crossing_channel_index, CouplingPair};
use rayon::prelude::*;
use serde_json::json;

use super::{finite, linspace};
use crate::args::PhasesArgs;
use crate::error::{usage, CliError};
use crate::output::{Cell, RunManifest, Table};

pub const COLUMNS: [&str; 7] = ["g1", "g2", "region", "lambda0", "lambda1", "nu0", "nu1"];

fn range(name: &str, r: &[f64]) -> Result<(f64, f64), CliError> {
    if r.len() != 2 {
        return Err(usage(format!("{name} takes LO,HI, got {} value(s)", r.len())));
    }
    let (lo, hi) = (finite(name, r[0])?, finite(name, r[1])?);
    if lo > hi {
        return Err(usage(format!("{name}: lower end {lo} exceeds upper end {hi}")));
    }
    Ok((lo, hi))
}

/// One row per grid point, g₁ outer and g₂ inner. The `lambda`/`nu` columns
/// hold the subcritical channel of each kind (`0`: both walls attractive,
/// `1`: the channel crossing zero on `g₁ + g₂ = −π/3`) and are NaN where it
/// is absent.
pub fn run(args: &PhasesArgs) -> Result<(Table, RunManifest), CliError> {
    let (g1_lo, g1_hi) = range("g1-range", &args.g1_range)?;
    let (g2_lo, g2_hi) = range("g2-range", &args.g2_range)?;
    if args.resolution < 2 {
        return Err(usage(format!("resolution must be at least 2, got {}", args.resolution)));
    }
    let g1s = linspace(g1_lo, g1_hi, args.resolution);
    let g2s = linspace(g2_lo, g2_hi, args.resolution);
    let points: Vec<(f64, f64)> = g1s.iter().flat_map(|&a| g2s.iter().map(move |&b| (a, b))).collect();
    let rows = points
        .par_iter()
        .map(|&(g1, g2)| -> Result<Vec<Cell>, CliError> {
            let pair = CouplingPair::finite(g1, g2)?;
            let verdict = classify_phase(&pair)?;
            // With one repulsive wall the only subcritical channel is the crossing one.
            let shift = 1 - crossing_channel_index(&pair);
            let mut lambda = [f64::NAN; 2];
            let mut nu = [f64::NAN; 2];
            for ch in &verdict.channels {
                if let Some(kind) = Some(ch.channel_index + shift).filter(|&k| k < 2) {
                    lambda[kind] = ch.lambda;
                    nu[kind] = ch.nu.unwrap_or(f64::NAN);
                }
            }
            Ok(vec![
                g1.into(),
                g2.into(),
                verdict.region.label().into(),
                lambda[0].into(),
                lambda[1].into(),
                nu[0].into(),
                nu[1].into(),
            ])
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new(&COLUMNS);
    table.rows = rows;
    let manifest = RunManifest::new(
        "phases",
        json!({ "g1_range": [g1_lo, g1_hi], "g2_range": [g2_lo, g2_hi], "resolution": args.resolution }),
    );
    Ok((table, manifest))
}
