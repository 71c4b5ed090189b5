//! Tables that need no oracle: angular spectra, the bound-state tower,
//! S-matrix traces and sampled wavefunctions.

use dsi_core::angular::{angular_eigenvalues, quantization_residual};
use dsi_core::radial::{
    bound_radial_wavefunction, bound_state, s_matrix, scattering_radial_wavefunction, BoundState, ChannelParams,
};
use dsi_core::Error as CoreError;
use rayon::prelude::*;
use serde_json::json;

use super::{couplings, geomspace, linspace, positive};
use crate::args::{AngularArgs, ChannelArgs, RadialGrid, SmatrixArgs, SpectrumArgs, WavefunctionKind};
use crate::error::{usage, CliError};
use crate::output::{Cell, RunManifest, Table};

fn channel(args: &ChannelArgs) -> Result<ChannelParams, CliError> {
    let nu = positive("nu", args.nu)?;
    let kappa_star = positive("kappa-star", args.kappa_star)?;
    Ok(ChannelParams::three_body(nu, kappa_star)?)
}

pub fn angular(args: &AngularArgs) -> Result<(Table, RunManifest), CliError> {
    let pair = couplings(&args.couplings)?;
    if args.count == 0 {
        return Err(usage("count must be at least 1"));
    }
    let mut table = Table::new(&["index", "lambda", "nu", "residual"]);
    for ch in angular_eigenvalues(&pair, args.count)? {
        table.push(vec![
            ch.channel_index.into(),
            ch.lambda.into(),
            ch.nu.unwrap_or(f64::NAN).into(),
            quantization_residual(ch.lambda, &pair).into(),
        ]);
    }
    let manifest =
        RunManifest::new("angular", json!({ "g1": args.couplings.g1, "g2": args.couplings.g2, "count": args.count }));
    Ok((table, manifest))
}

fn status(e: &CoreError) -> String {
    match e {
        CoreError::Overflow => "overflow".into(),
        CoreError::Underflow => "underflow".into(),
        other => other.to_string(),
    }
}

/// One row per level: `ell, kappa, energy, norm_sq, ratio, status`, with
/// `ratio = E_{ℓ+1}/E_ℓ`. Levels outside the floating-point range are kept
/// as NaN rows with the reason in `status`.
pub fn spectrum(args: &SpectrumArgs) -> Result<(Table, RunManifest), CliError> {
    let p = channel(&args.channel)?;
    if args.ell_min > args.ell_max {
        return Err(usage(format!("ell-min {} exceeds ell-max {}", args.ell_min, args.ell_max)));
    }
    let levels: Vec<i64> = (args.ell_min..=args.ell_max).collect();
    let states: Vec<Result<BoundState, CoreError>> = levels.iter().map(|&l| bound_state(&p, l)).collect();
    let mut table = Table::new(&["ell", "kappa", "energy", "norm_sq", "ratio", "status"]);
    for (i, (&ell, state)) in levels.iter().zip(&states).enumerate() {
        let row = match state {
            Ok(s) => {
                let next = match states.get(i + 1) {
                    Some(n) => n.clone(),
                    None => bound_state(&p, ell + 1),
                };
                let ratio = next.map(|n| n.energy / s.energy).unwrap_or(f64::NAN);
                vec![ell.into(), s.kappa.into(), s.energy.into(), s.norm_sq.into(), ratio.into(), "ok".into()]
            }
            Err(e) => {
                let nan = Cell::Num(f64::NAN);
                vec![ell.into(), nan.clone(), nan.clone(), nan.clone(), nan, Cell::Text(status(e))]
            }
        };
        table.push(row);
    }
    let manifest = RunManifest::new(
        "spectrum",
        json!({ "nu": p.nu(), "kappa_star": args.channel.kappa_star, "ell_min": args.ell_min, "ell_max": args.ell_max }),
    );
    Ok((table, manifest))
}

/// `k` spans `k_decades` decades centred on κ*; with an odd point count the
/// middle row is exactly `k = κ*`.
pub fn smatrix(args: &SmatrixArgs) -> Result<(Table, RunManifest), CliError> {
    let p = channel(&args.channel)?;
    if args.points < 2 {
        return Err(usage(format!("points must be at least 2, got {}", args.points)));
    }
    let decades = positive("k-decades", args.k_decades)?;
    let ks: Vec<f64> = (0..args.points)
        .map(|i| {
            let t = i as f64 / (args.points - 1) as f64 - 0.5;
            args.channel.kappa_star * 10f64.powf(decades * t)
        })
        .collect();
    let rows = ks
        .par_iter()
        .map(|&k| -> Result<Vec<Cell>, CliError> {
            let s = s_matrix(&p, k)?;
            Ok(vec![k.into(), s.re.into(), s.im.into(), s.arg().into(), s.norm().into()])
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new(&["k", "re_s", "im_s", "arg_s", "abs_s"]);
    table.rows = rows;
    let manifest = RunManifest::new(
        "smatrix",
        json!({ "nu": p.nu(), "kappa_star": args.channel.kappa_star, "k_decades": decades, "points": args.points }),
    );
    Ok((table, manifest))
}

fn radii(grid: &RadialGrid, scale: f64, lo: f64, hi: f64) -> Result<Vec<f64>, CliError> {
    let r_min = positive("r-min", grid.r_min.unwrap_or(lo / scale))?;
    let r_max = positive("r-max", grid.r_max.unwrap_or(hi / scale))?;
    if r_min >= r_max || grid.points < 2 {
        return Err(usage("need r-min < r-max and at least 2 points"));
    }
    Ok(geomspace(r_min, r_max, grid.points))
}

pub fn wavefunction(kind: &WavefunctionKind) -> Result<(Table, RunManifest), CliError> {
    match kind {
        WavefunctionKind::Bound { channel: c, ell, grid } => {
            let p = channel(c)?;
            let state = bound_state(&p, *ell)?;
            let rs = radii(grid, state.kappa, 1e-4, 60.0)?;
            let values =
                rs.par_iter().map(|&r| bound_radial_wavefunction(&p, &state, r)).collect::<Result<Vec<_>, _>>()?;
            let mut table = Table::new(&["r", "R"]);
            for (r, v) in rs.iter().zip(values) {
                table.push(vec![(*r).into(), v.into()]);
            }
            let params = json!({ "kind": "bound", "nu": p.nu(), "kappa_star": c.kappa_star, "ell": ell,
                "r_min": rs[0], "r_max": rs[rs.len() - 1], "points": rs.len() });
            Ok((table, RunManifest::new("wavefunction", params)))
        }
        WavefunctionKind::Scattering { channel: c, k, grid } => {
            let p = channel(c)?;
            let k = positive("k", *k)?;
            let rs = radii(grid, k, 1e-4, 100.0)?;
            let values =
                rs.par_iter().map(|&r| scattering_radial_wavefunction(&p, k, r)).collect::<Result<Vec<_>, _>>()?;
            let mut table = Table::new(&["r", "re_R", "im_R"]);
            for (r, v) in rs.iter().zip(values) {
                table.push(vec![(*r).into(), v.re.into(), v.im.into()]);
            }
            let params = json!({ "kind": "scattering", "nu": p.nu(), "kappa_star": c.kappa_star, "k": k,
                "r_min": rs[0], "r_max": rs[rs.len() - 1], "points": rs.len() });
            Ok((table, RunManifest::new("wavefunction", params)))
        }
        WavefunctionKind::Angular { couplings: c, index, points } => {
            let pair = couplings(c)?;
            if *points < 2 {
                return Err(usage("points must be at least 2"));
            }
            let ch = angular_eigenvalues(&pair, index + 1)?[*index];
            let mut table = Table::new(&["theta", "Theta", "dTheta"]);
            for t in linspace(0.0, dsi_core::SECTOR_ANGLE, *points) {
                table.push(vec![t.into(), ch.value(t).into(), ch.derivative(t).into()]);
            }
            let params = json!({ "kind": "angular", "g1": c.g1, "g2": c.g2, "index": index,
                "lambda": ch.lambda, "points": points });
            Ok((table, RunManifest::new("wavefunction", params)))
        }
    }
}
