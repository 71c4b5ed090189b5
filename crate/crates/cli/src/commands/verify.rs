//! Oracle comparison suites. Every tolerance comes from the shared table in
//! `dsi_core::tolerances`.

use std::f64::consts::{FRAC_PI_3, PI};

use dsi_core::angular::{
    angular_eigenvalues, classify_phase, crossing_eigenvalue, symmetric_channel_roots, Coupling, CouplingPair,
};
use dsi_core::coordinates::{
    assemble_wavefunction, pairwise_sign_product, sector_map, CoincidencePolicy, ParticleConfig, Statistics,
};
use dsi_core::oracles::{
    fd_angular_eigenvalues, fd_radial_spectrum, overlap_quadrature, quadrature_bessel_k, GridSpec,
};
use dsi_core::radial::{
    bound_radial_wavefunction, bound_state, residue_check, s_matrix, scattering_radial_wavefunction, ChannelParams,
};
use dsi_core::special::{bessel_k_imag, hankel_imag_with_derivative, HankelKind, ImagOrderParams};
use dsi_core::tolerances::Tolerances;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use super::{geomspace, linspace};
use crate::args::{Suite, VerifyArgs};
use crate::error::{usage, CliError};
use crate::output::{Cell, RunManifest, Table};

type CoreResult<T> = dsi_core::Result<T>;

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub measured: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    /// Set when the suite aborted; the suite then counts as failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub passed: bool,
    pub failures: usize,
    pub tolerances: serde_json::Value,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["suite", "check", "measured", "tolerance", "status"]);
        for s in &self.suites {
            if let Some(e) = &s.error {
                t.push(vec![s.suite.into(), "error".into(), f64::NAN.into(), f64::NAN.into(), Cell::Text(e.clone())]);
            }
            for c in &s.checks {
                let status = if c.passed { "pass" } else { "fail" };
                t.push(vec![s.suite.into(), c.name.into(), c.measured.into(), c.tolerance.into(), status.into()]);
            }
        }
        t
    }
}

fn check(name: &'static str, measured: f64, tolerance: f64) -> CheckResult {
    CheckResult { name, measured, tolerance, passed: measured <= tolerance }
}

pub fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Angular => "angular",
        Suite::Radial => "radial",
        Suite::Smatrix => "smatrix",
        Suite::Special => "special",
        Suite::Orthogonality => "orthogonality",
        Suite::Statistics => "statistics",
    }
}

pub const ALL: [Suite; 6] =
    [Suite::Angular, Suite::Radial, Suite::Smatrix, Suite::Special, Suite::Orthogonality, Suite::Statistics];

pub fn run(args: &VerifyArgs, tol: &Tolerances, profile: &str) -> Result<(Report, RunManifest), CliError> {
    if let Some(d) = args.perturb_nu {
        if !d.is_finite() {
            return Err(usage("perturb-nu must be finite"));
        }
    }
    let mut selected: Vec<Suite> = Vec::new();
    for s in if args.suites.is_empty() { &ALL[..] } else { &args.suites[..] } {
        if !selected.contains(s) {
            selected.push(*s);
        }
    }
    let suites: Vec<SuiteReport> = selected
        .iter()
        .map(|&s| {
            let outcome = match s {
                Suite::Angular => angular(tol),
                Suite::Radial => radial(tol),
                Suite::Smatrix => smatrix(tol, args.perturb_nu.unwrap_or(0.0)),
                Suite::Special => special(tol),
                Suite::Orthogonality => orthogonality(tol),
                Suite::Statistics => statistics(tol),
            };
            match outcome {
                Ok(checks) => {
                    SuiteReport { suite: suite_name(s), passed: checks.iter().all(|c| c.passed), checks, error: None }
                }
                Err(e) => {
                    SuiteReport { suite: suite_name(s), passed: false, checks: Vec::new(), error: Some(e.to_string()) }
                }
            }
        })
        .collect();
    let failures =
        suites.iter().map(|s| s.checks.iter().filter(|c| !c.passed).count() + usize::from(s.error.is_some())).sum();
    let report = Report { passed: failures == 0, failures, tolerances: tolerance_json(tol), suites };
    let names: Vec<&str> = selected.iter().map(|&s| suite_name(s)).collect();
    let mut params = json!({ "suites": names, "tolerance_profile": profile });
    if let Some(d) = args.perturb_nu {
        params["perturb_nu"] = json!(d);
    }
    Ok((report, RunManifest::new("verify", params)))
}

fn tolerance_json(t: &Tolerances) -> serde_json::Value {
    json!({
        "angular_limits": t.angular_limits,
        "symmetric_roots": t.symmetric_roots,
        "boundary_lambda": t.boundary_lambda,
        "boundary_offset": t.boundary_offset,
        "fd_angular": t.fd_angular,
        "unitarity": t.unitarity,
        "log_periodicity": t.log_periodicity,
        "residue": t.residue,
        "conjugation": t.conjugation,
        "radial_ratio": t.radial_ratio,
        "normalization": t.normalization,
        "bound_bound": t.bound_bound,
        "bound_scattering": t.bound_scattering,
        "bessel_oracle": t.bessel_oracle,
        "wronskian": t.wronskian,
        "exchange_symmetry": t.exchange_symmetry,
    })
}

fn angular(tol: &Tolerances) -> CoreResult<Vec<CheckResult>> {
    let dd = angular_eigenvalues(&CouplingPair::new(Coupling::dirichlet(), Coupling::dirichlet()), 10)?;
    let nn = angular_eigenvalues(&CouplingPair::new(Coupling::Neumann, Coupling::Neumann), 10)?;
    let mut limits: f64 = 0.0;
    for m in 0..10 {
        limits = limits.max((dd[m].lambda - 9.0 * ((m + 1) * (m + 1)) as f64).abs());
        limits = limits.max((nn[m].lambda - 9.0 * (m * m) as f64).abs());
    }

    let mut roots: f64 = 0.0;
    let mut count: f64 = 0.0;
    for g in [-0.1, -0.3, -0.5] {
        let v = classify_phase(&CouplingPair::symmetric(g)?)?;
        count = count.max((v.channels.len() as f64 - 2.0).abs());
        let (nu0, nu1) = symmetric_channel_roots(g)?;
        for (ch, nu) in v.channels.iter().zip([nu0, nu1]) {
            roots = roots.max((ch.lambda + nu * nu).abs());
        }
    }

    let mut on_line: f64 = 0.0;
    let mut no_flip = 0.0;
    let half = 0.5 * tol.boundary_offset;
    for d in linspace(-2.0, 2.0, 21) {
        let (g1, g2) = (0.5 * (-FRAC_PI_3 + d), 0.5 * (-FRAC_PI_3 - d));
        on_line = on_line.max(crossing_eigenvalue(&CouplingPair::finite(g1, g2)?)?.abs());
        let inside = crossing_eigenvalue(&CouplingPair::finite(g1 + half, g2 + half)?)?;
        let outside = crossing_eigenvalue(&CouplingPair::finite(g1 - half, g2 - half)?)?;
        if !(inside < 0.0 && outside > 0.0) {
            no_flip += 1.0;
        }
    }

    let grid = GridSpec::new(0.0, FRAC_PI_3, 64, 4)?;
    let mut fd: f64 = 0.0;
    for g1 in [-2.0, -0.5, 1.5] {
        for g2 in [-1.0, 0.25, 2.0] {
            let c = CouplingPair::finite(g1, g2)?;
            let exact = angular_eigenvalues(&c, 5)?;
            for (a, b) in exact.iter().zip(fd_angular_eigenvalues(&c, grid, 5)?) {
                fd = fd.max((a.lambda - b).abs());
            }
        }
    }
    Ok(vec![
        check("dirichlet_neumann_limits", limits, tol.angular_limits),
        check("symmetric_channel_count", count, 0.0),
        check("symmetric_closed_forms", roots, tol.symmetric_roots),
        check("boundary_crossing_lambda", on_line, tol.boundary_lambda),
        check("boundary_missing_sign_changes", no_flip, 0.0),
        check("finite_difference_oracle", fd, tol.fd_angular),
    ])
}

fn radial(tol: &Tolerances) -> CoreResult<Vec<CheckResult>> {
    // Smallest, over runs of three consecutive ratios, of the worst deviation.
    let mut tower: f64 = 0.0;
    for nu in [0.5, 1.0] {
        let levels = 7;
        let grid = GridSpec::new(0.0, PI / nu * (levels as f64 + 1.0), 400, 3)?;
        let e = fd_radial_spectrum(nu, grid, levels)?;
        let target = (-2.0 * PI / nu).exp();
        let dev: Vec<f64> = e.windows(2).map(|w| (w[1] / w[0] / target - 1.0).abs()).collect();
        let best = dev.windows(3).map(|w| w.iter().copied().fold(0.0, f64::max)).fold(f64::INFINITY, f64::min);
        tower = tower.max(best);
    }
    let mut residue: f64 = 0.0;
    for nu in [0.3, 1.0, 3.0] {
        let p = ChannelParams::three_body(nu, 1.0)?;
        for ell in [-1, 0, 1] {
            residue = residue.max(residue_check(&p, ell)?.relative_error);
        }
    }
    Ok(vec![check("tower_ratio_oracle", tower, tol.radial_ratio), check("pole_residues", residue, tol.residue)])
}

fn smatrix(tol: &Tolerances, perturb: f64) -> CoreResult<Vec<CheckResult>> {
    let (mut unitarity, mut period, mut conj): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for nu in [0.3, 1.0, 3.0] {
        let p = ChannelParams::three_body(nu * (1.0 + perturb), 1.0)?;
        for k in geomspace(1e-4, 1e4, 81) {
            let s = s_matrix(&p, k)?;
            unitarity = unitarity.max((s.norm() - 1.0).abs());
            period = period.max((s_matrix(&p, k * (PI / nu).exp())? - s).norm());
            conj = conj.max((s.conj() + s_matrix(&p, 1.0 / k)?).norm());
        }
    }
    Ok(vec![
        check("unitarity", unitarity, tol.unitarity),
        check("log_periodicity", period, tol.log_periodicity),
        check("conjugation", conj, tol.conjugation),
    ])
}

fn special(tol: &Tolerances) -> CoreResult<Vec<CheckResult>> {
    let (mut k_err, mut w_err): (f64, f64) = (0.0, 0.0);
    for nu in geomspace(0.05, 20.0, 6) {
        for x in geomspace(1e-6, 700.0, 6) {
            let q = ImagOrderParams::new(nu, x);
            let oracle = quadrature_bessel_k(nu, x)?;
            let k = bessel_k_imag(q)?;
            let err = ((k - oracle.value).abs() - oracle.abs_error).max(0.0);
            k_err = k_err.max(if oracle.value.abs() > 1e-300 { err / oracle.value.abs() } else { err });
            let (h1, d1) = hankel_imag_with_derivative(HankelKind::First, q)?;
            let (h2, d2) = hankel_imag_with_derivative(HankelKind::Second, q)?;
            let exact = Complex64::new(0.0, -4.0 / (PI * x));
            w_err = w_err.max((h1 * d2 - d1 * h2 - exact).norm() / exact.norm());
        }
    }
    Ok(vec![check("bessel_k_oracle", k_err, tol.bessel_oracle), check("hankel_wronskian", w_err, tol.wronskian)])
}

fn real(v: CoreResult<f64>) -> CoreResult<Complex64> {
    v.map(|x| Complex64::new(x, 0.0))
}

fn orthogonality(tol: &Tolerances) -> CoreResult<Vec<CheckResult>> {
    let (mut norm, mut bb, mut bs): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for nu in [0.3, 1.0, 3.0] {
        let p = ChannelParams::three_body(nu, 1.0)?;
        for ell in [-1, 0] {
            let a = bound_state(&p, ell)?;
            let b = bound_state(&p, ell + 1)?;
            let fa = |r: f64| real(bound_radial_wavefunction(&p, &a, r));
            let fb = |r: f64| real(bound_radial_wavefunction(&p, &b, r));
            norm = norm.max((overlap_quadrature(fa, fa, 80.0 / a.kappa)?.value - 1.0).norm());
            bb = bb.max(overlap_quadrature(fa, fb, 80.0 / b.kappa)?.value.norm());
            let fs = |r: f64| scattering_radial_wavefunction(&p, a.kappa, r);
            bs = bs.max(overlap_quadrature(fa, fs, 80.0 / a.kappa)?.value.norm());
        }
    }
    Ok(vec![
        check("bound_normalization", norm, tol.normalization),
        check("bound_bound", bb, tol.bound_bound),
        check("bound_scattering", bs, tol.bound_scattering),
    ])
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn statistics(tol: &Tolerances) -> CoreResult<Vec<CheckResult>> {
    let base = [2.25, 0.5, -0.75, -3.0];
    let mut mismatches = 0.0;
    for perm in permutations(4) {
        let x: Vec<f64> = perm.iter().map(|&i| base[i]).collect();
        if sector_map(&x)?.sign != pairwise_sign_product(&x) {
            mismatches += 1.0;
        }
    }
    let pair = CouplingPair::symmetric(-0.4)?;
    let ch = angular_eigenvalues(&pair, 1)?[0];
    let p = ChannelParams::three_body(ch.nu.unwrap_or(1.0), 1.0)?;
    let b = bound_state(&p, 0)?;
    let eval = |x: &[f64], st: Statistics| -> CoreResult<Complex64> {
        assemble_wavefunction(
            &ParticleConfig::new(x.to_vec())?,
            0.7,
            |r| real(bound_radial_wavefunction(&p, &b, r)),
            |pt| real(ch.value_at(pt)),
            st,
            CoincidencePolicy::default(),
        )
    };
    let x0 = [0.8, -0.3, 0.15];
    let (b0, f0) = (eval(&x0, Statistics::Bose)?, eval(&x0, Statistics::Fermi)?);
    let mut sym: f64 = 0.0;
    for perm in permutations(3) {
        let y: Vec<f64> = perm.iter().map(|&i| x0[i]).collect();
        let s = f64::from(pairwise_sign_product(&y) * pairwise_sign_product(&x0));
        sym = sym.max((eval(&y, Statistics::Bose)? - b0).norm() / b0.norm());
        sym = sym.max((eval(&y, Statistics::Fermi)? - f0 * s).norm() / f0.norm());
    }
    Ok(vec![check("sector_sign_permutations", mismatches, 0.0), check("exchange_symmetry", sym, tol.exchange_symmetry)])
}
