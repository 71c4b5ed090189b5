//! Acceptance suite: every criterion at its stated tolerance and time budget,
//! one PASS/FAIL line each. Exits non-zero if any criterion fails.

use std::f64::consts::{FRAC_PI_3, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

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
use dsi_core::Result;
use num_complex::Complex64;

const TOL: Tolerances = Tolerances::DEFAULT;

struct Check {
    label: &'static str,
    measured: f64,
    tolerance: f64,
}

impl Check {
    fn new(label: &'static str, measured: f64, tolerance: f64) -> Self {
        Self { label, measured, tolerance }
    }

    fn passed(&self) -> bool {
        self.measured <= self.tolerance
    }
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Result<Vec<Check>>,
}

fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)).collect()
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn angular_limits() -> Result<Vec<Check>> {
    let dd = angular_eigenvalues(&CouplingPair::new(Coupling::dirichlet(), Coupling::dirichlet()), 10)?;
    let nn = angular_eigenvalues(&CouplingPair::new(Coupling::Neumann, Coupling::Neumann), 10)?;
    let d = dd.iter().enumerate().map(|(m, c)| (c.lambda - 9.0 * ((m + 1) * (m + 1)) as f64).abs()).fold(0.0, f64::max);
    let n = nn.iter().enumerate().map(|(m, c)| (c.lambda - 9.0 * (m * m) as f64).abs()).fold(0.0, f64::max);
    Ok(vec![
        Check::new("Dirichlet |λ_m − 9(m+1)²|", d, TOL.angular_limits),
        Check::new("Neumann |λ_m − 9m²|", n, TOL.angular_limits),
    ])
}

fn symmetric_couplings() -> Result<Vec<Check>> {
    let mut count_err: f64 = 0.0;
    let mut value_err: f64 = 0.0;
    for g in [-0.1, -0.3, -0.5] {
        let v = classify_phase(&CouplingPair::symmetric(g)?)?;
        count_err = count_err.max((v.channels.len() as f64 - 2.0).abs());
        let (nu0, nu1) = symmetric_channel_roots(g)?;
        if v.channels.len() == 2 {
            value_err = value_err.max((v.channels[0].lambda + nu0 * nu0).abs());
            value_err = value_err.max((v.channels[1].lambda + nu1 * nu1).abs());
        }
    }
    Ok(vec![
        Check::new("negative-eigenvalue count − 2", count_err, 0.0),
        Check::new("|λ − (−ν²)| against coth/tanh roots", value_err, TOL.symmetric_roots),
    ])
}

fn phase_boundary() -> Result<Vec<Check>> {
    let mut on_line: f64 = 0.0;
    let mut wrong_sign = 0.0;
    for d in linspace(-2.0, 2.0, 100) {
        let g1 = 0.5 * (-FRAC_PI_3 + d);
        let g2 = 0.5 * (-FRAC_PI_3 - d);
        on_line = on_line.max(crossing_eigenvalue(&CouplingPair::finite(g1, g2)?)?.abs());
        let half = 0.5 * TOL.boundary_offset;
        let inside = crossing_eigenvalue(&CouplingPair::finite(g1 + half, g2 + half)?)?;
        let outside = crossing_eigenvalue(&CouplingPair::finite(g1 - half, g2 - half)?)?;
        if !(inside < 0.0 && outside > 0.0) {
            wrong_sign += 1.0;
        }
    }
    Ok(vec![
        Check::new("max |λ| on g1+g2 = −π/3", on_line, TOL.boundary_lambda),
        Check::new("points without sign change at ±1e-6", wrong_sign, 0.0),
    ])
}

fn fd_angular_grid() -> Result<Vec<Check>> {
    let grid = GridSpec::new(0.0, FRAC_PI_3, 64, 4)?;
    let mut worst: f64 = 0.0;
    for g1 in linspace(-2.0, 2.0, 10) {
        for g2 in linspace(-2.0, 2.0, 10) {
            let c = CouplingPair::finite(g1, g2)?;
            let exact = angular_eigenvalues(&c, 5)?;
            let fd = fd_angular_eigenvalues(&c, grid, 5)?;
            for (a, b) in exact.iter().zip(&fd) {
                worst = worst.max((a.lambda - b).abs());
            }
        }
    }
    Ok(vec![Check::new("max |λ_fd − λ| over 10×10 grid, 5 levels", worst, TOL.fd_angular)])
}

fn s_matrix_properties() -> Result<Vec<Check>> {
    let mut unitarity: f64 = 0.0;
    let mut periodicity: f64 = 0.0;
    let mut residue: f64 = 0.0;
    let mut conjugation: f64 = 0.0;
    for nu in [0.3, 1.0, 3.0] {
        let p = ChannelParams::three_body(nu, 1.0)?;
        for k in logspace(1e-4, 1e4, 161) {
            let s = s_matrix(&p, k)?;
            unitarity = unitarity.max((s.norm() - 1.0).abs());
            periodicity = periodicity.max((s_matrix(&p, k * (PI / nu).exp())? - s).norm());
        }
        for ell in [-1, 0, 1] {
            residue = residue.max(residue_check(&p, ell)?.relative_error);
        }
        for k in logspace(1e-4, 1e4, 161) {
            conjugation = conjugation.max((s_matrix(&p, k)?.conj() + s_matrix(&p, 1.0 / k)?).norm());
        }
    }
    Ok(vec![
        Check::new("max ||S| − 1| over 8 decades", unitarity, TOL.unitarity),
        Check::new("max |S(k e^{π/ν}) − S(k)|", periodicity, TOL.log_periodicity),
        Check::new("max relative residue error, ℓ ∈ {−1,0,1}", residue, TOL.residue),
        Check::new("max |conj S(k) + S(κ*²/k)|", conjugation, TOL.conjugation),
    ])
}

fn radial_tower() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (nu, label) in
        [(0.5, "ν = 0.5 consecutive ratios within 1% (need 3)"), (1.0, "ν = 1 consecutive ratios within 1% (need 3)")]
    {
        let levels = 7;
        let grid = GridSpec::new(0.0, PI / nu * (levels as f64 + 1.0), 400, 3)?;
        let e = fd_radial_spectrum(nu, grid, levels)?;
        let target = (-2.0 * PI / nu).exp();
        let mut run = 0usize;
        let mut best = 0usize;
        for w in e.windows(2) {
            if (w[1] / w[0] / target - 1.0).abs() <= TOL.radial_ratio {
                run += 1;
                best = best.max(run);
            } else {
                run = 0;
            }
        }
        // Pass when at least three consecutive ratios qualify.
        checks.push(Check::new(label, 3.0 - best.min(3) as f64, 0.0));
    }
    Ok(checks)
}

fn real(v: Result<f64>) -> Result<Complex64> {
    v.map(|x| Complex64::new(x, 0.0))
}

fn orthogonality_and_asymptotics() -> Result<Vec<Check>> {
    let mut norm: f64 = 0.0;
    let mut bb: f64 = 0.0;
    let mut bs: f64 = 0.0;
    let mut bound_tail: f64 = 0.0;
    let mut scatter_tail: f64 = 0.0;
    for nu in [0.3, 1.0, 3.0] {
        let p = ChannelParams::three_body(nu, 1.0)?;
        let states = [-1, 0, 1].iter().map(|&l| bound_state(&p, l)).collect::<Result<Vec<_>>>()?;
        for (i, a) in states.iter().enumerate() {
            for b in &states[i..] {
                let fa = |r: f64| real(bound_radial_wavefunction(&p, a, r));
                let fb = |r: f64| real(bound_radial_wavefunction(&p, b, r));
                let o = overlap_quadrature(fa, fb, 80.0 / a.kappa.min(b.kappa))?.value;
                if a.ell == b.ell {
                    norm = norm.max((o - 1.0).norm());
                } else {
                    bb = bb.max(o.norm());
                }
            }
            // Momenta at the level's own scale; k = κ* is the ℓ = 0 member.
            for k in [0.5 * a.kappa, a.kappa, 2.0 * a.kappa] {
                let fa = |r: f64| real(bound_radial_wavefunction(&p, a, r));
                let fs = |r: f64| scattering_radial_wavefunction(&p, k, r);
                bs = bs.max(overlap_quadrature(fa, fs, 80.0 / a.kappa)?.value.norm());
            }
            let x = 50.0;
            let ratio = bound_radial_wavefunction(&p, a, x / a.kappa)? / (a.norm_sq.sqrt() * (-x).exp());
            bound_tail = bound_tail.max((ratio - 1.0).abs());
        }
        for k in [0.5, 1.0, 2.0] {
            let kr = 100.0;
            let s = s_matrix(&p, k)?;
            let got = scattering_radial_wavefunction(&p, k, kr / k)?;
            let asym = Complex64::new(0.0, -kr).exp() + s * Complex64::new(0.0, kr).exp();
            scatter_tail = scatter_tail.max((got - asym).norm());
        }
    }
    Ok(vec![
        Check::new("max |⟨R_ℓ|R_ℓ⟩ − 1|", norm, TOL.normalization),
        Check::new("max |⟨R_ℓ|R_ℓ'⟩|", bb, TOL.bound_bound),
        Check::new("max |⟨R_ℓ|R_k⟩|", bs, TOL.bound_scattering),
        Check::new("max |R/(N e^{−κr}) − 1| at κr = 50", bound_tail, TOL.bound_asymptote),
        Check::new("max |R_k − (e^{−ikr} + S e^{ikr})| at kr = 100", scatter_tail, TOL.scattering_asymptote),
    ])
}

fn bessel_grid() -> Result<Vec<Check>> {
    let mut k_err: f64 = 0.0;
    let mut w_err: f64 = 0.0;
    for nu in logspace(0.05, 20.0, 20) {
        for x in logspace(1e-6, 700.0, 20) {
            let q = ImagOrderParams::new(nu, x);
            let oracle = quadrature_bessel_k(nu, x)?;
            let k = bessel_k_imag(q)?;
            let err = if oracle.value.abs() > 1e-300 {
                ((k - oracle.value).abs() - oracle.abs_error).max(0.0) / oracle.value.abs()
            } else {
                (k - oracle.value).abs()
            };
            k_err = k_err.max(err);
            let (h1, d1) = hankel_imag_with_derivative(HankelKind::First, q)?;
            let (h2, d2) = hankel_imag_with_derivative(HankelKind::Second, q)?;
            let exact = Complex64::new(0.0, -4.0 / (PI * x));
            w_err = w_err.max((h1 * d2 - d1 * h2 - exact).norm() / exact.norm());
        }
    }
    Ok(vec![
        Check::new("max relative |K − K_oracle| on 20×20 (ν, x) grid", k_err, TOL.bessel_oracle),
        Check::new("max relative Wronskian error", w_err, TOL.wronskian),
    ])
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
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

fn statistics() -> Result<Vec<Check>> {
    let base = [2.25, 0.5, -0.75, -3.0];
    let mut sign_mismatch = 0.0;
    for p in permutations(4) {
        let x: Vec<f64> = p.iter().map(|&i| base[i]).collect();
        if sector_map(&x)?.sign != pairwise_sign_product(&x) {
            sign_mismatch += 1.0;
        }
    }
    let c = CouplingPair::symmetric(-0.4)?;
    let ch = angular_eigenvalues(&c, 1)?[0];
    let p = ChannelParams::three_body(ch.nu.unwrap_or(1.0), 1.0)?;
    let b = bound_state(&p, 0)?;
    let eval = |x: &[f64], st: Statistics| -> Result<Complex64> {
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
    Ok(vec![
        Check::new("24 orderings: sector sign ≠ Π sgn(x_j − x_k)", sign_mismatch, 0.0),
        Check::new("max relative exchange-symmetry violation", sym, TOL.exchange_symmetry),
    ])
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "Dirichlet/Neumann limits", budget: Duration::from_secs(1), run: angular_limits },
        Criterion { id: 2, title: "symmetric couplings", budget: Duration::from_secs(1), run: symmetric_couplings },
        Criterion {
            id: 3, title: "phase boundary g1+g2 = −π/3", budget: Duration::from_secs(10), run: phase_boundary
        },
        Criterion {
            id: 4,
            title: "finite-difference angular oracle",
            budget: Duration::from_secs(120),
            run: fd_angular_grid,
        },
        Criterion { id: 5, title: "S-matrix properties", budget: Duration::from_secs(30), run: s_matrix_properties },
        Criterion { id: 6, title: "radial oracle tower ratio", budget: Duration::from_secs(120), run: radial_tower },
        Criterion {
            id: 7,
            title: "normalization, orthogonality, asymptotics",
            budget: Duration::from_secs(60),
            run: orthogonality_and_asymptotics,
        },
        Criterion {
            id: 8, title: "K_iν oracle grid and Wronskian", budget: Duration::from_secs(60), run: bessel_grid
        },
        Criterion { id: 9, title: "exchange statistics", budget: Duration::from_secs(1), run: statistics },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let in_time = elapsed <= c.budget;
        let (ok, detail) = match outcome {
            Ok(checks) => {
                let ok = checks.iter().all(Check::passed);
                let detail = checks
                    .iter()
                    .map(|k| {
                        let mark = if k.passed() { "ok" } else { "FAILED" };
                        format!("{} = {:.3e} (tol {:.0e}, {mark})", k.label, k.measured, k.tolerance)
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                (ok, detail)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let pass = ok && in_time;
        if !pass {
            failures += 1;
        }
        println!(
            "criterion {} [{}] {}: {} | {:.2?} of {:?}",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            detail,
            elapsed,
            c.budget
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
