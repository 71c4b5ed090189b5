use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)] // inherent methods shadow it when std is linked
use num_traits::Float;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

// ζ(3), ζ(5), ..., ζ(33)
const ZETA_ODD: [f64; 16] = [
    1.202_056_903_159_594_3,
    1.036_927_755_143_37,
    1.008_349_277_381_922_8,
    1.002_008_392_826_082_2,
    1.000_494_188_604_119_5,
    1.000_122_713_347_578_5,
    1.000_030_588_236_307,
    1.000_007_637_197_637_9,
    1.000_001_908_212_716_5,
    1.000_000_476_932_986_8,
    1.000_000_119_219_926,
    1.000_000_029_803_503_5,
    1.000_000_007_450_711_8,
    1.000_000_001_862_659_7,
    1.000_000_000_465_662_9,
    1.000_000_000_116_415_3,
];

// B_{2k} / (2k (2k - 1)) for k = 1..=10
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// Principal branch of `ln Γ(z)` for `Re z > 0`, continuous in `Im z`.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0);
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < 17.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        series += p * c;
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series - shift
}

/// `arg Γ(1 + iν)` on the branch continuous from `ν = 0`.
///
/// Small orders use the Taylor series of `ln Γ(1 + z)` so that the result
/// keeps full relative accuracy as `ν → 0`.
pub fn arg_gamma_one_plus_i(nu: f64) -> f64 {
    if nu.abs() < 0.25 {
        let nu2 = nu * nu;
        let mut p = nu * nu2;
        let mut sum = -EULER_GAMMA * nu;
        for (j, z) in ZETA_ODD.iter().enumerate() {
            let k = (2 * j + 3) as f64;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign * z * p / k;
            p *= nu2;
        }
        sum
    } else {
        ln_gamma(Complex64::new(1.0, nu)).im
    }
}
