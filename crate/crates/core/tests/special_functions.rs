#![allow(clippy::excessive_precision)] // frozen reference digits
//! Imaginary-order Bessel and Hankel functions against frozen
//! high-precision reference values and structural identities.

use dsi_core::oracles::quadrature_bessel_k;
use dsi_core::special::{
    bessel_k_imag, bessel_k_imag_scaled, bessel_k_imag_small_argument, hankel1_imag_scaled, hankel_imag,
    hankel_imag_with_derivative, HankelKind, ImagOrderParams,
};
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

// (ν, x, K_{iν}(x)) to 20 digits.
const K_REFERENCE: &[(f64, f64, f64)] = &[
    (0.05, 1e-06, 1.2806272242708287087e+1),
    (0.05, 0.01, 4.6688904086406073624),
    (0.05, 0.5, 9.2300669359024816856e-1),
    (0.05, 2.0, 1.138348596624831859e-1),
    (0.05, 5.0, 3.6902525590289030657e-3),
    (0.05, 10.2, 1.441520119635317954e-5),
    (0.05, 20.0, 5.7408875188285466477e-10),
    (0.05, 41.0, 3.0498104772972101741e-19),
    (0.05, 50.0, 3.4100833312768750948e-23),
    (0.05, 200.0, 1.2256743383363146192e-88),
    (0.05, 700.0, 4.6697680987534735531e-306),
    (0.3, 1e-06, -2.6878843381916222558),
    (0.3, 0.01, 3.0698502718600630234),
    (0.3, 0.5, 8.7468770481258139375e-1),
    (0.3, 2.0, 1.1178684183332566573e-1),
    (0.3, 5.0, 3.6607662933835316285e-3),
    (0.3, 10.2, 1.4356240128514959813e-5),
    (0.3, 20.0, 5.7286403926307742579e-10),
    (0.3, 41.0, 3.0465964652817019242e-19),
    (0.3, 50.0, 3.4071299910882505717e-23),
    (0.3, 200.0, 1.2254069178902785408e-88),
    (0.3, 700.0, 4.6694764555000739898e-306),
    (1.0, 1e-06, 5.2029218538416702339e-1),
    (1.0, 0.01, -5.0063371682748455125e-1),
    (1.0, 0.5, 4.8339609004387797407e-1),
    (1.0, 2.0, 9.2385459890391181537e-2),
    (1.0, 5.0, 3.3670999885610447448e-3),
    (1.0, 10.2, 1.37567812253049507e-5),
    (1.0, 20.0, 5.6027857553464753084e-10),
    (1.0, 41.0, 3.0133693225427499635e-19),
    (1.0, 50.0, 3.3765655033849594423e-23),
    (1.0, 200.0, 1.2226291959682648879e-88),
    (1.0, 700.0, 4.6664444446750242898e-306),
    (3.0, 1e-06, 7.308780163299852986e-3),
    (3.0, 0.01, -1.2297294234570473077e-2),
    (3.0, 0.5, -1.1362530752479869532e-2),
    (3.0, 2.0, 1.4238040755583181127e-2),
    (3.0, 5.0, 1.5891029050314698599e-3),
    (3.0, 10.2, 9.4343782229738506416e-6),
    (3.0, 20.0, 4.6073315805456139052e-10),
    (3.0, 41.0, 2.7363153129014788935e-19),
    (3.0, 50.0, 3.1193264428352686669e-23),
    (3.0, 200.0, 1.1984786242994474761e-88),
    (3.0, 700.0, 4.6398739538676734742e-306),
    (10.0, 1e-06, 1.1605880345685884718e-7),
    (10.0, 0.01, -8.673792898139277502e-8),
    (10.0, 0.5, 6.7717246719100322276e-8),
    (10.0, 2.0, 1.1735704221220611526e-7),
    (10.0, 5.0, -1.0825398134796980693e-7),
    (10.0, 10.2, 8.9578710877618065268e-8),
    (10.0, 20.0, 4.764583127515444526e-11),
    (10.0, 41.0, 9.0879531022694309857e-20),
    (10.0, 50.0, 1.2628506922766520318e-23),
    (10.0, 200.0, 9.5510661874988173293e-89),
    (10.0, 700.0, 4.3480712578505280824e-306),
    (20.0, 1e-06, -1.0723887795609542818e-14),
    (20.0, 0.01, 1.0660523846588557947e-14),
    (20.0, 0.5, -8.1056068347248340901e-15),
    (20.0, 2.0, 1.2091369384947289121e-15),
    (20.0, 5.0, -8.2646568034237979036e-15),
    (20.0, 10.2, -3.8928131298310918267e-16),
    (20.0, 20.0, 1.1754806887901561554e-14),
    (20.0, 41.0, 2.2334438985968225444e-21),
    (20.0, 50.0, 6.1618330565729140263e-25),
    (20.0, 200.0, 4.5165373497414895798e-89),
    (20.0, 700.0, 3.5098781435363259678e-306),
    (40.0, 1e-06, -1.2790563986290589727e-28),
    (40.0, 0.01, -3.483933455475291438e-29),
    (40.0, 0.5, 8.503808981340684652e-29),
    (40.0, 2.0, 2.0450523999845350134e-28),
    (40.0, 5.0, 8.2429354939537821168e-29),
    (40.0, 10.2, -3.2754356404233560076e-29),
    (40.0, 20.0, -6.8655922790495793715e-30),
    (40.0, 41.0, 1.5614354440320527802e-28),
    (40.0, 50.0, 1.6421193358427442108e-30),
    (40.0, 200.0, 2.2374126528868878859e-90),
    (40.0, 700.0, 1.4899747359151333606e-306),
];

// (ν, x, Re h, Im h, Re h', Im h') with h = e^{−νπ/2} H^{(1)}_{iν}(x).
const H_REFERENCE: &[(f64, f64, f64, f64, f64, f64)] = &[
    (
        0.05,
        0.0001,
        8.9229275237877794489e-1,
        -5.7308900684040922314,
        2.2458987861132019059e+2,
        5.6921876876593103085e+3,
    ),
    (0.05, 0.5, 9.3701247058609987225e-1, -4.4564770282069752051e-1, -2.3725864791794252867e-1, 1.4716701852341332609),
    (
        0.05,
        3.0,
        -2.5988656861435462357e-1,
        3.7693058342748552321e-1,
        -3.3922272690842511599e-1,
        -3.245383971685556474e-1,
    ),
    (0.05, 8.0, 1.7168381462130079548e-1, 2.23492755171977516e-1, -2.3461347712118986384e-1, 1.5809911495458813279e-1),
    (
        0.05,
        12.0,
        4.7665730158876590178e-2,
        -2.2524129463800519611e-1,
        2.2345403841876979998e-1,
        5.707603308910067044e-2,
    ),
    (
        0.05,
        25.0,
        9.6260330177623510478e-2,
        -1.2725411439708489213e-1,
        1.2535532316450589213e-1,
        9.8823785903188233662e-2,
    ),
    (
        0.05,
        60.0,
        -9.1470801700113532569e-2,
        4.7360849356813752486e-2,
        -4.6600306290193333827e-2,
        -9.1868654227155769515e-2,
    ),
    (
        0.05,
        300.0,
        -3.3298687276855580746e-2,
        -3.1831750765534230104e-2,
        3.1887293074062868345e-2,
        -3.3245681217597870044e-2,
    ),
    (
        0.3,
        0.0001,
        -9.1225749197361433896e-1,
        -7.1927826004246861146e-1,
        9.4772060195649283952e+2,
        -6.2312701710961253086e+3,
    ),
    (0.3, 0.5, 8.8590548479123499841e-1, -4.8347635805837964576e-1, -6.4891058957730900137e-2, 1.4726320809471363116),
    (
        0.3,
        3.0,
        -2.5408842698820799496e-1,
        3.7970707711875109435e-1,
        -3.4491351149455813928e-1,
        -3.197331356008616888e-1,
    ),
    (0.3, 8.0, 1.7283597830221991883e-1, 2.224841578152355397e-1, -2.3380912299885162931e-1, 1.5944970484004474891e-1),
    (0.3, 12.0, 4.6840255608396131306e-2, -2.253791137418064641e-1, 2.236951910718449488e-1, 5.6264077789310187127e-2),
    (
        0.3,
        25.0,
        9.6034331431648327987e-2,
        -1.2741778112100680052e-1,
        1.2553270433633382809e-1,
        9.8607363730003024424e-2,
    ),
    (
        0.3,
        60.0,
        -9.1435693382337121437e-2,
        4.7427236011734678602e-2,
        -4.666758243179876806e-2,
        -9.1835198955157263125e-2,
    ),
    (
        0.3,
        300.0,
        -3.3303320930343973737e-2,
        -3.1826886662598559546e-2,
        3.1882452104196585349e-2,
        -3.3250339224788801994e-2,
    ),
    (
        1.0,
        0.0001,
        -7.5217100757491132304e-1,
        1.4675425403910084256e-1,
        -1.3459600531713236104e+3,
        -8.201156782145538251e+3,
    ),
    (1.0, 0.5, 3.6664265208205006417e-1, -7.0180294095221594348e-1, 1.3245665735425191677, 9.37301827772938525e-1),
    (
        1.0,
        3.0,
        -1.9292648108669114578e-1,
        4.0358782912795994577e-1,
        -3.9913415235600287841e-1,
        -2.6497609048306374713e-1,
    ),
    (1.0, 8.0, 1.844557598115412388e-1, 2.1166866135597212609e-1, -2.2499884349049318829e-1, 1.7322455839990454887e-1),
    (1.0, 12.0, 3.824023519673833973e-2, -2.2663366695658401807e-1, 2.2602557142562355809e-1, 4.7767583273334162894e-2),
    (1.0, 25.0, 9.366793650623514911e-2, -1.2909586416466370057e-1, 1.2735495244619870145e-1, 9.6338123690927028389e-2),
    (
        1.0,
        60.0,
        -9.1067723751701218803e-2,
        4.8116092985529352249e-2,
        -4.736580777383896542e-2,
        -9.148435455567548914e-2,
    ),
    (
        1.0,
        300.0,
        -3.3351468744765544295e-2,
        -3.1776260073978948828e-2,
        3.1832065747260985082e-2,
        -3.329874064959362488e-2,
    ),
    (
        3.0,
        0.0001,
        3.6610359415719688956e-1,
        2.7958134688813519364e-1,
        -8.3860867971148071502e+3,
        1.0984880634880788787e+4,
    ),
    (3.0, 0.5, 2.1184283891292777053e-1, 4.0587409553342317584e-1, -2.4704376697259106614, 1.2771396538670088722),
    (3.0, 3.0, 2.6845717321507022821e-1, 2.8066666827564581783e-1, -4.1766567851907375287e-1, 3.5380599150563670537e-1),
    (3.0, 8.0, 2.5504383110821949144e-1, 9.7050583236298515035e-2, -1.1769708964544878335e-1, 2.6722818605137190816e-1),
    (3.0, 12.0, -3.6840796911023643383e-2, -2.2379116338511173015e-1, 2.322477989797093768e-1, -2.92241932930490341e-2),
    (3.0, 25.0, 7.1726233717670734077e-2, -1.4189500527595511321e-1, 1.415250564925454544e-1, 7.5050535599047813441e-2),
    (
        3.0,
        60.0,
        -8.761283946061538921e-2,
        5.4043689836850842665e-2,
        -5.338481032876537789e-2,
        -8.8174489670837567852e-2,
    ),
    (
        3.0,
        300.0,
        -3.3771418318641416246e-2,
        -3.1328073229168827096e-2,
        3.138596298892145701e-2,
        -3.3720945631069859586e-2,
    ),
    (
        10.0,
        0.0001,
        2.4386235508575505074e-1,
        6.4754374413109407178e-2,
        -6.4754374417519364281e+3,
        2.4386235509751794338e+4,
    ),
    (10.0, 0.5, -2.0600434778903179028e-1, -1.4541505469005053379e-1, 2.912407150445840941, -4.1248241058659269166),
    (
        10.0,
        3.0,
        -2.4567015530519392043e-1,
        2.5376416492064212086e-2,
        -8.4922218246882156985e-2,
        -8.5501459853186345303e-1,
    ),
    (10.0, 8.0, 5.7368793229288234141e-3, 2.229556040272023465e-1, -3.5682463448538504545e-1, 3.733673181400177583e-3),
    (
        10.0,
        12.0,
        1.1505407203951683861e-1,
        1.659242831440531472e-1,
        -2.1874993809222085185e-1,
        1.4563344638324249928e-1,
    ),
    (
        10.0,
        25.0,
        -1.4915605418130137916e-1,
        -3.7347546079281530998e-2,
        4.2798384598787164092e-2,
        -1.600094369938970463e-1,
    ),
    (
        10.0,
        60.0,
        -2.647331077387347796e-2,
        9.8817159173111631171e-2,
        -9.9968427692683020433e-2,
        -2.7640422994931122166e-2,
    ),
    (
        10.0,
        300.0,
        -3.8106926313278725049e-2,
        -2.5860147101140244759e-2,
        2.5937986398595729811e-2,
        -3.8085091203253406883e-2,
    ),
    (
        20.0,
        0.0001,
        1.7841053548795650576e-1,
        -8.1819611511195632794e-4,
        1.6363922300218594438e+2,
        3.5682107098036315515e+4,
    ),
    (20.0, 0.5, 1.3684987271073293813e-1, 1.1442544814051023784e-1, -4.5785297247964016897, 5.4756297123827563377),
    (20.0, 3.0, 8.6934001107934068955e-2, -1.546677833847802131e-1, 1.0423087620740861938, 5.8659447749732663655e-1),
    (20.0, 8.0, 1.5968900972938776851e-1, 6.3697631712216974278e-2, -1.7286530546161548907e-1, 4.293743263799289606e-1),
    (
        20.0,
        12.0,
        -1.6522267268310016654e-1,
        -8.7533495097665723233e-4,
        3.523135494256477929e-3,
        -3.2107314881300415428e-1,
    ),
    (
        20.0,
        25.0,
        -9.1198281745139711011e-2,
        -1.0755900631863409989e-1,
        1.3884555491627644202e-1,
        -1.1547038797921691588e-1,
    ),
    (
        20.0,
        60.0,
        8.0522771785889077403e-2,
        -5.9848007780467923936e-2,
        6.2482304205631223839e-2,
        8.5328509672882024122e-2,
    ),
    (
        20.0,
        300.0,
        -4.5800874836683689059e-2,
        -4.4320289710645235042e-3,
        4.5178698124759405522e-3,
        -4.5895249501040961203e-2,
    ),
];

fn envelope(nu: f64) -> f64 {
    (PI / (nu * (nu * PI).sinh())).sqrt()
}

#[test]
fn k_matches_reference_values() {
    for &(nu, x, exact) in K_REFERENCE {
        let p = ImagOrderParams::new(nu, x);
        let got = match bessel_k_imag(p) {
            Ok(v) => v,
            Err(e) => panic!("nu={nu} x={x}: {e}"),
        };
        let scale = if x < nu { exact.abs().max(envelope(nu)) } else { exact.abs() };
        let tol = if nu <= 20.0 { 1e-12 } else { 1e-9 };
        assert!((got - exact).abs() <= tol * scale, "nu={nu} x={x}: {got:e} vs {exact:e}");
    }
}

#[test]
fn hankel_matches_reference_values() {
    for &(nu, x, hr, hi, dr, di) in H_REFERENCE {
        let (h, dh) = hankel1_imag_scaled(ImagOrderParams::new(nu, x)).unwrap();
        let (eh, edh) = (Complex64::new(hr, hi), Complex64::new(dr, di));
        assert!((h - eh).norm() <= 1e-12 * eh.norm(), "nu={nu} x={x}: {h} vs {eh}");
        assert!((dh - edh).norm() <= 1e-12 * edh.norm(), "nu={nu} x={x}: {dh} vs {edh}");
    }
}

#[test]
fn k_against_quadrature_oracle_spot_checks() {
    for &(nu, x) in &[(0.5, 0.1), (2.0, 1.5), (7.0, 7.5), (15.0, 30.0), (1.0, 300.0)] {
        let q = quadrature_bessel_k(nu, x).unwrap();
        let k = bessel_k_imag(ImagOrderParams::new(nu, x)).unwrap();
        let scale = q.value.abs().max(if x < nu { envelope(nu) } else { 0.0 });
        assert!((k - q.value).abs() <= 1e-11 * scale + q.abs_error, "nu={nu} x={x}");
    }
}

#[test]
fn invalid_inputs_are_rejected() {
    for (nu, x) in [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, -2.0), (f64::NAN, 1.0), (1.0, f64::INFINITY), (1e3, 1.0)]
    {
        assert!(bessel_k_imag(ImagOrderParams::new(nu, x)).is_err());
        assert!(hankel_imag(HankelKind::First, ImagOrderParams::new(nu, x)).is_err());
    }
}

#[test]
fn deep_tail_reports_underflow() {
    assert!(bessel_k_imag(ImagOrderParams::new(1.0, 745.0)).is_err());
    let scaled = bessel_k_imag_scaled(ImagOrderParams::new(1.0, 745.0)).unwrap();
    assert!((scaled * (745.0f64).sqrt() / (PI / 2.0).sqrt() - 1.0).abs() < 1e-3);
}

#[test]
fn leading_small_argument_form() {
    for nu in [0.3, 1.0, 3.0] {
        let x = 1e-5;
        let p = ImagOrderParams::new(nu, x);
        let full = bessel_k_imag(p).unwrap();
        let lead = bessel_k_imag_small_argument(p).unwrap();
        assert!((full - lead).abs() < 1e-9 * envelope(nu));
    }
}

#[test]
fn large_argument_approach_is_first_order() {
    // e^x √x K_{iν}(x) / √(π/2) = 1 − (4ν² + 1)/(8x) + O(x⁻²)
    for nu in [0.1, 1.0, 3.0] {
        for x in [100.0, 400.0] {
            let ratio = bessel_k_imag_scaled(ImagOrderParams::new(nu, x)).unwrap() * f64::sqrt(x) / (PI / 2.0).sqrt();
            let first = (4.0 * nu * nu + 1.0) / (8.0 * x);
            let second = (4.0 * nu * nu + 1.0) * (4.0 * nu * nu + 9.0) / (128.0 * x * x);
            assert!((1.0 - ratio - first).abs() < 1.1 * second, "nu={nu} x={x}");
        }
    }
}

#[test]
fn hankel_kinds_are_conjugate() {
    for &(nu, x) in &[(0.3, 0.2), (1.0, 4.0), (3.0, 11.0), (10.0, 80.0)] {
        let p = ImagOrderParams::new(nu, x);
        let h1 = hankel_imag(HankelKind::First, p).unwrap();
        let h2 = hankel_imag(HankelKind::Second, p).unwrap();
        let rhs = h1.conj() * (-nu * PI).exp();
        assert!((h2 - rhs).norm() <= 1e-12 * h2.norm());
    }
}

fn wronskian_error(nu: f64, x: f64) -> f64 {
    let p = ImagOrderParams::new(nu, x);
    let (h1, d1) = hankel_imag_with_derivative(HankelKind::First, p).unwrap();
    let (h2, d2) = hankel_imag_with_derivative(HankelKind::Second, p).unwrap();
    let w = h1 * d2 - d1 * h2;
    let exact = Complex64::new(0.0, -4.0 / (PI * x));
    (w - exact).norm() / exact.norm()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn k_is_real_and_bounded_by_k0(nu in 0.01f64..20.0, lx in -6.0f64..2.8) {
        let x = 10f64.powf(lx);
        let k = bessel_k_imag(ImagOrderParams::new(nu, x)).unwrap();
        prop_assert!(k.is_finite());
        // |K_{iν}(x)| ≤ K_0(x) since |cos(νt)| ≤ 1 in the integral.
        let k0 = quadrature_bessel_k(0.0, x).unwrap();
        prop_assert!(k.abs() <= k0.value * (1.0 + 1e-12));
    }

    #[test]
    fn k_decays_monotonically_beyond_order(nu in 0.05f64..10.0, t in 0.0f64..1.0) {
        let x = 1.1 * nu + 1.0 + 40.0 * t;
        let a = bessel_k_imag(ImagOrderParams::new(nu, x)).unwrap();
        let b = bessel_k_imag(ImagOrderParams::new(nu, x * 1.01)).unwrap();
        prop_assert!(a > 0.0 && b < a);
    }

    #[test]
    fn wronskian_identity(nu in 0.05f64..20.0, lx in -3.0f64..2.5) {
        let x = 10f64.powf(lx);
        prop_assert!(wronskian_error(nu, x) < 1e-9);
    }

    #[test]
    fn conjugation_identity(nu in 0.05f64..20.0, lx in -3.0f64..2.5) {
        let p = ImagOrderParams::new(nu, 10f64.powf(lx));
        let h1 = hankel_imag(HankelKind::First, p).unwrap();
        let h2 = hankel_imag(HankelKind::Second, p).unwrap();
        prop_assert!((h2 - h1.conj() * (-nu * PI).exp()).norm() <= 1e-12 * h2.norm());
    }
}
