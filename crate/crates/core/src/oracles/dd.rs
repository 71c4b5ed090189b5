//! Double-double arithmetic: an unevaluated sum `hi + lo` with about 106
//! significant bits.

use core::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

const LN2: Dd = Dd { hi: core::f64::consts::LN_2, lo: 2.319_046_813_846_299_6e-17 };
const PIO2: Dd = Dd { hi: core::f64::consts::FRAC_PI_2, lo: 6.123_233_995_736_766e-17 };

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, libm::fma(a, b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two doubles.
    pub fn product(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }

    /// Multiplication by a power of two, exact.
    pub fn ldexp(self, k: i32) -> Self {
        let f = libm::ldexp(1.0, k);
        Dd { hi: self.hi * f, lo: self.lo * f }
    }

    /// `e^x`, returning zero below the underflow threshold.
    pub fn exp(self) -> Self {
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = libm::round(self.hi / LN2.hi);
        let r = (self - LN2.mul_f64(k)).ldexp(-5);
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for n in 1..=16 {
            term = term * r / Dd::from_f64(f64::from(n));
            sum = sum + term;
        }
        for _ in 0..5 {
            sum = sum * sum;
        }
        sum.ldexp(k as i32)
    }

    /// `cos x` with argument reduction by `π/2` in double-double.
    pub fn cos(self) -> Self {
        let k = libm::round(self.hi / PIO2.hi);
        let r = self - PIO2.mul_f64(k);
        let (s, c) = sin_cos_small(r);
        match (k as i64).rem_euclid(4) {
            0 => c,
            1 => -s,
            2 => -c,
            _ => s,
        }
    }
}

fn sin_cos_small(r: Dd) -> (Dd, Dd) {
    let r2 = r * r;
    let mut s_term = r;
    let mut s = r;
    let mut c_term = Dd::ONE;
    let mut c = Dd::ONE;
    for n in 1..=16 {
        let k = 2.0 * n as f64;
        c_term = -(c_term * r2 / Dd::from_f64((k - 1.0) * k));
        s_term = -(s_term * r2 / Dd::from_f64(k * (k + 1.0)));
        c = c + c_term;
        s = s + s_term;
    }
    (s, c)
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Div for Dd {
    type Output = Dd;

    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from_f64(q3)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}
