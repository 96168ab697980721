//! Exact arithmetic in Q(√3) and its Gaussian extension.
//!
//! Every `12`-th root of unity has real and imaginary parts in Q(√3), so the
//! discrete Fourier phases `exp(2πi·j/λ)` are exact whenever `λ` divides 12.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rational::{frac, int, to_f64, Rational};

/// `rational + sqrt3·√3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd3 {
    pub rational: Rational,
    pub sqrt3: Rational,
}

impl Surd3 {
    pub fn new(rational: Rational, sqrt3: Rational) -> Self {
        Self { rational, sqrt3 }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new(r, Rational::zero())
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.sqrt3.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.sqrt3.is_zero()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.rational * r, &self.sqrt3 * r)
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.rational) + to_f64(&self.sqrt3) * 3f64.sqrt()
    }

    pub fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Add for &Surd3 {
    type Output = Surd3;
    fn add(self, o: &Surd3) -> Surd3 {
        Surd3::new(&self.rational + &o.rational, &self.sqrt3 + &o.sqrt3)
    }
}

impl Sub for &Surd3 {
    type Output = Surd3;
    fn sub(self, o: &Surd3) -> Surd3 {
        Surd3::new(&self.rational - &o.rational, &self.sqrt3 - &o.sqrt3)
    }
}

impl Mul for &Surd3 {
    type Output = Surd3;
    fn mul(self, o: &Surd3) -> Surd3 {
        Surd3::new(
            &self.rational * &o.rational + int(3) * &self.sqrt3 * &o.sqrt3,
            &self.rational * &o.sqrt3 + &self.sqrt3 * &o.rational,
        )
    }
}

impl Neg for &Surd3 {
    type Output = Surd3;
    fn neg(self) -> Surd3 {
        Surd3::new(-&self.rational, -&self.sqrt3)
    }
}

/// Complex number with both parts in Q(√3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdComplex {
    pub re: Surd3,
    pub im: Surd3,
}

impl SurdComplex {
    pub fn new(re: Surd3, im: Surd3) -> Self {
        Self { re, im }
    }

    pub fn from_rationals(re: Rational, im: Rational) -> Self {
        Self::new(Surd3::from_rational(re), Surd3::from_rational(im))
    }

    pub fn zero() -> Self {
        Self::new(Surd3::zero(), Surd3::zero())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.re.scale(r), self.im.scale(r))
    }

    pub fn to_complex64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl Add for &SurdComplex {
    type Output = SurdComplex;
    fn add(self, o: &SurdComplex) -> SurdComplex {
        SurdComplex::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Mul for &SurdComplex {
    type Output = SurdComplex;
    fn mul(self, o: &SurdComplex) -> SurdComplex {
        SurdComplex::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }
}

/// `cos(k·30°)` for `k` in `0..12`.
fn cos_twelfth(k: usize) -> Surd3 {
    let z = Rational::zero;
    match k % 12 {
        0 => Surd3::new(int(1), z()),
        1 => Surd3::new(z(), frac(1, 2)),
        2 => Surd3::new(frac(1, 2), z()),
        3 => Surd3::zero(),
        4 => Surd3::new(frac(-1, 2), z()),
        5 => Surd3::new(z(), frac(-1, 2)),
        6 => Surd3::new(int(-1), z()),
        7 => Surd3::new(z(), frac(-1, 2)),
        8 => Surd3::new(frac(-1, 2), z()),
        9 => Surd3::zero(),
        10 => Surd3::new(frac(1, 2), z()),
        _ => Surd3::new(z(), frac(1, 2)),
    }
}

/// Exact `exp(2πi·j/λ)`, or `None` when `λ` does not divide 12.
pub fn root_of_unity(j: i64, lambda: usize) -> Option<SurdComplex> {
    if lambda == 0 || 12 % lambda != 0 {
        return None;
    }
    let step = (12 / lambda) as i64;
    let k = (j * step).rem_euclid(12) as usize;
    // sin θ = cos(θ - 90°)
    Some(SurdComplex::new(cos_twelfth(k), cos_twelfth(k + 9)))
}
