//! Algebra parameters and the quantities derived from them.
//!
//! An algebra of order `λ` is fixed by `λ` real numbers `α₀ … α_{λ-1}` that
//! sum to zero, so only the first `λ-1` are independent. Everything here is
//! exact rational arithmetic except the gamma-function form of the state
//! norms.

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, int, to_f64, Rational};
use crate::surd::{root_of_unity, SurdComplex};

/// Tolerance used when the κ ↔ α maps fall back to floating point.
pub const KAPPA_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraParams {
    lambda: usize,
    alpha: Vec<Rational>,
}

impl AlgebraParams {
    /// Builds the parameter set from the `λ-1` independent values
    /// `α₀ … α_{λ-2}`; `α_{λ-1}` is fixed by the zero-sum constraint.
    pub fn new(lambda: usize, independent: Vec<Rational>) -> Result<Self> {
        if lambda < 2 {
            return Err(Error::InvalidLambda(lambda));
        }
        if independent.len() != lambda - 1 {
            return Err(Error::WrongParamCount {
                expected: lambda - 1,
                got: independent.len(),
            });
        }
        let last = -independent.iter().fold(Rational::zero(), |acc, a| acc + a);
        let mut alpha = independent;
        alpha.push(last);
        Ok(Self { lambda, alpha })
    }

    /// Builds the parameter set from all `λ` values, which must sum to zero.
    pub fn from_full(lambda: usize, alpha: Vec<Rational>) -> Result<Self> {
        if lambda < 2 {
            return Err(Error::InvalidLambda(lambda));
        }
        if alpha.len() != lambda {
            return Err(Error::WrongParamCount { expected: lambda, got: alpha.len() });
        }
        if !alpha.iter().fold(Rational::zero(), |acc, a| acc + a).is_zero() {
            return Err(Error::AlphaSumNonzero);
        }
        Ok(Self { lambda, alpha })
    }

    /// Convenience constructor from integer independent parameters.
    pub fn from_ints(lambda: usize, independent: &[i64]) -> Result<Self> {
        Self::new(lambda, independent.iter().map(|&a| int(a)).collect())
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    /// `α_μ` with the index taken modulo `λ`.
    pub fn alpha_at(&self, mu: i64) -> &Rational {
        &self.alpha[self.sector(mu)]
    }

    pub fn independent(&self) -> &[Rational] {
        &self.alpha[..self.lambda - 1]
    }

    pub fn sector(&self, n: i64) -> usize {
        n.rem_euclid(self.lambda as i64) as usize
    }

    /// `β_μ = Σ_{ν<μ} α_ν`, with `β₀ = 0`; the index is taken modulo `λ`.
    pub fn beta(&self, mu: i64) -> Rational {
        let mu = self.sector(mu);
        self.alpha[..mu].iter().fold(Rational::zero(), |acc, a| acc + a)
    }

    /// `γ_μ = (β_μ + β_{μ+1}) / 2`.
    pub fn gamma(&self, mu: i64) -> Rational {
        (self.beta(mu) + self.beta(mu + 1)) / int(2)
    }

    pub fn derived(&self) -> DerivedParams {
        let l = self.lambda as i64;
        let beta: Vec<_> = (0..l).map(|m| self.beta(m)).collect();
        let gamma = (0..l).map(|m| self.gamma(m)).collect();
        let beta_bar = beta
            .iter()
            .enumerate()
            .map(|(nu, b)| (b + int(nu as i64)) / int(l))
            .collect();
        DerivedParams { beta, gamma, beta_bar }
    }
}

#[derive(Serialize, Deserialize)]
struct ParamsRepr {
    lambda: usize,
    #[serde(with = "rational::list")]
    alpha: Vec<Rational>,
}

impl Serialize for AlgebraParams {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ParamsRepr { lambda: self.lambda, alpha: self.independent().to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraParams {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ParamsRepr::deserialize(d)?;
        AlgebraParams::new(repr.lambda, repr.alpha).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedParams {
    #[serde(with = "rational::list")]
    pub beta: Vec<Rational>,
    #[serde(with = "rational::list")]
    pub gamma: Vec<Rational>,
    #[serde(with = "rational::list")]
    pub beta_bar: Vec<Rational>,
}

/// `κ₁ … κ_{λ-1}`, stored at indices `0 … λ-2`.
#[derive(Clone, Debug, PartialEq)]
pub enum KappaValues {
    /// Parts in Q(√3); exact when `λ` divides 12.
    Exact(Vec<SurdComplex>),
    Approx(Vec<Complex64>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct KappaParams {
    pub lambda: usize,
    pub kappa: KappaValues,
}

impl KappaParams {
    pub fn exact(lambda: usize, kappa: Vec<SurdComplex>) -> Result<Self> {
        let k = Self { lambda, kappa: KappaValues::Exact(kappa) };
        k.validate()?;
        Ok(k)
    }

    pub fn approx(lambda: usize, kappa: Vec<Complex64>) -> Result<Self> {
        let k = Self { lambda, kappa: KappaValues::Approx(kappa) };
        k.validate()?;
        Ok(k)
    }

    /// Real-part/imaginary-part rational pairs for `κ₁ … κ_{λ-1}`.
    pub fn from_rational_parts(lambda: usize, parts: &[(Rational, Rational)]) -> Result<Self> {
        let kappa = parts
            .iter()
            .map(|(re, im)| SurdComplex::from_rationals(re.clone(), im.clone()))
            .collect();
        Self::exact(lambda, kappa)
    }

    fn len(&self) -> usize {
        match &self.kappa {
            KappaValues::Exact(v) => v.len(),
            KappaValues::Approx(v) => v.len(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.lambda < 2 {
            return Err(Error::InvalidLambda(self.lambda));
        }
        if self.len() != self.lambda - 1 {
            return Err(Error::WrongParamCount { expected: self.lambda - 1, got: self.len() });
        }
        for mu in 1..self.lambda {
            let partner = self.lambda - mu;
            let ok = match &self.kappa {
                KappaValues::Exact(v) => v[mu - 1].conj() == v[partner - 1],
                KappaValues::Approx(v) => (v[mu - 1].conj() - v[partner - 1]).norm() <= KAPPA_TOLERANCE,
            };
            if !ok {
                return Err(Error::ConjugacyViolation { mu, partner });
            }
        }
        Ok(())
    }

    pub fn to_complex64(&self) -> Vec<Complex64> {
        match &self.kappa {
            KappaValues::Exact(v) => v.iter().map(SurdComplex::to_complex64).collect(),
            KappaValues::Approx(v) => v.clone(),
        }
    }
}

/// `α_μ = Σ_{ν=1}^{λ-1} exp(2πiμν/λ) κ_ν`.
pub fn from_kappa(k: &KappaParams) -> Result<AlgebraParams> {
    k.validate()?;
    let lambda = k.lambda;
    if let (KappaValues::Exact(kappa), Some(_)) = (&k.kappa, root_of_unity(0, lambda)) {
        let mut alpha = Vec::with_capacity(lambda);
        for mu in 0..lambda {
            let mut acc = SurdComplex::zero();
            for (i, kv) in kappa.iter().enumerate() {
                let phase = root_of_unity((mu * (i + 1)) as i64, lambda).expect("λ divides 12");
                acc = &acc + &(&phase * kv);
            }
            if !acc.im.is_zero() {
                return Err(Error::NonRealAlpha { mu, residue: acc.im.abs_f64() });
            }
            if !acc.re.is_rational() {
                return Err(Error::IrrationalAlpha { mu });
            }
            alpha.push(acc.re.rational);
        }
        return AlgebraParams::from_full(lambda, alpha);
    }

    let kappa = k.to_complex64();
    let mut alpha = Vec::with_capacity(lambda);
    for mu in 0..lambda {
        let value: Complex64 = kappa
            .iter()
            .enumerate()
            .map(|(i, kv)| kv * phase_f64((mu * (i + 1)) as i64, lambda))
            .sum();
        if value.im.abs() > KAPPA_TOLERANCE {
            return Err(Error::NonRealAlpha { mu, residue: value.im.abs() });
        }
        alpha.push(rational::approximate(value.re, KAPPA_TOLERANCE).ok_or(Error::IrrationalAlpha { mu })?);
    }
    let last = alpha.pop().expect("λ ≥ 2");
    let params = AlgebraParams::new(lambda, alpha)?;
    if (to_f64(params.alpha_at(-1)) - to_f64(&last)).abs() > KAPPA_TOLERANCE {
        return Err(Error::AlphaSumNonzero);
    }
    Ok(params)
}

/// `κ_ν = (1/λ) Σ_μ exp(-2πiμν/λ) α_μ`, the inverse of [`from_kappa`].
pub fn to_kappa(p: &AlgebraParams) -> KappaParams {
    let lambda = p.lambda();
    let inv = Rational::new(One::one(), (lambda as i64).into());
    if root_of_unity(0, lambda).is_some() {
        let kappa = (1..lambda)
            .map(|nu| {
                let mut acc = SurdComplex::zero();
                for (mu, a) in p.alpha().iter().enumerate() {
                    let phase = root_of_unity(-((mu * nu) as i64), lambda).expect("λ divides 12");
                    acc = &acc + &phase.scale(a);
                }
                acc.scale(&inv)
            })
            .collect();
        return KappaParams { lambda, kappa: KappaValues::Exact(kappa) };
    }
    let kappa = (1..lambda)
        .map(|nu| {
            let s: Complex64 = p
                .alpha()
                .iter()
                .enumerate()
                .map(|(mu, a)| phase_f64(-((mu * nu) as i64), lambda) * to_f64(a))
                .sum();
            s / lambda as f64
        })
        .collect();
    KappaParams { lambda, kappa: KappaValues::Approx(kappa) }
}

fn phase_f64(j: i64, lambda: usize) -> Complex64 {
    let reduced = j.rem_euclid(lambda as i64) as f64;
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * reduced / lambda as f64)
}

/// `F(n) = n + β_{n mod λ}`.
pub fn structure_function(p: &AlgebraParams, n: u64) -> Rational {
    Rational::from_integer(n.into()) + p.beta(p.sector(n as i64) as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FockExistence {
    pub exists: bool,
    /// Sectors `μ ∈ [1, λ-1]` with `F(μ) ≤ 0`.
    pub violated: Vec<usize>,
}

/// The Fock representation exists iff `F(μ) > 0` for `μ = 1 … λ-1`.
pub fn fock_space_exists(p: &AlgebraParams) -> FockExistence {
    let violated: Vec<usize> = (1..p.lambda())
        .filter(|&mu| !structure_function(p, mu as u64).is_positive())
        .collect();
    FockExistence { exists: violated.is_empty(), violated }
}

pub(crate) fn require_fock(p: &AlgebraParams) -> Result<()> {
    let check = fock_space_exists(p);
    if check.exists {
        Ok(())
    } else {
        Err(Error::RepresentationMissing { violated: check.violated })
    }
}

/// `N_n = Π_{i=1}^{n} F(i)`; the vacuum norm is 1.
pub fn norm_product(p: &AlgebraParams, n: u64) -> Result<Rational> {
    require_fock(p)?;
    Ok((1..=n).fold(Rational::one(), |acc, i| acc * structure_function(p, i)))
}

/// Gamma-function closed form of the state norm, evaluated through `ln Γ`.
pub fn norm_gamma(p: &AlgebraParams, n: u64) -> Result<f64> {
    require_fock(p)?;
    let lambda = p.lambda() as u64;
    let (k, mu) = (n / lambda, (n % lambda) as usize);
    let beta_bar = p.derived().beta_bar;

    let mut log_norm = n as f64 * (lambda as f64).ln();
    for (nu, bb) in beta_bar.iter().enumerate() {
        let shift = if nu <= mu { k + 1 } else { k };
        log_norm += ln_gamma(&(bb + Rational::from_integer(shift.into())))?;
    }
    for bb in &beta_bar[1..] {
        log_norm -= ln_gamma(bb)?;
    }
    Ok(log_norm.exp())
}

fn ln_gamma(x: &Rational) -> Result<f64> {
    if !x.is_positive() && rational::is_integer(x) {
        return Err(Error::GammaPole { argument: rational::format_rational(x) });
    }
    let (value, sign) = libm::lgamma_r(to_f64(x));
    if sign < 0 {
        // Only reachable for parameters outside the Fock region.
        return Err(Error::GammaPole { argument: rational::format_rational(x) });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn params(lambda: usize, a: &[i64]) -> AlgebraParams {
        AlgebraParams::from_ints(lambda, a).unwrap()
    }

    #[test]
    fn last_alpha_is_derived() {
        let p = params(3, &[0, 1]);
        assert_eq!(p.alpha(), &[int(0), int(1), int(-1)]);
        assert!(AlgebraParams::from_ints(1, &[]).is_err());
        assert_eq!(
            AlgebraParams::from_ints(3, &[1]),
            Err(Error::WrongParamCount { expected: 2, got: 1 })
        );
        assert_eq!(
            AlgebraParams::from_full(3, vec![int(1), int(1), int(1)]),
            Err(Error::AlphaSumNonzero)
        );
    }

    #[test]
    fn structure_function_examples() {
        let p = params(3, &[0, 1]);
        let got: Vec<_> = (0..6).map(|n| structure_function(&p, n)).collect();
        assert_eq!(got, [0, 1, 3, 3, 4, 6].map(int));

        let free = params(2, &[0]);
        for n in 0..20 {
            assert_eq!(structure_function(&free, n), int(n as i64));
        }

        let q = params(3, &[4, -3]);
        assert_eq!(structure_function(&q, 1), int(5));
        assert_eq!(structure_function(&q, 2), int(3));
    }

    #[test]
    fn derived_gamma_matches_piecewise_form() {
        let p = params(3, &[0, 1]);
        let d = p.derived();
        assert_eq!(d.beta, vec![int(0), int(0), int(1)]);
        assert_eq!(d.gamma, vec![int(0), frac(1, 2), frac(1, 2)]);
        assert_eq!(d.beta_bar, vec![int(0), frac(1, 3), int(1)]);
    }

    #[test]
    fn fock_existence_examples() {
        assert!(fock_space_exists(&params(3, &[0, 1])).exists);
        let edge = fock_space_exists(&params(2, &[-1]));
        assert!(!edge.exists);
        assert_eq!(edge.violated, vec![1]);
        let p = AlgebraParams::new(3, vec![frac(-1, 2), frac(-8, 5)]).unwrap();
        assert_eq!(fock_space_exists(&p).violated, vec![2]);
    }

    #[test]
    fn norm_product_examples() {
        assert_eq!(norm_product(&params(3, &[0, 1]), 0).unwrap(), int(1));
        assert_eq!(norm_product(&params(3, &[0, 1]), 4).unwrap(), int(36));
        assert_eq!(norm_product(&params(2, &[0]), 5).unwrap(), int(120));
        assert!(matches!(
            norm_product(&params(2, &[-1]), 3),
            Err(Error::RepresentationMissing { .. })
        ));
    }

    #[test]
    fn norm_gamma_examples() {
        let close = |a: f64, b: f64| ((a / b) - 1.0).abs() < 1e-10;
        assert!(close(norm_gamma(&params(2, &[0]), 5).unwrap(), 120.0));
        assert!(close(norm_gamma(&params(3, &[0, 1]), 4).unwrap(), 36.0));
        assert!(close(norm_gamma(&params(3, &[4, -3]), 3).unwrap(), 45.0));
        assert!(close(norm_gamma(&params(3, &[4, -3]), 0).unwrap(), 1.0));
    }

    #[test]
    fn kappa_examples() {
        let zero = KappaParams::from_rational_parts(3, &[(int(0), int(0)), (int(0), int(0))]).unwrap();
        assert_eq!(from_kappa(&zero).unwrap(), params(3, &[0, 0]));

        let k = KappaParams::from_rational_parts(3, &[(int(2), int(0)), (int(2), int(0))]).unwrap();
        assert_eq!(from_kappa(&k).unwrap().alpha(), &[int(4), int(-2), int(-2)]);

        let c = frac(7, 3);
        let k2 = KappaParams::from_rational_parts(2, &[(c.clone(), int(0))]).unwrap();
        assert_eq!(from_kappa(&k2).unwrap().alpha(), &[c.clone(), -c.clone()]);

        let back = to_kappa(&params(3, &[4, -2]));
        let expected: Vec<_> = [2, 2].iter().map(|&v| SurdComplex::from_rationals(int(v), int(0))).collect();
        assert_eq!(back.kappa, KappaValues::Exact(expected));

        let c_back = to_kappa(&AlgebraParams::new(2, vec![c.clone()]).unwrap());
        assert_eq!(c_back.kappa, KappaValues::Exact(vec![SurdComplex::from_rationals(c, int(0))]));
    }

    #[test]
    fn kappa_with_imaginary_part_uses_sqrt3() {
        // α₁ = -Re κ₁ - √3 Im κ₁, with Im κ₁ = √3/3 giving α₁ = -Re κ₁ - 1.
        use crate::surd::Surd3;
        let im = Surd3::new(int(0), frac(1, 3));
        let k1 = SurdComplex::new(Surd3::from_rational(int(1)), im.clone());
        let k = KappaParams::exact(3, vec![k1.clone(), k1.conj()]).unwrap();
        let p = from_kappa(&k).unwrap();
        assert_eq!(p.alpha(), &[int(2), int(-2), int(0)]);

        let irrational = KappaParams::from_rational_parts(3, &[(int(0), int(1)), (int(0), int(-1))]).unwrap();
        assert_eq!(from_kappa(&irrational), Err(Error::IrrationalAlpha { mu: 1 }));
    }

    #[test]
    fn conjugacy_is_enforced() {
        let bad = KappaParams::from_rational_parts(3, &[(int(1), int(1)), (int(1), int(1))]);
        assert_eq!(bad, Err(Error::ConjugacyViolation { mu: 1, partner: 2 }));
        let bad2 = KappaParams::from_rational_parts(2, &[(int(1), int(1))]);
        assert!(matches!(bad2, Err(Error::ConjugacyViolation { .. })));
    }

    #[test]
    fn floating_kappa_path_round_trips_for_lambda_five() {
        let p = AlgebraParams::new(5, vec![frac(1, 2), int(-1), frac(3, 7), int(2)]).unwrap();
        let k = to_kappa(&p);
        assert!(matches!(k.kappa, KappaValues::Approx(_)));
        assert_eq!(from_kappa(&k).unwrap(), p);
    }

    #[test]
    fn params_json_round_trip() {
        let p = AlgebraParams::new(3, vec![frac(-1, 2), int(4)]).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"lambda":3,"alpha":["-1/2","4"]}"#);
        let back: AlgebraParams = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<AlgebraParams>(r#"{"lambda":3,"alpha":["1"]}"#).is_err());
    }
}
