//! Dense matrix realisation of the algebra on the truncated Fock space
//! spanned by `|0⟩ … |D-1⟩`.
//!
//! Truncation breaks every relation that moves a state past `|D-1⟩`, so
//! relations containing `a` or `a†` are only compared on matrix elements
//! `⟨m|·|n⟩` with `m, n ≤ D-2`. Relations built from `N`, `T` and `P_μ` alone
//! hold on the whole space.

use std::fmt::Write as _;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{require_fock, structure_function, AlgebraParams};
use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};
use crate::spectrum::energy;

#[derive(Clone, Debug)]
pub struct FockRep {
    params: AlgebraParams,
    dim: usize,
    a: DMatrix<f64>,
    adag: DMatrix<f64>,
    number: DMatrix<f64>,
    t: DMatrix<Complex64>,
    projectors: Vec<DMatrix<f64>>,
    h0: DMatrix<f64>,
    /// `F(0) … F(D)`.
    structure: Vec<Rational>,
}

pub fn min_dim(lambda: usize) -> usize {
    lambda + 2
}

/// `exp(2πi n/λ)` with `n` reduced first so large `n` lose no accuracy.
fn phase(n: i64, lambda: usize) -> Complex64 {
    let reduced = n.rem_euclid(lambda as i64) as f64;
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * reduced / lambda as f64)
}

pub fn build(p: &AlgebraParams, dim: usize) -> Result<FockRep> {
    require_fock(p)?;
    let lambda = p.lambda();
    if dim < min_dim(lambda) {
        return Err(Error::DimensionTooSmall { dim, min: min_dim(lambda) });
    }
    let structure: Vec<Rational> = (0..=dim as u64).map(|n| structure_function(p, n)).collect();

    let mut a = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        a[(n - 1, n)] = to_f64(&structure[n]).sqrt();
    }
    let adag = a.transpose();
    let number = DMatrix::from_fn(dim, dim, |i, j| if i == j { i as f64 } else { 0.0 });
    let t = DMatrix::from_fn(dim, dim, |i, j| if i == j { phase(i as i64, lambda) } else { Complex64::new(0.0, 0.0) });
    let projectors = (0..lambda)
        .map(|mu| DMatrix::from_fn(dim, dim, |i, j| if i == j && i % lambda == mu { 1.0 } else { 0.0 }))
        .collect();
    let h0 = DMatrix::from_fn(dim, dim, |i, j| if i == j { to_f64(&energy(p, i as u64)) } else { 0.0 });

    Ok(FockRep { params: p.clone(), dim, a, adag, number, t, projectors, h0, structure })
}

impl FockRep {
    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn annihilation(&self) -> &DMatrix<f64> {
        &self.a
    }

    pub fn creation(&self) -> &DMatrix<f64> {
        &self.adag
    }

    pub fn number(&self) -> &DMatrix<f64> {
        &self.number
    }

    pub fn cyclic_generator(&self) -> &DMatrix<Complex64> {
        &self.t
    }

    pub fn projector(&self, mu: i64) -> &DMatrix<f64> {
        &self.projectors[self.params.sector(mu)]
    }

    pub fn projectors(&self) -> &[DMatrix<f64>] {
        &self.projectors
    }

    pub fn hamiltonian(&self) -> &DMatrix<f64> {
        &self.h0
    }

    /// Exact `F(n)` for `n = 0 … D`.
    pub fn structure_values(&self) -> &[Rational] {
        &self.structure
    }

    pub fn header(&self) -> FockHeader {
        FockHeader { params: self.params.clone(), dim: self.dim }
    }

    /// Row-major CSV dump of one operator. Complex entries take two columns
    /// (`re,im`).
    pub fn csv(&self, op: Operator) -> String {
        match op {
            Operator::A => real_csv(&self.a),
            Operator::Adag => real_csv(&self.adag),
            Operator::N => real_csv(&self.number),
            Operator::H0 => real_csv(&self.h0),
            Operator::P(mu) => real_csv(self.projector(mu as i64)),
            Operator::T => complex_csv(&self.t),
        }
    }

    #[cfg(test)]
    pub(crate) fn annihilation_mut(&mut self) -> &mut DMatrix<f64> {
        &mut self.a
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FockHeader {
    #[serde(flatten)]
    pub params: AlgebraParams,
    pub dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    A,
    Adag,
    N,
    T,
    P(usize),
    H0,
}

impl Operator {
    pub fn name(&self) -> String {
        match self {
            Operator::A => "a".into(),
            Operator::Adag => "adag".into(),
            Operator::N => "n".into(),
            Operator::T => "t".into(),
            Operator::P(mu) => format!("p{mu}"),
            Operator::H0 => "h0".into(),
        }
    }

    pub fn all(lambda: usize) -> Vec<Operator> {
        let mut ops = vec![Operator::A, Operator::Adag, Operator::N, Operator::T];
        ops.extend((0..lambda).map(Operator::P));
        ops.push(Operator::H0);
        ops
    }
}

fn real_csv(m: &DMatrix<f64>) -> String {
    let mut out = String::new();
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| format!("{}", m[(i, j)])).collect();
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

fn complex_csv(m: &DMatrix<Complex64>) -> String {
    let mut out = String::new();
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols())
            .map(|j| format!("{},{}", m[(i, j)].re, m[(i, j)].im))
            .collect();
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationResidual {
    pub relation: &'static str,
    pub residual: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub tol: f64,
    pub dim: usize,
    pub residuals: Vec<RelationResidual>,
    pub passed: bool,
}

impl RelationReport {
    pub fn residual(&self, relation: &str) -> Option<f64> {
        self.residuals.iter().find(|r| r.relation == relation).map(|r| r.residual)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.residuals.iter().filter(|r| !r.passed).map(|r| r.relation).collect()
    }
}

/// Relation names, in report order.
pub const RELATIONS: [&str; 8] = [
    "[N,a+]=a+",
    "[N,T]=0",
    "T^lambda=I",
    "[a,a+]=I+sum(alpha P)",
    "a+T=exp(-2pi i/lambda)Ta+",
    "a+P_mu=P_(mu+1)a+",
    "sum(P)=I",
    "a+a=F(N),aa+=F(N+1)",
];

/// Largest `|m_ij|` over `i, j < window`.
fn max_abs<T, F: Fn(&T) -> f64>(m: &DMatrix<T>, window: usize, norm: F) -> f64 {
    let mut worst = 0.0f64;
    for j in 0..window.min(m.ncols()) {
        for i in 0..window.min(m.nrows()) {
            worst = worst.max(norm(&m[(i, j)]));
        }
    }
    worst
}

fn real_max(m: &DMatrix<f64>, window: usize) -> f64 {
    max_abs(m, window, |x| x.abs())
}

fn complex_max(m: &DMatrix<Complex64>, window: usize) -> f64 {
    max_abs(m, window, |z| z.norm())
}

fn complexify(m: &DMatrix<f64>) -> DMatrix<Complex64> {
    m.map(|x| Complex64::new(x, 0.0))
}

/// Checks the defining relations, each reported with its largest residual.
pub fn verify_relations(r: &FockRep, tol: f64) -> RelationReport {
    let d = r.dim;
    let lambda = r.params.lambda();
    let safe = d - 1;
    let identity = DMatrix::<f64>::identity(d, d);
    let (a, adag, n) = (&r.a, &r.adag, &r.number);

    let ladder = real_max(&(n * adag - adag * n - adag), safe);
    let n_t = complex_max(&(complexify(n) * &r.t - &r.t * complexify(n)), d);

    let mut t_pow = DMatrix::<Complex64>::identity(d, d);
    for _ in 0..lambda {
        t_pow = &t_pow * &r.t;
    }
    let cyclic = complex_max(&(t_pow - DMatrix::<Complex64>::identity(d, d)), d);

    let mut g = identity.clone();
    for (alpha, p) in r.params.alpha().iter().zip(&r.projectors) {
        g += p * to_f64(alpha);
    }
    let commutator = real_max(&(a * adag - adag * a - g), safe);

    let adag_c = complexify(adag);
    let twist = phase(-1, lambda);
    let braiding = complex_max(&(&adag_c * &r.t - (&r.t * &adag_c) * twist), safe);

    let shifting = (0..lambda as i64)
        .map(|mu| real_max(&(adag * r.projector(mu) - r.projector(mu + 1) * adag), safe))
        .fold(0.0, f64::max);

    let completeness = real_max(&(r.projectors.iter().fold(DMatrix::zeros(d, d), |acc, p| acc + p) - &identity), d);

    let f_n = DMatrix::from_fn(d, d, |i, j| if i == j { to_f64(&r.structure[i]) } else { 0.0 });
    let f_n1 = DMatrix::from_fn(d, d, |i, j| if i == j { to_f64(&r.structure[i + 1]) } else { 0.0 });
    let fock = real_max(&(adag * a - f_n), safe).max(real_max(&(a * adag - f_n1), safe));

    let values = [ladder, n_t, cyclic, commutator, braiding, shifting, completeness, fock];
    let residuals: Vec<_> = RELATIONS
        .iter()
        .zip(values)
        .map(|(&relation, residual)| RelationResidual { relation, residual, passed: residual < tol })
        .collect();
    let passed = residuals.iter().all(|r| r.passed);
    RelationReport { tol, dim: d, residuals, passed }
}
