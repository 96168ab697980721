//! Order-2 parasupersymmetric quantum mechanics built from the `λ = 3`
//! algebra.
//!
//! The charge family indexed by `μ ∈ {0, 1, 2}` is
//!
//! ```text
//! Q_μ = a† (η_{μ+1} P_{μ+1} + η_{μ+2} P_{μ+2})
//! H_μ = H₀ + ½ Σ_ν r_ν P_ν
//! r_μ = -2 + α_{μ+1} + r_{μ+2},   r_{μ+1} = 2 - α_μ + r_{μ+2}
//! ```
//!
//! The canonical normalisation takes `η_{μ+1} ∈ (0, 2)` real,
//! `η_{μ+2} = e^{iφ} √(4 - η_{μ+1}²)` and
//! `r_{μ+2} = (1 + α_{μ+2})(1 - η_{μ+1}²/2)`.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::{require_fock, AlgebraParams};
use crate::error::{Error, Result};
use crate::fock::{self, FockRep};
use crate::rational::{self, half, int, to_f64, Rational};
use crate::spectrum::energy;

pub const MIN_DIM: usize = 8;

/// `η_{μ+1}`, kept with an exact square so that `r_{μ+2}` stays rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eta {
    Sqrt2,
    Value(Rational),
}

impl Eta {
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "sqrt2" | "√2" => Ok(Eta::Sqrt2),
            other => Ok(Eta::Value(rational::parse_rational(other)?)),
        }
    }

    pub fn squared(&self) -> Rational {
        match self {
            Eta::Sqrt2 => int(2),
            Eta::Value(v) => v * v,
        }
    }

    pub fn value(&self) -> f64 {
        match self {
            Eta::Sqrt2 => std::f64::consts::SQRT_2,
            Eta::Value(v) => to_f64(v),
        }
    }

    fn in_range(&self) -> bool {
        match self {
            Eta::Sqrt2 => true,
            Eta::Value(v) => v.is_positive() && *v < int(2),
        }
    }
}

impl fmt::Display for Eta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eta::Sqrt2 => f.write_str("sqrt2"),
            Eta::Value(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for Eta {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PssqmConfig {
    pub params: AlgebraParams,
    pub mu: usize,
    pub eta: Eta,
    pub phi: f64,
    pub dim: usize,
}

impl PssqmConfig {
    pub fn canonical(params: AlgebraParams, mu: usize, phi: f64, dim: usize) -> Self {
        Self { params, mu, eta: Eta::Sqrt2, phi, dim }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SusyStatus {
    Unbroken,
    Broken,
}

#[derive(Clone, Debug)]
pub struct PssqmSystem {
    pub params: AlgebraParams,
    pub mu: usize,
    pub dim: usize,
    /// `η_{μ+1}`
    pub eta_next: Complex64,
    /// `η_{μ+2}`
    pub eta_after: Complex64,
    pub q: DMatrix<Complex64>,
    pub h: DMatrix<f64>,
    /// `r₀, r₁, r₂`
    pub r: [f64; 3],
    /// Exact `r` and `H` diagonal, available when `r_{μ+2}` is rational.
    pub r_exact: Option<[Rational; 3]>,
    pub h_diagonal_exact: Option<Vec<Rational>>,
    pub ground_energy: f64,
    pub ground_energy_exact: Option<Rational>,
    pub susy_status: SusyStatus,
}

fn check_common(params: &AlgebraParams, mu: usize, dim: usize) -> Result<()> {
    if params.lambda() != 3 {
        return Err(Error::UnsupportedLambda { lambda: params.lambda(), required: 3 });
    }
    if mu > 2 {
        return Err(Error::InvalidMu(mu));
    }
    require_fock(params)?;
    if dim < MIN_DIM {
        return Err(Error::DimensionTooSmall { dim, min: MIN_DIM });
    }
    Ok(())
}

/// `(r₀, r₁, r₂)` from the free shift `r_{μ+2}`.
fn shifts<T>(params: &AlgebraParams, mu: usize, r_after: T, to: impl Fn(&Rational) -> T) -> [T; 3]
where
    T: Clone + std::ops::Add<Output = T>,
{
    let m = mu as i64;
    let mut r: [Option<T>; 3] = [None, None, None];
    r[(mu + 2) % 3] = Some(r_after.clone());
    r[mu] = Some(to(&(int(-2) + params.alpha_at(m + 1))) + r_after.clone());
    r[(mu + 1) % 3] = Some(to(&(int(2) - params.alpha_at(m))) + r_after);
    r.map(|x| x.expect("all three sectors assigned"))
}

fn charge_matrix(rep: &FockRep, mu: usize, eta_next: Complex64, eta_after: Complex64) -> DMatrix<Complex64> {
    let mix = rep.projector(mu as i64 + 1).map(|x| eta_next * x) + rep.projector(mu as i64 + 2).map(|x| eta_after * x);
    rep.creation().map(|x| Complex64::new(x, 0.0)) * mix
}

fn assemble(
    params: &AlgebraParams,
    mu: usize,
    eta_next: Complex64,
    eta_after: Complex64,
    r_after: f64,
    r_after_exact: Option<Rational>,
    dim: usize,
) -> Result<PssqmSystem> {
    let rep = fock::build(params, dim)?;
    let q = charge_matrix(&rep, mu, eta_next, eta_after);
    let r = shifts(params, mu, r_after, to_f64);
    let h = DMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            rep.hamiltonian()[(i, i)] + 0.5 * r[i % 3]
        } else {
            0.0
        }
    });
    let r_exact = r_after_exact.map(|ra| shifts(params, mu, ra, Rational::clone));
    let h_diagonal_exact = r_exact.as_ref().map(|re| {
        (0..dim as u64)
            .map(|n| energy(params, n) + &re[(n % 3) as usize] * half())
            .collect::<Vec<_>>()
    });
    // Each sector ladder rises with n, so the ground state is among |0⟩, |1⟩, |2⟩.
    let ground_energy = (0..3).map(|i| h[(i, i)]).fold(f64::INFINITY, f64::min);
    let ground_energy_exact = h_diagonal_exact
        .as_ref()
        .map(|d| d[..3].iter().min().expect("dim ≥ 8").clone());
    Ok(PssqmSystem {
        params: params.clone(),
        mu,
        dim,
        eta_next,
        eta_after,
        q,
        h,
        r,
        r_exact,
        h_diagonal_exact,
        ground_energy,
        ground_energy_exact,
        susy_status: if mu == 0 { SusyStatus::Unbroken } else { SusyStatus::Broken },
    })
}

/// Canonical Rubakov–Spiridonov charge `Q_μ(η_{μ+1}, φ)` and its Hamiltonian.
pub fn build_charge(c: &PssqmConfig) -> Result<PssqmSystem> {
    check_common(&c.params, c.mu, c.dim)?;
    if !c.eta.in_range() {
        return Err(Error::EtaOutOfRange(c.eta.to_string()));
    }
    build_with_phase(c, Complex64::from_polar(1.0, c.phi))
}

fn build_with_phase(c: &PssqmConfig, phase: Complex64) -> Result<PssqmSystem> {
    let eta_sq = c.eta.squared();
    let eta_after = (4.0 - to_f64(&eta_sq)).sqrt();
    let alpha_after = c.params.alpha_at(c.mu as i64 + 2);
    let r_after = (Rational::one() + alpha_after) * (Rational::one() - &eta_sq * half());
    assemble(
        &c.params,
        c.mu,
        Complex64::new(c.eta.value(), 0.0),
        phase * eta_after,
        to_f64(&r_after),
        Some(r_after),
        c.dim,
    )
}

/// Charge with free coefficients `η_{μ+1}`, `η_{μ+2}` and shift `r_{μ+2}`;
/// only the commutation restrictions are imposed.
pub fn build_general(
    params: &AlgebraParams,
    mu: usize,
    eta_next: Complex64,
    eta_after: Complex64,
    r_after: f64,
    dim: usize,
) -> Result<PssqmSystem> {
    check_common(params, mu, dim)?;
    if eta_next.norm() == 0.0 || eta_after.norm() == 0.0 {
        return Err(Error::EtaOutOfRange("zero coefficient".into()));
    }
    assemble(params, mu, eta_next, eta_after, r_after, None, dim)
}

impl PssqmSystem {
    /// The partner solution obtained by exchanging `Q` and `Q†`.
    pub fn conjugate_solution(&self) -> PssqmSystem {
        PssqmSystem { q: self.q.adjoint(), ..self.clone() }
    }

    /// Elements with row and column index `≤ D-4` are free of truncation
    /// effects in products of three charges.
    pub fn safe_window(&self) -> usize {
        self.dim - 3
    }

    fn h_complex(&self) -> DMatrix<Complex64> {
        self.h.map(|x| Complex64::new(x, 0.0))
    }

    /// `u Q²Q† + v QQ†Q + w Q†Q² - 4QH`.
    fn trilinear_defect(&self, u: Complex64, v: Complex64, w: Complex64) -> DMatrix<Complex64> {
        let q = &self.q;
        let qd = q.adjoint();
        let q2 = q * q;
        (&q2 * &qd) * u + (q * &qd * q) * v + (&qd * &q2) * w - (q * self.h_complex()) * Complex64::new(4.0, 0.0)
    }
}

fn window_max(m: &DMatrix<Complex64>, window: usize) -> f64 {
    let mut worst = 0.0f64;
    for j in 0..window {
        for i in 0..window {
            worst = worst.max(m[(i, j)].norm());
        }
    }
    worst
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatrixWitness {
    pub row: usize,
    pub col: usize,
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PssqmResiduals {
    pub q3: f64,
    pub commutator: f64,
    pub rs: f64,
    pub bd: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PssqmReport {
    pub tol: f64,
    pub dim: usize,
    /// Number of leading rows and columns compared.
    pub window: usize,
    pub residuals: PssqmResiduals,
    pub q_squared_witness: Option<MatrixWitness>,
    pub nilpotent: bool,
    pub commutes: bool,
    pub rubakov_spiridonov: bool,
    pub beckers_debergh: bool,
    /// Whether `α_{μ+2} = -1` with `|η_{μ+1}| = |η_{μ+2}| = √2`.
    pub beckers_debergh_expected: bool,
}

/// Checks `Q³ = 0` with `Q² ≠ 0`, `[H, Q] = 0`,
/// `Q²Q† + QQ†Q + Q†Q² = 4QH` and `[Q, [Q†, Q]] = 2QH`.
pub fn verify_pssqm(s: &PssqmSystem, tol: f64) -> PssqmReport {
    let window = s.safe_window();
    let q = &s.q;
    let q2 = q * q;
    let q3 = window_max(&(&q2 * q), window);
    let q_squared_witness = (0..window)
        .flat_map(|i| (0..window).map(move |j| (i, j)))
        .find(|&(i, j)| q2[(i, j)].norm() > 0.0)
        .map(|(row, col)| MatrixWitness { row, col, re: q2[(row, col)].re, im: q2[(row, col)].im });

    let h = s.h_complex();
    let commutator = window_max(&(&h * q - q * &h), window);

    let one = Complex64::new(1.0, 0.0);
    let rs = window_max(&s.trilinear_defect(one, one, one), window);
    // [Q,[Q†,Q]] = 2QH  ⇔  -2Q²Q† + 4QQ†Q - 2Q†Q² = 4QH
    let bd = window_max(
        &s.trilinear_defect(Complex64::new(-2.0, 0.0), Complex64::new(4.0, 0.0), Complex64::new(-2.0, 0.0)),
        window,
    );

    let sqrt2 = std::f64::consts::SQRT_2;
    let canonical_moduli = (s.eta_next.norm() - sqrt2).abs() < 1e-14 && (s.eta_after.norm() - sqrt2).abs() < 1e-14;
    let beckers_debergh_expected = canonical_moduli && *s.params.alpha_at(s.mu as i64 + 2) == int(-1);

    PssqmReport {
        tol,
        dim: s.dim,
        window,
        nilpotent: q3 < tol && q_squared_witness.is_some(),
        commutes: commutator < tol,
        rubakov_spiridonov: rs < tol,
        beckers_debergh: bd < tol,
        beckers_debergh_expected,
        residuals: PssqmResiduals { q3, commutator, rs, bd },
        q_squared_witness,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrilinearCheck {
    pub u: [f64; 2],
    pub v: [f64; 2],
    pub w: [f64; 2],
    pub residual: f64,
    pub passed: bool,
}

/// Residual of `u Q²Q† + v QQ†Q + w Q†Q² = 4QH` on the safe window.
pub fn general_trilinear_check(s: &PssqmSystem, u: Complex64, v: Complex64, w: Complex64, tol: f64) -> TrilinearCheck {
    let residual = window_max(&s.trilinear_defect(u, v, w), s.safe_window());
    TrilinearCheck { u: [u.re, u.im], v: [v.re, v.im], w: [w.re, w.im], residual, passed: residual < tol }
}

/// First branch: `u = v = w = 4 / (|η_{μ+2}|² + |η_{μ+1}|²)`.
pub fn sol1_coefficient(eta_next: Complex64, eta_after: Complex64) -> Complex64 {
    Complex64::new(4.0 / (eta_after.norm_sqr() + eta_next.norm_sqr()), 0.0)
}

/// Shift `r_{μ+2}` required by the first branch.
pub fn sol1_shift(params: &AlgebraParams, mu: usize, eta_next: Complex64, eta_after: Complex64) -> f64 {
    let (n1, n2) = (eta_next.norm_sqr(), eta_after.norm_sqr());
    (1.0 + to_f64(params.alpha_at(mu as i64 + 2))) * (n2 - n1) / (n2 + n1)
}

/// Second branch, valid when `1 + α_{μ+2} = r_{μ+2} = 0`: given a free `u`,
/// returns `(v, w)`.
pub fn sol2_coefficients(eta_next: Complex64, eta_after: Complex64, u: Complex64) -> (Complex64, Complex64) {
    let (n1, n2) = (eta_next.norm_sqr(), eta_after.norm_sqr());
    let v = (Complex64::new(4.0, 0.0) - u * n1) / n2;
    let w = (Complex64::new(4.0 * (n2 - n1), 0.0) + u * (n1 * n1)) / (n2 * n2);
    (v, w)
}

/// The two real charges `Q_μ(0)` and `Q_μ(π)` at `η_{μ+1} = √2`.
pub fn khare_charges(c: &PssqmConfig) -> Result<(PssqmSystem, PssqmSystem)> {
    check_common(&c.params, c.mu, c.dim)?;
    let canonical = PssqmConfig { eta: Eta::Sqrt2, ..c.clone() };
    Ok((
        build_with_phase(&canonical, Complex64::new(1.0, 0.0))?,
        build_with_phase(&canonical, Complex64::new(-1.0, 0.0))?,
    ))
}

/// Ground energy of `H_μ` at `η_{μ+1} = √2`: `(2γ₂-1)/2`, `(2γ₀+1)/2`,
/// `(2γ₁+3)/2` for `μ = 0, 1, 2`.
pub fn canonical_ground_energy(params: &AlgebraParams, mu: usize) -> Rational {
    let g = |m: i64| params.gamma(m) * int(2);
    match mu {
        0 => (g(2) - int(1)) * half(),
        1 => (g(0) + int(1)) * half(),
        _ => (g(1) + int(3)) * half(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Figure2Level {
    pub n: u64,
    pub sector: usize,
    pub k: u64,
    #[serde(with = "rational")]
    pub energy: Rational,
    /// Energy above the panel's ground state.
    #[serde(with = "rational")]
    pub relative: Rational,
    /// State reached by `Q_μ†`, if the matrix element is nonzero.
    pub lowered_to: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Figure2Panel {
    pub mu: usize,
    #[serde(with = "rational")]
    pub ground_energy: Rational,
    pub susy_status: SusyStatus,
    pub normalization: &'static str,
    /// Sorted by relative energy, then sector, then `n`.
    pub levels: Vec<Figure2Level>,
}

pub const FIGURE2_NORMALIZATION: &str =
    "energies shown relative to each panel's own ground state; absolute ground energies differ between panels";

/// Spectrum of `H_μ` at `η_{μ+1} = √2`, `φ = 0` for the states `n < levels`,
/// each tagged with its image under `Q_μ†`.
pub fn spectrum_figure2(p: &AlgebraParams, mu: usize, levels: usize) -> Result<Figure2Panel> {
    let dim = (levels + 1).max(MIN_DIM);
    let system = build_charge(&PssqmConfig::canonical(p.clone(), mu, 0.0, dim))?;
    let diag = system.h_diagonal_exact.as_ref().expect("canonical shifts are rational");
    let ground = system.ground_energy_exact.clone().expect("canonical shifts are rational");
    let qd = system.q.adjoint();
    let mut rows: Vec<Figure2Level> = (0..levels as u64)
        .map(|n| {
            let i = n as usize;
            let lowered_to = (i > 0 && !qd[(i - 1, i)].is_zero()).then(|| n - 1);
            Figure2Level {
                n,
                sector: i % 3,
                k: n / 3,
                energy: diag[i].clone(),
                relative: &diag[i] - &ground,
                lowered_to,
            }
        })
        .collect();
    rows.sort_by(|a, b| a.relative.cmp(&b.relative).then(a.sector.cmp(&b.sector)).then(a.n.cmp(&b.n)));
    Ok(Figure2Panel {
        mu,
        ground_energy: ground,
        susy_status: system.susy_status,
        normalization: FIGURE2_NORMALIZATION,
        levels: rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn params(a: &[i64]) -> AlgebraParams {
        AlgebraParams::from_ints(3, a).unwrap()
    }

    fn canonical(a: &[i64], mu: usize, phi: f64, dim: usize) -> PssqmSystem {
        build_charge(&PssqmConfig::canonical(params(a), mu, phi, dim)).unwrap()
    }

    #[test]
    fn canonical_charge_shape() {
        let s = canonical(&[0, 1], 0, 0.0, 14);
        let rep = fock::build(&params(&[0, 1]), 14).unwrap();
        let expected = charge_matrix(&rep, 0, Complex64::new(2f64.sqrt(), 0.0), Complex64::new(2f64.sqrt(), 0.0));
        assert!((&s.q - expected).iter().all(|z| z.norm() < 1e-15));
        assert_eq!(s.ground_energy_exact, Some(int(0)));
        assert_eq!(s.r_exact.as_ref().unwrap()[2], int(0));
        assert_eq!(s.susy_status, SusyStatus::Unbroken);
    }

    #[test]
    fn hamiltonian_matches_closed_form() {
        for mu in 0..3 {
            let p = AlgebraParams::new(3, vec![frac(3, 4), frac(-5, 3)]).unwrap();
            let s = build_charge(&PssqmConfig { params: p.clone(), mu, eta: Eta::Value(frac(1, 2)), phi: 0.3, dim: 12 }).unwrap();
            let r_after = s.r_exact.as_ref().unwrap()[(mu + 2) % 3].clone();
            let c = (p.gamma(mu as i64 + 2) * int(2) + &r_after - int(1)) * half();
            for n in 0..12usize {
                let mut want = int(n as i64) + &c;
                if n % 3 == (mu + 1) % 3 {
                    want += int(2);
                } else if n % 3 == (mu + 2) % 3 {
                    want += int(1);
                }
                assert_eq!(s.h_diagonal_exact.as_ref().unwrap()[n], want, "μ={mu} n={n}");
                assert!((s.h[(n, n)] - to_f64(&want)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn ground_energies_match_closed_forms() {
        for a in [[0, 1], [4, -3], [6, -7], [-0, 0], [1, 5]] {
            for mu in 0..3 {
                let s = canonical(&a, mu, 0.0, 9);
                assert_eq!(s.ground_energy_exact.clone().unwrap(), canonical_ground_energy(&params(&a), mu));
            }
            assert!(canonical_ground_energy(&params(&a), 1).is_positive());
            assert!(canonical_ground_energy(&params(&a), 2).is_positive());
        }
    }

    #[test]
    fn config_errors() {
        let mut c = PssqmConfig::canonical(params(&[0, 1]), 0, 0.0, 12);
        c.eta = Eta::Value(int(2));
        assert_eq!(build_charge(&c).unwrap_err(), Error::EtaOutOfRange("2".into()));
        c.eta = Eta::Value(int(0));
        assert!(matches!(build_charge(&c), Err(Error::EtaOutOfRange(_))));
        c.eta = Eta::Sqrt2;
        c.dim = 6;
        assert!(matches!(build_charge(&c), Err(Error::DimensionTooSmall { .. })));
        c.dim = 12;
        c.mu = 3;
        assert_eq!(build_charge(&c).unwrap_err(), Error::InvalidMu(3));
        let l2 = PssqmConfig::canonical(AlgebraParams::from_ints(2, &[1]).unwrap(), 0, 0.0, 12);
        assert!(matches!(build_charge(&l2), Err(Error::UnsupportedLambda { .. })));
        // α₀ = -1 puts μ = 1 on the Beckers–Debergh surface but outside the Fock region.
        let edge = PssqmConfig::canonical(params(&[-1, 3]), 1, 0.0, 12);
        assert!(matches!(build_charge(&edge), Err(Error::RepresentationMissing { .. })));
    }

    #[test]
    fn verify_examples() {
        let on_surface = verify_pssqm(&canonical(&[0, 1], 0, 0.0, 14), 1e-10);
        assert!(on_surface.nilpotent && on_surface.commutes && on_surface.rubakov_spiridonov);
        assert!(on_surface.beckers_debergh && on_surface.beckers_debergh_expected);

        let free = verify_pssqm(&canonical(&[0, 0], 0, 0.0, 14), 1e-10);
        assert!(free.nilpotent && free.commutes && free.rubakov_spiridonov);
        assert!(!free.beckers_debergh && !free.beckers_debergh_expected);

        let both = verify_pssqm(&canonical(&[1, 0], 0, 0.7, 14), 1e-10);
        assert!(both.rubakov_spiridonov && both.beckers_debergh);
        assert_eq!(both.residuals.q3, 0.0);
    }

    #[test]
    fn conjugate_solution_also_verifies() {
        let s = canonical(&[2, -1], 2, 1.1, 14).conjugate_solution();
        let report = verify_pssqm(&s, 1e-10);
        assert!(report.nilpotent && report.commutes && report.rubakov_spiridonov, "{report:?}");
    }

    #[test]
    fn trilinear_branches() {
        let s = canonical(&[3, -2], 1, 0.4, 14);
        let one = Complex64::new(1.0, 0.0);
        assert!(general_trilinear_check(&s, one, one, one, 1e-10).passed);

        let zero = Complex64::new(0.0, 0.0);
        let degenerate = general_trilinear_check(&s, zero, zero, zero, 1e-10);
        let four_qh = window_max(&((&s.q * s.h_complex()) * Complex64::new(4.0, 0.0)), s.safe_window());
        assert!(degenerate.residual > 0.0);
        assert_eq!(degenerate.residual, four_qh);

        let p = params(&[3, -2]);
        let (e1, e2) = (Complex64::new(0.9, 0.0), Complex64::from_polar(0.5, -1.2));
        let g = build_general(&p, 1, e1, e2, sol1_shift(&p, 1, e1, e2), 14).unwrap();
        let c = sol1_coefficient(e1, e2);
        assert!(general_trilinear_check(&g, c, c, c, 1e-10).passed);
        assert!(!general_trilinear_check(&g, one, one, one, 1e-10).passed);

        // α₂ = -1 for μ = 0: second branch with a free u.
        let p = params(&[2, -1]);
        let (e1, e2) = (Complex64::new(0.6, 0.0), Complex64::from_polar(1.3, 0.8));
        let g = build_general(&p, 0, e1, e2, 0.0, 14).unwrap();
        let u = Complex64::new(-0.75, 0.2);
        let (v, w) = sol2_coefficients(e1, e2, u);
        assert!(general_trilinear_check(&g, u, v, w, 1e-10).passed);
    }

    #[test]
    fn khare_charges_combine_into_single_sector_raisings() {
        let c = PssqmConfig::canonical(params(&[1, 2]), 0, 0.0, 12);
        let (q1, q2) = khare_charges(&c).unwrap();
        let rep = fock::build(&c.params, 12).unwrap();
        let adag = rep.creation().map(|x| Complex64::new(x, 0.0));
        let scale = Complex64::new(2.0 * 2f64.sqrt(), 0.0);
        let p1 = rep.projector(1).map(|x| Complex64::new(x, 0.0));
        let p2 = rep.projector(2).map(|x| Complex64::new(x, 0.0));
        assert!(((&q1.q + &q2.q) - (&adag * p1) * scale).iter().all(|z| z.norm() < 1e-14));
        assert!(((&q1.q - &q2.q) - (&adag * p2) * scale).iter().all(|z| z.norm() < 1e-14));
        for q in [&q1, &q2] {
            assert!(verify_pssqm(q, 1e-10).rubakov_spiridonov);
        }
        assert!((&q1.q * &q2.q).iter().any(|z| z.norm() > 0.0));
    }

    #[test]
    fn figure2_panels() {
        let p = params(&[0, 1]);
        let rel = |panel: &Figure2Panel, n: u64| panel.levels.iter().find(|l| l.n == n).unwrap().relative.clone();

        let p0 = spectrum_figure2(&p, 0, 9).unwrap();
        assert_eq!(rel(&p0, 0), int(0));
        assert!([1, 2, 3].iter().all(|&n| rel(&p0, n) == int(3)));

        let p1 = spectrum_figure2(&p, 1, 9).unwrap();
        assert_eq!((rel(&p1, 0), rel(&p1, 1)), (int(0), int(0)));
        assert_eq!(rel(&p1, 2), int(3));

        let p2 = spectrum_figure2(&p, 2, 9).unwrap();
        assert!([0, 1, 2].iter().all(|&n| rel(&p2, n) == int(0)));

        // Q₀† lowers sector 2 into sector 1 and sector 0 into sector 2.
        let arrows: Vec<_> = (0..6).map(|n| p0.levels.iter().find(|l| l.n == n).unwrap().lowered_to).collect();
        assert_eq!(arrows, vec![None, None, Some(1), Some(2), None, Some(4)]);
    }
}
