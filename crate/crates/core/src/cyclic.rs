//! Cyclic shape invariant spectra: level spacings that repeat with period `λ`.
//!
//! The shifted Hamiltonian `H₀' = (Ω/λ)(H₀ - E_gs)` is used with `Ω = λ`, so
//! rescaling reduces to a shift and every spacing pattern is normalised to
//! sum to `λ`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{require_fock, AlgebraParams};
use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};
use crate::spectrum::{classify_ground_order, degeneracy_profile, energy, lowest_levels, DegeneracyProfile, GroundOrder};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicSpectrumSpec {
    pub lambda: usize,
    #[serde(with = "rational::list")]
    pub omega: Vec<Rational>,
    #[serde(rename = "Omega", with = "rational")]
    pub omega_total: Rational,
}

impl CyclicSpectrumSpec {
    pub fn new(omega: Vec<Rational>) -> Result<Self> {
        if omega.len() < 2 {
            return Err(Error::InvalidSpec(format!("need at least two spacings, got {}", omega.len())));
        }
        if let Some(bad) = omega.iter().find(|w| !w.is_positive()) {
            return Err(Error::InvalidSpec(format!("spacing {bad} is not positive")));
        }
        let omega_total = omega.iter().fold(Rational::zero(), |acc, w| acc + w);
        Ok(Self { lambda: omega.len(), omega, omega_total })
    }

    /// Excited levels `kΩ + Σ_{ν<j} ω_ν` above a ground state at 0.
    pub fn levels(&self, count: usize) -> Vec<Rational> {
        let mut out = Vec::with_capacity(count);
        let mut e = Rational::zero();
        for i in 0..count {
            out.push(e.clone());
            e += &self.omega[i % self.lambda];
        }
        out
    }
}

/// JSON input form, `{"omega": ["p/q", ...]}`.
#[derive(Clone, Debug, Deserialize)]
pub struct OmegaInput {
    #[serde(with = "rational::list")]
    pub omega: Vec<Rational>,
}

impl TryFrom<OmegaInput> for CyclicSpectrumSpec {
    type Error = Error;
    fn try_from(input: OmegaInput) -> Result<Self> {
        CyclicSpectrumSpec::new(input.omega)
    }
}

/// For `λ = 2` the algebra reproduces the Calogero spectrum, while period-2
/// shape invariant potentials carry an extra δ-singularity at the origin.
pub fn shape_invariance_caveat(lambda: usize) -> Option<&'static str> {
    (lambda == 2).then_some(
        "lambda = 2: spectrum is that of the two-particle Calogero Hamiltonian; \
         period-2 cyclic shape invariant potentials additionally carry a delta-function singularity",
    )
}

/// Distinct energies of `H₀` minus the ground energy, ascending.
pub fn rescaled_spectrum(p: &AlgebraParams, num_levels: usize) -> Result<Vec<Rational>> {
    require_fock(p)?;
    let levels = lowest_levels(p, num_levels * p.lambda());
    let ground = match levels.first() {
        Some(l) => l.energy.clone(),
        None => return Ok(Vec::new()),
    };
    let mut out: Vec<Rational> = Vec::with_capacity(num_levels);
    for level in levels {
        let shifted = level.energy - &ground;
        if out.last() != Some(&shifted) {
            out.push(shifted);
        }
        if out.len() == num_levels {
            break;
        }
    }
    Ok(out)
}

fn require_lambda3(lambda: usize) -> Result<()> {
    if lambda != 3 {
        return Err(Error::UnsupportedLambda { lambda, required: 3 });
    }
    Ok(())
}

/// Reads the spacing pattern off a nondegenerate `λ = 3` spectrum.
pub fn extract_omegas(p: &AlgebraParams) -> Result<CyclicSpectrumSpec> {
    require_lambda3(p.lambda())?;
    require_fock(p)?;
    if degeneracy_profile(p)? != DegeneracyProfile::Nondegenerate {
        return Err(Error::DegenerateSpectrum);
    }
    let ground: Vec<_> = (0..3).map(|n| energy(p, n)).collect();
    let span = ground.iter().max().expect("three sectors") - ground.iter().min().expect("three sectors");
    let periods = (span / int(3)).ceil().to_integer();
    let periods: usize = periods.try_into().unwrap_or(0);
    let levels = rescaled_spectrum(p, 3 * (periods + 3) + 1)?;
    let gaps: Vec<Rational> = levels.windows(2).map(|w| &w[1] - &w[0]).collect();
    if gaps.iter().any(Zero::is_zero) {
        return Err(Error::DegenerateSpectrum);
    }
    if gaps.iter().zip(gaps.iter().skip(3)).any(|(x, y)| x != y) {
        return Err(Error::NotPeriodic);
    }
    CyclicSpectrumSpec::new(gaps[..3].to_vec())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchCandidate {
    pub case: GroundOrder,
    pub params: AlgebraParams,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaMatch {
    pub case: GroundOrder,
    pub params: AlgebraParams,
    /// Further admissible preimages from the remaining ground orderings.
    pub alternatives: Vec<MatchCandidate>,
}

/// Inverts the gap equations of each ground ordering. With `d₁₀ = E₁-E₀`,
/// `d₂₁ = E₂-E₁`, `d₂₀ = E₂-E₀`:
///
/// - I   (`0<1<2`): `ω₀ = d₁₀ = 1 + (α₀+α₁)/2`, `ω₁ = d₂₁ = 1 - α₀/2`
/// - II  (`0<2<1`): `ω₀ = d₂₀ = 2 + α₁/2`, `ω₁ = -d₂₁`
/// - III (`2<0<1`): `ω₀ = -d₂₀`, `ω₁ = d₁₀`
fn candidate(case: GroundOrder, w0: &Rational, w1: &Rational) -> Option<(Rational, Rational)> {
    let two = int(2);
    match case {
        GroundOrder::I => Some((&two - &two * w1, &two * w0 + &two * w1 - int(4))),
        GroundOrder::II => Some((&two * w1 + &two, &two * w0 - int(4))),
        GroundOrder::III => Some((&two * w0 + &two * w1 + &two, -(&two * w0) - int(4))),
        GroundOrder::Boundary => None,
    }
}

/// Finds `λ = 3` parameters whose rescaled spectrum has the requested
/// spacings. Cases are tried in the order I, II, III; each candidate is kept
/// only if it is admissible and re-extracts to exactly the same pattern.
pub fn match_omegas(spec: &CyclicSpectrumSpec) -> Result<OmegaMatch> {
    require_lambda3(spec.lambda)?;
    if spec.omega_total != int(3) {
        return Err(Error::InvalidSpec(format!("spacings sum to {}, expected 3", spec.omega_total)));
    }
    let mut found = Vec::new();
    for case in [GroundOrder::I, GroundOrder::II, GroundOrder::III] {
        let Some((a0, a1)) = candidate(case, &spec.omega[0], &spec.omega[1]) else {
            continue;
        };
        let params = AlgebraParams::new(3, vec![a0, a1])?;
        if require_fock(&params).is_err() || classify_ground_order(&params)? != case {
            continue;
        }
        if extract_omegas(&params).as_ref() == Ok(spec) {
            found.push(MatchCandidate { case, params });
        }
    }
    let mut found = found.into_iter();
    let first = found.next().ok_or(Error::NoMatch)?;
    Ok(OmegaMatch { case: first.case, params: first.params, alternatives: found.collect() })
}
