//! Exact spectrum of the oscillator Hamiltonian `H₀ = ½{a, a†}` and the
//! classification of `λ = 3` spectra.
//!
//! Each Fock sector `μ` carries a harmonic ladder `E_{kλ+μ} = kλ + μ + γ_μ + ½`
//! with step `λ`; the sectors are displaced relative to one another by the
//! `γ_μ`. All comparisons are exact.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::algebra::{require_fock, AlgebraParams};
use crate::error::{Error, Result};
use crate::rational::{self, half, int, Rational};

pub const DEFAULT_MAX_N: usize = 8;

/// Eigenvalue of `H₀` on `|n⟩`.
pub fn energy(p: &AlgebraParams, n: u64) -> Rational {
    Rational::from_integer(n.into()) + half() + p.gamma(n as i64 % p.lambda() as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumLevel {
    pub n: u64,
    pub k: u64,
    pub mu: usize,
    #[serde(with = "rational")]
    pub energy: Rational,
}

impl SpectrumLevel {
    pub fn of(p: &AlgebraParams, n: u64) -> Self {
        let lambda = p.lambda() as u64;
        Self { n, k: n / lambda, mu: (n % lambda) as usize, energy: energy(p, n) }
    }

    fn sort_key_cmp(&self, other: &Self) -> Ordering {
        self.energy
            .cmp(&other.energy)
            .then(self.mu.cmp(&other.mu))
            .then(self.k.cmp(&other.k))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub params: AlgebraParams,
    /// Ascending energy; ties ordered by sector then radial index.
    pub levels: Vec<SpectrumLevel>,
    /// State indices sharing one energy, in level order. Singletons included.
    pub degeneracy_groups: Vec<Vec<u64>>,
}

impl Spectrum {
    pub fn max_degeneracy(&self) -> usize {
        self.degeneracy_groups.iter().map(Vec::len).max().unwrap_or(0)
    }
}

fn sort_levels(levels: &mut [SpectrumLevel]) {
    levels.sort_by(SpectrumLevel::sort_key_cmp);
}

fn group_levels(levels: &[SpectrumLevel]) -> Vec<Vec<u64>> {
    let mut groups: Vec<Vec<u64>> = Vec::new();
    let mut last: Option<&Rational> = None;
    for level in levels {
        match (last, groups.last_mut()) {
            (Some(e), Some(group)) if *e == level.energy => group.push(level.n),
            _ => groups.push(vec![level.n]),
        }
        last = Some(&level.energy);
    }
    groups
}

/// The `num_levels` states of lowest number `n`, sorted by energy.
pub fn compute_spectrum(p: &AlgebraParams, num_levels: usize) -> Result<Spectrum> {
    require_fock(p)?;
    if num_levels < p.lambda() {
        return Err(Error::TooFewLevels { requested: num_levels, min: p.lambda() });
    }
    let mut levels: Vec<_> = (0..num_levels as u64).map(|n| SpectrumLevel::of(p, n)).collect();
    sort_levels(&mut levels);
    let degeneracy_groups = group_levels(&levels);
    Ok(Spectrum { params: p.clone(), levels, degeneracy_groups })
}

/// The `count` lowest-energy states, extended so that the final energy
/// value is never split across the cut.
pub fn lowest_levels(p: &AlgebraParams, count: usize) -> Vec<SpectrumLevel> {
    let lambda = p.lambda() as u64;
    let per_sector = count as u64 + 1;
    let mut levels: Vec<_> = (0..per_sector * lambda).map(|n| SpectrumLevel::of(p, n)).collect();
    sort_levels(&mut levels);
    if count == 0 {
        return Vec::new();
    }
    let cut_energy = levels[count - 1].energy.clone();
    let end = levels
        .iter()
        .position(|l| l.energy > cut_energy)
        .unwrap_or(levels.len());
    levels.truncate(end.max(count));
    levels
}

/// Textual ordering of the lowest `prefix_len` levels, such as `2<0<1<5<3<4`.
///
/// States with equal energy are joined by `=` and listed by increasing `n`.
/// A tie group that straddles the prefix boundary is included whole.
pub fn ordering_signature(s: &Spectrum, prefix_len: usize) -> Result<String> {
    if prefix_len > s.levels.len() {
        return Err(Error::PrefixTooLong { prefix: prefix_len, available: s.levels.len() });
    }
    Ok(signature_of(&lowest_levels(&s.params, prefix_len)))
}

fn signature_of(levels: &[SpectrumLevel]) -> String {
    group_levels(levels)
        .into_iter()
        .map(|mut g| {
            g.sort_unstable();
            g.iter().map(u64::to_string).collect::<Vec<_>>().join("=")
        })
        .collect::<Vec<_>>()
        .join("<")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroundOrder {
    I,
    II,
    III,
    Boundary,
}

impl fmt::Display for GroundOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroundOrder::I => "I",
            GroundOrder::II => "II",
            GroundOrder::III => "III",
            GroundOrder::Boundary => "Boundary",
        };
        f.write_str(s)
    }
}

fn require_lambda3(p: &AlgebraParams) -> Result<()> {
    if p.lambda() != 3 {
        return Err(Error::UnsupportedLambda { lambda: p.lambda(), required: 3 });
    }
    Ok(())
}

/// Orders the three sector ground states from the parameter inequalities:
///
/// | class | ordering          | region                          |
/// |-------|-------------------|---------------------------------|
/// | I     | `E₀ < E₁ < E₂`    | `-1 < α₀ < 2`, `α₁ > -2-α₀`     |
/// | II    | `E₀ < E₂ < E₁`    | `α₀ > 2`, `α₁ > -4`             |
/// | III   | `E₂ < E₀ < E₁`    | `α₀ > 2`, `-2-α₀ < α₁ < -4`     |
///
/// Parameters on `α₀ = 2`, or on `α₁ = -4` with `α₀ > 2`, are `Boundary`.
pub fn classify_ground_order(p: &AlgebraParams) -> Result<GroundOrder> {
    require_lambda3(p)?;
    require_fock(p)?;
    let two = int(2);
    let (a0, a1) = (&p.alpha()[0], &p.alpha()[1]);
    let order = match a0.cmp(&two) {
        Ordering::Less => GroundOrder::I,
        Ordering::Equal => GroundOrder::Boundary,
        Ordering::Greater => match a1.cmp(&int(-4)) {
            Ordering::Greater => GroundOrder::II,
            Ordering::Equal => GroundOrder::Boundary,
            Ordering::Less => GroundOrder::III,
        },
    };
    debug_assert_eq!(order, ground_order_from_energies(p));
    Ok(order)
}

fn ground_order_from_energies(p: &AlgebraParams) -> GroundOrder {
    let e: Vec<_> = (0..3).map(|n| energy(p, n)).collect();
    if e[0] < e[1] && e[1] < e[2] {
        GroundOrder::I
    } else if e[0] < e[2] && e[2] < e[1] {
        GroundOrder::II
    } else if e[2] < e[0] && e[0] < e[1] {
        GroundOrder::III
    } else {
        GroundOrder::Boundary
    }
}

/// Which pair of Fock sectors shares levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegeneratePair {
    /// F₀–F₁
    A,
    /// F₀–F₂
    B,
    /// F₁–F₂
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegeneracyProfile {
    Nondegenerate,
    Double(DegeneratePair),
    Triple,
}

impl fmt::Display for DegeneracyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegeneracyProfile::Nondegenerate => f.write_str("nondegenerate"),
            DegeneracyProfile::Double(DegeneratePair::A) => f.write_str("double(a)"),
            DegeneracyProfile::Double(DegeneratePair::B) => f.write_str("double(b)"),
            DegeneracyProfile::Double(DegeneratePair::C) => f.write_str("double(c)"),
            DegeneracyProfile::Triple => f.write_str("triple"),
        }
    }
}

impl Serialize for DegeneracyProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Two sector ladders of step 3 share levels iff their ground energies differ
/// by a multiple of 3.
pub fn degeneracy_profile(p: &AlgebraParams) -> Result<DegeneracyProfile> {
    require_lambda3(p)?;
    let e: Vec<_> = (0..3).map(|n| energy(p, n)).collect();
    let shares = |i: usize, j: usize| {
        let d = (&e[i] - &e[j]) / int(3);
        rational::is_integer(&d)
    };
    Ok(match (shares(0, 1), shares(0, 2), shares(1, 2)) {
        (true, true, _) | (true, _, true) | (_, true, true) => DegeneracyProfile::Triple,
        (true, false, false) => DegeneracyProfile::Double(DegeneratePair::A),
        (false, true, false) => DegeneracyProfile::Double(DegeneratePair::B),
        (false, false, true) => DegeneracyProfile::Double(DegeneratePair::C),
        (false, false, false) => DegeneracyProfile::Nondegenerate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Subclass {
    /// `(I.1.n)`: `E₀ < E₃ < ⋯ < E_{3n-3} < E₁ < E₂ < E_{3n} < E₄ < E₅ < ⋯`
    OneN { n: u64 },
    /// `(I.n.a)`: `⋯ < E_{3n-3} < E_{3n} = E₁ < E₂ < E_{3n+3} = E₄ < E₅ < ⋯`
    DegenerateA { n: u64 },
    /// `(I.n.abc)`: `⋯ < E_{3n-3} < E_{3n} = E₁ = E₂ < E_{3n+3} = E₄ = E₅ < ⋯`
    DegenerateAbc { n: u64 },
    /// No closed-form family applies; carries a description of the ordering.
    Empirical { ordering: String },
}

impl fmt::Display for Subclass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subclass::OneN { n } => write!(f, "I.1.{n}"),
            Subclass::DegenerateA { n } => write!(f, "I.{n}.a"),
            Subclass::DegenerateAbc { n } => write!(f, "I.{n}.abc"),
            Subclass::Empirical { ordering } => write!(f, "empirical({ordering})"),
        }
    }
}

impl Serialize for Subclass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumClass {
    pub ground_order: GroundOrder,
    pub subclass: Option<Subclass>,
    pub degeneracy_profile: DegeneracyProfile,
    /// Ordering of the lowest nine levels.
    pub signature: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rel {
    Lt,
    Eq,
}

/// Checks `E_{chain[0].0} rel₀ E_{chain[1].0} rel₁ …` exactly; the relation
/// attached to the last element is ignored.
fn chain_holds(p: &AlgebraParams, chain: &[(u64, Rel)]) -> bool {
    chain.windows(2).all(|w| {
        let (lhs, rel) = w[0];
        let rhs = w[1].0;
        let (a, b) = (energy(p, lhs), energy(p, rhs));
        match rel {
            Rel::Lt => a < b,
            Rel::Eq => a == b,
        }
    })
}

fn one_n_chain(n: u64) -> Vec<(u64, Rel)> {
    let mut chain: Vec<_> = (0..n).map(|j| (3 * j, Rel::Lt)).collect();
    chain.extend([(1, Rel::Lt), (2, Rel::Lt), (3 * n, Rel::Lt), (4, Rel::Lt), (5, Rel::Lt)]);
    chain
}

fn degenerate_a_chain(n: u64) -> Vec<(u64, Rel)> {
    let mut chain: Vec<_> = (0..n).map(|j| (3 * j, Rel::Lt)).collect();
    chain.extend([(3 * n, Rel::Eq), (1, Rel::Lt), (2, Rel::Lt), (3 * n + 3, Rel::Eq), (4, Rel::Lt), (5, Rel::Lt)]);
    chain
}

fn degenerate_abc_chain(n: u64) -> Vec<(u64, Rel)> {
    let mut chain: Vec<_> = (0..n).map(|j| (3 * j, Rel::Lt)).collect();
    chain.extend([(3 * n, Rel::Eq), (1, Rel::Eq), (2, Rel::Lt), (3 * n + 3, Rel::Eq), (4, Rel::Eq), (5, Rel::Lt)]);
    chain
}

/// Closed-form family membership, tested for `n = 1 … max_n`.
fn closed_form_subclass(p: &AlgebraParams, max_n: u64) -> Option<Subclass> {
    let (a0, a1) = (&p.alpha()[0], &p.alpha()[1]);
    let in_i_strip = *a0 > int(-1) && *a0 < int(2);
    for n in 1..=max_n {
        let six_n = int(6 * n as i64);
        if in_i_strip {
            let lower = &six_n - a0 - int(8);
            let upper = &six_n - int(4);
            if *a1 > lower && *a1 < upper {
                return Some(Subclass::OneN { n });
            }
            if *a1 == &six_n - a0 - int(2) {
                return Some(Subclass::DegenerateA { n });
            }
        } else if *a0 == int(2) && *a1 == &six_n - int(4) {
            return Some(Subclass::DegenerateAbc { n });
        }
    }
    None
}

fn chain_for(label: &Subclass) -> Option<Vec<(u64, Rel)>> {
    match label {
        Subclass::OneN { n } => Some(one_n_chain(*n)),
        Subclass::DegenerateA { n } => Some(degenerate_a_chain(*n)),
        Subclass::DegenerateAbc { n } => Some(degenerate_abc_chain(*n)),
        Subclass::Empirical { .. } => None,
    }
}

/// Describes a spectrum outside the closed-form families. Nondegenerate
/// spectra whose three ground states lie within one period repeat the
/// generic orderings and are named after them.
fn empirical_ordering(p: &AlgebraParams, order: GroundOrder, profile: DegeneracyProfile) -> String {
    let e: Vec<_> = (0..3).map(|n| energy(p, n)).collect();
    let lo = e.iter().min().expect("three sectors");
    let hi = e.iter().max().expect("three sectors");
    let periodic = profile == DegeneracyProfile::Nondegenerate && hi - lo < int(3);
    match (periodic, order) {
        (true, GroundOrder::I) => "I.1.1 ordering".to_string(),
        (true, GroundOrder::II) => "II.1.1.1 ordering".to_string(),
        (true, GroundOrder::III) => "III.1.1.1 ordering".to_string(),
        _ => signature_of(&lowest_levels(p, 9)),
    }
}

/// Full `λ = 3` classification. Closed-form labels are cross-checked
/// against the exact ordering chain they assert.
pub fn classify_subclass(p: &AlgebraParams, max_n: usize) -> Result<SpectrumClass> {
    let ground_order = classify_ground_order(p)?;
    let degeneracy_profile = degeneracy_profile(p)?;
    let subclass = match closed_form_subclass(p, max_n as u64) {
        Some(label) => {
            let chain = chain_for(&label).expect("closed-form label");
            if !chain_holds(p, &chain) {
                return Err(Error::ClassificationMismatch { label: label.to_string() });
            }
            label
        }
        None => Subclass::Empirical { ordering: empirical_ordering(p, ground_order, degeneracy_profile) },
    };
    Ok(SpectrumClass {
        ground_order,
        subclass: Some(subclass),
        degeneracy_profile,
        signature: signature_of(&lowest_levels(p, 9)),
    })
}

/// `Σ_μ (-1)^μ γ_μ`, which vanishes for every admissible parameter set.
pub fn alternating_gamma_sum(p: &AlgebraParams) -> Rational {
    (0..p.lambda() as i64).fold(Rational::zero(), |acc, mu| {
        if mu % 2 == 0 {
            acc + p.gamma(mu)
        } else {
            acc - p.gamma(mu)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn params(a: &[i64]) -> AlgebraParams {
        AlgebraParams::from_ints(a.len() + 1, a).unwrap()
    }

    fn energies(s: &Spectrum) -> Vec<Rational> {
        let mut by_n = s.levels.clone();
        by_n.sort_by_key(|l| l.n);
        by_n.into_iter().map(|l| l.energy).collect()
    }

    #[test]
    fn spectrum_examples() {
        let s = compute_spectrum(&params(&[0, 1]), 6).unwrap();
        assert_eq!(energies(&s), vec![frac(1, 2), int(2), int(3), frac(7, 2), int(5), int(6)]);

        let t = compute_spectrum(&params(&[2, 2]), 7).unwrap();
        let e = energies(&t);
        assert_eq!(e[0], frac(3, 2));
        assert!(e[1..4].iter().all(|x| *x == frac(9, 2)));
        assert!(e[4..7].iter().all(|x| *x == frac(15, 2)));
        assert_eq!(t.degeneracy_groups, vec![vec![0], vec![3, 1, 2], vec![6, 4, 5]]);
        assert_eq!(t.max_degeneracy(), 3);

        let c = frac(5, 3);
        let h = compute_spectrum(&AlgebraParams::new(2, vec![c.clone()]).unwrap(), 8).unwrap();
        for (n, en) in energies(&h).iter().enumerate() {
            assert_eq!(*en, int(n as i64) + &c / int(2) + half());
        }
    }

    #[test]
    fn spectrum_rejects_missing_representation_and_short_requests() {
        assert!(matches!(compute_spectrum(&params(&[-1, 0]), 6), Err(Error::RepresentationMissing { .. })));
        assert_eq!(
            compute_spectrum(&params(&[0, 1]), 2),
            Err(Error::TooFewLevels { requested: 2, min: 3 })
        );
    }

    #[test]
    fn ground_order_examples() {
        assert_eq!(classify_ground_order(&params(&[0, 1])).unwrap(), GroundOrder::I);
        assert_eq!(classify_ground_order(&params(&[4, -3])).unwrap(), GroundOrder::II);
        assert_eq!(classify_ground_order(&params(&[6, -7])).unwrap(), GroundOrder::III);
        assert_eq!(classify_ground_order(&params(&[2, 0])).unwrap(), GroundOrder::Boundary);
        assert_eq!(classify_ground_order(&params(&[5, -4])).unwrap(), GroundOrder::Boundary);
        assert_eq!(
            classify_ground_order(&params(&[1])),
            Err(Error::UnsupportedLambda { lambda: 2, required: 3 })
        );
    }

    #[test]
    fn subclass_examples() {
        let c = classify_subclass(&params(&[0, 1]), 3).unwrap();
        assert_eq!(c.subclass, Some(Subclass::OneN { n: 1 }));
        assert_eq!(c.degeneracy_profile, DegeneracyProfile::Nondegenerate);

        let a = classify_subclass(&params(&[0, 4]), 3).unwrap();
        assert_eq!(a.subclass, Some(Subclass::DegenerateA { n: 1 }));
        assert_eq!(a.degeneracy_profile, DegeneracyProfile::Double(DegeneratePair::A));
        assert_eq!(energy(&params(&[0, 4]), 3), energy(&params(&[0, 4]), 1));

        let abc = classify_subclass(&params(&[2, 2]), 3).unwrap();
        assert_eq!(abc.subclass, Some(Subclass::DegenerateAbc { n: 1 }));
        assert_eq!(abc.ground_order, GroundOrder::Boundary);
        assert_eq!(abc.degeneracy_profile, DegeneracyProfile::Triple);

        let iii = classify_subclass(&params(&[6, -7]), 8).unwrap();
        assert_eq!(iii.subclass.unwrap().to_string(), "empirical(III.1.1.1 ordering)");

        let ii = classify_subclass(&params(&[4, -3]), 8).unwrap();
        assert_eq!(ii.subclass.unwrap().to_string(), "empirical(II.1.1.1 ordering)");
    }

    #[test]
    fn subclass_search_is_bounded_by_max_n() {
        // α₁ = 11 sits in the (I.1.3) window (10, 14) for α₀ = 0.
        let p = params(&[0, 11]);
        assert_eq!(classify_subclass(&p, 3).unwrap().subclass, Some(Subclass::OneN { n: 3 }));
        let capped = classify_subclass(&p, 2).unwrap().subclass.unwrap();
        assert!(matches!(capped, Subclass::Empirical { .. }));
    }

    #[test]
    fn double_b_is_reported_empirically() {
        // α₁ = 6n - 4 with -1 < α₀ < 2 puts E₂ on the sector-0 ladder.
        let p = params(&[0, 2]);
        let c = classify_subclass(&p, 8).unwrap();
        assert_eq!(c.degeneracy_profile, DegeneracyProfile::Double(DegeneratePair::B));
        assert!(matches!(c.subclass, Some(Subclass::Empirical { .. })));
    }

    #[test]
    fn signature_examples() {
        let s = compute_spectrum(&params(&[4, -3]), 12).unwrap();
        assert_eq!(ordering_signature(&s, 6).unwrap(), "0<2<1<3<5<4");
        let s = compute_spectrum(&params(&[6, -7]), 12).unwrap();
        assert_eq!(ordering_signature(&s, 6).unwrap(), "2<0<1<5<3<4");
        let s = compute_spectrum(&params(&[2, 2]), 12).unwrap();
        assert_eq!(ordering_signature(&s, 4).unwrap(), "0<1=2=3");
        assert_eq!(ordering_signature(&s, 3).unwrap(), "0<1=2=3");
        assert!(matches!(ordering_signature(&s, 13), Err(Error::PrefixTooLong { .. })));
    }

    #[test]
    fn signature_uses_true_lowest_energies() {
        // Sector 1 sits far above sector 0: E₃, E₆ precede E₁.
        let p = params(&[0, 20]);
        let s = compute_spectrum(&p, 6).unwrap();
        assert_eq!(ordering_signature(&s, 4).unwrap(), "0<3<6<9");
    }

    #[test]
    fn alternating_gamma_sum_vanishes() {
        for a in [&[0i64, 1][..], &[4, -3], &[1], &[3, -1, 2], &[1, 2, 3, 4, 5]] {
            assert!(alternating_gamma_sum(&params(a)).is_zero(), "{a:?}");
        }
    }
}
