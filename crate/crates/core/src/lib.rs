//! Cλ-extended oscillator algebras realised as generalised deformed
//! oscillator algebras.
//!
//! The crate covers the parameter space of the algebra ([`algebra`]), its
//! truncated Fock-space matrices ([`fock`]), the exact `H₀` spectrum and its
//! `λ = 3` classification ([`spectrum`]), the link with cyclic shape
//! invariant spectra ([`cyclic`]) and an order-2 parasupersymmetric
//! construction on top of the `λ = 3` algebra ([`pssqm`]).

pub mod algebra;
pub mod cyclic;
pub mod error;
pub mod fock;
pub mod pssqm;
pub mod rational;
pub mod spectrum;
pub mod surd;

pub use algebra::{
    fock_space_exists, from_kappa, norm_gamma, norm_product, structure_function, to_kappa, AlgebraParams,
    DerivedParams, FockExistence, KappaParams, KappaValues,
};
pub use cyclic::{extract_omegas, match_omegas, CyclicSpectrumSpec, OmegaMatch};
pub use error::{Error, Result};
pub use fock::{verify_relations, FockRep, RelationReport};
pub use pssqm::{build_charge, verify_pssqm, Eta, PssqmConfig, PssqmReport, PssqmSystem};
pub use rational::{parse_rational, Rational};
pub use spectrum::{
    classify_ground_order, classify_subclass, compute_spectrum, ordering_signature, DegeneracyProfile, GroundOrder,
    Spectrum, SpectrumClass, SpectrumLevel, Subclass,
};
