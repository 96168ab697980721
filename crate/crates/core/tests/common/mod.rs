#![allow(dead_code)]

use clambda_core::{AlgebraParams, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn z(n: i64) -> Rational {
    q(n, 1)
}

/// `F(0) … F(count-1)` from `F(0) = 0`, `F(n+1) = F(n) + 1 + α_{n mod λ}`.
pub fn structure_by_recursion(p: &AlgebraParams, count: usize) -> Vec<Rational> {
    let lambda = p.lambda();
    let mut out = vec![z(0)];
    while out.len() < count {
        let n = out.len() - 1;
        let next = &out[n] + z(1) + &p.alpha()[n % lambda];
        out.push(next);
    }
    out
}

/// `⟨n|½(aa† + a†a)|n⟩ = ½(F(n) + F(n+1))`.
pub fn oracle_energies(p: &AlgebraParams, count: usize) -> Vec<Rational> {
    let f = structure_by_recursion(p, count + 1);
    f.windows(2).map(|w| (&w[0] + &w[1]) / z(2)).collect()
}

pub fn admissible(p: &AlgebraParams) -> bool {
    let f = structure_by_recursion(p, p.lambda());
    f[1..].iter().all(|x| *x > z(0))
}

/// `p/q` with `q ∈ 1..=12` and `|p/q| ≤ bound`.
pub fn small_rational(bound: i64) -> impl Strategy<Value = Rational> {
    (1i64..=12).prop_flat_map(move |d| (-bound * d..=bound * d).prop_map(move |n| q(n, d)))
}

pub fn admissible_params(lambda: usize, bound: i64) -> impl Strategy<Value = AlgebraParams> {
    proptest::collection::vec(small_rational(bound), lambda - 1)
        .prop_filter_map("outside the Fock region", move |a| {
            AlgebraParams::new(lambda, a).ok().filter(admissible)
        })
}

pub fn admissible_any_lambda(bound: i64) -> impl Strategy<Value = AlgebraParams> {
    (2usize..=6).prop_flat_map(move |l| admissible_params(l, bound))
}
