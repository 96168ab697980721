//! Parameter sets shared by the benchmarks.

use clambda_core::{parse_rational, AlgebraParams};

pub fn params(lambda: usize, alpha: &[&str]) -> AlgebraParams {
    let alpha = alpha.iter().map(|a| parse_rational(a).expect("valid rational")).collect();
    AlgebraParams::new(lambda, alpha).expect("admissible parameters")
}

/// Admissible sets for λ = 2..=5.
pub fn fixtures() -> Vec<AlgebraParams> {
    vec![
        params(2, &["3/2"]),
        params(3, &["1/3", "8"]),
        params(4, &["1", "-1/2", "2"]),
        params(5, &["2", "1/5", "-1", "3/4"]),
    ]
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_build() {
        assert_eq!(super::fixtures().len(), 4);
    }
}
