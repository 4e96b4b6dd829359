//! Primality, factorization and square-free testing.

mod factor;
mod prime;

use num_bigint::BigUint;
use thiserror::Error;

pub use factor::{factorize, factorize_with, FactorConfig, Factorization, TRIAL_DIVISION_BOUND};
pub use prime::{is_prime_u64, is_probable_prime};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberTheoryError {
    #[error("input {0} is outside the supported domain")]
    TooSmall(BigUint),
    #[error("factorization of {input} incomplete: effort cap reached on cofactor {unfactored}")]
    Incomplete { input: BigUint, unfactored: BigUint },
}

/// Square-freeness with the smallest repeated prime as witness. `1` is
/// square-free.
pub fn is_square_free(
    x: &BigUint,
    cfg: &FactorConfig,
) -> Result<(bool, Option<BigUint>), NumberTheoryError> {
    let f = factorize_with(x, cfg)?;
    let witness = f.square_witness().cloned();
    Ok((witness.is_none(), witness))
}

/// Sorted odd primes dividing `c`.
pub fn odd_prime_divisors(c: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = c;
    while rest > 0 && rest.is_multiple_of(2) {
        rest /= 2;
    }
    let mut p = 3;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            out.push(p);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 2;
    }
    if rest > 1 {
        out.push(rest);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_free_examples() {
        let cfg = FactorConfig::default();
        assert_eq!(is_square_free(&105u32.into(), &cfg).unwrap(), (true, None));
        assert_eq!(is_square_free(&12u32.into(), &cfg).unwrap(), (false, Some(2u32.into())));
        assert_eq!(is_square_free(&45u32.into(), &cfg).unwrap(), (false, Some(3u32.into())));
        assert_eq!(is_square_free(&1u32.into(), &cfg).unwrap(), (true, None));
    }

    #[test]
    fn odd_divisors() {
        assert!(odd_prime_divisors(4).is_empty());
        assert_eq!(odd_prime_divisors(6), vec![3]);
        assert_eq!(odd_prime_divisors(11), vec![11]);
        assert_eq!(odd_prime_divisors(1), Vec::<u64>::new());
        assert_eq!(odd_prime_divisors(90), vec![3, 5]);
    }
}
