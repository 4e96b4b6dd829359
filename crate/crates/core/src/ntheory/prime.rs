use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::NumberTheoryError;

/// The first 13 primes are a deterministic Miller–Rabin base set for every
/// input below this bound (Sorenson & Webster).
const DETERMINISTIC_BOUND: u128 = 3_317_044_064_679_887_385_961_981;
const SMALL_PRIMES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const RANDOM_ROUNDS: usize = 64;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime_u64(n: u64, a: u64) -> bool {
    let d0 = n - 1;
    let s = d0.trailing_zeros();
    let d = d0 >> s;
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality for 64-bit integers. `0` and `1` are not prime.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    SMALL_PRIMES[..12]
        .iter()
        .all(|&a| strong_probable_prime_u64(n, a))
}

fn strong_probable_prime(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n > 1");
    let d = &n_minus_1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Miller–Rabin: deterministic below 3.3·10^24, 64 pseudo-random bases
/// (fixed seed, reproducible) above. Never returns `false` for a prime.
pub fn is_probable_prime(x: &BigUint) -> Result<bool, NumberTheoryError> {
    if *x <= BigUint::one() {
        return Err(NumberTheoryError::TooSmall(x.clone()));
    }
    if let Some(v) = x.to_u64() {
        return Ok(is_prime_u64(v));
    }
    for &p in &SMALL_PRIMES {
        if (x % p) == BigUint::ZERO {
            return Ok(false);
        }
    }
    if x.to_u128().is_some_and(|v| v < DETERMINISTIC_BOUND) {
        return Ok(SMALL_PRIMES
            .iter()
            .all(|&a| strong_probable_prime(x, &BigUint::from(a))));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d69_6c6c_6572);
    let lo = BigUint::from(2u32);
    let hi = x - 1u32;
    Ok((0..RANDOM_ROUNDS).all(|_| {
        let a = rng.gen_biguint_range(&lo, &hi);
        strong_probable_prime(x, &a)
    }))
}
