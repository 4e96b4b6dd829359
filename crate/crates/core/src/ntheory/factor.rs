//! Trial division followed by Pollard's rho with Brent's cycle detection.
//!
//! Rho runs in native `u64` arithmetic, in 128-bit Montgomery arithmetic for
//! odd moduli below 2^127, and in `BigUint` arithmetic otherwise.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::{is_probable_prime, NumberTheoryError};

pub const TRIAL_DIVISION_BOUND: u32 = 1_000_000;
const BATCH: u64 = 128;

/// Effort limits for [`factorize_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorConfig {
    /// Total rho iterations allowed across the whole factorization.
    pub max_rho_iterations: u64,
    /// Seeds the polynomial constants tried by rho.
    pub seed: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            max_rho_iterations: 200_000_000,
            seed: 1,
        }
    }
}

/// Prime factorization `input = Π p^e`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub input: BigUint,
    pub factors: Vec<(BigUint, u32)>,
    pub complete: bool,
}

impl Factorization {
    pub fn recompose(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    /// Smallest prime with exponent at least 2.
    pub fn square_witness(&self) -> Option<&BigUint> {
        self.factors.iter().find(|(_, e)| *e >= 2).map(|(p, _)| p)
    }
}

/// Serialized as `[["p", e], ...]` with primes as decimal strings.
impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.factors.len()))?;
        for (p, e) in &self.factors {
            seq.serialize_element(&(p.to_string(), e))?;
        }
        seq.end()
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_DIVISION_BOUND as usize;
        let mut composite = vec![false; limit + 1];
        let mut out = Vec::new();
        for i in 2..=limit {
            if composite[i] {
                continue;
            }
            out.push(i as u32);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
        out
    })
}

trait RhoRing {
    type Elem: Clone + PartialEq;
    fn elem(&self, x: u64) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `gcd(a, n)`, where `a` may be in a scaled representation coprime-equivalent to `a`.
    fn gcd(&self, a: &Self::Elem) -> BigUint;
}

struct U64Ring(u64);

impl RhoRing for U64Ring {
    type Elem = u64;
    fn elem(&self, x: u64) -> u64 {
        x % self.0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.0 - (b - a)
        }
    }
    fn gcd(&self, a: &u64) -> BigUint {
        BigUint::from(a.gcd(&self.0))
    }
}

/// Montgomery arithmetic modulo an odd `n < 2^127` with `R = 2^128`.
struct MontRing {
    n: u128,
    n_neg_inv: u128,
    r2: u128,
}

#[inline]
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let (a1, a0) = (a >> 64, a & u64::MAX as u128);
    let (b1, b0) = (b >> 64, b & u64::MAX as u128);
    let lo0 = a0 * b0;
    let (mid, c1) = (a0 * b1).overflowing_add(a1 * b0);
    let (lo, c2) = lo0.overflowing_add(mid << 64);
    let hi = a1 * b1 + (mid >> 64) + ((c1 as u128) << 64) + c2 as u128;
    (hi, lo)
}

impl MontRing {
    fn new(n: u128) -> Self {
        debug_assert!(n & 1 == 1 && n < 1 << 127);
        let mut inv = n;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        debug_assert_eq!(n.wrapping_mul(inv), 1);
        let mut r = (u128::MAX % n + 1) % n;
        for _ in 0..128 {
            r <<= 1;
            if r >= n {
                r -= n;
            }
        }
        MontRing {
            n,
            n_neg_inv: inv.wrapping_neg(),
            r2: r,
        }
    }

    #[inline]
    fn redc(&self, hi: u128, lo: u128) -> u128 {
        let m = lo.wrapping_mul(self.n_neg_inv);
        let (mh, ml) = mul_wide(m, self.n);
        let (_, carry) = lo.overflowing_add(ml);
        let t = hi + mh + carry as u128;
        if t >= self.n {
            t - self.n
        } else {
            t
        }
    }
}

impl RhoRing for MontRing {
    type Elem = u128;
    fn elem(&self, x: u64) -> u128 {
        let (hi, lo) = mul_wide(x as u128 % self.n, self.r2);
        self.redc(hi, lo)
    }
    fn one(&self) -> u128 {
        self.elem(1)
    }
    fn mul(&self, a: &u128, b: &u128) -> u128 {
        let (hi, lo) = mul_wide(*a, *b);
        self.redc(hi, lo)
    }
    fn add(&self, a: &u128, b: &u128) -> u128 {
        let s = a + b;
        if s >= self.n {
            s - self.n
        } else {
            s
        }
    }
    fn sub(&self, a: &u128, b: &u128) -> u128 {
        if a >= b {
            a - b
        } else {
            self.n - (b - a)
        }
    }
    fn gcd(&self, a: &u128) -> BigUint {
        BigUint::from(a.gcd(&self.n))
    }
}

struct BigRing(BigUint);

impl RhoRing for BigRing {
    type Elem = BigUint;
    fn elem(&self, x: u64) -> BigUint {
        BigUint::from(x) % &self.0
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b % &self.0
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= self.0 {
            s - &self.0
        } else {
            s
        }
    }
    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            &self.0 - (b - a)
        }
    }
    fn gcd(&self, a: &BigUint) -> BigUint {
        a.gcd(&self.0)
    }
}

/// One Brent run with constant `c`. Returns a divisor `1 < d <= n` (`d = n`
/// means this constant failed), or `None` when the budget ran out.
fn brent<R: RhoRing>(ring: &R, n: &BigUint, c: u64, budget: &mut u64) -> Option<BigUint> {
    let c = ring.elem(c);
    let f = |y: &R::Elem| ring.add(&ring.mul(y, y), &c);
    let one = BigUint::one();
    let mut y = ring.elem(2);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = ring.one();
    let mut g = one.clone();
    let mut r: u64 = 1;
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        *budget = budget.checked_sub(r)?;
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(&y);
                q = ring.mul(&q, &ring.sub(&x, &y));
            }
            *budget = budget.checked_sub(steps)?;
            g = ring.gcd(&q);
            k += BATCH;
        }
        r *= 2;
    }
    if g == *n {
        loop {
            ys = f(&ys);
            *budget = budget.checked_sub(1)?;
            g = ring.gcd(&ring.sub(&x, &ys));
            if g != one {
                break;
            }
        }
    }
    Some(g)
}

/// Finds a nontrivial divisor of the odd composite `n`.
fn find_divisor(n: &BigUint, cfg: &FactorConfig, budget: &mut u64) -> Option<BigUint> {
    for k in 2..=64u32 {
        let r = n.nth_root(k);
        if r <= BigUint::one() {
            break;
        }
        if r.pow(k) == *n {
            return Some(r);
        }
    }
    for attempt in 0u64.. {
        let c = cfg.seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9)) % 1_000_003 + 1;
        let d = if let Some(v) = n.to_u64() {
            brent(&U64Ring(v), n, c, budget)?
        } else if let Some(v) = n.to_u128().filter(|v| *v < 1 << 127) {
            brent(&MontRing::new(v), n, c, budget)?
        } else {
            brent(&BigRing(n.clone()), n, c, budget)?
        };
        if d != *n {
            return Some(d);
        }
    }
    unreachable!()
}

fn push_factor(out: &mut Vec<(BigUint, u32)>, p: BigUint, e: u32) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some(entry) => entry.1 += e,
        None => out.push((p, e)),
    }
}

pub fn factorize(x: &BigUint) -> Result<Factorization, NumberTheoryError> {
    factorize_with(x, &FactorConfig::default())
}

/// Complete prime factorization, or [`NumberTheoryError::Incomplete`] once the
/// rho budget is exhausted.
pub fn factorize_with(x: &BigUint, cfg: &FactorConfig) -> Result<Factorization, NumberTheoryError> {
    if x.is_zero() {
        return Err(NumberTheoryError::TooSmall(x.clone()));
    }
    let mut factors = Vec::new();
    let mut rest = x.clone();
    for &p in small_primes() {
        let pp = BigUint::from(p);
        if &pp * &pp > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&pp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((pp, e));
        }
    }

    let bound = BigUint::from(TRIAL_DIVISION_BOUND);
    let mut budget = cfg.max_rho_iterations;
    let mut stack = Vec::new();
    if rest > BigUint::one() {
        stack.push((rest, 1u32));
    }
    while let Some((m, e)) = stack.pop() {
        if m <= &bound * &bound || is_probable_prime(&m)? {
            push_factor(&mut factors, m, e);
            continue;
        }
        let Some(d) = find_divisor(&m, cfg, &mut budget) else {
            return Err(NumberTheoryError::Incomplete {
                input: x.clone(),
                unfactored: m,
            });
        };
        let other = &m / &d;
        if d == other {
            stack.push((d, 2 * e));
        } else {
            stack.push((d, e));
            stack.push((other, e));
        }
    }
    factors.sort();
    Ok(Factorization {
        input: x.clone(),
        factors,
        complete: true,
    })
}
