//! The rational parameter `α`, the integral matrix `A_c = c·A_α`, walk
//! matrices built from it, and the arithmetic criterion.

mod criterion;
mod structure;
mod walk;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use criterion::{criterion_check, CriterionOptions, CriterionReport, Verdict};
pub use structure::{snf_shape_b, structure_check, StructureReport};
pub use walk::{
    build_ac, hat_walk_matrices, spectrum_key, unscaled_walk_matrix, walk_matrix,
    HatWalkMatrices, SpectrumKey,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphaError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("alpha = {0} is outside [0, 1)")]
    OutOfRange(String),
    #[error("cannot parse alpha {0:?}: expected p/q or an integer")]
    Parse(String),
    #[error("order {0} is too small for this construction")]
    OrderTooSmall(usize),
}

/// Rational `α = num/den` in lowest terms with `0 <= α < 1`.
///
/// `c_alpha` is the reduced denominator; `a = c·α` and `b = c·(1 − α)` are
/// the integer weights of `D` and `A` in `A_c = aD + bA`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlphaParam {
    num: u64,
    den: u64,
}

impl AlphaParam {
    pub fn new(num: i64, den: i64) -> Result<Self, AlphaError> {
        if den == 0 {
            return Err(AlphaError::ZeroDenominator);
        }
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        if num < 0 || num >= den {
            return Err(AlphaError::OutOfRange(format!("{num}/{den}")));
        }
        let g = num.gcd(&den);
        Ok(AlphaParam {
            num: (num / g) as u64,
            den: (den / g) as u64,
        })
    }

    pub fn zero() -> Self {
        AlphaParam { num: 0, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn c_alpha(&self) -> u64 {
        self.den
    }

    pub fn a(&self) -> u64 {
        self.num
    }

    pub fn b(&self) -> u64 {
        self.den - self.num
    }
}

/// Reduces `num/den` and derives `c_α`, `a` and `b`.
pub fn c_alpha(num: i64, den: i64) -> Result<AlphaParam, AlphaError> {
    AlphaParam::new(num, den)
}

impl fmt::Display for AlphaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for AlphaParam {
    type Err = AlphaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || AlphaError::Parse(s.to_string());
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                AlphaParam::new(p, q)
            }
            None => {
                let p: i64 = s.parse().map_err(|_| bad())?;
                AlphaParam::new(p, 1)
            }
        }
    }
}

impl Serialize for AlphaParam {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
