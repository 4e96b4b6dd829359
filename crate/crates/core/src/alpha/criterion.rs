use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::walk::walk_matrix;
use super::AlphaParam;
use crate::graph::{encode_graph6, Graph};
use crate::linalg::{det_bareiss, rank_mod_p};
use crate::ntheory::{factorize_with, odd_prime_divisors, FactorConfig, Factorization, NumberTheoryError};
use crate::serde_util::{display, opt_display};

/// Orders below this are reported but never certified.
pub const MIN_CERTIFIED_ORDER: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    CertifiedDgas,
    FailsArithmetic,
    SingularWalkMatrix,
    ExcludedCase,
    SmallOrder,
    UndecidedFactorization,
}

impl Verdict {
    pub const ALL: [Verdict; 6] = [
        Verdict::CertifiedDgas,
        Verdict::FailsArithmetic,
        Verdict::SingularWalkMatrix,
        Verdict::ExcludedCase,
        Verdict::SmallOrder,
        Verdict::UndecidedFactorization,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::CertifiedDgas => "CERTIFIED_DGAS",
            Verdict::FailsArithmetic => "FAILS_ARITHMETIC",
            Verdict::SingularWalkMatrix => "SINGULAR_WALK_MATRIX",
            Verdict::ExcludedCase => "EXCLUDED_CASE",
            Verdict::SmallOrder => "SMALL_ORDER",
            Verdict::UndecidedFactorization => "UNDECIDED_FACTORIZATION",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CriterionOptions {
    pub factor: FactorConfig,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeRank {
    pub p: u64,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub schema: u32,
    pub graph6: String,
    pub n: usize,
    pub alpha: AlphaParam,
    pub c_alpha: u64,
    pub connected: bool,
    #[serde(serialize_with = "display")]
    pub det_walk: BigInt,
    /// `det W̃ / 2^⌊n/2⌋`.
    #[serde(serialize_with = "display")]
    pub reduced_det: BigRational,
    pub reduced_integral: bool,
    pub reduced_odd: bool,
    pub square_free: Option<bool>,
    #[serde(serialize_with = "opt_display")]
    pub square_witness: Option<BigUint>,
    /// Factorization of `|reduced_det|`, present when it is an odd integer
    /// and factoring finished.
    pub factorization: Option<Factorization>,
    /// Cofactor left over when the effort cap was hit.
    #[serde(serialize_with = "opt_display")]
    pub unfactored: Option<BigUint>,
    /// `rank_p(W̃)` for every odd prime `p | c_α`.
    pub prime_ranks: Vec<PrimeRank>,
    pub verdict: Verdict,
    pub reason: String,
}

impl CriterionReport {
    pub fn certified(&self) -> bool {
        self.verdict == Verdict::CertifiedDgas
    }

    /// Whether every odd `p | c_α` has `rank_p(W̃) = n`.
    pub fn ranks_full(&self) -> bool {
        self.prime_ranks.iter().all(|r| r.rank == self.n)
    }
}

/// Evaluates the arithmetic sufficient condition for `g` to be determined by
/// its generalized `A_α`-spectrum.
///
/// Verdicts are decided in this order: singular walk matrix, order below 5,
/// reduced determinant not an odd integer, factorization incomplete, not
/// square-free, rank deficiency modulo an odd prime of `c_α`, the excluded
/// even-`n`/odd-`c_α ≥ 3` case, and finally certification. When factoring
/// is cut short the rank test still runs, so a rank failure is reported as
/// a failure rather than as undecided.
pub fn criterion_check(g: &Graph, alpha: AlphaParam, opts: &CriterionOptions) -> CriterionReport {
    let n = g.order();
    let c = alpha.c_alpha();
    let w = walk_matrix(g, alpha);
    let det = det_bareiss(&w).expect("walk matrix is square");
    let reduced = BigRational::new(det.clone(), BigInt::from(1u8) << (n / 2));
    let reduced_integral = reduced.is_integer();
    let reduced_odd = reduced_integral && reduced.numer().is_odd();

    let prime_ranks: Vec<PrimeRank> = odd_prime_divisors(c)
        .into_iter()
        .map(|p| PrimeRank {
            p,
            rank: rank_mod_p(&w, p).expect("odd prime divisor"),
        })
        .collect();
    let rank_failure = prime_ranks.iter().find(|r| r.rank < n).cloned();

    let mut report = CriterionReport {
        schema: 1,
        graph6: encode_graph6(g),
        n,
        alpha,
        c_alpha: c,
        connected: g.is_connected(),
        det_walk: det.clone(),
        reduced_det: reduced.clone(),
        reduced_integral,
        reduced_odd,
        square_free: None,
        square_witness: None,
        factorization: None,
        unfactored: None,
        prime_ranks,
        verdict: Verdict::CertifiedDgas,
        reason: String::new(),
    };

    let rank_reason = |r: &PrimeRank| format!("rank of W~ modulo {} is {} < {}", r.p, r.rank, n);
    let (verdict, reason) = if det.is_zero() {
        (Verdict::SingularWalkMatrix, "det W~ = 0".to_string())
    } else if !reduced_integral {
        (
            Verdict::FailsArithmetic,
            format!("det W~ is not divisible by 2^{}", n / 2),
        )
    } else if !reduced_odd {
        (Verdict::FailsArithmetic, "reduced determinant is even".to_string())
    } else {
        let magnitude = reduced.numer().abs().to_biguint().expect("nonnegative");
        match factorize_with(&magnitude, &opts.factor) {
            Err(NumberTheoryError::Incomplete { unfactored, .. }) => {
                report.unfactored = Some(unfactored);
                match &rank_failure {
                    Some(r) => (Verdict::FailsArithmetic, rank_reason(r)),
                    None => (
                        Verdict::UndecidedFactorization,
                        "factorization effort cap reached".to_string(),
                    ),
                }
            }
            Err(NumberTheoryError::TooSmall(_)) => unreachable!("nonzero input"),
            Ok(f) => {
                let witness = f.square_witness().cloned();
                report.square_free = Some(witness.is_none());
                report.square_witness = witness.clone();
                report.factorization = Some(f);
                if let Some(p) = witness {
                    (
                        Verdict::FailsArithmetic,
                        format!("reduced determinant is divisible by {p}^2"),
                    )
                } else if let Some(r) = &rank_failure {
                    (Verdict::FailsArithmetic, rank_reason(r))
                } else if n.is_multiple_of(2) && c % 2 == 1 && c >= 3 {
                    (
                        Verdict::ExcludedCase,
                        "even order with odd c_alpha >= 3 is not covered".to_string(),
                    )
                } else {
                    (
                        Verdict::CertifiedDgas,
                        "arithmetic condition holds".to_string(),
                    )
                }
            }
        }
    };
    let (verdict, reason) = if n < MIN_CERTIFIED_ORDER && verdict != Verdict::SingularWalkMatrix {
        (
            Verdict::SmallOrder,
            format!("order {n} < {MIN_CERTIFIED_ORDER}; arithmetic outcome: {verdict}"),
        )
    } else {
        (verdict, reason)
    };
    report.verdict = verdict;
    report.reason = reason;
    report
}
