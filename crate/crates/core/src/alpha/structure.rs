use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use super::walk::{hat_walk_matrices, walk_matrix};
use super::AlphaParam;
use crate::graph::Graph;
use crate::linalg::{rank_mod_p, smith_normal_form, BigIntMatrix};
use crate::serde_util::opt_display;

/// Mod-2 structure of the walk matrix for graphs whose reduced determinant
/// is an odd integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub n: usize,
    pub alpha: AlphaParam,
    #[serde(serialize_with = "divisors")]
    pub snf_divisors: Vec<BigInt>,
    /// `B` when the divisors read `(1^⌈n/2⌉, 2^(⌊n/2⌋-1), 2B)` with `B` odd.
    #[serde(serialize_with = "opt_display")]
    pub shape_b: Option<BigInt>,
    pub rank2_walk: usize,
    pub rank2_hat: usize,
    /// `W̃ᵀ Ŵ′` is divisible by 2 entrywise.
    pub hat_product_even: bool,
    pub rank2_hat_product: usize,
}

fn divisors<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|d| d.to_string()))
}

impl StructureReport {
    pub fn rank2_bound(&self) -> usize {
        self.n.div_ceil(2)
    }

    /// Violated structure properties, assuming the graph meets the
    /// arithmetic condition. `b_square_free` is the caller's verdict on `B`.
    pub fn violations(&self, b_square_free: bool) -> Vec<String> {
        let mut out = Vec::new();
        let half = self.n / 2;
        if self.rank2_walk > self.rank2_bound() {
            out.push(format!("rank_2(W~) = {} exceeds {}", self.rank2_walk, self.rank2_bound()));
        }
        if self.shape_b.is_none() {
            out.push("Smith normal form does not have shape (1.., 2.., 2B) with B odd".into());
        } else if !b_square_free {
            out.push("B is not square-free".into());
        }
        if self.rank2_walk != self.rank2_bound() {
            out.push(format!("rank_2(W~) = {} != {}", self.rank2_walk, self.rank2_bound()));
        }
        if self.rank2_hat != half {
            out.push(format!("rank_2(W^) = {} != {half}", self.rank2_hat));
        }
        if !self.hat_product_even {
            out.push("W~^T W^' is not divisible by 2".into());
        } else if self.rank2_hat_product != half {
            out.push(format!("rank_2(W~^T W^'/2) = {} != {half}", self.rank2_hat_product));
        }
        out
    }
}

/// Returns `B` if `divisors` has the shape `(1^⌈n/2⌉, 2^(⌊n/2⌋-1), 2B)` with
/// `B` odd and positive.
pub fn snf_shape_b(divisors: &[BigInt]) -> Option<BigInt> {
    let n = divisors.len();
    if n < 2 {
        return None;
    }
    let ones = n.div_ceil(2);
    let two = BigInt::from(2);
    let (last, rest) = divisors.split_last()?;
    if !rest[..ones].iter().all(|d| d.is_one()) || !rest[ones..].iter().all(|d| *d == two) {
        return None;
    }
    let (b, r) = last.div_rem(&two);
    (r == BigInt::default() && b.is_odd() && b.is_positive()).then_some(b)
}

/// Computes the Smith form and the mod-2 ranks of `W̃`, `Ŵ` and `W̃ᵀŴ′/2`.
/// Requires `n >= 2`.
pub fn structure_check(g: &Graph, alpha: AlphaParam) -> Option<StructureReport> {
    let n = g.order();
    let hats = hat_walk_matrices(g, alpha).ok()?;
    let w = walk_matrix(g, alpha);
    let snf = smith_normal_form(&w);
    let product = &w.transpose() * &hats.hat_prime;
    let hat_product_even = product.entries().iter().all(|x| x.is_even());
    let rank2_hat_product = if hat_product_even {
        let half = BigIntMatrix::from_fn(product.rows(), product.cols(), |i, j| &product[(i, j)] / 2);
        rank_mod_p(&half, 2).expect("2 is prime")
    } else {
        0
    };
    Some(StructureReport {
        n,
        alpha,
        shape_b: snf_shape_b(&snf.divisors),
        snf_divisors: snf.divisors,
        rank2_walk: rank_mod_p(&w, 2).expect("2 is prime"),
        rank2_hat: rank_mod_p(&hats.hat, 2).expect("2 is prime"),
        hat_product_even,
        rank2_hat_product,
    })
}
