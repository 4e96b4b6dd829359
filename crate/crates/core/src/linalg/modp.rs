use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{BigIntMatrix, LinalgError};
use crate::ntheory::is_prime_u64;

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = if r.sign() == num_bigint::Sign::Minus { r + p } else { r };
    r.to_u64().expect("residue below p")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2), p prime.
    let mut base = a as u128;
    let mut exp = p - 2;
    let m = p as u128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u64
}

/// Rank of `m` over the prime field `F_p`.
pub fn rank_mod_p(m: &BigIntMatrix, p: u64) -> Result<usize, LinalgError> {
    if !is_prime_u64(p) {
        return Err(LinalgError::NotPrime(p));
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| m.row(i).iter().map(|x| reduce(x, p)).collect())
        .collect();
    let pm = p as u128;
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = inv_mod(a[rank][c], p) as u128;
        for x in a[rank][c..].iter_mut() {
            *x = ((*x as u128) * inv % pm) as u64;
        }
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in bottom.iter_mut() {
            let f = row[c] as u128;
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = f * pivot[j] as u128 % pm;
                row[j] = ((row[j] as u128 + pm - sub) % pm) as u64;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Ok(rank)
}
