use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{BigIntMatrix, LinalgError};

/// `M = left · diag(divisors) · right` with `left`, `right` unimodular and
/// `divisors[i] | divisors[i + 1]`, all nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub divisors: Vec<BigInt>,
    pub left: BigIntMatrix,
    pub right: BigIntMatrix,
    rows: usize,
    cols: usize,
}

impl SnfDecomposition {
    /// The last elementary divisor, `s_r` with `r = min(rows, cols)`.
    pub fn last_divisor(&self) -> Option<&BigInt> {
        self.divisors.last()
    }

    /// The `rows x cols` diagonal factor.
    pub fn diagonal_matrix(&self) -> BigIntMatrix {
        let mut s = BigIntMatrix::zeros(self.rows, self.cols);
        for (i, d) in self.divisors.iter().enumerate() {
            s[(i, i)] = d.clone();
        }
        s
    }

    pub fn recompose(&self) -> BigIntMatrix {
        &(&self.left * &self.diagonal_matrix()) * &self.right
    }
}

/// Working state holding the invariant `M = v1 · a · v2`.
struct Reducer {
    a: BigIntMatrix,
    v1: BigIntMatrix,
    v2: BigIntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.a.cols() {
            let t = std::mem::take(&mut self.a[(i, c)]);
            self.a[(i, c)] = std::mem::replace(&mut self.a[(j, c)], t);
        }
        for r in 0..self.v1.rows() {
            let t = std::mem::take(&mut self.v1[(r, i)]);
            self.v1[(r, i)] = std::mem::replace(&mut self.v1[(r, j)], t);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.a.rows() {
            let t = std::mem::take(&mut self.a[(r, i)]);
            self.a[(r, i)] = std::mem::replace(&mut self.a[(r, j)], t);
        }
        for c in 0..self.v2.cols() {
            let t = std::mem::take(&mut self.v2[(i, c)]);
            self.v2[(i, c)] = std::mem::replace(&mut self.v2[(j, c)], t);
        }
    }

    /// row_dst += k * row_src
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.a.cols() {
            let v = &self.a[(src, c)] * k;
            self.a[(dst, c)] += v;
        }
        for r in 0..self.v1.rows() {
            let v = &self.v1[(r, dst)] * k;
            self.v1[(r, src)] -= v;
        }
    }

    /// col_dst += k * col_src
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.a.rows() {
            let v = &self.a[(r, src)] * k;
            self.a[(r, dst)] += v;
        }
        for c in 0..self.v2.cols() {
            let v = &self.v2[(dst, c)] * k;
            self.v2[(src, c)] -= v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.a.cols() {
            let v = -std::mem::take(&mut self.a[(i, c)]);
            self.a[(i, c)] = v;
        }
        for r in 0..self.v1.rows() {
            let v = -std::mem::take(&mut self.v1[(r, i)]);
            self.v1[(r, i)] = v;
        }
    }

    fn smallest_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let mag = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| mag < *b) {
                    best = Some((i, j, mag));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Clears row and column `t` outside the pivot; returns whether they
    /// were fully cleared (otherwise a smaller remainder is left behind).
    fn eliminate(&mut self, t: usize) -> bool {
        let mut clean = true;
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
            self.add_row(i, t, &-q);
            clean &= self.a[(i, t)].is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
            self.add_col(j, t, &-q);
            clean &= self.a[(t, j)].is_zero();
        }
        clean
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = &self.a[(t, t)];
        (t + 1..self.a.rows())
            .find(|&i| (t + 1..self.a.cols()).any(|j| !(&self.a[(i, j)] % p).is_zero()))
    }
}

/// Smith normal form by repeated smallest-pivot row/column reduction.
pub fn smith_normal_form(m: &BigIntMatrix) -> SnfDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut st = Reducer {
        a: m.clone(),
        v1: BigIntMatrix::identity(rows),
        v2: BigIntMatrix::identity(cols),
    };
    let r = rows.min(cols);
    for t in 0..r {
        while let Some((i, j)) = st.smallest_nonzero(t) {
            st.swap_rows(t, i);
            st.swap_cols(t, j);
            if !st.eliminate(t) {
                continue;
            }
            match st.non_divisible_row(t) {
                Some(i) => st.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if st.a[(t, t)].is_negative() {
            st.negate_row(t);
        }
    }
    let divisors = (0..r).map(|i| st.a[(i, i)].clone()).collect();
    SnfDecomposition {
        divisors,
        left: st.v1,
        right: st.v2,
        rows,
        cols,
    }
}

/// Whether `m x ≡ 0 (mod p²)` has a solution `x ≢ 0 (mod p)`, decided as
/// `p² | s_n` on the last elementary divisor.
pub fn congruence_solvable(m: &BigIntMatrix, p: u64) -> Result<bool, LinalgError> {
    m.require_square()?;
    if !crate::ntheory::is_prime_u64(p) {
        return Err(LinalgError::NotPrime(p));
    }
    let snf = smith_normal_form(m);
    let p2 = BigInt::from(p) * BigInt::from(p);
    Ok(match snf.last_divisor() {
        Some(s) => (s % &p2).is_zero(),
        None => false,
    })
}
