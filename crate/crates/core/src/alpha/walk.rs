use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::{AlphaError, AlphaParam};
use crate::graph::{complement, degree_vector, Graph};
use crate::linalg::{charpoly, BigIntMatrix, IntPolynomial};

/// `A_c(g) = a·D(g) + b·A(g)`.
pub fn build_ac(g: &Graph, alpha: AlphaParam) -> BigIntMatrix {
    let n = g.order();
    let d = degree_vector(g);
    let (a, b) = (BigInt::from(alpha.a()), BigInt::from(alpha.b()));
    BigIntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            &a * d[i]
        } else if g.has_edge(i, j) {
            b.clone()
        } else {
            BigInt::default()
        }
    })
}

/// Columns `1, A_c 1 / c, …, A_c^{count-1} 1 / c`.
///
/// `A_c 1 = (a + b) d = c·d`, so the second column is the degree vector and
/// every later column is `A_c` times the previous one. No division occurs.
pub(crate) fn scaled_walk_columns(g: &Graph, alpha: AlphaParam, count: usize) -> Vec<Vec<BigInt>> {
    let n = g.order();
    let ac = build_ac(g, alpha);
    let mut cols = Vec::with_capacity(count);
    if count == 0 {
        return cols;
    }
    cols.push(vec![BigInt::one(); n]);
    if count > 1 {
        let d: Vec<BigInt> = degree_vector(g).into_iter().map(BigInt::from).collect();
        debug_assert_eq!(
            ac.mul_vec(&cols[0]),
            d.iter().map(|x| x * alpha.c_alpha()).collect::<Vec<_>>()
        );
        cols.push(d);
    }
    while cols.len() < count {
        let next = ac.mul_vec(cols.last().expect("nonempty"));
        cols.push(next);
    }
    cols
}

/// The modified walk matrix `[1, A_c 1/c, …, A_c^{n-1} 1/c]`.
pub fn walk_matrix(g: &Graph, alpha: AlphaParam) -> BigIntMatrix {
    BigIntMatrix::from_columns(&scaled_walk_columns(g, alpha, g.order()))
}

/// The walk matrix `[1, A_c 1, …, A_c^{n-1} 1]`, equal to the modified walk
/// matrix times `diag(1, c, …, c)`.
pub fn unscaled_walk_matrix(g: &Graph, alpha: AlphaParam) -> BigIntMatrix {
    let c = BigInt::from(alpha.c_alpha());
    let mut cols = scaled_walk_columns(g, alpha, g.order());
    for col in cols.iter_mut().skip(1) {
        for x in col.iter_mut() {
            *x *= &c;
        }
    }
    BigIntMatrix::from_columns(&cols)
}

/// Half-width walk matrices used for the mod-2 structure checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatWalkMatrices {
    /// Even `n`: columns `0..n/2` of the modified walk matrix.
    /// Odd `n`: columns `1..=(n-1)/2`.
    pub hat: BigIntMatrix,
    /// Even `n`: columns `0, 2, 4, …, n-2`. Odd `n`: columns `2, 4, …, n-1`.
    pub hat_prime: BigIntMatrix,
    /// The modified walk matrix with its first column doubled.
    pub bar: BigIntMatrix,
}

pub fn hat_walk_matrices(g: &Graph, alpha: AlphaParam) -> Result<HatWalkMatrices, AlphaError> {
    let n = g.order();
    if n < 2 {
        return Err(AlphaError::OrderTooSmall(n));
    }
    let w = walk_matrix(g, alpha);
    let (hat_cols, prime_cols): (Vec<usize>, Vec<usize>) = if n.is_multiple_of(2) {
        ((0..n / 2).collect(), (0..n - 1).step_by(2).collect())
    } else {
        ((1..=(n - 1) / 2).collect(), (2..n).step_by(2).collect())
    };
    let mut bar = w.clone();
    for i in 0..n {
        bar[(i, 0)] = BigInt::from(2);
    }
    Ok(HatWalkMatrices {
        hat: w.select_columns(&hat_cols),
        hat_prime: w.select_columns(&prime_cols),
        bar,
    })
}

/// Characteristic polynomials of `A_c(g)` and `A_c(ḡ)`. Two graphs share
/// the generalized spectrum exactly when their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpectrumKey {
    pub graph: IntPolynomial,
    pub complement: IntPolynomial,
}

pub fn spectrum_key(g: &Graph, alpha: AlphaParam) -> SpectrumKey {
    let poly = |h: &Graph| charpoly(&build_ac(h, alpha)).expect("square by construction");
    SpectrumKey {
        graph: poly(g),
        complement: poly(&complement(g)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::det_bareiss;
    use num_traits::Zero;

    fn alpha(s: &str) -> AlphaParam {
        s.parse().unwrap()
    }

    #[test]
    fn ac_examples() {
        let p3 = Graph::path(3);
        assert_eq!(
            build_ac(&p3, alpha("1/2")),
            BigIntMatrix::from_rows(&[vec![1, 1, 0], vec![1, 2, 1], vec![0, 1, 1]])
        );
        assert_eq!(
            build_ac(&p3, alpha("3/4")),
            BigIntMatrix::from_rows(&[vec![3, 1, 0], vec![1, 6, 1], vec![0, 1, 3]])
        );
        assert_eq!(
            build_ac(&p3, alpha("0")),
            BigIntMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]])
        );
    }

    #[test]
    fn walk_examples() {
        assert_eq!(walk_matrix(&Graph::empty(1), alpha("2/3")), BigIntMatrix::identity(1));
        let w = walk_matrix(&Graph::path(3), alpha("0"));
        assert_eq!(
            w,
            BigIntMatrix::from_rows(&[vec![1, 1, 2], vec![1, 2, 2], vec![1, 1, 2]])
        );
        assert!(det_bareiss(&w).unwrap().is_zero());
        let wk3 = walk_matrix(&Graph::complete(3), alpha("1/3"));
        assert_eq!(wk3.row(0), wk3.row(1));
        assert!(det_bareiss(&wk3).unwrap().is_zero());
    }

    #[test]
    fn hat_shapes() {
        let h = hat_walk_matrices(&Graph::path(4), alpha("0")).unwrap();
        assert_eq!(
            h.hat,
            BigIntMatrix::from_rows(&[vec![1, 1], vec![1, 2], vec![1, 2], vec![1, 1]])
        );
        assert_eq!(h.hat_prime.cols(), 2);
        let h5 = hat_walk_matrices(&Graph::path(5), alpha("1/2")).unwrap();
        assert_eq!((h5.hat.cols(), h5.hat_prime.cols()), (2, 2));
        let w = walk_matrix(&Graph::path(5), alpha("1/2"));
        assert_eq!(h5.bar.column(0), vec![BigInt::from(2); 5]);
        for j in 1..5 {
            assert_eq!(h5.bar.column(j), w.column(j));
        }
        assert!(hat_walk_matrices(&Graph::empty(1), alpha("0")).is_err());
    }

    #[test]
    fn spectrum_keys() {
        let k1 = spectrum_key(&Graph::empty(1), alpha("0"));
        assert_eq!(k1.graph, IntPolynomial::from_i64(&[0, 1]));
        assert_eq!(k1.complement, IntPolynomial::from_i64(&[0, 1]));
        let k3 = spectrum_key(&Graph::complete(3), alpha("0"));
        assert_eq!(k3.graph, IntPolynomial::from_i64(&[-2, -3, 0, 1]));
        assert_eq!(k3.complement, IntPolynomial::from_i64(&[0, 0, 0, 1]));
        let k2 = spectrum_key(&Graph::complete(2), alpha("0"));
        assert_eq!(k2.graph, IntPolynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(k2.complement, IntPolynomial::from_i64(&[0, 0, 1]));
    }
}
