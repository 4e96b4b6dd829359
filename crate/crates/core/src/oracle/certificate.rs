use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::OracleError;
use crate::alpha::{build_ac, spectrum_key, unscaled_walk_matrix, AlphaParam};
use crate::graph::{encode_graph6, Graph};
use crate::linalg::{rational_inverse, LinalgError, RationalMatrix};

/// Rational orthogonal `U` with `U 1 = 1` and `Uᵀ A_c(source) U = A_c(target)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalCertificate {
    pub u: RationalMatrix,
    pub level: BigUint,
    pub source: String,
    pub target: String,
}

impl OrthogonalCertificate {
    pub fn is_permutation(&self) -> bool {
        self.level.is_one()
    }

    /// Entries as `"num/den"` (or `"num"` when integral), row by row.
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        (0..self.u.rows())
            .map(|i| (0..self.u.cols()).map(|j| self.u[(i, j)].to_string()).collect())
            .collect()
    }
}

impl Serialize for OrthogonalCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("OrthogonalCertificate", 4)?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("target", &self.target)?;
        st.serialize_field("level", &self.level.to_string())?;
        st.serialize_field("u", &self.entry_strings())?;
        st.end()
    }
}

/// Least common denominator of the entries of `u`.
pub fn level(u: &RationalMatrix) -> BigUint {
    let l = u
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    l.to_biguint().expect("denominators are positive")
}

fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Builds `U = W(g) W(h)^{-1}`, the unique rational matrix with
/// `Uᵀ W(g) = W(h)` when `U` is orthogonal, and checks every defining
/// identity exactly.
pub fn build_u(g: &Graph, h: &Graph, alpha: AlphaParam) -> Result<OrthogonalCertificate, OracleError> {
    if g.order() != h.order() {
        return Err(OracleError::MixedOrders(g.order(), h.order()));
    }
    if spectrum_key(g, alpha) != spectrum_key(h, alpha) {
        return Err(OracleError::KeysDiffer);
    }
    let wg = unscaled_walk_matrix(g, alpha).to_rational();
    let wh_inv = rational_inverse(&unscaled_walk_matrix(h, alpha)).map_err(|e| match e {
        LinalgError::Singular => OracleError::SingularWalkMatrix(encode_graph6(h)),
        other => OracleError::VerificationFailed(other.to_string()),
    })?;
    let u = &wg * &wh_inv;
    let n = g.order();
    let ut = u.transpose();

    if &ut * &u != RationalMatrix::identity(n) {
        return Err(OracleError::VerificationFailed("U^T U != I".into()));
    }
    if u.row_sums().iter().any(|s| !s.is_one()) {
        return Err(OracleError::VerificationFailed("U 1 != 1".into()));
    }
    let ag = build_ac(g, alpha);
    let ah = build_ac(h, alpha);
    let ag_r = RationalMatrix::from_fn(n, n, |i, j| rat(&ag[(i, j)]));
    let ah_r = RationalMatrix::from_fn(n, n, |i, j| rat(&ah[(i, j)]));
    if &(&ut * &ag_r) * &u != ah_r {
        return Err(OracleError::VerificationFailed("U^T A_c(G) U != A_c(H)".into()));
    }
    debug_assert!(u.entries().iter().all(|x| !x.denom().is_zero()));
    Ok(OrthogonalCertificate {
        level: level(&u),
        u,
        source: encode_graph6(g),
        target: encode_graph6(h),
    })
}
