use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{BigIntMatrix, LinalgError, RationalMatrix};

/// Exact inverse of an integer matrix by Gauss–Jordan elimination over `Q`.
pub fn rational_inverse(m: &BigIntMatrix) -> Result<RationalMatrix, LinalgError> {
    let n = m.require_square()?;
    let mut a = m.to_rational();
    let mut inv = RationalMatrix::identity(n);
    for c in 0..n {
        let piv = (c..n)
            .find(|&r| !a[(r, c)].is_zero())
            .ok_or(LinalgError::Singular)?;
        if piv != c {
            for j in 0..n {
                let t = a[(c, j)].clone();
                a[(c, j)] = std::mem::replace(&mut a[(piv, j)], t);
                let t = inv[(c, j)].clone();
                inv[(c, j)] = std::mem::replace(&mut inv[(piv, j)], t);
            }
        }
        let scale = BigRational::one() / &a[(c, c)];
        for j in 0..n {
            a[(c, j)] = &a[(c, j)] * &scale;
            inv[(c, j)] = &inv[(c, j)] * &scale;
        }
        for r in 0..n {
            if r == c || a[(r, c)].is_zero() {
                continue;
            }
            let f = a[(r, c)].clone();
            for j in 0..n {
                let da = &f * &a[(c, j)];
                a[(r, j)] -= da;
                let di = &f * &inv[(c, j)];
                inv[(r, j)] -= di;
            }
        }
    }
    Ok(inv)
}
