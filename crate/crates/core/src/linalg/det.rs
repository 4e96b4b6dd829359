use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BigIntMatrix, LinalgError};

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every division in the recurrence is exact, so intermediate entries stay
/// bounded by minors of the input.
pub fn det_bareiss(m: &BigIntMatrix) -> Result<BigInt, LinalgError> {
    let n = m.require_square()?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let v = &pivot_row[k] * &row[j] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(det_bareiss(&BigIntMatrix::identity(3)).unwrap(), BigInt::one());
        let m = BigIntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(det_bareiss(&m).unwrap(), BigInt::from(-2));
        let pivoting = BigIntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        assert_eq!(det_bareiss(&pivoting).unwrap(), BigInt::from(-2));
        let singular = BigIntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(det_bareiss(&singular).unwrap().is_zero());
    }

    #[test]
    fn rejects_rectangular() {
        assert_eq!(
            det_bareiss(&BigIntMatrix::zeros(2, 3)),
            Err(LinalgError::NotSquare { rows: 2, cols: 3 })
        );
    }
}
