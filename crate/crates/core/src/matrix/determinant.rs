use super::ring::Ring;
use super::square::SquareMatrix;
use crate::error::{Error, Result};

/// Exact determinant by Gaussian elimination over a field, swapping in the
/// first nonzero pivot below the diagonal and tracking the sign.
pub fn determinant<R: Ring>(m: &SquareMatrix<R>) -> Result<R> {
    if !R::IS_FIELD {
        return Err(Error::NonField);
    }
    let n = m.dim();
    let mut rows: Vec<Vec<R>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut det = m.get(0, 0).one_like();

    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return Ok(det.zero_like());
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = det.negated();
        }
        let inv = rows[col][col]
            .try_inverse()
            .ok_or(Error::DivisionByZero)?;
        det = det.times(&rows[col][col]);
        let (upper, lower) = rows.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].times(&inv);
            for k in col..n {
                let t = factor.times(&pivot_row[k]);
                row[k].sub_assign_ref(&t);
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;
    use num_bigint::BigInt;

    #[test]
    fn small_cases() {
        let m: SquareMatrix<Rat> = "1,-1;1,1".parse().unwrap();
        assert_eq!(determinant(&m).unwrap(), Rat::from(2));
        let singular: SquareMatrix<Rat> = "1,2,3;4,5,6;1,2,3".parse().unwrap();
        assert!(determinant(&singular).unwrap().is_zero());
        let needs_swap: SquareMatrix<Rat> = "0,1;1,0".parse().unwrap();
        assert_eq!(determinant(&needs_swap).unwrap(), Rat::from(-1));
    }

    #[test]
    fn integers_are_not_a_field() {
        let m = SquareMatrix::from_fn(2, |i, j| BigInt::from(i + j));
        assert_eq!(determinant(&m), Err(Error::NonField));
    }
}
