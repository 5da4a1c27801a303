//! Small dense linear algebra over exact rationals.

use num_traits::{One, Zero};

use crate::rational::Q;

/// Determinant by fraction-free-ish Gaussian elimination over `Q`.
pub fn determinant(matrix: &[Vec<Q>]) -> Q {
    let n = matrix.len();
    if n == 0 {
        return Q::one();
    }
    let mut m: Vec<Vec<Q>> = matrix.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Q::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// `matrix * vector` with `matrix` given as rows.
pub fn mat_vec(matrix: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    matrix.iter().map(|row| dot(row, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ints};

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[ints(&[1, 0]), ints(&[0, 1])]), int(1));
        assert_eq!(determinant(&[ints(&[1, -2]), ints(&[0, 1])]), int(1));
        assert_eq!(determinant(&[ints(&[0, 1]), ints(&[1, 0])]), int(-1));
        assert_eq!(determinant(&[ints(&[2, 4]), ints(&[1, 2])]), int(0));
        assert_eq!(
            determinant(&[ints(&[2, 0, 1]), ints(&[1, 3, 2]), ints(&[1, 1, 2])]),
            int(6)
        );
    }
}
