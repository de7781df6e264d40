//! Exact unit lower triangular matrices and their one-parameter generators.

use std::fmt;
use std::ops::Mul;

use num::{BigRational, One, Zero};
use perm_core::ReducedWord;

use crate::error::{Error, Result};

/// Square rational matrix with unit diagonal and zeros above the diagonal.
/// Only the entries strictly below the diagonal are stored, so the shape
/// constraints hold by construction and multiplication stays exact.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalLowerTriangular {
    // below[r] holds the entries of row r+1 (1-based) in columns 1..=r.
    below: Vec<Vec<BigRational>>,
}

impl RationalLowerTriangular {
    pub fn identity(n_plus_1: usize) -> Self {
        let below = (0..n_plus_1).map(|r| vec![BigRational::zero(); r]).collect();
        RationalLowerTriangular { below }
    }

    /// Builds a matrix from ragged rows that include the diagonal: row i
    /// (1-based) must hold i entries and end in 1.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let mut below = Vec::with_capacity(rows.len());
        for (r, mut row) in rows.into_iter().enumerate() {
            if row.len() != r + 1 {
                return Err(Error::BadShape {
                    row: r + 1,
                    detail: format!("expected {} entries, got {}", r + 1, row.len()),
                });
            }
            let diag = row.pop().expect("row length checked above");
            if !diag.is_one() {
                return Err(Error::BadShape {
                    row: r + 1,
                    detail: format!("diagonal entry is {diag}, not 1"),
                });
            }
            below.push(row);
        }
        Ok(RationalLowerTriangular { below })
    }

    pub(crate) fn from_below(below: Vec<Vec<BigRational>>) -> Self {
        for (r, row) in below.iter().enumerate() {
            assert_eq!(row.len(), r);
        }
        RationalLowerTriangular { below }
    }

    /// One-parameter generator: the identity plus t in entry (i+1, i).
    pub fn lambda(n_plus_1: usize, i: u8, t: BigRational) -> Self {
        assert!(i >= 1 && (i as usize) < n_plus_1);
        let mut m = Self::identity(n_plus_1);
        m.below[i as usize][i as usize - 1] = t;
        m
    }

    pub fn n_plus_1(&self) -> usize {
        self.below.len()
    }

    /// Entry in row i, column j (both 1-based); above-diagonal entries are
    /// zero and the diagonal is one.
    pub fn entry(&self, i: usize, j: usize) -> BigRational {
        assert!(i >= 1 && j >= 1 && i <= self.n_plus_1() && j <= self.n_plus_1());
        if j > i {
            BigRational::zero()
        } else if j == i {
            BigRational::one()
        } else {
            self.below[i - 1][j - 1].clone()
        }
    }

    /// Full square copy of the entries, for elimination routines.
    pub fn to_dense(&self) -> Vec<Vec<BigRational>> {
        let n = self.n_plus_1();
        (1..=n).map(|i| (1..=n).map(|j| self.entry(i, j)).collect()).collect()
    }

    pub fn inverse(&self) -> Self {
        let n = self.n_plus_1();
        let mut inv = Self::identity(n);
        // Forward substitution: row i of the inverse satisfies
        // sum_k self[i][k] inv[k][j] = [i == j].
        for i in 1..=n {
            for j in 1..i {
                let mut acc = BigRational::zero();
                for k in j..i {
                    acc += self.entry(i, k) * inv.entry(k, j);
                }
                inv.below[i - 1][j - 1] = -acc;
            }
        }
        inv
    }

    /// Determinant of the submatrix picked by 1-based row and column index
    /// lists of equal length.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> BigRational {
        assert_eq!(rows.len(), cols.len());
        let sub: Vec<Vec<BigRational>> =
            rows.iter().map(|&i| cols.iter().map(|&j| self.entry(i, j)).collect()).collect();
        dense_det(sub)
    }
}

impl Mul for RationalLowerTriangular {
    type Output = RationalLowerTriangular;

    fn mul(self, rhs: RationalLowerTriangular) -> RationalLowerTriangular {
        &self * &rhs
    }
}

impl Mul for &RationalLowerTriangular {
    type Output = RationalLowerTriangular;

    fn mul(self, rhs: &RationalLowerTriangular) -> RationalLowerTriangular {
        let n = self.n_plus_1();
        assert_eq!(n, rhs.n_plus_1());
        let mut out = RationalLowerTriangular::identity(n);
        for i in 1..=n {
            for j in 1..i {
                let mut acc = BigRational::zero();
                for k in j..=i {
                    acc += self.entry(i, k) * rhs.entry(k, j);
                }
                out.below[i - 1][j - 1] = acc;
            }
        }
        out
    }
}

impl fmt::Display for RationalLowerTriangular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n_plus_1();
        let rows: Vec<String> = (1..=n)
            .map(|i| {
                let entries: Vec<String> = (1..=i).map(|j| self.entry(i, j).to_string()).collect();
                format!("[{}]", entries.join(" "))
            })
            .collect();
        write!(f, "[{}]", rows.join(" "))
    }
}

impl fmt::Debug for RationalLowerTriangular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Product of one generator per word letter, multiplied left to right.
pub fn lambda_product(word: &ReducedWord, params: &[BigRational]) -> Result<RationalLowerTriangular> {
    if params.len() != word.len() {
        return Err(Error::ParameterCount { expected: word.len(), got: params.len() });
    }
    let n_plus_1 = word.n_plus_1();
    let mut product = RationalLowerTriangular::identity(n_plus_1);
    for (&i, t) in word.letters().iter().zip(params) {
        product = &product * &RationalLowerTriangular::lambda(n_plus_1, i, t.clone());
    }
    Ok(product)
}

/// Exact determinant of a dense square rational matrix.
pub(crate) fn dense_det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for j in 0..n {
        let Some(p) = (j..n).find(|&r| !m[r][j].is_zero()) else {
            return BigRational::zero();
        };
        if p != j {
            m.swap(p, j);
            det = -det;
        }
        let pivot = m[j][j].clone();
        det *= &pivot;
        let (upper, lower) = m.split_at_mut(j + 1);
        let pivot_row = &upper[j];
        for row in lower.iter_mut() {
            if row[j].is_zero() {
                continue;
            }
            let c = &row[j] / &pivot;
            for (e, p) in row[j..].iter_mut().zip(&pivot_row[j..]) {
                *e -= p * &c;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn three_letter_product_closed_form() {
        // lambda_1(t1) lambda_2(t2) lambda_1(t3) has second row (t1+t3, 1)
        // and third row (t2 t3, t2, 1).
        for (t1, t2, t3) in [(q(5, 7), q(3, 2), q(-2, 1)), (q(1, 3), q(-4, 5), q(9, 2))] {
            let word = ReducedWord::new(2, vec![1, 2, 1]).unwrap();
            let l = lambda_product(&word, &[t1.clone(), t2.clone(), t3.clone()]).unwrap();
            assert_eq!(l.entry(2, 1), &t1 + &t3);
            assert_eq!(l.entry(3, 1), &t2 * &t3);
            assert_eq!(l.entry(3, 2), t2);
        }
    }

    #[test]
    fn zero_parameters_give_the_identity() {
        let word = ReducedWord::new(3, vec![1, 2, 1, 3, 2]).unwrap();
        let l = lambda_product(&word, &vec![BigRational::zero(); 5]).unwrap();
        assert_eq!(l, RationalLowerTriangular::identity(4));
    }

    #[test]
    fn parameter_count_is_checked() {
        let word = ReducedWord::new(2, vec![1, 2]).unwrap();
        let err = lambda_product(&word, &[BigRational::one()]).unwrap_err();
        assert_eq!(err, Error::ParameterCount { expected: 2, got: 1 });
    }

    #[test]
    fn row_shape_and_diagonal_are_validated() {
        let bad_len = RationalLowerTriangular::from_rows(vec![vec![BigRational::one()], vec![q(2, 1)]]);
        assert!(matches!(bad_len, Err(Error::BadShape { row: 2, .. })));
        let bad_diag =
            RationalLowerTriangular::from_rows(vec![vec![BigRational::one()], vec![q(2, 1), q(3, 1)]]);
        assert!(matches!(bad_diag, Err(Error::BadShape { row: 2, .. })));
    }

    #[test]
    fn inverse_roundtrip() {
        let l = RationalLowerTriangular::from_rows(vec![
            vec![q(1, 1)],
            vec![q(7, 3), q(1, 1)],
            vec![q(-2, 5), q(4, 1), q(1, 1)],
            vec![q(1, 2), q(0, 1), q(-6, 7), q(1, 1)],
        ])
        .unwrap();
        assert_eq!(&l * &l.inverse(), RationalLowerTriangular::identity(4));
        assert_eq!(&l.inverse() * &l, RationalLowerTriangular::identity(4));
    }

    #[test]
    fn minors_of_a_small_matrix() {
        let l = RationalLowerTriangular::from_rows(vec![
            vec![q(1, 1)],
            vec![q(2, 1), q(1, 1)],
            vec![q(1, 1), q(1, 1), q(1, 1)],
        ])
        .unwrap();
        assert_eq!(l.minor(&[2], &[1]), q(2, 1));
        // Rows {2,3}, columns {1,2}: determinant 2*1 - 1*1.
        assert_eq!(l.minor(&[2, 3], &[1, 2]), q(1, 1));
        assert_eq!(l.minor(&[1, 2, 3], &[1, 2, 3]), q(1, 1));
    }
}
