//! Bruhat permutation and signed cell extraction by exact elimination.

use num::{BigRational, Signed, Zero};
use perm_core::Permutation;
use quat_clifford::SignedPermMatrix;

use crate::matrix::RationalLowerTriangular;

/// Permutation factor of the two-sided triangular decomposition, read off
/// the rank jumps of the southwest submatrices (rows at or below i, columns
/// at or before j).
pub fn bruhat_perm(l: &RationalLowerTriangular) -> Permutation {
    bruhat_perm_rows(&l.to_dense())
}

/// Rank-jump permutation of an arbitrary invertible square matrix.
pub fn bruhat_perm_rows(rows: &[Vec<BigRational>]) -> Permutation {
    let n = rows.len();
    let rank = |i: usize, j: usize| -> i64 {
        if i > n || j == 0 {
            return 0;
        }
        let sub: Vec<Vec<BigRational>> =
            (i..=n).map(|r| rows[r - 1][..j].to_vec()).collect();
        dense_rank(sub)
    };
    let mut oneline = vec![0u8; n];
    for i in 1..=n {
        for j in 1..=n {
            let jump = rank(i, j) - rank(i + 1, j) - rank(i, j - 1) + rank(i + 1, j - 1);
            if jump == 1 {
                oneline[i - 1] = j as u8;
            }
        }
    }
    Permutation::from_oneline(oneline)
        .expect("rank jumps of an invertible matrix form a permutation")
}

/// Signed permutation matrix of the cell through L under two-sided
/// multiplication by upper triangular matrices with positive diagonal.
/// Valid on lower triangular input directly: L = QR with R upper positive
/// puts L and its rotation factor Q in the same double coset.
pub fn signed_cell(l: &RationalLowerTriangular) -> SignedPermMatrix {
    signed_cell_rows(l.to_dense())
}

/// Elimination form of the signed cell for an arbitrary invertible square
/// matrix. Columns are processed left to right; each pivots on the lowest
/// untouched row with a nonzero entry, clears upward by adding multiples of
/// the pivot row, clears rightward by adding multiples of the pivot column,
/// and rescales positively, so the double coset never changes.
pub fn signed_cell_rows(mut m: Vec<Vec<BigRational>>) -> SignedPermMatrix {
    let n = m.len();
    let mut used = vec![false; n];
    let mut col_of = vec![0usize; n];
    let mut signs = vec![1i8; n];
    for j in 0..n {
        let i = (0..n)
            .rev()
            .find(|&r| !used[r] && !m[r][j].is_zero())
            .expect("invertible input always yields a pivot");
        used[i] = true;
        col_of[i] = j;
        signs[i] = if m[i][j].is_positive() { 1 } else { -1 };
        let scale = m[i][j].abs();
        for e in &mut m[i] {
            *e = &*e / &scale;
        }
        let pivot_row = m[i].clone();
        let pivot = pivot_row[j].clone();
        for row in m.iter_mut().take(i) {
            if row[j].is_zero() {
                continue;
            }
            let c = &row[j] / &pivot;
            for (e, p) in row.iter_mut().zip(&pivot_row) {
                *e -= p * &c;
            }
        }
        for k in j + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let c = &m[i][k] / &pivot;
            for row in m.iter_mut() {
                let sub = &row[j] * &c;
                row[k] -= sub;
            }
        }
    }
    let oneline: Vec<u8> = col_of.iter().map(|&j| (j + 1) as u8).collect();
    let perm = Permutation::from_oneline(oneline).expect("one pivot per row and column");
    SignedPermMatrix::new(perm, signs)
}

fn dense_rank(mut m: Vec<Vec<BigRational>>) -> i64 {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0usize;
    for j in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][j].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (upper, lower) = m.split_at_mut(rank + 1);
        let pivot_row = &upper[rank];
        let pivot = pivot_row[j].clone();
        for row in lower.iter_mut() {
            if row[j].is_zero() {
                continue;
            }
            let c = &row[j] / &pivot;
            for (e, p) in row[j..].iter_mut().zip(&pivot_row[j..]) {
                *e -= p * &c;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank as i64
}
