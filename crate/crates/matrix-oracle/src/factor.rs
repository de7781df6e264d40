//! Factorization of a unit lower triangular matrix along the inversion
//! support of a permutation.

use num::{BigRational, Zero};
use perm_core::Permutation;

use crate::matrix::RationalLowerTriangular;

/// True when every nonzero strictly-lower entry (i, j) corresponds to an
/// inverted pair (j, i) of the permutation.
pub fn supported_on_inversions(l: &RationalLowerTriangular, sigma: &Permutation) -> bool {
    assert_eq!(l.n_plus_1(), sigma.n_plus_1());
    let inv = sigma.inversions();
    let n = l.n_plus_1();
    for i in 2..=n {
        for j in 1..i {
            if !l.entry(i, j).is_zero() && !inv.contains(&(j as u8, i as u8)) {
                return false;
            }
        }
    }
    true
}

/// Splits L into L0 * L1 where L0 carries exactly the entries at inverted
/// pairs of sigma and L1 the entries at the complementary pairs (the
/// inversions of sigma followed by the longest permutation). The split is
/// built band by band below the diagonal: each entry is the matching entry
/// of L minus the cross terms already determined on thinner bands.
pub fn lo_factorize(
    l: &RationalLowerTriangular,
    sigma: &Permutation,
) -> (RationalLowerTriangular, RationalLowerTriangular) {
    let n = l.n_plus_1();
    assert_eq!(n, sigma.n_plus_1());
    let inv = sigma.inversions();
    let mut l0: Vec<Vec<BigRational>> = (0..n).map(|r| vec![BigRational::zero(); r]).collect();
    let mut l1 = l0.clone();
    for band in 1..n {
        for i in band + 1..=n {
            let j = i - band;
            let mut cross = BigRational::zero();
            for k in j + 1..i {
                cross += &l0[i - 1][k - 1] * &l1[k - 1][j - 1];
            }
            let rest = l.entry(i, j) - cross;
            if inv.contains(&(j as u8, i as u8)) {
                l0[i - 1][j - 1] = rest;
            } else {
                l1[i - 1][j - 1] = rest;
            }
        }
    }
    (
        RationalLowerTriangular::from_below(l0),
        RationalLowerTriangular::from_below(l1),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn support_of_the_rank_two_cycle() {
        // [312] inverts the pairs (1,2) and (1,3), so entries (2,1) and
        // (3,1) are free while (3,2) must vanish.
        let sigma = Permutation::from_oneline(vec![3, 1, 2]).unwrap();
        let inside = RationalLowerTriangular::from_rows(vec![
            vec![BigRational::one()],
            vec![q(5, 1), BigRational::one()],
            vec![q(-7, 2), q(0, 1), BigRational::one()],
        ])
        .unwrap();
        assert!(supported_on_inversions(&inside, &sigma));
        let outside = RationalLowerTriangular::from_rows(vec![
            vec![BigRational::one()],
            vec![q(5, 1), BigRational::one()],
            vec![q(-7, 2), q(1, 3), BigRational::one()],
        ])
        .unwrap();
        assert!(!supported_on_inversions(&outside, &sigma));
    }

    #[test]
    fn supported_input_factors_as_itself_times_identity() {
        let sigma = Permutation::from_oneline(vec![3, 1, 2]).unwrap();
        let l = RationalLowerTriangular::from_rows(vec![
            vec![BigRational::one()],
            vec![q(5, 1), BigRational::one()],
            vec![q(-7, 2), q(0, 1), BigRational::one()],
        ])
        .unwrap();
        let (l0, l1) = lo_factorize(&l, &sigma);
        assert_eq!(l0, l);
        assert_eq!(l1, RationalLowerTriangular::identity(3));
    }

    #[test]
    fn identity_permutation_pushes_everything_right() {
        let sigma = Permutation::identity(3);
        let l = RationalLowerTriangular::from_rows(vec![
            vec![BigRational::one()],
            vec![q(5, 1), BigRational::one()],
            vec![q(-7, 2), q(1, 3), BigRational::one()],
        ])
        .unwrap();
        let (l0, l1) = lo_factorize(&l, &sigma);
        assert_eq!(l0, RationalLowerTriangular::identity(3));
        assert_eq!(l1, l);
    }

    #[test]
    fn factors_multiply_back_and_respect_supports() {
        let sigma = Permutation::from_oneline(vec![2, 4, 1, 3]).unwrap();
        let eta = Permutation::longest(4);
        let l = RationalLowerTriangular::from_rows(vec![
            vec![BigRational::one()],
            vec![q(1, 2), BigRational::one()],
            vec![q(-3, 1), q(4, 5), BigRational::one()],
            vec![q(2, 7), q(-1, 1), q(6, 1), BigRational::one()],
        ])
        .unwrap();
        let (l0, l1) = lo_factorize(&l, &sigma);
        assert_eq!(&l0 * &l1, l);
        assert!(supported_on_inversions(&l0, &sigma));
        assert!(supported_on_inversions(&l1, &sigma.compose(&eta)));
    }
}
