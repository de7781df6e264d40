//! Randomized cross-checks tying the matrix side to the sign algebra, plus
//! positivity witnesses for generator products with positive parameters.

use num::{BigRational, Signed};
use perm_core::ReducedWord;
use quat_clifford::SignedPermMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cell::{bruhat_perm, signed_cell};
use crate::error::{Error, Result};
use crate::matrix::{lambda_product, RationalLowerTriangular};

/// Word together with positive parameters: a witness that the generator
/// product lands in the totally positive region of its permutation.
#[derive(Clone, Debug)]
pub struct PositiveWitness {
    word: ReducedWord,
    params: Vec<BigRational>,
}

impl PositiveWitness {
    pub fn new(word: ReducedWord, params: Vec<BigRational>) -> Result<Self> {
        if params.len() != word.len() {
            return Err(Error::ParameterCount { expected: word.len(), got: params.len() });
        }
        if params.iter().any(|t| !t.is_positive()) {
            return Err(Error::NotPositive);
        }
        Ok(PositiveWitness { word, params })
    }

    /// Witness with seeded random positive parameters.
    pub fn random(word: ReducedWord, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let params = (0..word.len()).map(|_| random_positive_rational(&mut rng)).collect();
        PositiveWitness { word, params }
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn params(&self) -> &[BigRational] {
        &self.params
    }

    pub fn product(&self) -> RationalLowerTriangular {
        lambda_product(&self.word, &self.params).expect("one parameter per letter")
    }
}

/// All minors with row indices dominating column indices elementwise, for
/// sizes 1..=max_size. Products of generators with positive parameters have
/// no negative entries in this list, and none at all vanish when the word
/// spells the longest permutation.
pub fn dominated_minors(l: &RationalLowerTriangular, max_size: usize) -> Vec<BigRational> {
    let n = l.n_plus_1();
    let mut out = Vec::new();
    for k in 1..=max_size.min(n) {
        for rows in k_subsets(n, k) {
            for cols in k_subsets(n, k) {
                if rows.iter().zip(&cols).all(|(r, c)| c <= r) {
                    out.push(l.minor(&rows, &cols));
                }
            }
        }
    }
    out
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..=n {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(1, n, k, &mut current, &mut out);
    out
}

/// Draws seeded nonzero parameters with the given signs, forms the
/// generator product, and confirms both that the rank-jump permutation is
/// the word's permutation and that the extracted signed cell equals the
/// rotation image of the word with those letter signs.
pub fn lambda_cell_crosscheck(word: &ReducedWord, signs: &[i8], seed: u64) -> bool {
    assert_eq!(word.len(), signs.len());
    assert!(signs.iter().all(|&s| s == 1 || s == -1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params: Vec<BigRational> = signs
        .iter()
        .map(|&s| {
            let t = random_positive_rational(&mut rng);
            if s < 0 {
                -t
            } else {
                t
            }
        })
        .collect();
    let l = lambda_product(word, &params).expect("one parameter per letter");
    let expected = SignedPermMatrix::rotation_word(word.n_plus_1() as u8, word.letters(), signs);
    bruhat_perm(&l) == word.permutation() && signed_cell(&l) == expected
}

fn random_positive_rational(rng: &mut impl Rng) -> BigRational {
    let num: i64 = rng.random_range(1..=16);
    let den: i64 = rng.random_range(1..=16);
    BigRational::new(num.into(), den.into())
}
