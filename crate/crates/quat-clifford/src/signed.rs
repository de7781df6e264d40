use std::fmt;
use std::ops::Mul;

use perm_core::Permutation;

use crate::quat::QuatMonomial;

/// Matrix with exactly one nonzero entry +-1 per row and column: the entry
/// in row i sits in column i^perm with value signs[i-1].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPermMatrix {
    perm: Permutation,
    signs: Vec<i8>,
}

impl SignedPermMatrix {
    pub fn identity(n_plus_1: u8) -> Self {
        SignedPermMatrix {
            perm: Permutation::identity(n_plus_1 as usize),
            signs: vec![1; n_plus_1 as usize],
        }
    }

    pub fn new(perm: Permutation, signs: Vec<i8>) -> Self {
        assert_eq!(perm.n_plus_1(), signs.len());
        assert!(signs.iter().all(|&s| s == 1 || s == -1));
        SignedPermMatrix { perm, signs }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Sign of the single nonzero entry in row i (1-based).
    pub fn row_sign(&self, i: u8) -> i8 {
        self.signs[i as usize - 1]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Rotation image of one acute letter: the 2x2 block at rows i, i+1 is
    /// [[0, -1], [1, 0]] for sign +1 and its transpose for sign -1.
    pub fn rotation(n_plus_1: u8, i: u8, sign: i8) -> Self {
        assert!(i >= 1 && i < n_plus_1);
        assert!(sign == 1 || sign == -1);
        let mut oneline: Vec<u8> = (1..=n_plus_1).collect();
        oneline.swap(i as usize - 1, i as usize);
        let perm = Permutation::from_oneline(oneline).unwrap();
        let mut signs = vec![1i8; n_plus_1 as usize];
        if sign == 1 {
            signs[i as usize - 1] = -1;
        } else {
            signs[i as usize] = -1;
        }
        SignedPermMatrix { perm, signs }
    }

    /// Image of a word of acute letters (all with the given per-letter
    /// signs), multiplied left to right.
    pub fn rotation_word(n_plus_1: u8, letters: &[u8], letter_signs: &[i8]) -> Self {
        assert_eq!(letters.len(), letter_signs.len());
        let mut m = Self::identity(n_plus_1);
        for (&i, &s) in letters.iter().zip(letter_signs) {
            m = m * Self::rotation(n_plus_1, i, s);
        }
        m
    }

    /// Image of a monomial: the diagonal matrix with entry
    /// (-1)^(|supp * {j-1, j}|) in row j. The overall sign of the monomial
    /// is invisible here since -1 acts trivially.
    pub fn diagonal_of_monomial(q: &QuatMonomial) -> Self {
        let n_plus_1 = q.n() + 1;
        let mut signs = vec![1i8; n_plus_1 as usize];
        for i in q.support() {
            signs[i as usize - 1] *= -1;
            signs[i as usize] *= -1;
        }
        SignedPermMatrix { perm: Permutation::identity(n_plus_1 as usize), signs }
    }

    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        let n = self.signs.len() as u8;
        let signs = (1..=n).map(|i| self.signs[inv.image(i) as usize - 1]).collect();
        SignedPermMatrix { perm: inv, signs }
    }

    pub fn det(&self) -> i8 {
        let parity = if self.perm.inversion_count().is_multiple_of(2) { 1 } else { -1 };
        self.signs.iter().product::<i8>() * parity
    }
}

impl Mul for SignedPermMatrix {
    type Output = SignedPermMatrix;

    /// Row i of the product picks up the sign of row i here and then the
    /// sign of row i^perm of the right factor.
    fn mul(self, rhs: SignedPermMatrix) -> SignedPermMatrix {
        assert_eq!(self.signs.len(), rhs.signs.len());
        let n = self.signs.len() as u8;
        let signs = (1..=n)
            .map(|i| self.signs[i as usize - 1] * rhs.signs[self.perm.image(i) as usize - 1])
            .collect();
        SignedPermMatrix { perm: self.perm.compose(&rhs.perm), signs }
    }
}

impl fmt::Display for SignedPermMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = (1..=self.signs.len() as u8)
            .map(|i| {
                let s = if self.row_sign(i) > 0 { "+" } else { "-" };
                format!("{s}{}", self.perm.image(i))
            })
            .collect();
        write!(f, "[{}]", entries.join(" "))
    }
}

impl fmt::Debug for SignedPermMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
