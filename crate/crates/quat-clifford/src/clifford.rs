use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use perm_core::{canonical_word, Permutation};

use crate::quat::QuatMonomial;
use crate::scalar::DyadicRootScalar;

/// Element of the algebra spanned by the monomials a_S, with coefficients
/// m / 2^(e/2). Keys are support masks in ascending order; zero coefficients
/// are never stored, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordElement {
    n: u8,
    terms: BTreeMap<u32, DyadicRootScalar>,
}

impl CliffordElement {
    pub fn zero(n: u8) -> Self {
        CliffordElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: u8) -> Self {
        Self::scalar(n, DyadicRootScalar::ONE)
    }

    pub fn scalar(n: u8, value: DyadicRootScalar) -> Self {
        let mut z = Self::zero(n);
        z.add_term(0, value);
        z
    }

    pub fn from_monomial(q: QuatMonomial) -> Self {
        let mut z = Self::zero(q.n());
        let c = DyadicRootScalar::from_integer(q.sign() as i64);
        z.add_term(q.mask(), c);
        z
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u32) -> DyadicRootScalar {
        self.terms.get(&mask).copied().unwrap_or(DyadicRootScalar::ZERO)
    }

    /// Coefficient of the empty support, the real part R(z).
    pub fn real_part(&self) -> DyadicRootScalar {
        self.coeff(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, DyadicRootScalar)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    fn add_term(&mut self, mask: u32, c: DyadicRootScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert(DyadicRootScalar::ZERO);
        *entry = *entry + c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn scale(&self, c: DyadicRootScalar) -> Self {
        let mut out = Self::zero(self.n);
        for (mask, v) in self.terms() {
            out.add_term(mask, v * c);
        }
        out
    }

    pub fn mul_monomial_right(&self, q: QuatMonomial) -> Self {
        assert_eq!(self.n, q.n());
        let mut out = Self::zero(self.n);
        for (mask, c) in self.terms() {
            let prod = QuatMonomial::from_parts(self.n, 1, mask) * q;
            let sign = DyadicRootScalar::from_integer(prod.sign() as i64);
            out.add_term(prod.mask(), c * sign);
        }
        out
    }

    pub fn mul_monomial_left(&self, q: QuatMonomial) -> Self {
        assert_eq!(self.n, q.n());
        let mut out = Self::zero(self.n);
        for (mask, c) in self.terms() {
            let prod = q * QuatMonomial::from_parts(self.n, 1, mask);
            let sign = DyadicRootScalar::from_integer(prod.sign() as i64);
            out.add_term(prod.mask(), c * sign);
        }
        out
    }

    /// If the element is +-1 times a single monomial, return it.
    pub fn to_monomial(&self) -> Option<QuatMonomial> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&mask, &c) = self.terms.iter().next().unwrap();
        let m = c.to_integer()?;
        match m {
            1 => Some(QuatMonomial::from_parts(self.n, 1, mask)),
            -1 => Some(QuatMonomial::from_parts(self.n, -1, mask)),
            _ => None,
        }
    }

    /// Image under the automorphism negating each generator in `negmask`.
    pub fn e_action(&self, negmask: u32) -> Self {
        let mut out = Self::zero(self.n);
        for (mask, c) in self.terms() {
            if (mask & negmask).count_ones() % 2 == 1 {
                out.add_term(mask, -c);
            } else {
                out.add_term(mask, c);
            }
        }
        out
    }

    pub fn negate_generator(&self, j: u8) -> Self {
        assert!(j >= 1 && j <= self.n);
        self.e_action(1 << (j - 1))
    }

    /// Right multiplication by (1 + sign * a_i)/sqrt(2).
    pub fn apply_acute(&self, i: u8, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1);
        let ai = QuatMonomial::generator(self.n, i);
        let shifted = if sign == 1 {
            self.mul_monomial_right(ai)
        } else {
            self.mul_monomial_right(-ai)
        };
        (self.clone() + shifted).scale(DyadicRootScalar::root2_pow(-1))
    }

    /// Product of the letters (1 + sign_k a_{i_k})/sqrt(2) left to right.
    pub fn acute_word(n: u8, letters: &[u8], signs: &[i8]) -> Self {
        assert_eq!(letters.len(), signs.len());
        let mut z = Self::one(n);
        for (&i, &s) in letters.iter().zip(signs) {
            z = z.apply_acute(i, s);
        }
        z
    }

    /// The unit attached to a permutation, via any reduced word (the braid
    /// relations hold among the acute letters, so the word does not matter).
    pub fn acute_perm(sigma: &Permutation) -> Self {
        let word = canonical_word(sigma);
        let signs = vec![1i8; word.len()];
        Self::acute_word(sigma.n() as u8, word.letters(), &signs)
    }

    /// Inverse of `acute_word(n, letters, all +1)`: the reversed word with
    /// every sign flipped.
    pub fn acute_word_inverse(n: u8, letters: &[u8]) -> Self {
        let rev: Vec<u8> = letters.iter().rev().copied().collect();
        let signs = vec![-1i8; rev.len()];
        Self::acute_word(n, &rev, &signs)
    }
}

impl Add for CliffordElement {
    type Output = CliffordElement;

    fn add(self, rhs: CliffordElement) -> CliffordElement {
        assert_eq!(self.n, rhs.n);
        let mut out = self;
        for (mask, c) in rhs.terms() {
            out.add_term(mask, c);
        }
        out
    }
}

impl Sub for CliffordElement {
    type Output = CliffordElement;

    fn sub(self, rhs: CliffordElement) -> CliffordElement {
        self + (-rhs)
    }
}

impl Neg for CliffordElement {
    type Output = CliffordElement;

    fn neg(self) -> CliffordElement {
        let mut out = CliffordElement::zero(self.n);
        for (mask, c) in self.terms() {
            out.add_term(mask, -c);
        }
        out
    }
}

impl Mul for CliffordElement {
    type Output = CliffordElement;

    fn mul(self, rhs: CliffordElement) -> CliffordElement {
        assert_eq!(self.n, rhs.n);
        let mut out = CliffordElement::zero(self.n);
        for (m1, c1) in self.terms() {
            for (m2, c2) in rhs.terms() {
                let prod = QuatMonomial::from_parts(self.n, 1, m1)
                    * QuatMonomial::from_parts(self.n, 1, m2);
                let sign = DyadicRootScalar::from_integer(prod.sign() as i64);
                out.add_term(prod.mask(), c1 * c2 * sign);
            }
        }
        out
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mask, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if mask == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != DyadicRootScalar::ONE {
                    write!(f, "{mag} ")?;
                }
                write!(f, "{}", QuatMonomial::from_parts(self.n, 1, mask))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> DyadicRootScalar {
        DyadicRootScalar::new(1, 2)
    }

    #[test]
    fn acute_product_of_two_letters() {
        // (1 + a3)(1 + a2)/2 = (1 + a2 + a3 + a3 a2)/2, and a3 a2 = -a2 a3.
        let z = CliffordElement::acute_word(3, &[3, 2], &[1, 1]);
        assert_eq!(z.coeff(0), half());
        assert_eq!(z.coeff(0b010), half());
        assert_eq!(z.coeff(0b100), half());
        assert_eq!(z.coeff(0b110), -half());
        assert_eq!(z.num_terms(), 4);
        assert_eq!(z.to_string(), "1/2 + 1/2 a2 + 1/2 a3 - 1/2 a2a3");
    }

    #[test]
    fn acute_letter_inverts_and_squares() {
        let n = 3;
        for i in 1..=n {
            let plus = CliffordElement::acute_word(n, &[i], &[1]);
            let minus = CliffordElement::acute_word(n, &[i], &[-1]);
            assert_eq!(plus.clone() * minus, CliffordElement::one(n));
            let sq = plus.clone() * plus.clone();
            assert_eq!(sq, CliffordElement::from_monomial(QuatMonomial::generator(n, i)));
            let fourth = sq.clone() * sq;
            assert_eq!(fourth, -CliffordElement::one(n));
        }
    }

    #[test]
    fn acute_word_inverse_cancels() {
        let word = [2u8, 1, 3, 2];
        let z = CliffordElement::acute_word(3, &word, &[1; 4]);
        let zi = CliffordElement::acute_word_inverse(3, &word);
        assert_eq!(z * zi, CliffordElement::one(3));
    }

    #[test]
    fn e_action_is_an_algebra_map() {
        let z = CliffordElement::acute_word(3, &[1, 2], &[1, 1]);
        let w = CliffordElement::acute_word(3, &[3, 1], &[1, -1]);
        for negmask in 0u32..8 {
            let lhs = (z.clone() * w.clone()).e_action(negmask);
            let rhs = z.e_action(negmask) * w.e_action(negmask);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn monomial_roundtrip() {
        for q in QuatMonomial::all(3) {
            assert_eq!(CliffordElement::from_monomial(q).to_monomial(), Some(q));
        }
        let z = CliffordElement::acute_word(3, &[1], &[1]);
        assert_eq!(z.to_monomial(), None);
    }
}
