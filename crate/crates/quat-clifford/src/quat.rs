use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

/// Signed product of distinct anticommuting generators a_1, ..., a_n,
/// normalized to ascending index order. Bit i-1 of `mask` records whether
/// generator i occurs. Relations: a_i^2 = -1, a_i a_j = -a_j a_i when
/// |i - j| = 1, and a_i a_j = a_j a_i when |i - j| >= 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuatMonomial {
    n: u8,
    sign: i8,
    mask: u32,
}

impl QuatMonomial {
    pub fn one(n: u8) -> Self {
        QuatMonomial { n, sign: 1, mask: 0 }
    }

    pub fn minus_one(n: u8) -> Self {
        QuatMonomial { n, sign: -1, mask: 0 }
    }

    /// The generator a_i, 1 <= i <= n.
    pub fn generator(n: u8, i: u8) -> Self {
        assert!(i >= 1 && i <= n, "generator index {i} out of range 1..={n}");
        QuatMonomial { n, sign: 1, mask: 1 << (i - 1) }
    }

    pub fn from_parts(n: u8, sign: i8, mask: u32) -> Self {
        assert!(sign == 1 || sign == -1);
        assert!(n as u32 <= 31 && mask < (1 << n));
        QuatMonomial { n, sign, mask }
    }

    /// Every element of the group: both signs for each subset of generators.
    pub fn all(n: u8) -> Vec<Self> {
        let mut out = Vec::with_capacity(2 << n);
        for mask in 0..(1u32 << n) {
            out.push(QuatMonomial { n, sign: 1, mask });
            out.push(QuatMonomial { n, sign: -1, mask });
        }
        out
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn is_scalar(&self) -> bool {
        self.mask == 0
    }

    /// Generator indices in ascending order.
    pub fn support(&self) -> impl Iterator<Item = u8> + '_ {
        (1..=self.n).filter(|i| self.mask & (1 << (i - 1)) != 0)
    }

    /// Right multiplication by the generator a_i. Moving a_i into sorted
    /// position passes a_{i+1} if present (one sign flip); a duplicate a_i
    /// then cancels via a_i^2 = -1.
    pub fn times_generator(&self, i: u8) -> Self {
        assert!(i >= 1 && i <= self.n);
        let bit = 1u32 << (i - 1);
        let mut sign = self.sign;
        if i < self.n && self.mask & (bit << 1) != 0 {
            sign = -sign;
        }
        if self.mask & bit != 0 {
            sign = -sign;
        }
        QuatMonomial { n: self.n, sign, mask: self.mask ^ bit }
    }

    /// Sign s with a_i * q = s * q * a_i: one flip per adjacent generator.
    pub fn commutator_sign(&self, i: u8) -> i8 {
        assert!(i >= 1 && i <= self.n);
        let mut adjacent = 0u32;
        if i >= 2 {
            adjacent |= 1 << (i - 2);
        }
        if i < self.n {
            adjacent |= 1 << i;
        }
        if (self.mask & adjacent).count_ones() % 2 == 1 {
            -1
        } else {
            1
        }
    }

    /// q^2 is always +1 or -1.
    pub fn square_sign(&self) -> i8 {
        (*self * *self).sign
    }

    pub fn inverse(&self) -> Self {
        // q * (q^2 * q) = q^2 * q^2 = 1 regardless of the sign of q^2.
        let mut inv = *self;
        inv.sign *= self.square_sign();
        inv
    }

    /// Image under the automorphism a_j -> -a_j.
    pub fn negate_generator(&self, j: u8) -> Self {
        assert!(j >= 1 && j <= self.n);
        let mut out = *self;
        if self.mask & (1 << (j - 1)) != 0 {
            out.sign = -out.sign;
        }
        out
    }

    /// Conjugation by the unit (1 + a_i)/sqrt(2): fixes commuting monomials
    /// and sends anticommuting q to -q * a_i.
    pub fn conjugate_by_acute_letter(&self, i: u8) -> Self {
        if self.commutator_sign(i) == 1 {
            *self
        } else {
            -self.times_generator(i)
        }
    }

    /// Conjugation by the product of acute letters for `word`, leftmost
    /// letter applied last (outermost).
    pub fn conjugate_by_acute_word(&self, word: &[u8]) -> Self {
        let mut q = *self;
        for &i in word.iter().rev() {
            q = q.conjugate_by_acute_letter(i);
        }
        q
    }
}

impl Mul for QuatMonomial {
    type Output = QuatMonomial;

    fn mul(self, rhs: QuatMonomial) -> QuatMonomial {
        assert_eq!(self.n, rhs.n, "mixed generator counts");
        let mut out = self;
        out.sign *= rhs.sign;
        for i in rhs.support() {
            out = out.times_generator(i);
        }
        out
    }
}

impl Neg for QuatMonomial {
    type Output = QuatMonomial;

    fn neg(self) -> QuatMonomial {
        QuatMonomial { sign: -self.sign, ..self }
    }
}

impl PartialOrd for QuatMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuatMonomial {
    /// Orders by support size, then support, then positive before negative,
    /// so the smallest element of a set is the natural representative.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.mask.count_ones(), self.mask, self.sign == -1).cmp(&(
            other.n,
            other.mask.count_ones(),
            other.mask,
            other.sign == -1,
        ))
    }
}

impl fmt::Display for QuatMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.mask == 0 {
            return write!(f, "1");
        }
        for i in self.support() {
            write!(f, "a{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QuatMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
