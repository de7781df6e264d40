use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact scalar of the form m * 2^(-e/2) with integer m and e >= 0.
/// Canonical form: e < 2 or m odd; zero is (0, 0). These are the only
/// coefficients that arise from products of (1 +- a_i)/sqrt(2) factors.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyadicRootScalar {
    m: i64,
    e: u32,
}

impl DyadicRootScalar {
    pub const ZERO: Self = DyadicRootScalar { m: 0, e: 0 };
    pub const ONE: Self = DyadicRootScalar { m: 1, e: 0 };

    pub fn new(m: i64, e: u32) -> Self {
        let (mut m, mut e) = (m, e);
        if m == 0 {
            return Self::ZERO;
        }
        while e >= 2 && m % 2 == 0 {
            m /= 2;
            e -= 2;
        }
        DyadicRootScalar { m, e }
    }

    pub fn from_integer(v: i64) -> Self {
        Self::new(v, 0)
    }

    /// 2^(k/2) for any integer k (negative k gives roots in the denominator).
    pub fn root2_pow(k: i64) -> Self {
        if k >= 0 {
            let k = k as u32;
            if k.is_multiple_of(2) {
                Self::new(1 << (k / 2), 0)
            } else {
                Self::new(1 << (k.div_ceil(2)), 1)
            }
        } else {
            Self::new(1, (-k) as u32)
        }
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0
    }

    pub fn is_positive(&self) -> bool {
        self.m > 0
    }

    pub fn is_negative(&self) -> bool {
        self.m < 0
    }

    pub fn signum(&self) -> i8 {
        self.m.signum() as i8
    }

    /// Exact integer value, if the scalar is one.
    pub fn to_integer(&self) -> Option<i64> {
        match self.e {
            0 => Some(self.m),
            1 => None,
            _ => None,
        }
    }

    pub fn abs(&self) -> Self {
        DyadicRootScalar { m: self.m.abs(), e: self.e }
    }

    fn value_squared_num_and_shift(&self) -> (i128, u32) {
        ((self.m as i128) * (self.m as i128), self.e)
    }
}

impl Add for DyadicRootScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        assert_eq!(
            self.e % 2,
            rhs.e % 2,
            "sum of incompatible scalars {self:?} + {rhs:?} (integer plus sqrt(2) multiple)"
        );
        let e = self.e.max(rhs.e);
        let a = self.m << ((e - self.e) / 2);
        let b = rhs.m << ((e - rhs.e) / 2);
        Self::new(a + b, e)
    }
}

impl Sub for DyadicRootScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for DyadicRootScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.m * rhs.m, self.e + rhs.e)
    }
}

impl Neg for DyadicRootScalar {
    type Output = Self;
    fn neg(self) -> Self {
        DyadicRootScalar { m: -self.m, e: self.e }
    }
}

impl PartialOrd for DyadicRootScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicRootScalar {
    /// Exact order, valid across the integer and sqrt(2) parity classes.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.m.signum(), other.m.signum()) {
            (a, b) if a != b => a.cmp(&b),
            (0, 0) => Ordering::Equal,
            (s, _) => {
                let (n1, e1) = self.value_squared_num_and_shift();
                let (n2, e2) = other.value_squared_num_and_shift();
                // Compare m1^2 / 2^e1 with m2^2 / 2^e2; only the exponent
                // difference matters, which stays small for canonical values.
                let mag = if e1 >= e2 {
                    n1.cmp(&(n2 << (e1 - e2)))
                } else {
                    (n1 << (e2 - e1)).cmp(&n2)
                };
                if s > 0 {
                    mag
                } else {
                    mag.reverse()
                }
            }
        }
    }
}

impl fmt::Debug for DyadicRootScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DyadicRootScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.e {
            0 => write!(f, "{}", self.m),
            1 => write!(f, "{}/sqrt2", self.m),
            e if e % 2 == 0 => write!(f, "{}/{}", self.m, 1i64 << (e / 2)),
            e => write!(f, "{}/{}sqrt2", self.m, 1i64 << (e / 2)),
        }
    }
}
