//! Packed sign vectors over the four-symbol alphabet {-2, -1, +1, +2}.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of entries a packed vector can hold.
pub const MAX_LEN: usize = 32;

/// A sign vector with entries in {-2, -1, +1, +2}, packed two bits per entry.
///
/// Entry 0 occupies the most significant bit pair, so the derived ordering
/// compares vectors of equal length position by position with
/// -2 < -1 < +1 < +2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpsVec {
    len: u8,
    bits: u64,
}

fn encode(value: i8) -> Option<u64> {
    match value {
        -2 => Some(0),
        -1 => Some(1),
        1 => Some(2),
        2 => Some(3),
        _ => None,
    }
}

fn decode(code: u64) -> i8 {
    match code {
        0 => -2,
        1 => -1,
        2 => 1,
        _ => 2,
    }
}

impl EpsVec {
    /// Creates an empty vector that accepts up to `MAX_LEN` pushed entries.
    pub fn empty() -> Self {
        EpsVec { len: 0, bits: 0 }
    }

    /// Builds a vector from explicit entries.
    pub fn from_slice(values: &[i8]) -> Result<Self> {
        if values.len() > MAX_LEN {
            return Err(Error::VectorTooLong(values.len()));
        }
        let mut v = EpsVec::empty();
        for &x in values {
            v.push(x)?;
        }
        Ok(v)
    }

    /// Appends one entry.
    pub fn push(&mut self, value: i8) -> Result<()> {
        if self.len as usize == MAX_LEN {
            return Err(Error::VectorTooLong(MAX_LEN + 1));
        }
        let code = encode(value).ok_or(Error::BadSignValue(value))?;
        self.bits |= code << Self::shift(self.len as usize);
        self.len += 1;
        Ok(())
    }

    fn shift(k: usize) -> u32 {
        (2 * (MAX_LEN - 1 - k)) as u32
    }

    /// Removes the last entry.
    pub fn pop(&mut self) {
        assert!(self.len > 0, "pop on empty vector");
        self.len -= 1;
        self.bits &= !(0b11 << Self::shift(self.len as usize));
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// True if the vector has no entries.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Entry at position `k` (0-based).
    pub fn get(&self, k: usize) -> i8 {
        assert!(k < self.len as usize, "index {k} out of range");
        decode((self.bits >> Self::shift(k)) & 0b11)
    }

    /// Replaces the entry at position `k`.
    pub fn set(&mut self, k: usize, value: i8) -> Result<()> {
        assert!(k < self.len as usize, "index {k} out of range");
        let code = encode(value).ok_or(Error::BadSignValue(value))?;
        let sh = Self::shift(k);
        self.bits = (self.bits & !(0b11 << sh)) | (code << sh);
        Ok(())
    }

    /// Iterates over the entries in position order.
    pub fn iter(&self) -> impl Iterator<Item = i8> + '_ {
        (0..self.len()).map(move |k| self.get(k))
    }

    /// Collects the entries into a plain vector.
    pub fn to_vec(&self) -> Vec<i8> {
        self.iter().collect()
    }

    /// Number of entries equal to `value`.
    pub fn count_of(&self, value: i8) -> usize {
        self.iter().filter(|&x| x == value).count()
    }

    /// Flips the sign of every entry at the given positions.
    ///
    /// All listed positions must hold unit entries; doubled entries mark
    /// moves and are never toggled.
    pub fn flip_units(&mut self, positions: &[usize]) -> Result<()> {
        for &k in positions {
            let x = self.get(k);
            if x.abs() != 1 {
                return Err(Error::FlipOnDoubledEntry(k));
            }
            self.set(k, -x)?;
        }
        Ok(())
    }

    /// Parses the compact letter form produced by `Display`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut v = EpsVec::empty();
        for c in text.chars() {
            let value = match c {
                'b' => -1,
                'w' => 1,
                'B' => -2,
                'W' => 2,
                _ => return Err(Error::BadSignLetter(c)),
            };
            v.push(value)?;
        }
        Ok(v)
    }
}

impl fmt::Display for EpsVec {
    /// One letter per entry: `b` = -1, `w` = +1, `B` = -2, `W` = +2.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.iter() {
            let c = match x {
                -1 => 'b',
                1 => 'w',
                -2 => 'B',
                _ => 'W',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
