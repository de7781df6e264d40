use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of strands. Values and letters fit in u8 and the
/// one-line string form switches to comma separation past 9 strands.
pub const MAX_STRANDS: usize = 64;

/// A permutation of {1, ..., n+1} in one-line form: `oneline[i-1]` is the image
/// of i, written i^sigma. Composition is right-action style throughout:
/// i^(sigma tau) = (i^sigma)^tau.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    oneline: Vec<u8>,
}

impl Permutation {
    pub fn identity(n_plus_1: usize) -> Self {
        assert!((1..=MAX_STRANDS).contains(&n_plus_1));
        Permutation {
            oneline: (1..=n_plus_1 as u8).collect(),
        }
    }

    /// The longest element (the order-reversing permutation).
    pub fn longest(n_plus_1: usize) -> Self {
        assert!((1..=MAX_STRANDS).contains(&n_plus_1));
        Permutation {
            oneline: (1..=n_plus_1 as u8).rev().collect(),
        }
    }

    pub fn from_oneline(oneline: Vec<u8>) -> Result<Self> {
        let m = oneline.len();
        if m == 0 || m > MAX_STRANDS {
            return Err(Error::BadLength { max: MAX_STRANDS, got: m });
        }
        let mut seen = vec![false; m];
        for &v in &oneline {
            if v == 0 || v as usize > m || seen[v as usize - 1] {
                return Err(Error::NotBijection { n_plus_1: m, value: v });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { oneline })
    }

    /// Parses "563412" (single digits, up to 9 strands) or "5,6,3,4,1,2".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let digits: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::ParsePermutation(s.to_string()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::ParsePermutation(s.to_string()))?
        };
        Self::from_oneline(digits)
    }

    pub fn n_plus_1(&self) -> usize {
        self.oneline.len()
    }

    /// Number of generators, one less than the strand count.
    pub fn n(&self) -> usize {
        self.oneline.len() - 1
    }

    pub fn oneline(&self) -> &[u8] {
        &self.oneline
    }

    /// i^sigma for 1 <= i <= n+1.
    pub fn image(&self, i: u8) -> u8 {
        self.oneline[i as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.oneline.len()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation { oneline: inv }
    }

    /// (sigma tau): i^(sigma tau) = (i^sigma)^tau. Panics on strand mismatch.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n_plus_1(), other.n_plus_1());
        Permutation {
            oneline: self.oneline.iter().map(|&v| other.oneline[v as usize - 1]).collect(),
        }
    }

    /// The inversion set {(i, j) : i < j, i^sigma > j^sigma}, ordered lexicographically.
    pub fn inversions(&self) -> Vec<(u8, u8)> {
        let m = self.oneline.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if self.oneline[i] > self.oneline[j] {
                    out.push((i as u8 + 1, j as u8 + 1));
                }
            }
        }
        out
    }

    pub fn inversion_count(&self) -> usize {
        let m = self.oneline.len();
        let mut count = 0;
        for i in 0..m {
            for j in i + 1..m {
                if self.oneline[i] > self.oneline[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Multiplies by the adjacent transposition a_j on the right, swapping the
    /// values j and j+1 wherever they sit in the one-line form.
    pub fn mul_adjacent_right(&mut self, j: u8) {
        debug_assert!(j >= 1 && (j as usize) < self.oneline.len());
        let (mut pj, mut pj1) = (usize::MAX, usize::MAX);
        for (i, &v) in self.oneline.iter().enumerate() {
            if v == j {
                pj = i;
            } else if v == j + 1 {
                pj1 = i;
            }
        }
        self.oneline.swap(pj, pj1);
    }

    /// Multiplies by a_j on the left, swapping positions j and j+1.
    pub fn mul_adjacent_left(&mut self, j: u8) {
        debug_assert!(j >= 1 && (j as usize) < self.oneline.len());
        self.oneline.swap(j as usize - 1, j as usize);
    }

    /// True when sigma a_j has one more inversion than sigma, i.e. the value j
    /// sits left of the value j+1.
    pub fn is_right_ascent(&self, j: u8) -> bool {
        for &v in &self.oneline {
            if v == j {
                return true;
            }
            if v == j + 1 {
                return false;
            }
        }
        unreachable!("j out of range");
    }

    /// Generator indices j with sigma a_j < sigma.
    pub fn right_descents(&self) -> Vec<u8> {
        (1..=self.n() as u8).filter(|&j| !self.is_right_ascent(j)).collect()
    }

    /// Cycle partition of {1, ..., n+1}; each cycle lists its members in
    /// increasing order and cycles are ordered by smallest member.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let m = self.oneline.len();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 1..=m as u8 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur as usize - 1] {
                seen[cur as usize - 1] = true;
                cycle.push(cur);
                cur = self.image(cur);
            }
            cycle.sort_unstable();
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Positions j in 1..=n where sigma blocks: i <= j implies i^sigma <= j.
    pub fn blocks(&self) -> Vec<u8> {
        let mut out = Vec::new();
        let mut max_seen = 0;
        for j in 1..self.oneline.len() {
            max_seen = max_seen.max(self.oneline[j - 1]);
            if max_seen as usize <= j {
                out.push(j as u8);
            }
        }
        out
    }

    /// Places `other` after `self` on disjoint strands.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let shift = self.n_plus_1() as u8;
        let mut oneline = self.oneline.clone();
        oneline.extend(other.oneline.iter().map(|&v| v + shift));
        Permutation { oneline }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n_plus_1() <= 9 {
            for &v in &self.oneline {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.oneline.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Permutation::parse("563412").unwrap();
        assert_eq!(p.oneline(), &[5, 6, 3, 4, 1, 2]);
        assert_eq!(p.to_string(), "563412");
        let q = Permutation::parse("5,6,3,4,1,2").unwrap();
        assert_eq!(p, q);
        assert!(Permutation::parse("5634").is_err());
        assert!(Permutation::parse("5x3412").is_err());
    }

    #[test]
    fn inversions_and_longest() {
        let eta = Permutation::longest(3);
        assert_eq!(eta.inversions(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(eta.inversion_count(), 3);
        assert_eq!(Permutation::identity(6).inversion_count(), 0);
        assert_eq!(Permutation::longest(6).inversion_count(), 15);
    }

    #[test]
    fn right_multiplication_swaps_values() {
        let mut p = Permutation::longest(3);
        p.mul_adjacent_right(1);
        assert_eq!(p.oneline(), &[3, 1, 2]);
        assert!(p.is_right_ascent(1));
        assert!(!p.is_right_ascent(2));
    }

    #[test]
    fn blocks_examples() {
        assert_eq!(Permutation::parse("231645").unwrap().blocks(), vec![3]);
        assert_eq!(Permutation::identity(6).blocks(), vec![1, 2, 3, 4, 5]);
        assert!(Permutation::longest(6).blocks().is_empty());
    }

    #[test]
    fn direct_sum_examples() {
        let a = Permutation::parse("231").unwrap();
        let b = Permutation::parse("312").unwrap();
        assert_eq!(a.direct_sum(&b).to_string(), "231645");
        let c = Permutation::parse("21").unwrap();
        assert_eq!(c.direct_sum(&b).to_string(), "21534");
    }

    #[test]
    fn cycles_example() {
        // (15)(234) in S_5 maps 1->5, 5->1, 2->3, 3->4, 4->2.
        let p = Permutation::parse("53421").unwrap();
        assert_eq!(p.cycles(), vec![vec![1, 5], vec![2, 3, 4]]);
        assert_eq!(p.cycle_count(), 2);
    }

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::parse("231").unwrap();
        let q = Permutation::parse("312").unwrap();
        assert!(p.compose(&q).is_identity());
        assert_eq!(p.inverse(), q);
    }
}
