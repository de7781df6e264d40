use std::collections::HashSet;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A reduced word a_{i_1} ... a_{i_l}: letters are generator indices in 1..=n,
/// and the product has inversion count exactly l.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    n: u8,
    letters: Vec<u8>,
}

/// Multiplies out a letter sequence over 1..=n. Returns the product and
/// whether the sequence is reduced (inversion count equals length).
pub fn word_to_perm(n: u8, letters: &[u8]) -> Result<(Permutation, bool)> {
    let mut perm = Permutation::identity(n as usize + 1);
    for &letter in letters {
        if letter == 0 || letter > n {
            return Err(Error::LetterOutOfRange { letter, n });
        }
        perm.mul_adjacent_right(letter);
    }
    let reduced = perm.inversion_count() == letters.len();
    Ok((perm, reduced))
}

impl ReducedWord {
    pub fn new(n: u8, letters: Vec<u8>) -> Result<Self> {
        let (perm, reduced) = word_to_perm(n, &letters)?;
        if !reduced {
            return Err(Error::NotReduced {
                len: letters.len(),
                inv: perm.inversion_count(),
            });
        }
        Ok(ReducedWord { n, letters })
    }

    /// Parses "2,1,3,2". Without an explicit strand hint the generator count is
    /// the largest letter present.
    pub fn parse(s: &str, n: Option<u8>) -> Result<Self> {
        let s = s.trim();
        let letters: Vec<u8> = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|p| p.trim().parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::ParseWord(s.to_string()))?
        };
        let n = match n {
            Some(n) => n,
            None => *letters.iter().max().ok_or_else(|| Error::ParseWord(s.to_string()))?,
        };
        Self::new(n, letters)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn n_plus_1(&self) -> usize {
        self.n as usize + 1
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn permutation(&self) -> Permutation {
        word_to_perm(self.n, &self.letters).expect("validated on construction").0
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w[{self}]")
    }
}

/// Deterministic reduced word for sigma: repeatedly take the smallest position
/// i where the running one-line form descends, emit a_i and unmake that
/// descent (a selection-sort schedule).
pub fn canonical_word(sigma: &Permutation) -> ReducedWord {
    let mut cur = sigma.clone();
    let mut letters = Vec::with_capacity(sigma.inversion_count());
    'outer: loop {
        let line = cur.oneline();
        for i in 0..line.len() - 1 {
            if line[i] > line[i + 1] {
                letters.push(i as u8 + 1);
                cur.mul_adjacent_left(i as u8 + 1);
                continue 'outer;
            }
        }
        break;
    }
    ReducedWord { n: sigma.n() as u8, letters }
}

/// All reduced words of sigma in lexicographic order, stopping after `limit`
/// words when given (the longest element of S_6 alone has 292864).
pub fn reduced_words(sigma: &Permutation, limit: Option<usize>) -> Vec<ReducedWord> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    let mut cur = sigma.clone();
    collect_words(&mut cur, &mut prefix, &mut out, limit.unwrap_or(usize::MAX));
    for w in &mut out {
        w.letters.reverse();
    }
    out.sort();
    out
}

fn collect_words(cur: &mut Permutation, suffix_rev: &mut Vec<u8>, out: &mut Vec<ReducedWord>, limit: usize) {
    if out.len() >= limit {
        return;
    }
    if cur.is_identity() {
        out.push(ReducedWord {
            n: cur.n() as u8,
            letters: suffix_rev.clone(),
        });
        return;
    }
    for j in cur.right_descents() {
        cur.mul_adjacent_right(j);
        suffix_rev.push(j);
        collect_words(cur, suffix_rev, out, limit);
        suffix_rev.pop();
        cur.mul_adjacent_right(j);
    }
}

/// Up to `count` distinct reduced words of sigma found by seeded random
/// descent walks. Deterministic for a fixed seed.
pub fn sample_reduced_words(sigma: &Permutation, count: usize, seed: u64) -> Vec<ReducedWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    let attempts = count.saturating_mul(40).max(40);
    for _ in 0..attempts {
        if out.len() >= count {
            break;
        }
        let mut cur = sigma.clone();
        let mut rev = Vec::with_capacity(sigma.inversion_count());
        while !cur.is_identity() {
            let descents = cur.right_descents();
            let j = descents[rng.random_range(0..descents.len())];
            cur.mul_adjacent_right(j);
            rev.push(j);
        }
        rev.reverse();
        if found.insert(rev.clone()) {
            out.push(ReducedWord { n: sigma.n() as u8, letters: rev });
        }
    }
    out
}
