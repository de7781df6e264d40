//! Depth-first enumeration of the sign vectors attached to a reduced word.
//!
//! Both enumerations walk the letters of the word left to right while
//! steering an auxiliary permutation rho that starts and ends at the longest
//! element. Reading letter i_k, rho either stays or moves to rho * a_{i_k};
//! when the letter is a right ascent of rho the move is forced. Doubled
//! entries (+2 up, -2 down) record moves, unit entries record stays.

use perm_core::{CrossingTable, Permutation, ReducedWord, Region};
use quat_clifford::QuatMonomial;

use crate::eps::EpsVec;
use crate::error::{Error, Result};

/// A stay/move pattern: entries in {-2, 0, +2}, one per letter. The number
/// of +2 entries equals the number of -2 entries and is the dimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Preancestry {
    marks: Vec<i8>,
}

impl Preancestry {
    /// Entries in letter order: -2 move down, 0 stay, +2 move up.
    pub fn marks(&self) -> &[i8] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    /// Number of up moves, which equals the number of down moves.
    pub fn dim(&self) -> usize {
        self.marks.iter().filter(|&&x| x == 2).count()
    }

    /// Positions whose crossing is left unmarked (entry 0).
    pub fn unmarked_positions(&self) -> Vec<usize> {
        (0..self.marks.len()).filter(|&k| self.marks[k] == 0).collect()
    }

    /// Compact text form: `B` = -2, `o` = 0, `W` = +2.
    pub fn to_text(&self) -> String {
        self.marks
            .iter()
            .map(|&x| match x {
                -2 => 'B',
                0 => 'o',
                _ => 'W',
            })
            .collect()
    }
}

/// A full sign vector: entries in {-2, -1, +1, +2}, one per letter, together
/// with the monomial accumulated along the walk. Replacing units by 0 gives
/// the underlying stay/move pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ancestry {
    eps: EpsVec,
    q_l: QuatMonomial,
}

impl Ancestry {
    pub fn eps(&self) -> EpsVec {
        self.eps
    }

    /// The monomial accumulated over the whole word.
    pub fn q_l(&self) -> QuatMonomial {
        self.q_l
    }

    /// Number of +2 entries.
    pub fn dim(&self) -> usize {
        self.eps.count_of(2)
    }

    /// The monomial m with value(self) = base * m, i.e. the inverse of q_l.
    pub fn right_multiplier(&self) -> QuatMonomial {
        self.q_l.inverse()
    }

    /// Forgets the unit signs.
    pub fn marginal(&self) -> Preancestry {
        let marks = self.eps.iter().map(|x| if x.abs() == 1 { 0 } else { x }).collect();
        Preancestry { marks }
    }
}

/// Permutation walker used by both enumerations. Tracks only the positions
/// of each value and the inversion count; rho equals the longest element
/// exactly when the inversion count is maximal.
struct Walk {
    pos: Vec<usize>,
    inv: usize,
    inv_max: usize,
}

impl Walk {
    fn at_longest(n_plus_1: usize) -> Self {
        let pos = (0..=n_plus_1).map(|v| n_plus_1 + 1 - v).collect();
        let inv_max = n_plus_1 * (n_plus_1 - 1) / 2;
        Walk { pos, inv: inv_max, inv_max }
    }

    /// True when rho * a_j has one more inversion than rho.
    fn is_ascent(&self, j: u8) -> bool {
        self.pos[j as usize] < self.pos[j as usize + 1]
    }

    /// Multiplies rho by a_j on the right, in either direction.
    fn flip(&mut self, j: u8, up: bool) {
        self.pos.swap(j as usize, j as usize + 1);
        if up {
            self.inv += 1;
        } else {
            self.inv -= 1;
        }
    }

    /// True while the walk can still climb back to the longest element in
    /// the remaining steps.
    fn reachable(&self, remaining: usize) -> bool {
        self.inv_max - self.inv <= remaining
    }

    fn at_top(&self) -> bool {
        self.inv == self.inv_max
    }
}

/// All stay/move patterns of a word, sorted by dimension and then entrywise.
pub fn enumerate_preancestries(word: &ReducedWord) -> Vec<Preancestry> {
    let letters = word.letters();
    let l = letters.len();
    let mut walk = Walk::at_longest(word.n_plus_1());
    let mut marks = vec![0i8; l];
    let mut out = Vec::new();

    fn rec(
        k: usize,
        letters: &[u8],
        walk: &mut Walk,
        marks: &mut Vec<i8>,
        out: &mut Vec<Preancestry>,
    ) {
        if k == letters.len() {
            if walk.at_top() {
                out.push(Preancestry { marks: marks.clone() });
            }
            return;
        }
        let j = letters[k];
        let remaining = letters.len() - k - 1;
        if walk.is_ascent(j) {
            marks[k] = 2;
            walk.flip(j, true);
            rec(k + 1, letters, walk, marks, out);
            walk.flip(j, false);
        } else {
            if walk.reachable(remaining) {
                marks[k] = 0;
                rec(k + 1, letters, walk, marks, out);
            }
            walk.flip(j, false);
            if walk.reachable(remaining) {
                marks[k] = -2;
                rec(k + 1, letters, walk, marks, out);
            }
            walk.flip(j, true);
        }
        marks[k] = 0;
    }

    rec(0, letters, &mut walk, &mut marks, &mut out);
    out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.marks.cmp(&b.marks)));
    out
}

/// All sign vectors of a word, in depth-first order: letters left to right;
/// at each descent of rho the branches are taken as stay keeping the
/// commuting sign, move down, stay against the commuting sign.
pub fn enumerate_ancestries(word: &ReducedWord) -> Vec<Ancestry> {
    let letters = word.letters();
    let n = word.n();
    let mut walk = Walk::at_longest(word.n_plus_1());
    let mut eps = EpsVec::empty();
    let mut out = Vec::new();

    fn rec(
        k: usize,
        letters: &[u8],
        walk: &mut Walk,
        eps: &mut EpsVec,
        q: QuatMonomial,
        out: &mut Vec<Ancestry>,
    ) {
        if k == letters.len() {
            if walk.at_top() {
                out.push(Ancestry { eps: *eps, q_l: q });
            }
            return;
        }
        let j = letters[k];
        let remaining = letters.len() - k - 1;
        let s = q.commutator_sign(j);
        if walk.is_ascent(j) {
            // Forced move up; q picks up the generator when it anticommutes.
            let q_next = if s == -1 { q.times_generator(j) } else { q };
            eps.push(2).unwrap();
            walk.flip(j, true);
            rec(k + 1, letters, walk, eps, q_next, out);
            walk.flip(j, false);
            eps.pop();
        } else {
            if walk.reachable(remaining) {
                // Stay, keeping the commuting sign; q is untouched.
                eps.push(s).unwrap();
                rec(k + 1, letters, walk, eps, q, out);
                eps.pop();
            }
            walk.flip(j, false);
            if walk.reachable(remaining) {
                // Move down; q picks up the generator when it commutes.
                let q_next = if s == 1 { q.times_generator(j) } else { q };
                eps.push(-2).unwrap();
                rec(k + 1, letters, walk, eps, q_next, out);
                eps.pop();
            }
            walk.flip(j, true);
            if walk.reachable(remaining) {
                // Stay against the commuting sign; q always picks up the
                // generator.
                eps.push(-s).unwrap();
                rec(k + 1, letters, walk, eps, q.times_generator(j), out);
                eps.pop();
            }
        }
    }

    rec(0, letters, &mut walk, &mut eps, QuatMonomial::one(n), &mut out);
    out
}

/// Recomputes the accumulated monomial of a sign vector, checking that the
/// vector is realizable for the word.
pub fn replay(word: &ReducedWord, eps: &EpsVec) -> Result<Ancestry> {
    if eps.len() != word.len() {
        return Err(Error::LengthMismatch { got: eps.len(), want: word.len() });
    }
    let mut walk = Walk::at_longest(word.n_plus_1());
    let mut q = QuatMonomial::one(word.n());
    for (k, &j) in word.letters().iter().enumerate() {
        let s = q.commutator_sign(j);
        let x = eps.get(k);
        match x {
            2 => {
                if !walk.is_ascent(j) {
                    return Err(Error::NotRealizable);
                }
                walk.flip(j, true);
                if s == -1 {
                    q = q.times_generator(j);
                }
            }
            -2 => {
                if walk.is_ascent(j) {
                    return Err(Error::NotRealizable);
                }
                walk.flip(j, false);
                if s == 1 {
                    q = q.times_generator(j);
                }
            }
            _ => {
                if walk.is_ascent(j) {
                    return Err(Error::NotRealizable);
                }
                if x == -s {
                    q = q.times_generator(j);
                }
            }
        }
    }
    if !walk.at_top() {
        return Err(Error::NotRealizable);
    }
    Ok(Ancestry { eps: *eps, q_l: q })
}

/// True when every pair of unit entries on the same diagram row carries the
/// same sign. Only defined for dimension-zero vectors.
pub fn is_thin(word: &ReducedWord, eps: &EpsVec) -> Result<bool> {
    if eps.len() != word.len() {
        return Err(Error::LengthMismatch { got: eps.len(), want: word.len() });
    }
    let dim = eps.count_of(2);
    if dim != 0 {
        return Err(Error::NotDimensionZero(dim));
    }
    let mut row_sign = vec![0i8; word.n() as usize + 1];
    for (k, &j) in word.letters().iter().enumerate() {
        let x = eps.get(k);
        let slot = &mut row_sign[j as usize];
        if *slot == 0 {
            *slot = x;
        } else if *slot != x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flips the unit entries of a dimension-zero vector over one diagram face.
///
/// The flip preserves the accumulated monomial exactly when the face applies
/// to the vector; on a non-applicable face it negates the monomial.
pub fn click_units(eps: &EpsVec, region: &Region) -> Result<EpsVec> {
    let mut out = *eps;
    out.flip_units(&region.click_set())?;
    Ok(out)
}

/// A face applies to a sign vector when its two anchor crossings carry
/// opposite signs.
pub fn click_applies(eps: &EpsVec, region: &Region) -> bool {
    eps.get(region.k1) != eps.get(region.k2)
}

/// The two dimension-zero vectors bounding a dimension-one one: the unit
/// projection, and the unit projection clicked over the face spanned by the
/// two doubled entries.
pub fn upper_set_dim1(word: &ReducedWord, a: &Ancestry) -> Result<(EpsVec, EpsVec)> {
    if a.dim() != 1 {
        return Err(Error::NotDimensionOne(a.dim()));
    }
    let eps = a.eps();
    let k1 = (0..eps.len()).find(|&k| eps.get(k) == -2).unwrap();
    let k2 = (0..eps.len()).find(|&k| eps.get(k) == 2).unwrap();
    assert!(k1 < k2, "down move must precede the matching up move");
    let region = perm_core::region_at(word, k1, k2)
        .expect("doubled entries of a dimension-one vector span a diagram face");
    let mut v1 = EpsVec::empty();
    for x in eps.iter() {
        v1.push(x.signum()).unwrap();
    }
    let v2 = click_units(&v1, &region)?;
    Ok((v1, v2))
}

/// Checks the two structural facts tying a stay/move pattern to its word:
/// the unmarked crossings, multiplied as transpositions in reverse reading
/// order, recover the word's permutation, and twice the dimension is at most
/// l + c - n - 1 where c counts the cycles of that permutation.
pub fn dim_bound_check(word: &ReducedWord, pre: &Preancestry) -> bool {
    let sigma = word.permutation();
    let table = CrossingTable::new(word);
    let mut product = Permutation::identity(word.n_plus_1());
    for &k in pre.unmarked_positions().iter().rev() {
        let (a, b) = table.pair(k);
        let mut oneline: Vec<u8> = (1..=word.n_plus_1() as u8).collect();
        oneline.swap(a as usize - 1, b as usize - 1);
        let t = Permutation::from_oneline(oneline).unwrap();
        product = product.compose(&t);
    }
    if product != sigma {
        return false;
    }
    let l = word.len() as i64;
    let c = sigma.cycle_count() as i64;
    let n = word.n() as i64;
    2 * (pre.dim() as i64) < l + c - n
}
