//! Decomposition moves on wiring diagrams: block decomposition and the three
//! split types, each cutting a word into two smaller reduced words.

use perm_core::{regions, ReducedWord};
use serde::Serialize;

use crate::error::{Error, Result};

/// Height of the horizontal cut for a type 2 split at a tourist a_j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    /// Cut at j + 1/4: the tourist joins the factor of letters >= j.
    Quarter,
    /// Cut at j + 3/4: the tourist joins the factor of letters <= j.
    ThreeQuarters,
}

/// One applicable decomposition of a wiring diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum SplitMove {
    /// The word never uses letter `row`; the diagram is a direct sum.
    Block { row: u8 },
    /// A curve between rows `row` and `row + 1` crosses exactly one wire.
    Type1 { row: u8 },
    /// The letter at `position` is a tourist.
    Type2 { position: usize, side: Side },
    /// A curve dips once from row `row` into the single face of row
    /// `row - 1`, synthesizing one extra letter in the upper factor.
    Type3 { row: u8 },
}

/// Where the detected type 1 curve runs and crosses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Split1Witness {
    /// True when the curve starts in row `j` and ends in row `j + 1`.
    pub upward: bool,
    /// Column boundary (0 ..= word length) where the one crossing happens.
    pub crossing_at: usize,
}

fn subword(
    n: u8,
    letters: &[u8],
    keep: impl Fn(u8) -> bool,
    shift: u8,
) -> perm_core::Result<ReducedWord> {
    let kept: Vec<u8> = letters.iter().copied().filter(|&a| keep(a)).map(|a| a - shift).collect();
    ReducedWord::new(n, kept)
}

/// Splits a direct sum at a block row: the word never uses letter `j`, so the
/// strands above and below never interact.
pub fn apply_block(word: &ReducedWord, j: u8) -> Result<(ReducedWord, ReducedWord)> {
    if !word.permutation().blocks().contains(&j) {
        return Err(Error::NotSeparable(j));
    }
    let w1 = subword(j - 1, word.letters(), |a| a < j, 0)?;
    let w2 = subword(word.n() - j, word.letters(), |a| a > j, j)?;
    Ok((w1, w2))
}

/// Looks for a curve from row `j` to row `j + 1` (or back) that crosses
/// exactly one wire and passes through no crossing: scanning columns left to
/// right, the curve occupies one of the two rows, a column whose letter
/// equals the occupied row blocks it, and switching rows costs the one
/// allowed crossing.
pub fn detect_split1(word: &ReducedWord, j: u8) -> Option<Split1Witness> {
    if j == 0 || j + 1 > word.n() {
        return None;
    }
    let letters = word.letters();
    for (start, end) in [(j, j + 1), (j + 1, j)] {
        for cut in 0..=letters.len() {
            let clear_before = letters[..cut].iter().all(|&a| a != start);
            let clear_after = letters[cut..].iter().all(|&a| a != end);
            if clear_before && clear_after {
                return Some(Split1Witness { upward: start == j, crossing_at: cut });
            }
        }
    }
    None
}

/// Cuts along a detected type 1 curve: letters up to `j` form one factor,
/// letters above `j` shift down into the other.
pub fn apply_split1(word: &ReducedWord, j: u8) -> Result<(ReducedWord, ReducedWord)> {
    if detect_split1(word, j).is_none() {
        return Err(Error::NotSeparable(j));
    }
    let w1 = subword(j, word.letters(), |a| a <= j, 0)?;
    let w2 = subword(word.n() - j, word.letters(), |a| a > j, j)?;
    Ok((w1, w2))
}

fn split2_words(word: &ReducedWord, j: u8, side: Side) -> perm_core::Result<(ReducedWord, ReducedWord)> {
    let letters = word.letters();
    match side {
        Side::Quarter => Ok((
            subword(j - 1, letters, |a| a < j, 0)?,
            subword(word.n() - j + 1, letters, |a| a >= j, j - 1)?,
        )),
        Side::ThreeQuarters => Ok((
            subword(j, letters, |a| a <= j, 0)?,
            subword(word.n() - j, letters, |a| a > j, j)?,
        )),
    }
}

/// Positions whose letter is a tourist: its value occurs exactly once and
/// cutting at either height leaves both residual subwords reduced.
pub fn detect_tourists(word: &ReducedWord) -> Vec<usize> {
    let letters = word.letters();
    (0..letters.len())
        .filter(|&k| {
            let j = letters[k];
            letters.iter().filter(|&&a| a == j).count() == 1
                && split2_words(word, j, Side::Quarter).is_ok()
                && split2_words(word, j, Side::ThreeQuarters).is_ok()
        })
        .collect()
}

/// Cuts just above or just below a tourist's row.
pub fn apply_split2(
    word: &ReducedWord,
    k: usize,
    side: Side,
) -> Result<(ReducedWord, ReducedWord)> {
    if !detect_tourists(word).contains(&k) {
        return Err(Error::NotATourist(k));
    }
    Ok(split2_words(word, word.letters()[k], side)?)
}

/// Looks for the type 3 pattern at row `j` and applies it. The pattern needs
/// row `j - 1` to cross exactly twice, every letter `j` to sit between those
/// two crossings, and nothing smaller in between; the curve then rides row
/// `j` and dips once into the enclosed face to pass all the `j` crossings.
/// The factor of letters up to `j` keeps a single synthesized letter `j` in
/// place of the run it dipped across.
pub fn detect_apply_split3(word: &ReducedWord, j: u8) -> Result<(ReducedWord, ReducedWord)> {
    let letters = word.letters();
    if j < 2 || j > word.n() {
        return Err(Error::NoCollapse(j));
    }
    let anchors: Vec<usize> = (0..letters.len()).filter(|&k| letters[k] == j - 1).collect();
    let [p1, p2] = anchors[..] else {
        return Err(Error::NoCollapse(j));
    };
    let dipped: Vec<usize> = (0..letters.len()).filter(|&k| letters[k] == j).collect();
    if dipped.is_empty() || dipped.iter().any(|&k| k <= p1 || k >= p2) {
        return Err(Error::NoCollapse(j));
    }
    if letters[p1 + 1..p2].iter().any(|&a| a < j) {
        return Err(Error::NoCollapse(j));
    }

    let mut upper: Vec<u8> = letters[..p1].iter().copied().filter(|&a| a < j).collect();
    upper.extend([j - 1, j, j - 1]);
    upper.extend(letters[p2 + 1..].iter().copied().filter(|&a| a < j));
    let w1 = ReducedWord::new(j, upper)?;
    let w2 = subword(word.n() - j + 1, letters, |a| a >= j, j - 1)?;
    Ok((w1, w2))
}

/// True when the crossing at position `k` lies on the boundary of some face
/// of the diagram, so a click there would flip its sign.
pub fn on_region_boundary(word: &ReducedWord, k: usize) -> bool {
    regions(word).iter().any(|r| r.click_set().contains(&k))
}

/// Every decomposition the detectors find on this word, in a deterministic
/// order. Rows that block are reported only as block moves.
pub fn available_moves(word: &ReducedWord) -> Vec<SplitMove> {
    let blocks = word.permutation().blocks();
    let mut moves: Vec<SplitMove> = blocks.iter().map(|&row| SplitMove::Block { row }).collect();
    for row in 1..word.n() {
        if !blocks.contains(&row) && detect_split1(word, row).is_some() {
            moves.push(SplitMove::Type1 { row });
        }
    }
    for position in detect_tourists(word) {
        moves.push(SplitMove::Type2 { position, side: Side::Quarter });
        moves.push(SplitMove::Type2 { position, side: Side::ThreeQuarters });
    }
    for row in 2..=word.n() {
        if detect_apply_split3(word, row).is_ok() {
            moves.push(SplitMove::Type3 { row });
        }
    }
    moves
}

/// Applies any move, dispatching on its kind.
pub fn apply(word: &ReducedWord, mv: &SplitMove) -> Result<(ReducedWord, ReducedWord)> {
    match *mv {
        SplitMove::Block { row } => apply_block(word, row),
        SplitMove::Type1 { row } => apply_split1(word, row),
        SplitMove::Type2 { position, side } => apply_split2(word, position, side),
        SplitMove::Type3 { row } => detect_apply_split3(word, row),
    }
}
