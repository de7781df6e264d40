//! Closed-form prediction of how many sign vectors sit over a given
//! stay/move pattern and evaluate to a given translate.
//!
//! For a pattern of dimension d over a word of length l, the counts N(z) and
//! N(-z) are pinned down by two identities: their difference is
//! 2^{(l-2d)/2} R(z) where R is the real part, and their sum is
//! 2^{l-2d+1} / |H| when z lies in the H-coset of the base point and 0
//! otherwise. H is the diagonal-sign subgroup of the strand partition
//! generated by the permutation's cycles and the wire pairs of the unmarked
//! crossings.

use perm_core::{CrossingTable, ReducedWord};
use quat_clifford::{
    h_member, h_size, DyadicRootScalar, QuatMonomial, StrandPartition, TranslateOrbits,
};

use crate::enumerate::Preancestry;
use crate::error::{Error, Result};

/// One evaluated prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountPrediction {
    /// Dimension of the stay/move pattern.
    pub dim: usize,
    /// Size of the diagonal-sign subgroup of the joined partition.
    pub subgroup_size: u64,
    /// Whether the translate's relative monomial lies in that subgroup.
    pub in_subgroup: bool,
    /// Predicted number of sign vectors.
    pub count: u64,
}

/// Cycles of the word's permutation joined with the wire pairs of the
/// pattern's unmarked crossings.
pub fn joined_partition(word: &ReducedWord, pre: &Preancestry) -> StrandPartition {
    let sigma = word.permutation();
    let mut partition = StrandPartition::from_cycles(&sigma);
    let table = CrossingTable::new(word);
    for k in pre.unmarked_positions() {
        let (a, b) = table.pair(k);
        partition.join(a, b);
    }
    partition
}

/// Prediction for the translate `base * m`.
pub fn predicted_count_for_multiplier(
    word: &ReducedWord,
    pre: &Preancestry,
    orbits: &TranslateOrbits,
    m: QuatMonomial,
) -> CountPrediction {
    let l = word.len();
    let d = pre.dim();
    debug_assert!(2 * d <= l, "pattern dimension exceeds half the length");
    let partition = joined_partition(word, pre);
    let subgroup_size = h_size(&partition);
    let q = orbits.relative_monomial(m);
    let in_subgroup = h_member(&q, &partition);

    let z = orbits.translate(m);
    let diff = (z.real_part() * DyadicRootScalar::root2_pow((l - 2 * d) as i64))
        .to_integer()
        .expect("difference part is an integer for translates");

    let sum_times_h: i128 = if in_subgroup { 1i128 << (l - 2 * d + 1) } else { 0 };
    let numerator = sum_times_h + (diff as i128) * (subgroup_size as i128);
    let denominator = 2 * subgroup_size as i128;
    assert!(numerator >= 0, "negative predicted count");
    assert_eq!(numerator % denominator, 0, "fractional predicted count");
    CountPrediction { dim: d, subgroup_size, in_subgroup, count: (numerator / denominator) as u64 }
}

/// Prediction for an explicit translate value.
pub fn predicted_count(
    word: &ReducedWord,
    pre: &Preancestry,
    orbits: &TranslateOrbits,
    z: &quat_clifford::CliffordElement,
) -> Result<CountPrediction> {
    for m in QuatMonomial::all(word.n()) {
        if orbits.translate(m) == z {
            return Ok(predicted_count_for_multiplier(word, pre, orbits, m));
        }
    }
    Err(Error::NotATranslate)
}
