//! Census-level verification of the decomposition lemmas: components
//! multiply and per-dimension cell counts convolve across any valid split,
//! with the type 3 double counting halved.

use ancestry::enumerate_ancestries;
use complex::component_report_for_word;
use perm_core::ReducedWord;

use crate::error::Result;
use crate::moves::{apply, SplitMove};

/// Cells of each dimension summed over every translate.
pub fn cells_per_dim(word: &ReducedWord) -> Vec<u64> {
    let mut counts = Vec::new();
    for a in enumerate_ancestries(word) {
        if counts.len() <= a.dim() {
            counts.resize(a.dim() + 1, 0);
        }
        counts[a.dim()] += 1;
    }
    counts
}

/// Applies the move and checks both product identities against the factors:
/// the component total is the product of the factors' totals, and the cell
/// count of each dimension is the convolution of the factors' counts. A
/// type 3 split synthesizes one extra letter whose sign doubles everything,
/// so there both sides are compared after halving the product.
pub fn verify_product_lemma(word: &ReducedWord, mv: &SplitMove) -> Result<bool> {
    let (w1, w2) = apply(word, mv)?;
    let denominator = if matches!(mv, SplitMove::Type3 { .. }) { 2 } else { 1 };

    let total = component_report_for_word(word).census.total_components;
    let t1 = component_report_for_word(&w1).census.total_components;
    let t2 = component_report_for_word(&w2).census.total_components;
    if !(t1 * t2).is_multiple_of(denominator) || total != t1 * t2 / denominator {
        return Ok(false);
    }

    let n = cells_per_dim(word);
    let n1 = cells_per_dim(&w1);
    let n2 = cells_per_dim(&w2);
    if n.len() != n1.len() + n2.len() - 1 {
        return Ok(false);
    }
    for (d, &count) in n.iter().enumerate() {
        let convolved: u64 = n1
            .iter()
            .enumerate()
            .filter(|&(a, _)| d >= a && d - a < n2.len())
            .map(|(a, &c1)| c1 * n2[d - a])
            .sum();
        if !convolved.is_multiple_of(denominator) || count != convolved / denominator {
            return Ok(false);
        }
    }
    Ok(true)
}
