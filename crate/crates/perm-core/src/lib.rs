//! Symmetric-group and wiring-diagram foundation: permutations in one-line
//! form, reduced words, inversions, blocks, the strong Bruhat order, crossing
//! tables, diagram regions and click moves.

mod bruhat;
mod diagram;
mod error;
mod perm;
mod word;

pub use bruhat::strong_leq;
pub use diagram::{click, region_at, regions, CrossingTable, Region};
pub use error::{Error, Result};
pub use perm::{Permutation, MAX_STRANDS};
pub use word::{canonical_word, reduced_words, sample_reduced_words, word_to_perm, ReducedWord};
