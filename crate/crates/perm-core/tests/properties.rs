use perm_core::{
    canonical_word, click, reduced_words, regions, sample_reduced_words, word_to_perm,
    CrossingTable, Permutation, ReducedWord,
};
use proptest::prelude::*;

fn arb_perm(n_plus_1: usize) -> impl Strategy<Value = Permutation> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut line: Vec<u8> = (1..=n_plus_1 as u8).collect();
        for i in (1..line.len()).rev() {
            let j = (rng.next_u32() as usize) % (i + 1);
            line.swap(i, j);
        }
        Permutation::from_oneline(line).unwrap()
    })
}

proptest! {
    #[test]
    fn canonical_word_reproduces_permutation(p in arb_perm(6)) {
        let w = canonical_word(&p);
        prop_assert_eq!(w.permutation(), p.clone());
        prop_assert_eq!(w.len(), p.inversion_count());
    }

    #[test]
    fn crossing_pairs_equal_inversion_set(p in arb_perm(6)) {
        let w = canonical_word(&p);
        let table = CrossingTable::new(&w);
        let mut pairs = table.pairs().to_vec();
        pairs.sort_unstable();
        pairs.dedup();
        prop_assert_eq!(pairs.len(), w.len());
        let mut sorted = table.pairs().to_vec();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, p.inversions());
    }

    #[test]
    fn click_is_an_involution(p in arb_perm(6), seed in any::<u64>()) {
        let w = canonical_word(&p);
        if w.is_empty() {
            return Ok(());
        }
        let mut signs: Vec<i8> = (0..w.len())
            .map(|k| if (seed >> (k % 64)) & 1 == 1 { 1 } else { -1 })
            .collect();
        let before = signs.clone();
        for region in regions(&w) {
            click(&mut signs, &region);
            click(&mut signs, &region);
        }
        prop_assert_eq!(signs, before);
    }

    // Row multisets are NOT word-invariant (braid moves change them), but the
    // crossing pair set is: it equals the inversion set for every word.
    #[test]
    fn crossing_pair_set_is_word_invariant(p in arb_perm(5), seed in any::<u64>()) {
        let inversions = p.inversions();
        for w in sample_reduced_words(&p, 3, seed) {
            let mut pairs = CrossingTable::new(&w).pairs().to_vec();
            pairs.sort_unstable();
            prop_assert_eq!(&pairs, &inversions);
        }
    }

    #[test]
    fn inversions_invert_symmetrically(p in arb_perm(7)) {
        prop_assert_eq!(p.inversion_count(), p.inverse().inversion_count());
        let eta = Permutation::longest(7);
        prop_assert_eq!(
            p.compose(&eta).inversion_count(),
            eta.inversion_count() - p.inversion_count()
        );
    }
}

#[test]
fn every_reduced_word_of_s4_longest_multiplies_back() {
    let eta = Permutation::longest(4);
    let words = reduced_words(&eta, None);
    assert_eq!(words.len(), 16);
    for w in &words {
        assert_eq!(w.permutation(), eta);
    }
}

#[test]
fn word_parse_rejects_unreduced() {
    assert!(ReducedWord::parse("1,1", None).is_err());
    assert!(ReducedWord::parse("1,2,1,2", None).is_err());
    let (p, reduced) = word_to_perm(2, &[1, 2, 1, 2]).unwrap();
    assert_eq!(p.to_string(), "231");
    assert!(!reduced);
}
