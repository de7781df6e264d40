use crate::word::ReducedWord;

/// Wiring-diagram geometry of a word: the k-th letter (0-based position k) is
/// a crossing on row `rows[k]` where the two wires `pairs[k]` = (min, max)
/// meet. For a reduced word the pair set equals the inversion set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingTable {
    rows: Vec<u8>,
    pairs: Vec<(u8, u8)>,
}

impl CrossingTable {
    pub fn new(word: &ReducedWord) -> Self {
        let mut slots: Vec<u8> = (1..=word.n() + 1).collect();
        let mut pairs = Vec::with_capacity(word.len());
        for &r in word.letters() {
            let (a, b) = (slots[r as usize - 1], slots[r as usize]);
            pairs.push((a.min(b), a.max(b)));
            slots.swap(r as usize - 1, r as usize);
        }
        CrossingTable { rows: word.letters().to_vec(), pairs }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, k: usize) -> u8 {
        self.rows[k]
    }

    /// Wires crossing at position k, as (smaller label, larger label).
    pub fn pair(&self, k: usize) -> (u8, u8) {
        self.pairs[k]
    }

    pub fn pairs(&self) -> &[(u8, u8)] {
        &self.pairs
    }
}

/// A bounded face of the wiring diagram: two consecutive crossings k1 < k2 on
/// the same row plus the adjacent-row crossings strictly between them.
/// Positions are 0-based letter indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub row: u8,
    pub k1: usize,
    pub k2: usize,
    pub interior: Vec<usize>,
}

impl Region {
    /// All positions whose sign a click flips: both anchors and the interior.
    pub fn click_set(&self) -> Vec<usize> {
        let mut set = vec![self.k1];
        set.extend_from_slice(&self.interior);
        set.push(self.k2);
        set.sort_unstable();
        set
    }
}

/// All regions of the diagram, ordered by (row, first anchor).
pub fn regions(word: &ReducedWord) -> Vec<Region> {
    let letters = word.letters();
    let mut out = Vec::new();
    for row in 1..=word.n() {
        let positions: Vec<usize> = (0..letters.len()).filter(|&k| letters[k] == row).collect();
        for pair in positions.windows(2) {
            let (k1, k2) = (pair[0], pair[1]);
            let interior: Vec<usize> = (k1 + 1..k2)
                .filter(|&k| letters[k].abs_diff(row) == 1)
                .collect();
            out.push(Region { row, k1, k2, interior });
        }
    }
    out
}

/// Region with the given anchors, if the word has one there.
pub fn region_at(word: &ReducedWord, k1: usize, k2: usize) -> Option<Region> {
    regions(word).into_iter().find(|r| r.k1 == k1 && r.k2 == k2)
}

/// Flips the entries of `signs` on the region's click set. Applying the same
/// click twice is the identity.
pub fn click(signs: &mut [i8], region: &Region) {
    for k in region.click_set() {
        signs[k] = -signs[k];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::word::ReducedWord;

    #[test]
    fn crossing_pairs_match_inversions() {
        let w = ReducedWord::new(2, vec![1, 2, 1]).unwrap();
        let table = CrossingTable::new(&w);
        assert_eq!(table.pairs(), &[(1, 2), (1, 3), (2, 3)]);
        let mut sorted = table.pairs().to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, Permutation::longest(3).inversions());
    }

    #[test]
    fn region_interiors() {
        // Word 2,1,4,3,2,5,4: the row-2 face anchored at positions 0 and 4
        // contains the adjacent-row crossings at 1 (row 1) and 3 (row 3) but
        // not the row-4 crossing at 2.
        let w = ReducedWord::parse("2,1,4,3,2,5,4", None).unwrap();
        let region = region_at(&w, 0, 4).unwrap();
        assert_eq!(region.row, 2);
        assert_eq!(region.interior, vec![1, 3]);
        assert_eq!(region.click_set(), vec![0, 1, 3, 4]);
    }

    #[test]
    fn click_examples() {
        let w = ReducedWord::parse("2,1,4,3,2,5,4", None).unwrap();
        let region = region_at(&w, 0, 4).unwrap();
        let mut signs = vec![-1, -1, -1, -1, 1, 1, -1];
        click(&mut signs, &region);
        assert_eq!(signs, vec![1, 1, -1, 1, -1, 1, -1]);
        click(&mut signs, &region);
        assert_eq!(signs, vec![-1, -1, -1, -1, 1, 1, -1]);

        let w = ReducedWord::new(2, vec![1, 2, 1]).unwrap();
        let region = region_at(&w, 0, 2).unwrap();
        assert_eq!(region.row, 1);
        assert_eq!(region.click_set(), vec![0, 1, 2]);
    }
}
