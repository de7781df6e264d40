use perm_core::Permutation;

use crate::action::TranslateOrbits;
use crate::quat::QuatMonomial;

/// Partition of the strand labels 1..=n+1, stored as sorted blocks. Used for
/// the subgroups cut out by per-block sign conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandPartition {
    n_plus_1: u8,
    /// block_of[i-1] is the smallest strand in the block containing i.
    block_of: Vec<u8>,
}

impl StrandPartition {
    pub fn singletons(n_plus_1: u8) -> Self {
        StrandPartition { n_plus_1, block_of: (1..=n_plus_1).collect() }
    }

    /// Blocks are the cycles of the permutation.
    pub fn from_cycles(sigma: &Permutation) -> Self {
        let mut partition = Self::singletons(sigma.n_plus_1() as u8);
        for cycle in sigma.cycles() {
            for pair in cycle.windows(2) {
                partition.join(pair[0], pair[1]);
            }
        }
        partition
    }

    pub fn n_plus_1(&self) -> u8 {
        self.n_plus_1
    }

    pub fn join(&mut self, a: u8, b: u8) {
        let (ra, rb) = (self.block_of[a as usize - 1], self.block_of[b as usize - 1]);
        if ra == rb {
            return;
        }
        let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
        for r in self.block_of.iter_mut() {
            if *r == drop {
                *r = keep;
            }
        }
    }

    pub fn block_count(&self) -> usize {
        let mut roots: Vec<u8> = self.block_of.clone();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    pub fn blocks(&self) -> Vec<Vec<u8>> {
        let mut roots: Vec<u8> = self.block_of.clone();
        roots.sort_unstable();
        roots.dedup();
        roots
            .into_iter()
            .map(|r| {
                (1..=self.n_plus_1)
                    .filter(|&i| self.block_of[i as usize - 1] == r)
                    .collect()
            })
            .collect()
    }

    pub fn same_block(&self, a: u8, b: u8) -> bool {
        self.block_of[a as usize - 1] == self.block_of[b as usize - 1]
    }
}

/// The diagonal sign the monomial q induces on strand j, namely
/// (-1)^(|supp(q) * {j-1, j}|).
pub fn strand_sign(q: &QuatMonomial, j: u8) -> i8 {
    assert!(j >= 1 && j <= q.n() + 1);
    let mut adjacent = 0u32;
    if j >= 2 {
        adjacent |= 1 << (j - 2);
    }
    if j <= q.n() {
        adjacent |= 1 << (j - 1);
    }
    if (q.mask() & adjacent).count_ones() % 2 == 1 {
        -1
    } else {
        1
    }
}

/// Membership in H_X: the product of strand signs over every block of X
/// must be +1. The monomial's overall sign is unconstrained.
pub fn h_member(q: &QuatMonomial, partition: &StrandPartition) -> bool {
    assert_eq!(q.n() + 1, partition.n_plus_1());
    partition
        .blocks()
        .iter()
        .all(|block| block.iter().map(|&j| strand_sign(q, j)).product::<i8>() == 1)
}

/// |H_X| = 2^(n + 2 - #blocks): one parity constraint per block, one of
/// which is redundant since the signs over all strands multiply to +1.
pub fn h_size(partition: &StrandPartition) -> u64 {
    let n = partition.n_plus_1() as u64 - 1;
    1u64 << (n + 2 - partition.block_count() as u64)
}

/// Counts for the cells whose crossings all carry the same sign per row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThinStats {
    /// log2 of the stabilizer of the unit under generator negation.
    pub c_tilde: u32,
    /// Cells per value z in the orbit of the unit: 2^c_tilde.
    pub per_value: u64,
    /// Total over all z: 2^(n - b) where b counts proper split points.
    pub total: u64,
}

pub fn thin_stats(sigma: &Permutation, orbits: &TranslateOrbits) -> ThinStats {
    let n = sigma.n() as u32;
    let c_tilde = n - orbits.unit_orbit_log2();
    let b = sigma.blocks().len() as u32;
    ThinStats {
        c_tilde,
        per_value: 1u64 << c_tilde,
        total: 1u64 << (n - b),
    }
}
