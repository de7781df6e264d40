use std::collections::BTreeMap;

use perm_core::{canonical_word, Permutation};

use crate::clifford::CliffordElement;
use crate::quat::QuatMonomial;

/// One orbit of the generator-negation group acting on the translate set.
#[derive(Clone, Debug)]
pub struct Orbit {
    /// Smallest left multiplier m with m * acute in the orbit; used to name
    /// the orbit in reports.
    pub label: QuatMonomial,
    pub members: Vec<CliffordElement>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// The set { acute * m : m a signed monomial } together with its orbit
/// structure under the automorphisms a_j -> -a_j. Every value z attached to
/// a cell of the stratification lives in this set.
pub struct TranslateOrbits {
    n: u8,
    word: Vec<u8>,
    acute: CliffordElement,
    orbits: Vec<Orbit>,
    orbit_index: BTreeMap<CliffordElement, usize>,
    by_right_multiplier: BTreeMap<QuatMonomial, CliffordElement>,
    /// Right multiplier of the distinguished element with positive real part.
    base_right: QuatMonomial,
}

impl TranslateOrbits {
    pub fn build(sigma: &Permutation) -> Self {
        let n = sigma.n() as u8;
        let word = canonical_word(sigma).letters().to_vec();
        let acute = CliffordElement::acute_word(n, &word, &vec![1; word.len()]);
        let acute_inv = CliffordElement::acute_word_inverse(n, &word);

        let mut by_right_multiplier = BTreeMap::new();
        let mut left_label = BTreeMap::new();
        for m in QuatMonomial::all(n) {
            let z = acute.mul_monomial_right(m);
            let lm = (z.clone() * acute_inv.clone())
                .to_monomial()
                .expect("translate is a left monomial multiple");
            left_label.insert(z.clone(), lm);
            by_right_multiplier.insert(m, z);
        }

        // The distinguished base point: smallest element with R > 0. At
        // least one exists since the coefficients of acute are not all zero.
        let base_right = by_right_multiplier
            .iter()
            .filter(|(_, z)| z.real_part().is_positive())
            .map(|(m, z)| (z.clone(), *m))
            .min()
            .expect("some translate has positive real part")
            .1;

        // Orbits under flipping generators, found by closure from each
        // unvisited element.
        let mut orbit_index = BTreeMap::new();
        let mut orbits: Vec<Orbit> = Vec::new();
        for z in left_label.keys() {
            if orbit_index.contains_key(z) {
                continue;
            }
            let idx = orbits.len();
            let mut members = vec![z.clone()];
            orbit_index.insert(z.clone(), idx);
            let mut frontier = vec![z.clone()];
            while let Some(v) = frontier.pop() {
                for j in 1..=n {
                    let w = v.negate_generator(j);
                    assert!(left_label.contains_key(&w), "negation left the translate set");
                    if !orbit_index.contains_key(&w) {
                        orbit_index.insert(w.clone(), idx);
                        members.push(w.clone());
                        frontier.push(w);
                    }
                }
            }
            members.sort();
            let label = members.iter().map(|m| left_label[m]).min().unwrap();
            orbits.push(Orbit { label, members });
        }
        orbits.sort_by_key(|o| o.label);
        let mut reindexed = BTreeMap::new();
        for (idx, orbit) in orbits.iter().enumerate() {
            for m in &orbit.members {
                reindexed.insert(m.clone(), idx);
            }
        }

        TranslateOrbits {
            n,
            word,
            acute,
            orbits,
            orbit_index: reindexed,
            by_right_multiplier,
            base_right,
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn acute(&self) -> &CliffordElement {
        &self.acute
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbit_of(&self, z: &CliffordElement) -> Option<usize> {
        self.orbit_index.get(z).copied()
    }

    /// The translate acute * m.
    pub fn translate(&self, m: QuatMonomial) -> &CliffordElement {
        &self.by_right_multiplier[&m]
    }

    /// The fixed base point z0 with R(z0) > 0.
    pub fn base_point(&self) -> &CliffordElement {
        &self.by_right_multiplier[&self.base_right]
    }

    /// For z = acute * m, the monomial q with z = q * z0. Conjugating by the
    /// unit keeps everything inside the monomial group, so no algebra
    /// multiplication is needed.
    pub fn relative_monomial(&self, m: QuatMonomial) -> QuatMonomial {
        let diff = m * self.base_right.inverse();
        diff.conjugate_by_acute_word(&self.word)
    }

    /// Size of the orbit through the unit itself, as a power of two.
    pub fn unit_orbit_log2(&self) -> u32 {
        let idx = self.orbit_of(&self.acute).expect("unit is a translate");
        let size = self.orbits[idx].size();
        assert!(size.is_power_of_two());
        size.trailing_zeros()
    }
}
