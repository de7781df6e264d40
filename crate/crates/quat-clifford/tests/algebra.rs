use perm_core::{reduced_words, sample_reduced_words, Permutation};
use quat_clifford::{
    h_member, h_size, strand_sign, thin_stats, CliffordElement, DyadicRootScalar, QuatMonomial,
    SignedPermMatrix, StrandPartition, TranslateOrbits,
};

fn all_perms(n_plus_1: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut line: Vec<u8> = (1..=n_plus_1 as u8).collect();
    heap(&mut line, n_plus_1, &mut out);
    return out;

    fn heap(line: &mut Vec<u8>, k: usize, out: &mut Vec<Permutation>) {
        if k <= 1 {
            out.push(Permutation::from_oneline(line.clone()).unwrap());
            return;
        }
        for i in 0..k {
            heap(line, k - 1, out);
            if k.is_multiple_of(2) {
                line.swap(i, k - 1);
            } else {
                line.swap(0, k - 1);
            }
        }
    }
}

#[test]
fn unit_of_563412_has_four_terms() {
    let sigma = Permutation::parse("563412").unwrap();
    let acute = CliffordElement::acute_perm(&sigma);
    let half = DyadicRootScalar::new(1, 2);
    assert_eq!(acute.num_terms(), 4);
    assert_eq!(acute.coeff(0b00001), -half); // a1
    assert_eq!(acute.coeff(0b01110), -half); // a2a3a4
    assert_eq!(acute.coeff(0b10000), -half); // a5
    assert_eq!(acute.coeff(0b11111), half); // a1a2a3a4a5
}

#[test]
fn unit_of_the_longest_element_of_rank_five() {
    let eta = Permutation::longest(6);
    let acute = CliffordElement::acute_perm(&eta);
    let c = DyadicRootScalar::root2_pow(-3);
    let expected: [(u32, i64); 8] = [
        (0b00000, 1),  // 1
        (0b00100, 1),  // a3
        (0b01010, -1), // a2a4
        (0b01110, -1), // a2a3a4
        (0b10001, -1), // a1a5
        (0b10101, -1), // a1a3a5
        (0b11011, 1),  // a1a2a4a5
        (0b11111, 1),  // a1a2a3a4a5
    ];
    assert_eq!(acute.num_terms(), expected.len());
    for (mask, sign) in expected {
        let want = c * DyadicRootScalar::from_integer(sign);
        assert_eq!(acute.coeff(mask), want, "mask {mask:#07b}");
    }
}

#[test]
fn unit_does_not_depend_on_the_reduced_word() {
    for text in ["563412", "4231", "35142"] {
        let sigma = Permutation::parse(text).unwrap();
        let n = sigma.n() as u8;
        let reference = CliffordElement::acute_perm(&sigma);
        for word in sample_reduced_words(&sigma, 12, 7) {
            let signs = vec![1i8; word.len()];
            let z = CliffordElement::acute_word(n, word.letters(), &signs);
            assert_eq!(z, reference, "word {word} of {sigma}");
        }
    }
}

#[test]
fn unit_coefficients_are_controlled_by_the_cycle_count() {
    // Over all of S_5: the unit has 2^(n+1-c) nonzero terms, each of
    // magnitude 2^((c-n-1)/2), where c counts cycles.
    for sigma in all_perms(5) {
        let acute = CliffordElement::acute_perm(&sigma);
        let c = sigma.cycles().len() as i64;
        let n = sigma.n() as i64;
        assert_eq!(acute.num_terms() as u64, 1u64 << (n + 1 - c));
        let mag = DyadicRootScalar::root2_pow(c - n - 1);
        for (_, coeff) in acute.terms() {
            assert_eq!(coeff.abs(), mag);
        }
    }
}

#[test]
fn positive_real_part_translates_match_the_term_count() {
    for text in ["321", "3142", "53421", "563412"] {
        let sigma = Permutation::parse(text).unwrap();
        let orbits = TranslateOrbits::build(&sigma);
        let positives = QuatMonomial::all(sigma.n() as u8)
            .into_iter()
            .filter(|&m| orbits.translate(m).real_part().is_positive())
            .count();
        assert_eq!(positives, CliffordElement::acute_perm(&sigma).num_terms());
    }
}

#[test]
fn rotation_word_image_lands_on_the_expected_permutation() {
    let m = SignedPermMatrix::rotation_word(4, &[1, 3, 2], &[1, 1, 1]);
    assert_eq!(m.perm(), &Permutation::parse("3142").unwrap());
    // Splitting the word anywhere factors the matrix.
    let left = SignedPermMatrix::rotation_word(4, &[1], &[1]);
    let right = SignedPermMatrix::rotation_word(4, &[3, 2], &[1, 1]);
    assert_eq!(left * right, m);
}

#[test]
fn rotation_image_is_word_invariant() {
    for text in ["4321", "35142"] {
        let sigma = Permutation::parse(text).unwrap();
        let words = reduced_words(&sigma, Some(40));
        let images: Vec<SignedPermMatrix> = words
            .iter()
            .map(|w| {
                SignedPermMatrix::rotation_word(
                    sigma.n_plus_1() as u8,
                    w.letters(),
                    &vec![1; w.len()],
                )
            })
            .collect();
        for image in &images {
            assert_eq!(image, &images[0]);
        }
    }
}

#[test]
fn orbit_table_of_563412() {
    let sigma = Permutation::parse("563412").unwrap();
    let orbits = TranslateOrbits::build(&sigma);
    let mut sizes: Vec<usize> = orbits.orbits().iter().map(|o| o.size()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![4, 4, 8, 8, 8, 8, 8, 8, 8]);

    let labels: Vec<String> = orbits.orbits().iter().map(|o| o.label.to_string()).collect();
    let expected =
        ["1", "a1", "-a1", "a2", "a3", "a4", "a1a2", "a1a3", "a2a3"];
    for want in expected {
        assert!(labels.iter().any(|l| l == want), "missing orbit {want}");
    }
    assert_eq!(labels.len(), expected.len());

    // The orbit through the unit itself has size 8.
    assert_eq!(orbits.unit_orbit_log2(), 3);
}

#[test]
fn orbit_table_of_361452() {
    let sigma = Permutation::parse("361452").unwrap();
    let orbits = TranslateOrbits::build(&sigma);
    let mut sizes: Vec<usize> = orbits.orbits().iter().map(|o| o.size()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![4, 4, 8, 8, 8, 8, 8, 8, 8]);
}

#[test]
fn subgroup_size_for_a_two_cycle_partition() {
    let sigma = Permutation::parse("53421").unwrap();
    let x = StrandPartition::from_cycles(&sigma);
    assert_eq!(h_size(&x), 16);
    let members = QuatMonomial::all(4)
        .into_iter()
        .filter(|q| h_member(q, &x))
        .count() as u64;
    assert_eq!(members, 16);
    // Joining the blocks into one doubles the subgroup.
    let mut joined = x.clone();
    joined.join(1, 2);
    assert_eq!(h_size(&joined), 32);
}

#[test]
fn strand_signs_come_from_diagonal_images() {
    for q in QuatMonomial::all(5) {
        let diag = SignedPermMatrix::diagonal_of_monomial(&q);
        for j in 1..=6u8 {
            assert_eq!(strand_sign(&q, j), diag.row_sign(j));
        }
    }
}

#[test]
fn thin_counts_over_small_groups() {
    // For block-free sigma the thin total is 2^n and splits evenly across
    // the orbit of the unit, with the stabilizer exponent within two of
    // the cycle count.
    for n_plus_1 in [4usize, 5] {
        for sigma in all_perms(n_plus_1) {
            if !sigma.blocks().is_empty() {
                continue;
            }
            let orbits = TranslateOrbits::build(&sigma);
            let stats = thin_stats(&sigma, &orbits);
            assert_eq!(stats.total, 1 << (n_plus_1 - 1));
            let orbit_size = 1u64 << orbits.unit_orbit_log2();
            assert_eq!(orbit_size * stats.per_value, stats.total);
            let c = sigma.cycles().len() as u32;
            assert!(stats.c_tilde <= c && c <= stats.c_tilde + 2, "{sigma}");
        }
    }
}
