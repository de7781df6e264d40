use std::collections::HashSet;

use matrix_oracle::{
    bruhat_perm, dominated_minors, gamma_fixture, gamma_fixture_check, lambda_cell_crosscheck,
    signed_cell, PositiveWitness, RationalLowerTriangular,
};
use num::{BigRational, One, Signed, Zero};
use perm_core::{canonical_word, Permutation, ReducedWord};
use quat_clifford::{QuatMonomial, SignedPermMatrix, TranslateOrbits};

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn rank_two(x: BigRational, y: BigRational, z: BigRational) -> RationalLowerTriangular {
    RationalLowerTriangular::from_rows(vec![
        vec![BigRational::one()],
        vec![x, BigRational::one()],
        vec![z, y, BigRational::one()],
    ])
    .unwrap()
}

fn all_perms(n_plus_1: usize) -> Vec<Permutation> {
    let mut items: Vec<u8> = (1..=n_plus_1 as u8).collect();
    let mut out = Vec::new();
    let mut c = vec![0usize; n_plus_1];
    out.push(Permutation::from_oneline(items.clone()).unwrap());
    let mut i = 0;
    while i < n_plus_1 {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            out.push(Permutation::from_oneline(items.clone()).unwrap());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// One probe point per open region of the rank-two top cell, double-checked
/// against the rotation product with the matching letter signs. Opposite
/// regions collapse onto the same signed matrix, leaving four images.
#[test]
fn corner_regions_of_the_rank_two_cell_map_to_four_sign_classes() {
    let eta = Permutation::longest(3);
    let half_cases: [((i64, i64, i64), [i8; 3]); 6] = [
        ((0, 0, 2), [-1, 1, 1]),
        ((0, 0, -2), [1, 1, -1]),
        ((4, 2, 2), [1, 1, 1]),
        ((2, -2, -1), [1, -1, 1]),
        ((-2, -2, 1), [-1, -1, -1]),
        ((-2, 2, -1), [-1, 1, -1]),
    ];
    let mut cells = Vec::new();
    for ((x, y, z), eps) in half_cases {
        let l = rank_two(rat(x, 2), rat(y, 2), rat(z, 2));
        assert_eq!(bruhat_perm(&l), eta, "point ({x}/2, {y}/2, {z}/2)");
        let cell = signed_cell(&l);
        let expected = SignedPermMatrix::rotation_word(3, &[1, 2, 1], &eps);
        assert_eq!(cell, expected, "point ({x}/2, {y}/2, {z}/2)");
        cells.push(cell);
    }
    assert_eq!(cells[2], cells[4]);
    assert_eq!(cells[3], cells[5]);
    let distinct: HashSet<String> = cells.iter().map(|c| c.to_string()).collect();
    assert_eq!(distinct.len(), 4);
}

#[test]
fn crosscheck_holds_for_every_rank_three_cell_and_sign_vector() {
    for sigma in all_perms(4) {
        let word = canonical_word(&sigma);
        for bits in 0u32..1 << word.len() {
            let signs: Vec<i8> = (0..word.len())
                .map(|k| if bits >> k & 1 == 1 { -1 } else { 1 })
                .collect();
            assert!(
                lambda_cell_crosscheck(&word, &signs, 1000 + u64::from(bits)),
                "sigma {:?} signs {:?}",
                sigma.oneline(),
                signs
            );
        }
    }
}

#[test]
fn crosscheck_spot_words_in_higher_rank() {
    let word = canonical_word(&Permutation::longest(5));
    assert!(lambda_cell_crosscheck(&word, &vec![1; word.len()], 7));
    let alternating: Vec<i8> = (0..word.len())
        .map(|k| if k % 2 == 0 { 1 } else { -1 })
        .collect();
    assert!(lambda_cell_crosscheck(&word, &alternating, 8));

    let sigma = Permutation::from_oneline(vec![5, 6, 3, 4, 1, 2]).unwrap();
    let word = canonical_word(&sigma);
    let mixed: Vec<i8> = (0..word.len())
        .map(|k| if k % 3 == 0 { -1 } else { 1 })
        .collect();
    assert!(lambda_cell_crosscheck(&word, &mixed, 9));
}

#[test]
fn dominated_minors_separate_the_top_cell_from_the_others() {
    let top = canonical_word(&Permutation::longest(4));
    for seed in [3, 14, 159] {
        let l = PositiveWitness::random(top.clone(), seed).product();
        let minors = dominated_minors(&l, 4);
        assert!(minors.iter().all(|m| m.is_positive()));
    }

    let shorter = ReducedWord::parse("2,1,3", Some(3)).unwrap();
    let l = PositiveWitness::random(shorter, 5).product();
    let minors = dominated_minors(&l, 4);
    assert!(minors.iter().any(|m| m.is_zero()));
    assert!(minors.iter().all(|m| !m.is_negative()));
}

/// The image of each loop family determines the translates sitting over it:
/// the planar family lies over the pair of size-eight orbits labelled by a
/// single generator, the spatial family over the orbit labelled a1 a3.
#[test]
fn loop_families_sit_over_the_expected_orbits() {
    let report = gamma_fixture_check().unwrap();
    let word = canonical_word(&report.permutation);
    let acute = SignedPermMatrix::rotation_word(6, word.letters(), &vec![1; word.len()]);
    let orbits = TranslateOrbits::build(&report.permutation);

    let matches_of = |cell: &SignedPermMatrix| {
        let mut monomials = Vec::new();
        let mut labels = Vec::new();
        for m in QuatMonomial::all(5) {
            let image = acute.clone() * SignedPermMatrix::diagonal_of_monomial(&m);
            if image == *cell {
                monomials.push(m);
                let idx = orbits.orbit_of(orbits.translate(m)).unwrap();
                labels.push(orbits.orbits()[idx].label);
            }
        }
        monomials.sort();
        labels.sort();
        labels.dedup();
        (monomials, labels)
    };

    let a5 = QuatMonomial::generator(5, 5);
    let (monomials, labels) = matches_of(&report.families[0].cell);
    assert_eq!(monomials, vec![a5, -a5]);
    assert_eq!(
        labels,
        vec![
            QuatMonomial::generator(5, 1),
            -QuatMonomial::generator(5, 1)
        ]
    );

    let long = QuatMonomial::from_parts(5, 1, 0b11011);
    let (monomials, labels) = matches_of(&report.families[1].cell);
    assert_eq!(monomials, vec![long, -long]);
    assert_eq!(labels, vec![QuatMonomial::from_parts(5, 1, 0b101)]);
}

/// The first planar loop is a product of twelve parameter matrices whose
/// first four parameters depend on t; the identity holds at every sample.
#[test]
fn first_planar_path_matches_its_product_formula() {
    let fixture = gamma_fixture().unwrap();
    let path = &fixture.families()[0].paths()[0];
    let letters = [2u8, 1, 3, 2, 4, 3, 2, 1, 5, 4, 3, 2];
    for t in [rat(1, 2), rat(2, 1), rat(-1, 3), rat(5, 7)] {
        let mut params = vec![-t.clone().recip(), -t.clone(), t.clone(), t.clone().recip()];
        params.resize(letters.len(), BigRational::one());
        let mut product = RationalLowerTriangular::identity(6);
        for (&i, p) in letters.iter().zip(&params) {
            product = &product * &RationalLowerTriangular::lambda(6, i, p.clone());
        }
        assert_eq!(product, path.at(&t), "t = {t}");
    }
}
