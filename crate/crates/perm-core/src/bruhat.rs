use crate::perm::Permutation;

/// Strong Bruhat order test sigma <= tau, by the lifting property: peel right
/// descents off tau and follow sigma down when it shares the descent.
pub fn strong_leq(sigma: &Permutation, tau: &Permutation) -> bool {
    assert_eq!(sigma.n_plus_1(), tau.n_plus_1());
    let mut s = sigma.clone();
    let mut t = tau.clone();
    loop {
        if t.is_identity() {
            return s.is_identity();
        }
        if s.inversion_count() > t.inversion_count() {
            return false;
        }
        let j = t.right_descents()[0];
        t.mul_adjacent_right(j);
        if !s.is_right_ascent(j) {
            s.mul_adjacent_right(j);
        }
    }
}
