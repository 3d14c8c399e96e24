use std::collections::BTreeMap;

use cylkit::affine::{AffinePermutation, GeneratorWord, KBoundedPartition};
use cylkit::cylindric::{in_a0, phi, phi_inv, CylType};
use cylkit::stanley::{expand_affine_schur, stanley_monomials, Expander, Strategy as Completion};
use cylkit::suites::random_element;
use cylkit::symfunc::{expand_in_schur, partitions, schur_combination, SymmetricPolynomial};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn element() -> impl Strategy<Value = AffinePermutation> {
    (3usize..=6, 0usize..=7, any::<u64>()).prop_map(|(n, len, seed)| random_element(n, len, &mut StdRng::seed_from_u64(seed)))
}

fn kbounded() -> impl Strategy<Value = KBoundedPartition> {
    (3usize..=6, prop::collection::vec(1usize..=5, 0..5)).prop_map(|(n, mut parts)| {
        parts.iter_mut().for_each(|p| *p = (*p).min(n - 1));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        KBoundedPartition::new(n, parts).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expansion_reassembles_f(w in element()) {
        let exp = expand_affine_schur(&w).unwrap();
        prop_assert!(exp.is_nonnegative());
        let nvars = w.length().max(1);
        let mut total = SymmetricPolynomial::zero(nvars, w.length());
        for (u, c) in exp.terms() {
            total = total.add(&stanley_monomials(u, nvars).unwrap().scale(c)).unwrap();
        }
        prop_assert_eq!(total, stanley_monomials(&w, nvars).unwrap());
    }

    #[test]
    fn strategies_agree(w in element()) {
        let auto = Expander::with_strategy(Completion::Auto).expand(&w).unwrap();
        let general = Expander::with_strategy(Completion::General).expand(&w).unwrap();
        prop_assert_eq!(auto, general);
    }

    #[test]
    fn rotation_preserves_expansion(w in element(), t in -6i64..6) {
        prop_assert_eq!(expand_affine_schur(&w).unwrap(), expand_affine_schur(&w.rotate(t)).unwrap());
    }

    #[test]
    fn reduced_word_round_trip(w in element()) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert!(word.is_reduced());
        prop_assert_eq!(word.to_permutation(), w.clone());
        let text = word.to_string();
        prop_assert_eq!(GeneratorWord::parse(w.n(), &text).unwrap(), word);
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<AffinePermutation>(&json).unwrap(), w);
    }

    #[test]
    fn inverse_and_descents(w in element()) {
        let inv = w.inverse();
        prop_assert_eq!(inv.length(), w.length());
        prop_assert!(w.multiply(&inv).unwrap().is_identity());
        for i in 0..w.n() {
            prop_assert_eq!(w.has_left_descent(i), inv.has_right_descent(i));
        }
    }

    #[test]
    fn kbounded_round_trip(lambda in kbounded()) {
        let u = lambda.to_grassmannian();
        prop_assert!(u.is_grassmannian(0));
        prop_assert_eq!(u.length(), lambda.size());
        prop_assert_eq!(KBoundedPartition::from_grassmannian(&u).unwrap(), lambda);
    }

    #[test]
    fn phi_round_trip(lambda in kbounded(), m_seed in 1usize..6) {
        let u = lambda.to_grassmannian();
        let n = u.n();
        let ty = CylType::new(1 + m_seed % (n - 1), n).unwrap();
        if in_a0(&u, ty) {
            let shape = phi(&u, ty).unwrap();
            prop_assert_eq!(shape.cell_count(), u.length());
            prop_assert_eq!(phi_inv(&shape).unwrap(), u);
        }
    }

    #[test]
    fn schur_basis_round_trip(coeffs in prop::collection::vec(-3i64..=3, 7)) {
        let table: BTreeMap<_, _> = partitions(5, 5, 5)
            .into_iter()
            .zip(coeffs)
            .filter(|(_, c)| *c != 0)
            .collect();
        prop_assert_eq!(expand_in_schur(&schur_combination(5, 5, &table)), table);
    }
}
