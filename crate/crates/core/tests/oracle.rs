use cylkit::enumerate::elements_of_length;
use cylkit::stanley::{expand_affine_schur, oracle_expand, Expander, Strategy};

#[test]
fn exhaustive_small_agreement() {
    for n in [3usize, 4] {
        for len in 0..=6 {
            for w in elements_of_length(n, len) {
                let fast = expand_affine_schur(&w).unwrap_or_else(|e| panic!("{w}: {e}"));
                let slow = oracle_expand(&w).unwrap();
                assert_eq!(fast, slow, "{w}");
                let general = Expander::with_strategy(Strategy::General).expand(&w).unwrap();
                assert_eq!(general, slow, "{w} general");
            }
        }
    }
}
