//! Breadth-first enumeration of affine permutations by length.

use std::collections::BTreeSet;

use crate::affine::AffinePermutation;

/// Layers `0..=max_len` of the elements reachable from the identity by
/// length-increasing right multiplication while `keep` holds. With a filter
/// closed under taking prefixes this is the full order ideal.
pub fn layers_with(
    n: usize,
    max_len: usize,
    keep: impl Fn(&AffinePermutation) -> bool,
) -> Vec<Vec<AffinePermutation>> {
    let mut layers = vec![vec![AffinePermutation::identity(n)]];
    for len in 0..max_len {
        let mut next = BTreeSet::new();
        for w in &layers[len] {
            for i in 0..n {
                if !w.has_right_descent(i) {
                    let v = w.mul_s(i);
                    if keep(&v) {
                        next.insert(v);
                    }
                }
            }
        }
        layers.push(next.into_iter().collect());
    }
    layers
}

/// Every element of length exactly `len`, sorted by window.
pub fn elements_of_length(n: usize, len: usize) -> Vec<AffinePermutation> {
    layers_with(n, len, |_| true).pop().unwrap_or_default()
}

/// Every 0-Grassmannian element of length `len`, sorted by window. These are
/// closed under removing left factors, so left multiplication reaches them.
pub fn grassmannian_elements(n: usize, len: usize) -> Vec<AffinePermutation> {
    let mut layer = vec![AffinePermutation::identity(n)];
    for _ in 0..len {
        let mut next = BTreeSet::new();
        for w in &layer {
            for i in 0..n {
                if !w.has_left_descent(i) {
                    let v = w.s_mul(i);
                    if v.is_grassmannian(0) {
                        next.insert(v);
                    }
                }
            }
        }
        layer = next.into_iter().collect();
    }
    layer
}
