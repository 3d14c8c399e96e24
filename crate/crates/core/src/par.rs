//! Batch expansion. With the `parallel` feature the batch is cut into
//! contiguous chunks, a few per rayon worker, each expanded with its own
//! memo; without it one memo serves the whole batch. Output order always
//! matches input order.

use crate::affine::AffinePermutation;
use crate::error::Result;
use crate::stanley::{oracle_expand, AffineSchurExpansion, Expander};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Expands every element, in parallel when the feature is enabled.
pub fn expand_batch(ws: &[AffinePermutation]) -> Vec<Result<AffineSchurExpansion>> {
    #[cfg(feature = "parallel")]
    {
        let chunk = ws.len().div_ceil(4 * rayon::current_num_threads()).max(1);
        ws.par_chunks(chunk)
            .flat_map_iter(|part| {
                let mut ex = Expander::new();
                part.iter().map(|w| ex.expand(w)).collect::<Vec<_>>()
            })
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        expand_batch_sequential(ws)
    }
}

/// Expands every element on the current thread with a shared memo.
pub fn expand_batch_sequential(ws: &[AffinePermutation]) -> Vec<Result<AffineSchurExpansion>> {
    let mut ex = Expander::new();
    ws.iter().map(|w| ex.expand(w)).collect()
}

/// Runs the linear-solve oracle on every element.
pub fn oracle_batch(ws: &[AffinePermutation]) -> Vec<Result<AffineSchurExpansion>> {
    #[cfg(feature = "parallel")]
    {
        ws.par_iter().map(oracle_expand).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ws.iter().map(oracle_expand).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::elements_of_length;

    #[test]
    fn batch_matches_sequential() {
        let ws: Vec<_> = (0..=4).flat_map(|l| elements_of_length(4, l)).collect();
        let a: Vec<_> = expand_batch(&ws).into_iter().map(|r| r.unwrap()).collect();
        let b: Vec<_> = expand_batch_sequential(&ws).into_iter().map(|r| r.unwrap()).collect();
        assert_eq!(a, b);
    }
}
