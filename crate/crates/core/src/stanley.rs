//! Affine Stanley symmetric functions and their expansion into affine Schur
//! functions via the dual Pieri recursion.
//!
//! `F_w` is the generating function of factorizations of `w` into cyclically
//! decreasing elements. To expand it, find `v` with `wv` Grassmannian,
//! rotate so that `wv` is 0-Grassmannian, and peel the last block of the
//! maximal decomposition of `v`. The dual Pieri rule then rewrites `F_w` as a
//! signed sum over smaller tails, which terminates.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::affine::{conjugate, cyclic_words, AffinePermutation, CyclicSet, Direction, KBoundedPartition};
use crate::cylindric::{
    cylindric_schur_poly, in_a, in_a0, phi, ribbon_decomposition, skew_element, CylType, CylindricShape,
    PeriodicSequence,
};
use crate::enumerate::grassmannian_elements;
use crate::error::{add_coeff, check_cap, mul_coeff, Error, Result};
use crate::symfunc::{expand_in_schur, partitions, partitions_in_box, Partition, SchurExpansion, SymmetricPolynomial};

/// Length cap for the expansion.
pub const DEFAULT_LENGTH_CAP: usize = 24;
/// Length cap for the linear-solve oracle.
pub const ORACLE_LENGTH_CAP: usize = 10;

/// Coefficient of `x^alpha` in `F_w`: factorizations `w = w_1 ... w_N` into
/// cyclically decreasing pieces with `l(w_j) = alpha_j`.
pub fn stanley_coefficient(w: &AffinePermutation, alpha: &[usize]) -> i64 {
    let mut memo = HashMap::new();
    stanley_count(w, alpha, &mut memo)
}

fn stanley_count(
    w: &AffinePermutation,
    alpha: &[usize],
    memo: &mut HashMap<(AffinePermutation, Vec<usize>), i64>,
) -> i64 {
    let Some((&first, rest)) = alpha.split_first() else {
        return i64::from(w.is_identity());
    };
    if first >= w.n() {
        return 0;
    }
    let key = (w.clone(), alpha.to_vec());
    if let Some(&c) = memo.get(&key) {
        return c;
    }
    let mut total = 0;
    for (_, word) in cyclic_words(w.n(), first, Direction::Decreasing).iter() {
        if let Some(x) = w.strip_left(word) {
            total = add_coeff(total, stanley_count(&x, rest, memo));
        }
    }
    memo.insert(key, total);
    total
}

/// `F_w(x_1, ..., x_N)` in the monomial basis.
pub fn stanley_monomials(w: &AffinePermutation, nvars: usize) -> Result<SymmetricPolynomial> {
    check_cap("length", w.length(), DEFAULT_LENGTH_CAP)?;
    let mut memo = HashMap::new();
    Ok(SymmetricPolynomial::from_dominant_coefficients(nvars, w.length(), |alpha| {
        stanley_count(w, alpha, &mut memo)
    }))
}

/// `f^t(w)`, where `f` sends `s_i` to `s_{i+1}`.
pub fn rotate(w: &AffinePermutation, t: i64) -> AffinePermutation {
    w.rotate(t)
}

/// `v` with `l(wv) = l(w) + l(v)` and `wv` `p`-Grassmannian, built by the
/// c-statistic sweep. `l(v) <= sum_{i=1}^{k-1} i (k - i)` with `k = n - 1`.
pub fn grassmannianize(w: &AffinePermutation) -> (AffinePermutation, usize) {
    let n = w.n();
    let descents = w.right_descents();
    if descents.len() <= 1 {
        return (AffinePermutation::identity(n), descents.first().copied().unwrap_or(0));
    }
    let ni = n as i64;
    let mut x = w.clone();
    let mut letters = Vec::new();
    let c = |x: &AffinePermutation, i: i64| x.c_stat(i);
    let i1 = (1..=ni).max_by_key(|&i| (c(&x, i), -i)).expect("n >= 2");
    let mut q = i1 - 1;
    let mut s = 1i64;
    while s <= ni - 2 {
        let j = (q + s + 1..=q + ni)
            .max_by_key(|&p| (c(&x, p), -p))
            .expect("nonempty range");
        let gap = j - q - s - 1;
        for t in (1..=s).rev() {
            for step in 0..gap {
                let letter = (q + t + step).rem_euclid(ni) as usize;
                debug_assert!(!x.has_right_descent(letter));
                x = x.mul_s(letter);
                letters.push(letter);
            }
        }
        q = j - s - 1;
        s += 1;
    }
    let v = crate::affine::GeneratorWord::new(n, letters)
        .expect("letters reduced mod n")
        .to_permutation();
    (v, q.rem_euclid(ni) as usize)
}

/// The bound on [`grassmannianize`]: `sum_{i=1}^{k-1} i (k - i)`.
pub fn grassmannianize_bound(n: usize) -> usize {
    let k = n - 1;
    (1..k).map(|i| i * (k - i)).sum()
}

/// The bound on [`grassmannianize_321`]: `(n - m)(m - 1)/2`.
pub fn grassmannianize_321_bound(ty: CylType) -> usize {
    ty.width() * (ty.m() - 1) / 2
}

/// For `w` in `A_{(n-m,m)}`, a `v` in `A_{(n-m,m)}` with `wv` `p`-Grassmannian
/// and `l(v) <= (n - m)(m - 1)/2`, found by flattening an inner boundary.
/// Ties are broken by `(l(v), p, inner boundary, flattened row)`.
pub fn grassmannianize_321(w: &AffinePermutation, ty: CylType) -> Result<(AffinePermutation, usize)> {
    if !in_a(w, ty) {
        return Err(Error::Precondition(format!("{w} is not in A of type ({},{})", ty.m(), ty.n())));
    }
    let n = ty.n();
    let descents = w.right_descents();
    if descents.len() <= 1 {
        return Ok((AffinePermutation::identity(n), descents.first().copied().unwrap_or(0)));
    }
    let word = w.reduced_word();
    let (m, width) = (ty.m(), ty.width() as i64);
    let mut best: Option<((usize, usize, usize, usize), AffinePermutation)> = None;
    for (mu_index, mu) in partitions_in_box(m, n).iter().enumerate() {
        let beta = PeriodicSequence::from_partition(ty, mu, 0)?;
        if beta.apply_word(&word).is_none() {
            continue;
        }
        for a in 1..=m {
            let level = beta.at(a as i64);
            let base = (1..=m).map(|i| if i <= a { level } else { level - width }).collect();
            let flat = PeriodicSequence::new(ty, base)?;
            let cost = beta.cells_over(&flat);
            if best.as_ref().is_some_and(|(k, _)| k.0 < cost) {
                continue;
            }
            let v = skew_element(&beta, &flat).ok_or_else(|| Error::Internal("flattened boundary not nested".into()))?;
            let wv = w.compose(&v);
            let d = wv.right_descents();
            if d.len() != 1 {
                continue;
            }
            let key = (cost, d[0], mu_index, a);
            if best.as_ref().map_or(true, |(k, _)| key < *k) {
                best = Some((key, v));
            }
        }
    }
    let ((_, p, _, _), v) =
        best.ok_or_else(|| Error::Precondition(format!("no boundary of type ({},{}) admits {w}", m, n)))?;
    Ok((v, p))
}

/// `mu < nu` in the total order used for termination: smaller size, or equal
/// size and `mu_a > nu_a` at the last index `a` where they differ.
pub fn partition_less(mu: &Partition, nu: &Partition) -> bool {
    if mu.size() != nu.size() {
        return mu.size() < nu.size();
    }
    let len = mu.len().max(nu.len());
    (1..=len)
        .rev()
        .find(|&a| mu.part(a) != nu.part(a))
        .is_some_and(|a| mu.part(a) > nu.part(a))
}

/// The block `J_0 = [-l+1, lambda_l - l]` and the branch sets for
/// `w' = w d_{J_0}`: `B_+ = {u_J w'}` and `B_- = {w' u_J : J != J_0}`, over
/// `|J| = lambda_l` with lengths dropping by `lambda_l`.
pub fn dual_pieri_branches(
    w: &AffinePermutation,
    lambda_l: usize,
    l: usize,
) -> Result<(Vec<AffinePermutation>, Vec<AffinePermutation>)> {
    let (plus, minus, _) = branches(w, lambda_l, l)?;
    Ok((
        plus.into_iter().map(|(u, _)| u).collect(),
        minus.into_iter().map(|(u, _)| u).collect(),
    ))
}

type Branch = (AffinePermutation, CyclicSet);

fn branches(w: &AffinePermutation, lambda_l: usize, l: usize) -> Result<(Vec<Branch>, Vec<Branch>, AffinePermutation)> {
    let n = w.n();
    if l == 0 || lambda_l == 0 || lambda_l >= n {
        return Err(Error::Precondition(format!("part {lambda_l} at index {l}")));
    }
    let j0 = CyclicSet::interval(n, 1 - l as i64, lambda_l as i64 - l as i64, Direction::Decreasing)?;
    let w_prime = w.compose(&j0.element());
    if w_prime.length() != w.length() + lambda_l {
        return Err(Error::Precondition(format!("{w} d_J0 is not length-additive")));
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (j, word) in cyclic_words(n, lambda_l, Direction::Decreasing).iter() {
        if let Some(u) = w_prime.strip_left(word) {
            plus.push((u, j.clone()));
        }
        if *j != j0 {
            if let Some(u) = w_prime.strip_right(word) {
                minus.push((u, j.clone()));
            }
        }
    }
    plus.sort();
    minus.sort();
    Ok((plus, minus, w_prime))
}

/// Both sides of the dual Pieri rule for `h_q^perp F_w`: the `v` with
/// `w = d_J v` and the `v` with `w = v d_J`, `|J| = q`, lengths adding.
pub fn dual_pieri_sides(w: &AffinePermutation, q: usize) -> (Vec<AffinePermutation>, Vec<AffinePermutation>) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    if q < w.n() {
        for (_, word) in cyclic_words(w.n(), q, Direction::Decreasing).iter() {
            left.extend(w.strip_left(word));
            right.extend(w.strip_right(word));
        }
    }
    (left, right)
}

/// `F_w = sum_u c^w_u F_u` over 0-Grassmannian `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSchurExpansion {
    n: usize,
    coeffs: BTreeMap<AffinePermutation, i64>,
}

/// One rendered term of an expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTerm {
    pub window: Vec<i64>,
    pub word: String,
    pub partition: Vec<usize>,
    pub coeff: i64,
}

impl AffineSchurExpansion {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn single(u: AffinePermutation) -> Self {
        let mut out = Self::new(u.n());
        out.coeffs.insert(u, 1);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: &AffinePermutation) -> i64 {
        self.coeffs.get(u).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&mut self, u: AffinePermutation, c: i64) {
        let entry = self.coeffs.entry(u.clone()).or_insert(0);
        *entry = add_coeff(*entry, c);
        if *entry == 0 {
            self.coeffs.remove(&u);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: i64) {
        for (u, &c) in &other.coeffs {
            self.add(u.clone(), mul_coeff(c, factor));
        }
    }

    /// Terms sorted by `(length, window)`.
    pub fn terms(&self) -> Vec<(&AffinePermutation, i64)> {
        let mut out: Vec<_> = self.coeffs.iter().map(|(u, &c)| (u, c)).collect();
        out.sort_by_key(|(u, _)| (u.length(), u.window().to_vec()));
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// Each key as window, canonical word and k-bounded partition.
    pub fn rendered(&self) -> Vec<ExpansionTerm> {
        self.terms()
            .into_iter()
            .map(|(u, coeff)| {
                let lambda = KBoundedPartition::from_grassmannian(u).expect("keys are 0-Grassmannian");
                ExpansionTerm {
                    window: u.window().to_vec(),
                    word: lambda.canonical_word().to_string(),
                    partition: lambda.parts().to_vec(),
                    coeff,
                }
            })
            .collect()
    }

    /// Keys as canonical words, for compact comparisons.
    pub fn by_word(&self) -> BTreeMap<String, i64> {
        self.rendered().into_iter().map(|t| (t.word, t.coeff)).collect()
    }
}

/// How to pick the Grassmannian completion at each top-level call.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// The cylindric completion when some type contains `w`, else the sweep.
    #[default]
    Auto,
    /// Always the c-statistic sweep.
    General,
}

/// Memoized expansion engine. The expansion of `F_u` does not depend on how
/// `u` was reached, so the memo is keyed by `u` alone.
#[derive(Debug, Default)]
pub struct Expander {
    strategy: Strategy,
    cap: usize,
    memo: HashMap<AffinePermutation, AffineSchurExpansion>,
}

impl Expander {
    pub fn new() -> Self {
        Self::with_strategy(Strategy::Auto)
    }

    pub fn with_strategy(strategy: Strategy) -> Self {
        Self {
            strategy,
            cap: DEFAULT_LENGTH_CAP,
            memo: HashMap::new(),
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `F_w` in affine Schur functions; fails if a negative coefficient
    /// survives.
    pub fn expand(&mut self, w: &AffinePermutation) -> Result<AffineSchurExpansion> {
        check_cap("length", w.length(), self.cap)?;
        let out = self.expand_signed(w)?;
        if !out.is_nonnegative() {
            return Err(Error::Internal(format!("negative coefficient in the expansion of {w}")));
        }
        Ok(out)
    }

    fn completion(&self, w: &AffinePermutation) -> Result<(AffinePermutation, usize)> {
        if self.strategy == Strategy::Auto {
            for m in 1..w.n() {
                let ty = CylType::new(m, w.n())?;
                if in_a(w, ty) {
                    if let Ok(found) = grassmannianize_321(w, ty) {
                        return Ok(found);
                    }
                }
            }
        }
        Ok(grassmannianize(w))
    }

    fn expand_signed(&mut self, w: &AffinePermutation) -> Result<AffineSchurExpansion> {
        if w.is_grassmannian(0) {
            return Ok(AffineSchurExpansion::single(w.clone()));
        }
        if let Some(hit) = self.memo.get(w) {
            return Ok(hit.clone());
        }
        let (v, p) = self.completion(w)?;
        let t = -(p as i64);
        let out = self.expand_with_tail(&w.rotate(t), &v.rotate(t))?;
        self.memo.insert(w.clone(), out.clone());
        Ok(out)
    }

    /// `w v` is 0-Grassmannian with lengths adding.
    fn expand_with_tail(&mut self, w: &AffinePermutation, v: &AffinePermutation) -> Result<AffineSchurExpansion> {
        if w.is_grassmannian(0) {
            return Ok(AffineSchurExpansion::single(w.clone()));
        }
        if let Some(hit) = self.memo.get(w) {
            return Ok(hit.clone());
        }
        debug_assert!(w.compose(v).is_grassmannian(0));
        let lambda_conj = v.grassmannian_conjugate_shape();
        let lambda = conjugate(&lambda_conj);
        let l = lambda.len();
        let lambda_l = lambda[l - 1];
        let tail = KBoundedPartition::new(w.n(), lambda[..l - 1].to_vec())?.to_grassmannian();
        let (plus, minus, _) = branches(w, lambda_l, l)?;
        let rank = Partition::new(lambda_conj)?;
        let mut out = AffineSchurExpansion::new(w.n());
        for (u, _) in &plus {
            check_termination(&tail, &rank)?;
            let sub = self.expand_with_tail(u, &tail)?;
            out.add_scaled(&sub, 1);
        }
        for (u, j) in &minus {
            let next_tail = j.element().compose(&tail);
            check_termination(&next_tail, &rank)?;
            let sub = self.expand_with_tail(u, &next_tail)?;
            out.add_scaled(&sub, -1);
        }
        self.memo.insert(w.clone(), out.clone());
        Ok(out)
    }
}

/// Every branch must strictly decrease the conjugate tail shape.
fn check_termination(tail: &AffinePermutation, rank: &Partition) -> Result<()> {
    let next = Partition::new(tail.grassmannian_conjugate_shape())?;
    if !tail.is_grassmannian(0) || !partition_less(&next, rank) {
        return Err(Error::Internal(format!("branch tail {tail} does not decrease below {rank}")));
    }
    Ok(())
}

/// `F_w = sum_u c^w_u F_u`, with a fresh memo.
pub fn expand_affine_schur(w: &AffinePermutation) -> Result<AffineSchurExpansion> {
    Expander::new().expand(w)
}

/// Solves `F_w = sum_u c_u F_u` over all 0-Grassmannian `u` of length
/// `l(w)` as an exact linear system in `N = l(w)` variables.
pub fn oracle_expand(w: &AffinePermutation) -> Result<AffineSchurExpansion> {
    let len = w.length();
    check_cap("length", len, ORACLE_LENGTH_CAP)?;
    let n = w.n();
    let basis = grassmannian_elements(n, len);
    let rows = partitions(len, len, len);
    let coeff_column = |x: &AffinePermutation| -> Vec<BigRational> {
        let mut memo = HashMap::new();
        rows.iter()
            .map(|lam| BigRational::from_integer(BigInt::from(stanley_count(x, &lam.padded(len), &mut memo))))
            .collect()
    };
    let columns: Vec<Vec<BigRational>> = basis.iter().map(coeff_column).collect();
    let target = coeff_column(w);
    let solution = solve_exact(&columns, &target)?;
    let mut out = AffineSchurExpansion::new(n);
    for (u, x) in basis.into_iter().zip(solution) {
        if !x.is_integer() {
            return Err(Error::Solve(format!("non-integral coefficient {x} for {u}")));
        }
        let c = x.to_integer().to_i64().ok_or_else(|| Error::Solve("coefficient overflow".into()))?;
        if c != 0 {
            out.add(u, c);
        }
    }
    Ok(out)
}

/// Unique solution of `sum_j x_j columns[j] = target` by Gaussian elimination.
pub(crate) fn solve_exact(columns: &[Vec<BigRational>], target: &[BigRational]) -> Result<Vec<BigRational>> {
    let nrows = target.len();
    let ncols = columns.len();
    let mut a: Vec<Vec<BigRational>> = (0..nrows)
        .map(|r| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(ncols);
    for col in 0..ncols {
        let Some(r) = (pivot_row..nrows).find(|&r| !a[r][col].is_zero()) else {
            return Err(Error::Solve(format!("singular system at column {col}")));
        };
        a.swap(pivot_row, r);
        let inv = BigRational::one() / a[pivot_row][col].clone();
        for x in a[pivot_row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..nrows {
            if r != pivot_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..=ncols {
                    let delta = factor.clone() * a[pivot_row][c].clone();
                    a[r][c] = a[r][c].clone() - delta;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|row| !row[ncols].abs().is_zero()) {
        return Err(Error::Solve("inconsistent system".into()));
    }
    Ok(pivots.into_iter().map(|r| a[r][ncols].clone()).collect())
}

/// `s_{lambda/d/mu} = sum c_{nu/e/∅} s_{nu/e/∅}`.
pub fn expand_cylindric(shape: &CylindricShape) -> Result<SchurExpansion> {
    expand_cylindric_with(shape, &mut Expander::new())
}

/// [`expand_cylindric`] reusing an expansion memo.
pub fn expand_cylindric_with(shape: &CylindricShape, expander: &mut Expander) -> Result<SchurExpansion> {
    let ty = shape.ty();
    let w = shape.skew_word();
    let exp = expander.expand(&w)?;
    let mut out = SchurExpansion::new();
    for (u, c) in exp.terms() {
        if !in_a0(u, ty) {
            return Err(Error::Internal(format!("support element {u} outside A^0")));
        }
        let key = phi(u, ty)?;
        let (_, e) = ribbon_decomposition(u, ty)?;
        if e != key.d() {
            return Err(Error::Internal(format!("ribbon count {e} differs from {key}")));
        }
        out.add(key.lambda().clone(), key.d(), c);
    }
    Ok(out)
}

fn check_box(ty: CylType, parts: &[&Partition]) -> Result<()> {
    for p in parts {
        if !p.fits(ty.m(), ty.n()) {
            return Err(Error::InvalidPartition {
                parts: p.parts().to_vec(),
                reason: format!("does not fit in P_({},{})", ty.m(), ty.n()),
            });
        }
    }
    Ok(())
}

/// `C^{lambda,d}_{mu,nu}`, the coefficient of `nu/0/∅` in the expansion of
/// `lambda/d/mu`; zero when the degrees disagree or the shape is empty of
/// meaning (inner boundary not contained in the outer one).
pub fn gromov_witten(ty: CylType, lambda: &Partition, d: usize, mu: &Partition, nu: &Partition) -> Result<i64> {
    check_box(ty, &[lambda, mu, nu])?;
    if lambda.size() + ty.n() * d != mu.size() + nu.size() {
        return Ok(0);
    }
    let Ok(shape) = CylindricShape::new(ty, lambda.clone(), d, mu.clone()) else {
        return Ok(0);
    };
    Ok(expand_cylindric(&shape)?.get(nu, 0))
}

/// Schur expansion of the toric Schur polynomial in `m` variables,
/// restricted to `P_{mn}`.
pub fn toric_gw_oracle(ty: CylType, lambda: &Partition, d: usize, mu: &Partition) -> Result<BTreeMap<Partition, i64>> {
    check_box(ty, &[lambda, mu])?;
    let shape = CylindricShape::new(ty, lambda.clone(), d, mu.clone())?;
    if !shape.is_toric() {
        return Err(Error::Precondition(format!("{shape} is not toric")));
    }
    let poly = cylindric_schur_poly(&shape, ty.m())?;
    Ok(expand_in_schur(&poly)
        .into_iter()
        .filter(|(nu, c)| *c != 0 && nu.fits(ty.m(), ty.n()))
        .collect())
}
