//! Cylindric shapes of type `(m, n)` and the action of the affine
//! nilCoxeter generators on them.
//!
//! A boundary is an `(m, n)`-periodic sequence `alpha` of row lengths with
//! `alpha_{i+m} = alpha_i - (n - m)` and `alpha_i >= alpha_{i+1}`. Its
//! diagram is `{(i, j) : j <= alpha_i}` modulo the shift `(m, -(n - m))`; the
//! cell `(i, j)` lies on diagonal `j - i` mod `n`. For `lambda` in `P_{mn}`,
//! `lambda[r]` is the sequence with `lambda[r]_{i+r} = lambda_i + r`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::affine::{check_period, AffinePermutation, Direction, GeneratorWord, Side};
use crate::error::{check_cap, Error, Result};
use crate::symfunc::{partitions_in_box, Partition, SymmetricPolynomial};

/// Cell cap for tableau enumeration.
pub const DEFAULT_CELL_CAP: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CylType {
    m: usize,
    n: usize,
}

impl CylType {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        check_period(n)?;
        if m == 0 || m >= n {
            return Err(Error::InvalidShape(format!("type ({m},{n}) needs 0 < m < n")));
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n - m`, the maximal row length of a toric shape.
    pub fn width(&self) -> usize {
        self.n - self.m
    }
}

/// One period `alpha_1, ..., alpha_m` of a boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicSequence {
    ty: CylType,
    base: Vec<i64>,
}

impl PeriodicSequence {
    pub fn new(ty: CylType, base: Vec<i64>) -> Result<Self> {
        let bad = || Error::InvalidShape(format!("{base:?} is not an ({},{})-periodic boundary", ty.m, ty.n));
        if base.len() != ty.m {
            return Err(bad());
        }
        let seq = Self { ty, base: base.clone() };
        if (1..=ty.m as i64).any(|i| seq.at(i) < seq.at(i + 1)) {
            return Err(bad());
        }
        Ok(seq)
    }

    /// `lambda[r]`.
    pub fn from_partition(ty: CylType, lambda: &Partition, r: i64) -> Result<Self> {
        if !lambda.fits(ty.m, ty.n) {
            return Err(Error::InvalidPartition {
                parts: lambda.parts().to_vec(),
                reason: format!("does not fit in P_({},{})", ty.m, ty.n),
            });
        }
        let mut seq = Self {
            ty,
            base: vec![0; ty.m],
        };
        for i in 1..=ty.m as i64 {
            let j = i + r;
            let (q, k) = ((j - 1).div_euclid(ty.m as i64), (j - 1).rem_euclid(ty.m as i64));
            seq.base[k as usize] = lambda.part(i as usize) as i64 + r + q * ty.width() as i64;
        }
        Ok(seq)
    }

    pub fn empty(ty: CylType) -> Self {
        Self {
            ty,
            base: vec![0; ty.m],
        }
    }

    pub fn ty(&self) -> CylType {
        self.ty
    }

    pub fn base(&self) -> &[i64] {
        &self.base
    }

    /// `alpha_i` for any integer `i`.
    pub fn at(&self, i: i64) -> i64 {
        let m = self.ty.m as i64;
        let (q, k) = ((i - 1).div_euclid(m), (i - 1).rem_euclid(m));
        self.base[k as usize] - q * self.ty.width() as i64
    }

    /// The unique `(lambda, r)` with `self = lambda[r]`.
    pub fn to_partition(&self) -> (Partition, i64) {
        let (m, n) = (self.ty.m as i64, self.ty.n as i64);
        let total: i64 = self.base.iter().sum();
        let lo = (total - m * (n - m)).div_euclid(n) - 1;
        let hi = total.div_euclid(n) + 1;
        for r in lo..=hi {
            let parts: Vec<i64> = (1..=m).map(|i| self.at(r + i) - r).collect();
            if parts[0] <= n - m && parts[m as usize - 1] >= 0 {
                let parts = parts.into_iter().map(|p| p as usize).collect();
                return (Partition::new(parts).expect("boundary rows decrease"), r);
            }
        }
        unreachable!("every boundary is some lambda[r]")
    }

    /// `A_i` applied to the boundary: add the box on diagonal `i`, if any.
    pub fn add_box(&self, i: usize) -> Option<Self> {
        let n = self.ty.n as i64;
        (1..=self.ty.m as i64)
            .find(|&p| self.at(p - 1) > self.at(p) && (self.at(p) + 1 - p).rem_euclid(n) == i as i64)
            .map(|p| {
                let mut next = self.clone();
                next.base[p as usize - 1] += 1;
                next
            })
    }

    /// Inverse of [`Self::add_box`].
    pub fn remove_box(&self, i: usize) -> Option<Self> {
        let n = self.ty.n as i64;
        (1..=self.ty.m as i64)
            .find(|&p| self.at(p + 1) < self.at(p) && (self.at(p) - p).rem_euclid(n) == i as i64)
            .map(|p| {
                let mut next = self.clone();
                next.base[p as usize - 1] -= 1;
                next
            })
    }

    /// `A_w` for `w = s_{i_1} ... s_{i_l}`, letters applied right to left.
    pub fn apply_word(&self, word: &GeneratorWord) -> Option<Self> {
        word.letters()
            .iter()
            .rev()
            .try_fold(self.clone(), |seq, &i| seq.add_box(i))
    }

    pub fn apply(&self, w: &AffinePermutation) -> Option<Self> {
        self.apply_word(&w.reduced_word())
    }

    /// `D_other ⊆ D_self`.
    pub fn contains(&self, other: &Self) -> bool {
        self.base.iter().zip(&other.base).all(|(a, b)| a >= b)
    }

    /// `|D_self / D_inner|`, assuming containment.
    pub fn cells_over(&self, inner: &Self) -> usize {
        self.base.iter().zip(&inner.base).map(|(a, b)| (a - b) as usize).sum()
    }
}

/// The shape `lambda/d/mu`, i.e. the region between `mu[0]` and `lambda[d]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawShape", into = "RawShape")]
pub struct CylindricShape {
    ty: CylType,
    lambda: Partition,
    d: usize,
    mu: Partition,
}

#[derive(Serialize, Deserialize)]
struct RawShape {
    m: usize,
    n: usize,
    lambda: Vec<usize>,
    d: usize,
    mu: Vec<usize>,
}

impl TryFrom<RawShape> for CylindricShape {
    type Error = Error;

    fn try_from(raw: RawShape) -> Result<Self> {
        Self::new(
            CylType::new(raw.m, raw.n)?,
            Partition::new(raw.lambda)?,
            raw.d,
            Partition::new(raw.mu)?,
        )
    }
}

impl From<CylindricShape> for RawShape {
    fn from(s: CylindricShape) -> Self {
        RawShape {
            m: s.ty.m,
            n: s.ty.n,
            lambda: s.lambda.parts().to_vec(),
            d: s.d,
            mu: s.mu.parts().to_vec(),
        }
    }
}

impl CylindricShape {
    pub fn new(ty: CylType, lambda: Partition, d: usize, mu: Partition) -> Result<Self> {
        let outer = PeriodicSequence::from_partition(ty, &lambda, d as i64)?;
        let inner = PeriodicSequence::from_partition(ty, &mu, 0)?;
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{mu}[0] is not contained in {lambda}[{d}]")));
        }
        Ok(Self { ty, lambda, d, mu })
    }

    /// `lambda[r]/mu[s]`, normalized to `lambda/(r - s)/mu`.
    pub fn from_offsets(ty: CylType, lambda: Partition, r: i64, mu: Partition, s: i64) -> Result<Self> {
        if r < s {
            return Err(Error::InvalidShape(format!("offset {r} below inner offset {s}")));
        }
        Self::new(ty, lambda, (r - s) as usize, mu)
    }

    /// The shape between two nested boundaries, normalized.
    pub fn between(outer: &PeriodicSequence, inner: &PeriodicSequence) -> Result<Self> {
        let (lambda, r) = outer.to_partition();
        let (mu, s) = inner.to_partition();
        Self::from_offsets(outer.ty, lambda, r, mu, s)
    }

    /// The straight shape `nu/e/∅`.
    pub fn straight(ty: CylType, nu: Partition, e: usize) -> Result<Self> {
        Self::new(ty, nu, e, Partition::empty())
    }

    pub fn ty(&self) -> CylType {
        self.ty
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn outer(&self) -> PeriodicSequence {
        PeriodicSequence::from_partition(self.ty, &self.lambda, self.d as i64).expect("validated")
    }

    pub fn inner(&self) -> PeriodicSequence {
        PeriodicSequence::from_partition(self.ty, &self.mu, 0).expect("validated")
    }

    /// `|lambda| - |mu| + n d`.
    pub fn cell_count(&self) -> usize {
        self.lambda.size() + self.ty.n * self.d - self.mu.size()
    }

    /// Cells `(i, j)` with `1 <= i <= m`, one per cylinder cell.
    pub fn cells(&self) -> Vec<(i64, i64)> {
        let (outer, inner) = (self.outer(), self.inner());
        (1..=self.ty.m as i64)
            .flat_map(|i| (inner.at(i) + 1..=outer.at(i)).map(move |j| (i, j)))
            .collect()
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        let (outer, inner) = (self.outer(), self.inner());
        (1..=self.ty.m as i64).map(|i| (outer.at(i) - inner.at(i)) as usize).collect()
    }

    /// Heights of the `n - m` distinct columns.
    pub fn column_heights(&self) -> Vec<usize> {
        let (outer, inner) = (self.outer(), self.inner());
        let m = self.ty.m as i64;
        let w = self.ty.width() as i64;
        let reach = self.cell_count() as i64 + 2;
        let span = m * (reach / w.max(1) + 2) + m;
        (1..=w)
            .map(|c| {
                (-span..=span)
                    .filter(|&i| inner.at(i) < c && c <= outer.at(i))
                    .count()
            })
            .collect()
    }

    /// Rows of length at most `n - m` and columns of height at most `m`.
    pub fn is_toric(&self) -> bool {
        self.row_lengths().iter().all(|&r| r <= self.ty.width())
            && self.column_heights().iter().all(|&c| c <= self.ty.m)
    }

    /// The element `w` with `A_w (mu[0]) = lambda[d]`; its Stanley function is
    /// the cylindric skew Schur function of this shape.
    pub fn skew_word(&self) -> AffinePermutation {
        skew_element(&self.outer(), &self.inner()).expect("nested boundaries")
    }

    /// Plain-text diagram: one line per row `1..=m`, each cell shows its
    /// diagonal.
    pub fn diagram(&self) -> String {
        let (outer, inner) = (self.outer(), self.inner());
        let n = self.ty.n as i64;
        let cellw = if n > 10 { 4 } else { 3 };
        let rows: Vec<i64> = (1..=self.ty.m as i64).collect();
        let left = rows.iter().map(|&i| inner.at(i) + 1).min().unwrap_or(0);
        let mut out = String::new();
        for &i in &rows {
            for _ in left..=inner.at(i) {
                out.push_str(&" ".repeat(cellw));
            }
            for j in inner.at(i) + 1..=outer.at(i) {
                let diag = (j - i).rem_euclid(n);
                if cellw == 4 {
                    let _ = write!(out, "[{diag:>2}]");
                } else {
                    let _ = write!(out, "[{diag}]");
                }
            }
            let trimmed = out.trim_end().len();
            out.truncate(trimmed);
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Display for CylindricShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}/{}", self.lambda, self.d, self.mu)
    }
}

/// Peels removable boxes (lowest row first) from `outer` down to `inner`,
/// returning `w` with `A_w inner = outer`.
pub fn skew_element(outer: &PeriodicSequence, inner: &PeriodicSequence) -> Option<AffinePermutation> {
    if !outer.contains(inner) {
        return None;
    }
    let ty = outer.ty;
    let n = ty.n as i64;
    let mut cur = outer.clone();
    let mut letters = Vec::with_capacity(outer.cells_over(inner));
    while cur != *inner {
        let p = (1..=ty.m as i64).find(|&p| cur.at(p + 1) < cur.at(p) && cur.at(p) > inner.at(p))?;
        letters.push((cur.at(p) - p).rem_euclid(n) as usize);
        cur.base[p as usize - 1] -= 1;
    }
    Some(GeneratorWord::new(ty.n, letters).expect("letters reduced mod n").to_permutation())
}

/// `maxr(w) = |D(w)|`.
pub fn maxr(w: &AffinePermutation) -> usize {
    w.max_cyclic_factor(Side::Right, Direction::Decreasing).len()
}

/// `maxc(w) = |U(w)|`.
pub fn maxc(w: &AffinePermutation) -> usize {
    w.max_cyclic_factor(Side::Right, Direction::Increasing).len()
}

/// Membership in `A_{(n-m,m)}`: 321-avoiding, `maxc <= m`, `maxr <= n - m`.
pub fn in_a(w: &AffinePermutation, ty: CylType) -> bool {
    w.n() == ty.n && w.is_321_avoiding() && maxc(w) <= ty.m && maxr(w) <= ty.width()
}

/// Membership in `A^0_{(n-m,m)}`.
pub fn in_a0(w: &AffinePermutation, ty: CylType) -> bool {
    w.is_grassmannian(0) && in_a(w, ty)
}

/// `phi(w) = A_w (∅/0/∅)`.
pub fn phi(w: &AffinePermutation, ty: CylType) -> Result<CylindricShape> {
    if !in_a0(w, ty) {
        return Err(Error::Precondition(format!("{w} is not in A^0 of type ({},{})", ty.m, ty.n)));
    }
    let empty = PeriodicSequence::empty(ty);
    let outer = empty
        .apply(w)
        .ok_or_else(|| Error::Internal(format!("A_{w} annihilates the empty shape")))?;
    CylindricShape::between(&outer, &empty)
}

/// Inverse of [`phi`] on straight shapes `nu/e/∅`.
pub fn phi_inv(shape: &CylindricShape) -> Result<AffinePermutation> {
    if !shape.mu.is_empty() {
        return Err(Error::Precondition(format!("{shape} is not a straight shape")));
    }
    Ok(shape.skew_word())
}

/// `r_m = u_{[-m,-1]} d_{[0,n-m-1]}`.
pub fn ribbon_r(ty: CylType) -> AffinePermutation {
    let (m, n) = (ty.m, ty.n);
    let letters: Vec<usize> = (n - m..n).chain((0..n - m).rev()).collect();
    GeneratorWord::new(n, letters).expect("letters below n").to_permutation()
}

/// `w = w0 r_m^d` with `d` the number of `s_{n-m}` in a reduced word of `w`.
pub fn ribbon_decomposition(w: &AffinePermutation, ty: CylType) -> Result<(AffinePermutation, usize)> {
    if !in_a0(w, ty) {
        return Err(Error::Precondition(format!("{w} is not in A^0 of type ({},{})", ty.m, ty.n)));
    }
    let d = w.reduced_word().count(ty.n - ty.m);
    let r_inv = ribbon_r(ty).inverse();
    let mut w0 = w.clone();
    for _ in 0..d {
        w0 = w0.compose(&r_inv);
    }
    if w0.length() + d * ty.n != w.length() || w0.reduced_word().count(ty.n - ty.m) != 0 {
        return Err(Error::Internal(format!("ribbon decomposition of {w} failed")));
    }
    Ok((w0, d))
}

/// Every valid shape `lambda/d/mu` with at most `max_cells` cells.
pub fn shapes_up_to(ty: CylType, max_cells: usize) -> Vec<CylindricShape> {
    let box_parts = partitions_in_box(ty.m, ty.n);
    let mut out = Vec::new();
    for lambda in &box_parts {
        for mu in &box_parts {
            for d in 0..=max_cells / ty.n + 1 {
                let cells = (lambda.size() + ty.n * d) as i64 - mu.size() as i64;
                if cells < 0 || cells as usize > max_cells {
                    continue;
                }
                if let Ok(s) = CylindricShape::new(ty, lambda.clone(), d, mu.clone()) {
                    out.push(s);
                }
            }
        }
    }
    out.sort_by_key(|s| (s.cell_count(), s.d, s.lambda.clone(), s.mu.clone()));
    out
}

/// Every straight shape `nu/e/∅` with at most `max_cells` cells.
pub fn straight_shapes_up_to(ty: CylType, max_cells: usize) -> Vec<CylindricShape> {
    shapes_up_to(ty, max_cells)
        .into_iter()
        .filter(|s| s.mu.is_empty())
        .collect()
}

/// A cylindric semistandard tableau, stored on the representative cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylTableau {
    shape: CylindricShape,
    entries: BTreeMap<(i64, i64), usize>,
}

impl CylTableau {
    pub fn shape(&self) -> &CylindricShape {
        &self.shape
    }

    /// Entry of any cell of the diagram, following the cylinder identification.
    pub fn entry(&self, i: i64, j: i64) -> Option<usize> {
        let m = self.shape.ty.m as i64;
        let w = self.shape.ty.width() as i64;
        let q = (i - 1).div_euclid(m);
        self.entries.get(&(i - q * m, j + q * w)).copied()
    }

    pub fn entries(&self) -> &BTreeMap<(i64, i64), usize> {
        &self.entries
    }

    /// Multiplicities of `1, ..., nvars`.
    pub fn weight(&self, nvars: usize) -> Vec<usize> {
        let mut out = vec![0; nvars];
        for &v in self.entries.values() {
            out[v - 1] += 1;
        }
        out
    }

    /// Rows weakly increase, columns strictly increase, across the seam too.
    pub fn is_semistandard(&self) -> bool {
        self.entries.iter().all(|(&(i, j), &v)| {
            self.entry(i, j + 1).map_or(true, |r| v <= r) && self.entry(i + 1, j).map_or(true, |b| v < b)
        })
    }
}

/// Horizontal strips `beta / cur` of a given size inside `outer`.
fn cylindric_strips(cur: &PeriodicSequence, outer: &PeriodicSequence, size: usize) -> Vec<PeriodicSequence> {
    let m = cur.ty.m;
    let caps: Vec<i64> = (1..=m as i64)
        .map(|i| outer.at(i).min(cur.at(i - 1)) - cur.at(i))
        .collect();
    let mut out = Vec::new();
    fn rec(k: usize, rest: i64, caps: &[i64], cur: &PeriodicSequence, next: &mut PeriodicSequence, out: &mut Vec<PeriodicSequence>) {
        if k == caps.len() {
            if rest == 0 {
                out.push(next.clone());
            }
            return;
        }
        if caps[k..].iter().map(|&c| c.max(0)).sum::<i64>() < rest {
            return;
        }
        for add in 0..=caps[k].min(rest) {
            next.base[k] = cur.base[k] + add;
            rec(k + 1, rest - add, caps, cur, next, out);
        }
        next.base[k] = cur.base[k];
    }
    if caps.iter().any(|&c| c < 0) {
        return out;
    }
    let mut next = cur.clone();
    rec(0, size as i64, &caps, cur, &mut next, &mut out);
    out
}

/// Number of cylindric tableaux of the shape with content `alpha`.
pub fn count_cylindric_tableaux(shape: &CylindricShape, alpha: &[usize]) -> i64 {
    let (outer, inner) = (shape.outer(), shape.inner());
    if alpha.iter().sum::<usize>() != shape.cell_count() {
        return 0;
    }
    let mut memo = std::collections::HashMap::new();
    fn go(
        cur: PeriodicSequence,
        k: usize,
        outer: &PeriodicSequence,
        alpha: &[usize],
        memo: &mut std::collections::HashMap<(PeriodicSequence, usize), i64>,
    ) -> i64 {
        if k == alpha.len() {
            return i64::from(cur == *outer);
        }
        if let Some(&v) = memo.get(&(cur.clone(), k)) {
            return v;
        }
        let mut total = 0i64;
        for next in cylindric_strips(&cur, outer, alpha[k]) {
            total = crate::error::add_coeff(total, go(next, k + 1, outer, alpha, memo));
        }
        memo.insert((cur, k), total);
        total
    }
    go(inner, 0, &outer, alpha, &mut memo)
}

/// Every cylindric tableau of the shape with entries in `1..=nvars`.
pub fn cylindric_tableaux(shape: &CylindricShape, nvars: usize, cap: usize) -> Result<Vec<CylTableau>> {
    check_cap("cells", shape.cell_count(), cap)?;
    let (outer, inner) = (shape.outer(), shape.inner());
    let mut out = Vec::new();
    fn rec(
        cur: &PeriodicSequence,
        k: usize,
        nvars: usize,
        outer: &PeriodicSequence,
        entries: &mut BTreeMap<(i64, i64), usize>,
        shape: &CylindricShape,
        out: &mut Vec<CylTableau>,
    ) {
        if cur == outer {
            out.push(CylTableau {
                shape: shape.clone(),
                entries: entries.clone(),
            });
            return;
        }
        if k > nvars {
            return;
        }
        for size in 0..=outer.cells_over(cur) {
            for next in cylindric_strips(cur, outer, size) {
                let added: Vec<(i64, i64)> = (1..=cur.ty.m as i64)
                    .flat_map(|i| (cur.at(i) + 1..=next.at(i)).map(move |j| (i, j)))
                    .collect();
                for &c in &added {
                    entries.insert(c, k);
                }
                rec(&next, k + 1, nvars, outer, entries, shape, out);
                for c in &added {
                    entries.remove(c);
                }
            }
        }
    }
    rec(&inner, 1, nvars, &outer, &mut BTreeMap::new(), shape, &mut out);
    Ok(out)
}

/// `s_{lambda/d/mu}(x_1, ..., x_N)`.
pub fn cylindric_schur_poly(shape: &CylindricShape, nvars: usize) -> Result<SymmetricPolynomial> {
    check_cap("cells", shape.cell_count(), DEFAULT_CELL_CAP)?;
    Ok(SymmetricPolynomial::from_dominant_coefficients(nvars, shape.cell_count(), |alpha| {
        count_cylindric_tableaux(shape, alpha)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(m: usize, n: usize) -> CylType {
        CylType::new(m, n).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn word(n: usize, s: &str) -> AffinePermutation {
        GeneratorWord::parse(n, s).unwrap().to_permutation()
    }

    /// Every filling of the representative cells, filtered by the tableau rules.
    fn brute_tableaux(shape: &CylindricShape, nvars: usize) -> usize {
        let cells = shape.cells();
        let total = (nvars as u64).pow(cells.len() as u32);
        (0..total)
            .filter(|&code| {
                let mut x = code;
                let mut entries = BTreeMap::new();
                for &c in &cells {
                    entries.insert(c, (x % nvars as u64) as usize + 1);
                    x /= nvars as u64;
                }
                CylTableau {
                    shape: shape.clone(),
                    entries,
                }
                .is_semistandard()
            })
            .count()
    }

    #[test]
    fn shape_validation() {
        let t = ty(3, 6);
        assert!(CylindricShape::new(t, p(&[2, 1]), 1, p(&[2, 1])).is_ok());
        assert!(CylindricShape::new(t, p(&[]), 0, p(&[])).is_ok());
        assert!(CylindricShape::new(t, p(&[1]), 0, p(&[2])).is_err());
        assert!(CylindricShape::new(t, p(&[4]), 0, p(&[])).is_err());
        assert!(CylType::new(3, 3).is_err());
    }

    #[test]
    fn cell_counts() {
        let t = ty(3, 6);
        let s = CylindricShape::new(t, p(&[2, 1]), 1, p(&[])).unwrap();
        assert_eq!(s.cell_count(), 9);
        assert_eq!(s.cells().len(), 9);
        let s = CylindricShape::new(t, p(&[2, 1]), 1, p(&[2, 1])).unwrap();
        assert_eq!(s.cell_count(), 6);
        assert_eq!(s.cells().len(), 6);
        let s = CylindricShape::new(t, p(&[2, 1]), 0, p(&[2, 1])).unwrap();
        assert_eq!(s.cell_count(), 0);
    }

    #[test]
    fn sequence_round_trip() {
        let t = ty(3, 7);
        for lam in partitions_in_box(3, 7) {
            for r in -3..4 {
                let seq = PeriodicSequence::from_partition(t, &lam, r).unwrap();
                assert_eq!(seq.to_partition(), (lam.clone(), r));
            }
        }
    }

    #[test]
    fn add_box_examples() {
        let t = ty(3, 6);
        let empty = PeriodicSequence::empty(t);
        let one = empty.add_box(0).unwrap();
        assert_eq!(one.to_partition(), (p(&[1]), 0));
        assert!(empty.add_box(1).is_none());
        let inner = PeriodicSequence::from_partition(t, &p(&[2, 1]), 0).unwrap();
        let outer = inner.apply_word(&GeneratorWord::parse(6, "531420").unwrap()).unwrap();
        assert_eq!(outer.to_partition(), (p(&[2, 1]), 1));
        for i in 0..6 {
            if let Some(next) = one.add_box(i) {
                assert_eq!(next.remove_box(i), Some(one.clone()));
            }
        }
    }

    #[test]
    fn toric_examples() {
        let t = ty(3, 6);
        for nu in partitions_in_box(3, 6) {
            assert!(CylindricShape::straight(t, nu.clone(), 0).unwrap().is_toric());
            assert!(!CylindricShape::straight(t, nu, 1).unwrap().is_toric());
        }
        let s = CylindricShape::new(t, p(&[2, 1]), 1, p(&[2, 1])).unwrap();
        assert_eq!(s.row_lengths(), vec![2, 2, 2]);
        assert_eq!(s.column_heights(), vec![2, 2, 2]);
        assert!(s.is_toric());
    }

    #[test]
    fn phi_examples() {
        let t = ty(3, 6);
        assert_eq!(phi(&AffinePermutation::identity(6), t).unwrap(), CylindricShape::straight(t, p(&[]), 0).unwrap());
        let alpha = word(6, "531420").compose(&word(6, "510"));
        assert_eq!(phi(&alpha, t).unwrap(), CylindricShape::straight(t, p(&[2, 1]), 1).unwrap());
        assert_eq!(phi(&word(6, "510"), t).unwrap(), CylindricShape::straight(t, p(&[2, 1]), 0).unwrap());
        assert!(phi(&word(3, "010"), ty(1, 3)).is_err());
    }

    #[test]
    fn skew_word_examples() {
        let t = ty(3, 6);
        let s = CylindricShape::new(t, p(&[2, 1]), 1, p(&[2, 1])).unwrap();
        assert_eq!(s.skew_word(), word(6, "531420"));
        let lam = CylindricShape::new(t, p(&[3, 1]), 0, p(&[3, 1])).unwrap();
        assert!(lam.skew_word().is_identity());
    }

    #[test]
    fn ribbon_examples() {
        assert_eq!(ribbon_r(ty(3, 6)), word(6, "345210"));
        assert_eq!(ribbon_r(ty(1, 2)), word(2, "10"));
        let r = ribbon_r(ty(2, 4));
        assert_eq!(r, word(4, "2310"));
        assert!(r.is_grassmannian(0) && r.length() == 4);
        let t = ty(3, 6);
        assert_eq!(ribbon_decomposition(&ribbon_r(t), t).unwrap(), (AffinePermutation::identity(6), 1));
        let alpha = word(6, "531420").compose(&word(6, "510"));
        let (w0, d) = ribbon_decomposition(&alpha, t).unwrap();
        assert_eq!(d, 1);
        assert_eq!(w0, phi_inv(&CylindricShape::straight(t, p(&[2, 1]), 0).unwrap()).unwrap());
    }

    #[test]
    fn in_a_examples() {
        let t = ty(3, 6);
        assert!(in_a(&word(6, "531420"), t));
        assert!(!in_a(&word(6, "3210"), t));
        assert!(!in_a(&word(6, "010"), t));
    }

    #[test]
    fn tableaux_match_brute_force() {
        for (m, n, lam, d, mu) in [
            (2, 4, vec![1], 1, vec![2]),
            (2, 4, vec![2, 1], 0, vec![1]),
            (2, 5, vec![1], 1, vec![1, 1]),
            (3, 6, vec![2, 1], 1, vec![2, 1]),
            (1, 3, vec![], 1, vec![]),
        ] {
            let s = CylindricShape::new(ty(m, n), p(&lam), d, p(&mu)).unwrap();
            for nvars in 1..=3 {
                let all = cylindric_tableaux(&s, nvars, 20).unwrap();
                assert!(all.iter().all(CylTableau::is_semistandard));
                assert_eq!(all.len(), brute_tableaux(&s, nvars), "{s} N={nvars}");
                let poly = cylindric_schur_poly(&s, nvars).unwrap();
                let mut by_weight: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
                for t in &all {
                    *by_weight.entry(t.weight(nvars)).or_default() += 1;
                }
                for (wt, c) in by_weight {
                    assert_eq!(poly.coeff_of_exponent(&wt), c);
                }
            }
        }
    }

    #[test]
    fn small_polynomials() {
        let t = ty(3, 6);
        let empty = CylindricShape::straight(t, p(&[]), 0).unwrap();
        assert_eq!(cylindric_schur_poly(&empty, 3).unwrap(), SymmetricPolynomial::one(3));
        let one = CylindricShape::straight(t, p(&[1]), 0).unwrap();
        assert_eq!(cylindric_schur_poly(&one, 2).unwrap(), SymmetricPolynomial::monomial(2, p(&[1])));
    }

    #[test]
    fn diagram_prints_diagonals() {
        let s = CylindricShape::new(ty(3, 6), p(&[2, 1]), 1, p(&[2, 1])).unwrap();
        let text = s.diagram();
        assert_eq!(text.lines().count(), 3);
        assert_eq!(text.matches('[').count(), 6);
    }

    #[test]
    fn json_round_trip() {
        let s = CylindricShape::new(ty(3, 6), p(&[2, 1]), 1, p(&[2, 1])).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"m":3,"n":6,"lambda":[2,1],"d":1,"mu":[2,1]}"#);
        assert_eq!(serde_json::from_str::<CylindricShape>(&text).unwrap(), s);
        assert!(serde_json::from_str::<CylindricShape>(r#"{"m":3,"n":6,"lambda":[1],"d":0,"mu":[2]}"#).is_err());
    }
}
