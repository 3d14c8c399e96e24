//! The affine symmetric group in window notation.
//!
//! An element is a bijection `w: Z -> Z` with `w(i + n) = w(i) + n` and
//! `w(1) + ... + w(n) = n(n + 1)/2`, stored by its window `[w(1), ..., w(n)]`.
//! Right multiplication by `s_i` swaps the values at positions `i, i + 1`;
//! left multiplication swaps the values congruent to `i` and `i + 1`.
//! Words are read left to right, so `531420` is `s_5 s_3 s_1 s_4 s_2 s_0`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation")]
pub struct AffinePermutation {
    n: usize,
    window: Vec<i64>,
}

#[derive(Deserialize)]
struct RawPermutation {
    n: usize,
    window: Vec<i64>,
}

impl TryFrom<RawPermutation> for AffinePermutation {
    type Error = Error;

    fn try_from(raw: RawPermutation) -> Result<Self> {
        Self::from_window(raw.n, raw.window)
    }
}

pub(crate) fn check_period(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidPeriod(n))
    } else {
        Ok(())
    }
}

impl AffinePermutation {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            window: (1..=n as i64).collect(),
        }
    }

    pub fn from_window(n: usize, window: Vec<i64>) -> Result<Self> {
        check_period(n)?;
        let invalid = |reason: &str| Error::InvalidWindow {
            window: window.clone(),
            reason: reason.to_string(),
        };
        if window.len() != n {
            return Err(invalid("window length differs from the period"));
        }
        let ni = n as i64;
        let mut seen = vec![false; n];
        for &v in &window {
            let r = v.rem_euclid(ni) as usize;
            if seen[r] {
                return Err(invalid("residues are not distinct"));
            }
            seen[r] = true;
        }
        if window.iter().sum::<i64>() != ni * (ni + 1) / 2 {
            return Err(invalid("window sum is not n(n+1)/2"));
        }
        Ok(Self { n, window })
    }

    /// The simple reflection `s_i`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        check_period(n)?;
        if i >= n {
            return Err(Error::InvalidLetter { letter: i, n });
        }
        Ok(Self::identity(n).mul_s(i))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `w(i)` for any integer position.
    pub fn value(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let q = (i - 1).div_euclid(n);
        let r = (i - 1).rem_euclid(n);
        self.window[r as usize] + q * n
    }

    /// `w^{-1}(v)` for any integer value.
    pub fn position_of(&self, v: i64) -> i64 {
        let n = self.n as i64;
        let r = v.rem_euclid(n);
        let idx = self
            .window
            .iter()
            .position(|&x| x.rem_euclid(n) == r)
            .expect("window residues form a complete system");
        idx as i64 + 1 + v - self.window[idx]
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().zip(1..).all(|(&v, i)| v == i)
    }

    /// Largest `|w(i) - i|`.
    pub fn max_displacement(&self) -> i64 {
        self.window
            .iter()
            .zip(1..)
            .map(|(&v, i)| (v - i).abs())
            .max()
            .unwrap_or(0)
    }

    /// Coxeter length, via `sum_{1 <= i < j <= n} |floor((w(j) - w(i)) / n)|`.
    pub fn length(&self) -> usize {
        let n = self.n as i64;
        let mut total = 0i64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                total += (self.window[j] - self.window[i]).div_euclid(n).abs();
            }
        }
        total as usize
    }

    /// `w * s_i`.
    pub fn mul_s(&self, i: usize) -> Self {
        debug_assert!(i < self.n);
        let mut window = self.window.clone();
        if i == 0 {
            let n = self.n as i64;
            let first = window[0];
            window[0] = window[self.n - 1] - n;
            window[self.n - 1] = first + n;
        } else {
            window.swap(i - 1, i);
        }
        Self { n: self.n, window }
    }

    /// `s_i * w`.
    pub fn s_mul(&self, i: usize) -> Self {
        debug_assert!(i < self.n);
        let n = self.n as i64;
        let lo = i as i64;
        let hi = (lo + 1) % n;
        let window = self
            .window
            .iter()
            .map(|&v| match v.rem_euclid(n) {
                r if r == lo => v + 1,
                r if r == hi => v - 1,
                _ => v,
            })
            .collect();
        Self { n: self.n, window }
    }

    /// Composition `(self * other)(i) = self(other(i))`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::PeriodMismatch(self.n, other.n));
        }
        Ok(self.compose(other))
    }

    pub(crate) fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let window = other.window.iter().map(|&v| self.value(v)).collect();
        Self { n: self.n, window }
    }

    pub fn inverse(&self) -> Self {
        let window = (1..=self.n as i64).map(|v| self.position_of(v)).collect();
        Self { n: self.n, window }
    }

    /// `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let i = i as i64;
        self.value(i) > self.value(i + 1)
    }

    /// `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let i = i as i64;
        self.position_of(i) > self.position_of(i + 1)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.has_left_descent(i)).collect()
    }

    /// A reduced word, peeling the smallest right descent each time.
    pub fn reduced_word(&self) -> GeneratorWord {
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (0..self.n).find(|&i| w.has_right_descent(i)) {
            letters.push(i);
            w = w.mul_s(i);
        }
        letters.reverse();
        GeneratorWord { n: self.n, letters }
    }

    /// All reduced words, refusing elements longer than `cap`.
    pub fn enumerate_reduced_words(&self, cap: usize) -> Result<Vec<GeneratorWord>> {
        check_cap("length", self.length(), cap)?;
        let mut memo: HashMap<AffinePermutation, Vec<Vec<usize>>> = HashMap::new();
        let words = reduced_words_rec(self, &mut memo);
        let mut out: Vec<GeneratorWord> = words
            .into_iter()
            .map(|letters| GeneratorWord { n: self.n, letters })
            .collect();
        out.sort();
        Ok(out)
    }

    /// No `i < j < l` with `w(i) > w(j) > w(l)`.
    pub fn is_321_avoiding(&self) -> bool {
        let span = 2 * self.max_displacement() + 1;
        for i in 1..=self.n as i64 {
            let wi = self.value(i);
            for j in i + 1..i + span {
                let wj = self.value(j);
                if wj >= wi {
                    continue;
                }
                if (j + 1..j + span).any(|l| self.value(l) < wj) {
                    return false;
                }
            }
        }
        true
    }

    /// `p` is the unique right descent; the identity counts for every `p`.
    pub fn is_grassmannian(&self, p: usize) -> bool {
        let d = self.right_descents();
        d.is_empty() || d == [p % self.n]
    }

    /// `c_i(w)`, the number of `j < i` with `w(j) > w(i)`.
    pub fn c_stat(&self, i: i64) -> usize {
        let wi = self.value(i);
        let start = wi + 1 - self.max_displacement();
        (start..i).filter(|&j| self.value(j) > wi).count()
    }

    /// Conjugation by the shift `i -> i + 1`, sending `s_i` to `s_{i+t}`.
    pub fn rotate(&self, t: i64) -> Self {
        let window = (1..=self.n as i64).map(|j| self.value(j - t) + t).collect();
        Self { n: self.n, window }
    }

    /// The unique maximal cyclic set `J` with `w = v d_J` (or the other
    /// side/direction combinations) and lengths adding.
    pub fn max_cyclic_factor(&self, side: Side, direction: Direction) -> CyclicSet {
        let len = self.length();
        let mut best: Option<CyclicSet> = None;
        for mask in 0..(1u64 << self.n) - 1 {
            let size = mask.count_ones() as usize;
            if size > len || best.as_ref().is_some_and(|b| b.len() >= size) {
                continue;
            }
            let j = CyclicSet::from_mask(self.n, mask, direction);
            if self.has_cyclic_factor(&j, side) {
                best = Some(j);
            }
        }
        best.unwrap_or_else(|| CyclicSet::empty(self.n, direction))
    }

    /// Whether `J` (with its direction) is a length-additive factor on `side`.
    pub fn has_cyclic_factor(&self, j: &CyclicSet, side: Side) -> bool {
        let letters = j.word();
        match side {
            Side::Right => self.strip_right(letters.letters()).is_some(),
            Side::Left => self.strip_left(letters.letters()).is_some(),
        }
    }

    /// `x` with `self = s_{a_1} ... s_{a_k} x` and lengths adding.
    pub fn strip_left(&self, factor: &[usize]) -> Option<Self> {
        let mut x = self.clone();
        for &a in factor {
            if !x.has_left_descent(a) {
                return None;
            }
            x = x.s_mul(a);
        }
        Some(x)
    }

    /// `x` with `self = x s_{a_1} ... s_{a_k}` and lengths adding.
    pub fn strip_right(&self, factor: &[usize]) -> Option<Self> {
        let mut x = self.clone();
        for &a in factor.iter().rev() {
            if !x.has_right_descent(a) {
                return None;
            }
            x = x.mul_s(a);
        }
        Some(x)
    }

    /// Denton's maximal decomposition `w = d_{J_p} ... d_{J_1}`; returns
    /// `[J_1, ..., J_p]` and the partition of block sizes.
    pub fn maximal_cdd(&self) -> (Vec<CyclicSet>, Vec<usize>) {
        let mut blocks = Vec::new();
        let mut w = self.clone();
        while !w.is_identity() {
            let j = w.max_cyclic_factor(Side::Right, Direction::Decreasing);
            w = w.strip_right(j.word().letters()).expect("maximal factor is length-additive");
            blocks.push(j);
        }
        let sizes = blocks.iter().map(CyclicSet::len).collect();
        (blocks, sizes)
    }

    /// The conjugate of the block-size partition of a 0-Grassmannian
    /// element, read off as `(c_1(w), ..., c_n(w))`.
    pub(crate) fn grassmannian_conjugate_shape(&self) -> Vec<usize> {
        (1..=self.n as i64)
            .map(|i| self.c_stat(i))
            .take_while(|&c| c > 0)
            .collect()
    }
}

fn reduced_words_rec(
    w: &AffinePermutation,
    memo: &mut HashMap<AffinePermutation, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    if let Some(words) = memo.get(w) {
        return words.clone();
    }
    let mut out = Vec::new();
    for i in w.right_descents() {
        for mut word in reduced_words_rec(&w.mul_s(i), memo) {
            word.push(i);
            out.push(word);
        }
    }
    memo.insert(w.clone(), out.clone());
    out
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.window)
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// A word in the generators `s_0, ..., s_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWord")]
pub struct GeneratorWord {
    n: usize,
    letters: Vec<usize>,
}

#[derive(Deserialize)]
struct RawWord {
    n: usize,
    letters: Vec<usize>,
}

impl TryFrom<RawWord> for GeneratorWord {
    type Error = Error;

    fn try_from(raw: RawWord) -> Result<Self> {
        Self::new(raw.n, raw.letters)
    }
}

impl GeneratorWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        check_period(n)?;
        if let Some(&letter) = letters.iter().find(|&&l| l >= n) {
            return Err(Error::InvalidLetter { letter, n });
        }
        Ok(Self { n, letters })
    }

    /// Parses `5,3,1,4,2,0` or, when `n <= 10`, the compact `531420`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::Precondition(format!("cannot parse word {text:?}"));
        let letters = if text.is_empty() {
            Vec::new()
        } else if text.contains(',') || text.contains(' ') {
            text.split(|c| c == ',' || c == ' ')
                .filter(|s| !s.is_empty())
                .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        } else if n <= 10 {
            text.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?
        } else {
            vec![text.parse::<usize>().map_err(|_| bad())?]
        };
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The product `s_{i_1} ... s_{i_l}`.
    pub fn to_permutation(&self) -> AffinePermutation {
        self.letters
            .iter()
            .fold(AffinePermutation::identity(self.n), |w, &i| w.mul_s(i))
    }

    pub fn is_reduced(&self) -> bool {
        self.to_permutation().length() == self.len()
    }

    /// Applies `s_i -> s_{i+t}` letterwise.
    pub fn rotate(&self, t: i64) -> Self {
        let n = self.n as i64;
        let letters = self
            .letters
            .iter()
            .map(|&i| (i as i64 + t).rem_euclid(n) as usize)
            .collect();
        Self { n: self.n, letters }
    }

    pub fn concat(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { n: self.n, letters }
    }

    pub fn count(&self, letter: usize) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n <= 10 { "" } else { "," };
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Decreasing,
    Increasing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A proper subset `J` of `Z/nZ` together with a direction, standing for
/// the cyclically decreasing element `d_J` or increasing element `u_J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicSet {
    n: usize,
    mask: u64,
    direction: Direction,
}

impl CyclicSet {
    pub fn new(n: usize, members: &[usize], direction: Direction) -> Result<Self> {
        check_period(n)?;
        if n > 63 {
            return Err(Error::InvalidPeriod(n));
        }
        let mut mask = 0u64;
        for &i in members {
            if i >= n {
                return Err(Error::InvalidLetter { letter: i, n });
            }
            mask |= 1 << i;
        }
        if mask.count_ones() as usize == n {
            return Err(Error::FullCyclicSet(n));
        }
        Ok(Self { n, mask, direction })
    }

    pub fn empty(n: usize, direction: Direction) -> Self {
        Self {
            n,
            mask: 0,
            direction,
        }
    }

    pub(crate) fn from_mask(n: usize, mask: u64, direction: Direction) -> Self {
        debug_assert!((mask.count_ones() as usize) < n);
        Self { n, mask, direction }
    }

    /// The cyclic interval `[start, end]` reduced modulo `n`.
    pub fn interval(n: usize, start: i64, end: i64, direction: Direction) -> Result<Self> {
        let size = end - start + 1;
        if size < 0 {
            return Err(Error::Precondition(format!("empty interval [{start}, {end}] reversed")));
        }
        let members: Vec<usize> = (start..=end)
            .map(|i| i.rem_euclid(n as i64) as usize)
            .collect();
        if size as usize >= n {
            return Err(Error::FullCyclicSet(n));
        }
        Self::new(n, &members, direction)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.mask & (1 << i) != 0
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.contains(i)).collect()
    }

    /// Complement in `Z/nZ`, keeping the direction.
    pub fn complement(&self) -> Self {
        let full = (1u64 << self.n) - 1;
        Self {
            n: self.n,
            mask: full & !self.mask,
            direction: self.direction,
        }
    }

    pub fn with_direction(&self, direction: Direction) -> Self {
        Self {
            direction,
            ..self.clone()
        }
    }

    /// Same set, opposite direction; as elements `d_J^{-1} = u_J`.
    pub fn reversed(&self) -> Self {
        let direction = match self.direction {
            Direction::Decreasing => Direction::Increasing,
            Direction::Increasing => Direction::Decreasing,
        };
        self.with_direction(direction)
    }

    /// Maximal cyclic intervals `(start, size)` ordered by start.
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n)
            .filter(|&p| self.contains(p) && !self.contains((p + n - 1) % n))
            .map(|p| {
                let size = (0..n).take_while(|&k| self.contains((p + k) % n)).count();
                (p, size)
            })
            .collect()
    }

    /// Per interval `[p, q]`: `s_q ... s_p` when decreasing, `s_p ... s_q`
    /// when increasing.
    pub fn word(&self) -> GeneratorWord {
        let n = self.n;
        let mut letters = Vec::with_capacity(self.len());
        for (p, size) in self.intervals() {
            let block = (0..size).map(|k| (p + k) % n);
            match self.direction {
                Direction::Increasing => letters.extend(block),
                Direction::Decreasing => letters.extend(block.rev()),
            }
        }
        GeneratorWord { n, letters }
    }

    pub fn element(&self) -> AffinePermutation {
        self.word().to_permutation()
    }
}

/// Cyclic sets of one size with their words, cached per thread and per
/// `(n, size, direction)`.
pub(crate) fn cyclic_words(n: usize, size: usize, direction: Direction) -> Rc<Vec<(CyclicSet, Vec<usize>)>> {
    type Cache = RefCell<HashMap<(usize, usize, Direction), Rc<Vec<(CyclicSet, Vec<usize>)>>>>;
    thread_local! {
        static CACHE: Cache = RefCell::new(HashMap::new());
    }
    CACHE.with(|cache| {
        cache
            .borrow_mut()
            .entry((n, size, direction))
            .or_insert_with(|| {
                Rc::new(
                    cyclic_sets_of_size(n, size, direction)
                        .into_iter()
                        .map(|j| {
                            let word = j.word().letters().to_vec();
                            (j, word)
                        })
                        .collect(),
                )
            })
            .clone()
    })
}

/// Proper subsets of `Z/nZ` of a given size.
pub fn cyclic_sets_of_size(n: usize, size: usize, direction: Direction) -> Vec<CyclicSet> {
    if size >= n {
        return Vec::new();
    }
    (0..(1u64 << n) - 1)
        .filter(|m| m.count_ones() as usize == size)
        .map(|mask| CyclicSet::from_mask(n, mask, direction))
        .collect()
}

/// A partition whose parts are at most `k = n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KBoundedPartition {
    n: usize,
    parts: Vec<usize>,
}

impl KBoundedPartition {
    pub fn new(n: usize, mut parts: Vec<usize>) -> Result<Self> {
        check_period(n)?;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let bad = |reason: &str| Error::InvalidPartition {
            parts: parts.clone(),
            reason: reason.to_string(),
        };
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(bad("parts are not weakly decreasing"));
        }
        if parts.contains(&0) {
            return Err(bad("zero part"));
        }
        if parts.first().is_some_and(|&p| p >= n) {
            return Err(bad("part exceeds k = n - 1"));
        }
        Ok(Self { n, parts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The blocks `J_j = [-j + 1, lambda_j - j]`.
    pub fn blocks(&self) -> Vec<CyclicSet> {
        self.parts
            .iter()
            .zip(1i64..)
            .map(|(&p, j)| {
                CyclicSet::interval(self.n, 1 - j, p as i64 - j, Direction::Decreasing)
                    .expect("k-bounded parts give proper intervals")
            })
            .collect()
    }

    /// The reduced word `d_{J_p} ... d_{J_1}`; this is the naming used for
    /// affine Schur functions, e.g. `405210` for `(3,2,1)` at `n = 6`.
    pub fn canonical_word(&self) -> GeneratorWord {
        let mut letters = Vec::with_capacity(self.size());
        for block in self.blocks().iter().rev() {
            letters.extend_from_slice(block.word().letters());
        }
        GeneratorWord { n: self.n, letters }
    }

    /// The 0-Grassmannian element `d_{J_p} ... d_{J_1}`.
    pub fn to_grassmannian(&self) -> AffinePermutation {
        self.canonical_word().to_permutation()
    }

    /// Inverse of [`Self::to_grassmannian`], via the maximal decomposition.
    pub fn from_grassmannian(w: &AffinePermutation) -> Result<Self> {
        if !w.is_grassmannian(0) {
            return Err(Error::Precondition(format!("{w} is not 0-Grassmannian")));
        }
        let (_, sizes) = w.maximal_cdd();
        Self::new(w.n(), sizes)
    }
}

/// Conjugate of a partition given as a weakly decreasing slice.
pub(crate) fn conjugate(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|c| parts.iter().filter(|&&p| p >= c).count())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, s: &str) -> AffinePermutation {
        GeneratorWord::parse(n, s).unwrap().to_permutation()
    }

    fn brute_inversions(w: &AffinePermutation) -> usize {
        let span = 2 * w.max_displacement() + w.n() as i64 + 1;
        let mut count = 0;
        for i in 1..=w.n() as i64 {
            for j in i + 1..=i + span {
                if w.value(i) > w.value(j) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn identity_word() {
        let w = GeneratorWord::new(6, vec![]).unwrap().to_permutation();
        assert_eq!(w.window(), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(w.length(), 0);
    }

    #[test]
    fn single_generator_length() {
        let s0 = AffinePermutation::generator(4, 0).unwrap();
        assert_eq!(s0.window(), &[0, 2, 3, 5]);
        assert_eq!(s0.length(), 1);
        assert_eq!(brute_inversions(&s0), 1);
        assert!(s0.compose(&s0).is_identity());
    }

    #[test]
    fn example_word_is_reduced() {
        let w = word(6, "531420");
        assert_eq!(w.length(), 6);
        assert_eq!(brute_inversions(&w), 6);
    }

    #[test]
    fn decreasing_and_increasing_elements() {
        let j = CyclicSet::new(7, &[0, 1, 4, 6], Direction::Decreasing).unwrap();
        assert_eq!(j.word().letters(), &[4, 1, 0, 6]);
        assert_eq!(j.element().length(), 4);
        let u = j.with_direction(Direction::Increasing);
        assert_eq!(u.word().letters(), &[4, 6, 0, 1]);
        assert_eq!(j.element().inverse(), u.element());
        assert_eq!(
            CyclicSet::new(7, &[0, 1, 2, 3, 4, 5, 6], Direction::Decreasing),
            Err(Error::FullCyclicSet(7))
        );
    }

    #[test]
    fn window_validation() {
        assert!(AffinePermutation::from_window(3, vec![1, 2, 3]).is_ok());
        assert!(AffinePermutation::from_window(3, vec![1, 4, 3]).is_err());
        assert!(AffinePermutation::from_window(3, vec![2, 3, 4]).is_err());
        assert!(AffinePermutation::from_window(3, vec![1, 2]).is_err());
        assert!(AffinePermutation::from_window(1, vec![1]).is_err());
    }

    #[test]
    fn multiply_checks_period() {
        let a = AffinePermutation::identity(3);
        let b = AffinePermutation::identity(4);
        assert_eq!(a.multiply(&b), Err(Error::PeriodMismatch(3, 4)));
    }

    #[test]
    fn reduced_words_small() {
        let id = AffinePermutation::identity(5);
        let words = id.enumerate_reduced_words(10).unwrap();
        assert_eq!(words.len(), 1);
        assert!(words[0].is_empty());

        let w = word(4, "02");
        let words: Vec<_> = w
            .enumerate_reduced_words(10)
            .unwrap()
            .into_iter()
            .map(|w| w.letters().to_vec())
            .collect();
        assert_eq!(words, vec![vec![0, 2], vec![2, 0]]);

        let w = word(3, "10");
        let words = w.enumerate_reduced_words(10).unwrap();
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].letters(), &[1, 0]);

        let long = word(3, "0120120");
        assert!(matches!(
            long.enumerate_reduced_words(3),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn pattern_avoidance_examples() {
        assert!(!word(3, "010").is_321_avoiding());
        assert!(word(6, "531420").is_321_avoiding());
        assert!(AffinePermutation::identity(4).is_321_avoiding());
    }

    #[test]
    fn grassmannian_examples() {
        let v = word(6, "510");
        assert!(v.is_grassmannian(0));
        assert!(!v.is_grassmannian(3));
        assert!(word(6, "345210").is_grassmannian(0));
        assert!(AffinePermutation::identity(6).is_grassmannian(4));
    }

    #[test]
    fn cyclic_factor_examples() {
        let r3 = word(6, "345210");
        let j = r3.max_cyclic_factor(Side::Right, Direction::Decreasing);
        assert_eq!(j.members(), vec![0, 1, 2]);
        let id = AffinePermutation::identity(5);
        assert!(id
            .max_cyclic_factor(Side::Right, Direction::Decreasing)
            .is_empty());
        for members in [vec![0usize], vec![1, 2], vec![0, 3, 4]] {
            let j = CyclicSet::new(6, &members, Direction::Decreasing).unwrap();
            assert_eq!(
                j.element()
                    .max_cyclic_factor(Side::Right, Direction::Decreasing),
                j
            );
        }
    }

    #[test]
    fn maximal_decomposition_examples() {
        let (_, sizes) = word(6, "510").maximal_cdd();
        assert_eq!(sizes, vec![2, 1]);
        let (blocks, sizes) = AffinePermutation::identity(6).maximal_cdd();
        assert!(blocks.is_empty() && sizes.is_empty());
        let j = CyclicSet::new(6, &[1, 2, 4], Direction::Decreasing).unwrap();
        let (blocks, _) = j.element().maximal_cdd();
        assert_eq!(blocks, vec![j]);
    }

    #[test]
    fn kbounded_examples() {
        let lam = KBoundedPartition::new(6, vec![2, 1]).unwrap();
        assert_eq!(lam.canonical_word().letters(), &[5, 1, 0]);
        for i in 1..6 {
            let p = KBoundedPartition::new(6, vec![i]).unwrap();
            let expected: Vec<usize> = (0..i).rev().collect();
            assert_eq!(p.canonical_word().letters(), expected.as_slice());
        }
        assert!(KBoundedPartition::new(6, vec![])
            .unwrap()
            .to_grassmannian()
            .is_identity());
        assert!(KBoundedPartition::new(6, vec![6]).is_err());
        let back = KBoundedPartition::from_grassmannian(&lam.to_grassmannian()).unwrap();
        assert_eq!(back, lam);
    }

    #[test]
    fn c_statistic_examples() {
        let id = AffinePermutation::identity(4);
        assert!((-5..9).all(|i| id.c_stat(i) == 0));
        let s0 = AffinePermutation::generator(4, 0).unwrap();
        assert_eq!(s0.c_stat(1), 1);
        let w = word(6, "405210");
        let cs: Vec<usize> = (1..=6).map(|i| w.c_stat(i)).collect();
        assert!(cs.windows(2).all(|p| p[0] >= p[1]));
        assert_eq!(cs[5], 0);
    }

    #[test]
    fn rotation_matches_letters() {
        let w = word(6, "531420");
        let rotated = GeneratorWord::parse(6, "531420").unwrap().rotate(2);
        assert_eq!(rotated.letters(), &[1, 5, 3, 0, 4, 2]);
        assert_eq!(w.rotate(2), rotated.to_permutation());
        let s0 = AffinePermutation::generator(3, 0).unwrap();
        assert_eq!(s0.rotate(1), AffinePermutation::generator(3, 1).unwrap());
    }

    #[test]
    fn json_round_trip_validates() {
        let w = word(6, "531420");
        let text = serde_json::to_string(&w).unwrap();
        assert!(text.contains("\"window\""));
        let back: AffinePermutation = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<AffinePermutation>(r#"{"n":3,"window":[1,1,4]}"#).is_err());
        let g: GeneratorWord = serde_json::from_str(r#"{"n":4,"letters":[0,3]}"#).unwrap();
        assert_eq!(g.len(), 2);
        assert!(serde_json::from_str::<GeneratorWord>(r#"{"n":4,"letters":[4]}"#).is_err());
    }
}
