//! Symmetric polynomials in finitely many variables, stored in the monomial
//! basis, together with Schur and skew Schur polynomials and change of basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{add_coeff, mul_coeff, Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts are not weakly decreasing".into(),
            });
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `lambda_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        Self(crate::affine::conjugate(&self.0))
    }

    /// Containment of Young diagrams, `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Membership in `P_{mn}`: at most `m` parts, each at most `n - m`.
    pub fn fits(&self, m: usize, n: usize) -> bool {
        self.len() <= m && self.0.first().map_or(true, |&p| p + m <= n)
    }

    /// Complement in the `m x (n - m)` box, `lambda^vee`.
    pub fn complement(&self, m: usize, n: usize) -> Self {
        let parts = (1..=m).rev().map(|i| n - m - self.part(i)).collect();
        Self::new(parts).expect("complement of a fitting partition")
    }

    /// Padded to exactly `len` entries.
    pub(crate) fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(len.max(v.len()), 0);
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Partitions of `size` with at most `max_len` parts, each at most `max_part`,
/// in decreasing lexicographic order.
pub fn partitions(size: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn rec(rest: usize, max_len: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, max_len - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// All partitions in `P_{mn}`, by size then decreasing lex.
pub fn partitions_in_box(m: usize, n: usize) -> Vec<Partition> {
    (0..=m * (n - m))
        .flat_map(|s| partitions(s, m, n - m))
        .collect()
}

/// A homogeneous symmetric polynomial in `nvars` variables; `coeffs[lambda]`
/// is the coefficient of the monomial symmetric polynomial `m_lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPolynomial {
    nvars: usize,
    degree: usize,
    coeffs: BTreeMap<Partition, i64>,
}

impl SymmetricPolynomial {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        Self {
            nvars,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, Partition::empty())
    }

    /// `m_lambda`, or zero when `lambda` has more than `nvars` parts.
    pub fn monomial(nvars: usize, lambda: Partition) -> Self {
        let mut p = Self::zero(nvars, lambda.size());
        if lambda.len() <= nvars {
            p.coeffs.insert(lambda, 1);
        }
        p
    }

    /// Builds the polynomial from a function returning the coefficient of
    /// `x^alpha` at each dominant exponent `alpha`.
    pub fn from_dominant_coefficients(
        nvars: usize,
        degree: usize,
        mut coeff: impl FnMut(&[usize]) -> i64,
    ) -> Self {
        let mut p = Self::zero(nvars, degree);
        for lam in partitions(degree, nvars, degree) {
            let c = coeff(&lam.padded(nvars));
            if c != 0 {
                p.coeffs.insert(lam, c);
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    /// Coefficient of `x^alpha` for any exponent vector.
    pub fn coeff_of_exponent(&self, alpha: &[usize]) -> i64 {
        if alpha.len() > self.nvars && alpha[self.nvars..].iter().any(|&a| a > 0) {
            return 0;
        }
        let mut sorted: Vec<usize> = alpha.iter().copied().filter(|&a| a > 0).collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        self.coeff(&Partition(sorted))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `h_q^perp p`: the coefficient of `y^q` in `p(x_1, ..., x_{N-1}, y)`.
    pub fn skew_by_h(&self, q: usize) -> Result<Self> {
        if self.nvars == 0 || q > self.degree {
            return Err(Error::GradingMismatch(format!(
                "h_{q}^perp on degree {} in {} variables",
                self.degree, self.nvars
            )));
        }
        Ok(Self::from_dominant_coefficients(self.nvars - 1, self.degree - q, |beta| {
            let mut alpha = beta.to_vec();
            alpha.push(q);
            self.coeff_of_exponent(&alpha)
        }))
    }

    fn check_grading(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars || (self.degree != other.degree && !other.is_zero() && !self.is_zero()) {
            return Err(Error::GradingMismatch(format!(
                "({} vars, degree {}) vs ({} vars, degree {})",
                self.nvars, self.degree, other.nvars, other.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Self, sign: i64) -> Result<Self> {
        self.check_grading(other)?;
        let mut out = self.clone();
        if self.is_zero() {
            out.degree = other.degree;
        }
        for (lam, &c) in &other.coeffs {
            out.add_term(lam.clone(), mul_coeff(sign, c));
        }
        Ok(out)
    }

    pub fn scale(&self, factor: i64) -> Self {
        let mut out = Self::zero(self.nvars, self.degree);
        if factor != 0 {
            for (lam, &c) in &self.coeffs {
                out.coeffs.insert(lam.clone(), mul_coeff(c, factor));
            }
        }
        out
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: i64) {
        let entry = self.coeffs.entry(lambda.clone()).or_insert(0);
        *entry = add_coeff(*entry, c);
        if *entry == 0 {
            self.coeffs.remove(&lambda);
        }
    }

    /// Product with the full monomial expansion; used only by small checks.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::GradingMismatch("variable counts differ".into()));
        }
        let expand = |p: &Self| -> HashMap<Vec<usize>, i64> {
            let mut out = HashMap::new();
            for (lam, &c) in &p.coeffs {
                for perm in distinct_permutations(&lam.padded(p.nvars)) {
                    out.insert(perm, c);
                }
            }
            out
        };
        let (a, b) = (expand(self), expand(other));
        let degree = self.degree + other.degree;
        let mut out = Self::zero(self.nvars, degree);
        let mut dominant: HashMap<Vec<usize>, i64> = HashMap::new();
        for (ea, &ca) in &a {
            for (eb, &cb) in &b {
                let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if e.windows(2).all(|p| p[0] >= p[1]) {
                    let entry = dominant.entry(e).or_insert(0);
                    *entry = add_coeff(*entry, mul_coeff(ca, cb));
                }
            }
        }
        for (e, c) in dominant {
            if c != 0 {
                let parts = e.into_iter().filter(|&x| x > 0).collect();
                out.coeffs.insert(Partition(parts), c);
            }
        }
        Ok(out)
    }
}

/// All distinct rearrangements of a vector.
pub fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    loop {
        let Some(i) = (0..sorted.len().saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1]) else {
            break;
        };
        let j = (i + 1..sorted.len()).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

/// Number of chains `inner = s_0 ⊆ s_1 ⊆ ... ⊆ s_N = outer` of horizontal
/// strips with `|s_i / s_{i-1}| = content[i]`; both shapes padded to equal
/// length.
pub(crate) fn count_strip_chains(inner: &[usize], outer: &[usize], content: &[usize]) -> i64 {
    fn strips(cur: &[usize], outer: &[usize], size: usize, out: &mut Vec<Vec<usize>>) {
        fn rec(i: usize, rest: usize, cur: &[usize], outer: &[usize], next: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == cur.len() {
                if rest == 0 {
                    out.push(next.clone());
                }
                return;
            }
            let upper = if i == 0 { outer[0] } else { outer[i].min(cur[i - 1]) };
            if upper < cur[i] {
                return;
            }
            let tail_cap: usize = (i..cur.len())
                .map(|r| {
                    let up = if r == 0 { outer[0] } else { outer[r].min(cur[r - 1]) };
                    up.saturating_sub(cur[r])
                })
                .sum();
            if tail_cap < rest {
                return;
            }
            for add in 0..=(upper - cur[i]).min(rest) {
                next[i] = cur[i] + add;
                rec(i + 1, rest - add, cur, outer, next, out);
            }
            next[i] = cur[i];
        }
        let mut next = cur.to_vec();
        rec(0, size, cur, outer, &mut next, out);
    }
    fn go(
        cur: Vec<usize>,
        k: usize,
        outer: &[usize],
        content: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), i64>,
    ) -> i64 {
        if k == content.len() {
            return i64::from(cur == outer);
        }
        let remaining: usize = outer.iter().zip(&cur).map(|(o, c)| o - c).sum();
        if remaining != content[k..].iter().sum::<usize>() {
            return 0;
        }
        if let Some(&v) = memo.get(&(cur.clone(), k)) {
            return v;
        }
        let mut nexts = Vec::new();
        strips(&cur, outer, content[k], &mut nexts);
        let mut total = 0i64;
        for next in nexts {
            total = add_coeff(total, go(next, k + 1, outer, content, memo));
        }
        memo.insert((cur, k), total);
        total
    }
    debug_assert_eq!(inner.len(), outer.len());
    if inner.iter().zip(outer).any(|(a, b)| a > b) {
        return 0;
    }
    go(inner.to_vec(), 0, outer, content, &mut HashMap::new())
}

/// `s_lambda(x_1, ..., x_N)`.
pub fn schur_poly(lambda: &Partition, nvars: usize) -> SymmetricPolynomial {
    skew_schur_poly(lambda, &Partition::empty(), nvars).expect("empty inner shape")
}

/// `s_{lambda/mu}(x_1, ..., x_N)`.
pub fn skew_schur_poly(lambda: &Partition, mu: &Partition, nvars: usize) -> Result<SymmetricPolynomial> {
    if !lambda.contains(mu) {
        return Err(Error::InvalidShape(format!("{mu} is not contained in {lambda}")));
    }
    let rows = lambda.len();
    let (outer, inner) = (lambda.padded(rows), mu.padded(rows));
    let degree = lambda.size() - mu.size();
    Ok(SymmetricPolynomial::from_dominant_coefficients(nvars, degree, |alpha| {
        count_strip_chains(&inner, &outer, alpha)
    }))
}

/// Writes `p` in the Schur basis by peeling the lex-largest monomial; Schur
/// polynomials are unitriangular against monomials in dominance order.
pub fn expand_in_schur(p: &SymmetricPolynomial) -> BTreeMap<Partition, i64> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, &c)) = rest.coeffs.iter().next_back() {
        let lead = lead.clone();
        let s = schur_poly(&lead, p.nvars).scale(c);
        rest = rest.sub(&s).expect("same grading");
        out.insert(lead, c);
    }
    out
}

/// Evaluates `sum c_nu s_nu` in `nvars` variables.
pub fn schur_combination(nvars: usize, degree: usize, table: &BTreeMap<Partition, i64>) -> SymmetricPolynomial {
    let mut out = SymmetricPolynomial::zero(nvars, degree);
    for (nu, &c) in table {
        out = out.add(&schur_poly(nu, nvars).scale(c)).expect("same grading");
    }
    out
}

/// Littlewood-Richardson coefficient `c^lambda_{mu, nu}`, read off the Schur
/// expansion of `s_{lambda/mu}`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    let Ok(skew) = skew_schur_poly(lambda, mu, nu.size()) else {
        return 0;
    };
    expand_in_schur(&skew).get(nu).copied().unwrap_or(0)
}

/// The same coefficient counted as skew tableaux of shape `lambda/mu` and
/// content `nu` whose reverse reading word is a lattice word.
pub fn lr_coeff_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    let rows = lambda.len();
    let inner = mu.padded(rows);
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (inner[r]..lambda.part(r + 1)).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: HashMap<(usize, usize), usize> = HashMap::new();
    let mut counts = vec![0usize; nu.len() + 1];
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        nu: &Partition,
        grid: &mut HashMap<(usize, usize), usize>,
        counts: &mut Vec<usize>,
    ) -> i64 {
        if k == cells.len() {
            return i64::from((1..=nu.len()).all(|v| counts[v] == nu.part(v)));
        }
        let (r, c) = cells[k];
        let hi = grid.get(&(r, c + 1)).copied().unwrap_or(nu.len());
        let lo = if r > 0 { grid.get(&(r - 1, c)).map_or(1, |&v| v + 1) } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            if counts[v] >= nu.part(v) || (v > 1 && counts[v] + 1 > counts[v - 1]) {
                continue;
            }
            counts[v] += 1;
            grid.insert((r, c), v);
            total += rec(k + 1, cells, nu, grid, counts);
            grid.remove(&(r, c));
            counts[v] -= 1;
        }
        total
    }
    rec(0, &cells, nu, &mut grid, &mut counts)
}

/// Key of a cylindric Schur expansion: the shape `nu/e/∅`. Ordered by `e`,
/// then `|nu|`, then `nu` lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchurKey {
    pub partition: Partition,
    pub e: usize,
}

impl Ord for SchurKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.e, self.partition.size(), &self.partition).cmp(&(other.e, other.partition.size(), &other.partition))
    }
}

impl PartialOrd for SchurKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Signed integer coefficients keyed by `(nu, e)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    coeffs: BTreeMap<SchurKey, i64>,
}

#[derive(Serialize, Deserialize)]
struct SchurTerm {
    partition: Partition,
    e: usize,
    coeff: i64,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_schur_table(table: &BTreeMap<Partition, i64>) -> Self {
        let mut out = Self::new();
        for (nu, &c) in table {
            out.add(nu.clone(), 0, c);
        }
        out
    }

    pub fn add(&mut self, partition: Partition, e: usize, coeff: i64) {
        let key = SchurKey { partition, e };
        let entry = self.coeffs.entry(key.clone()).or_insert(0);
        *entry = add_coeff(*entry, coeff);
        if *entry == 0 {
            self.coeffs.remove(&key);
        }
    }

    pub fn get(&self, partition: &Partition, e: usize) -> i64 {
        self.coeffs
            .get(&SchurKey {
                partition: partition.clone(),
                e,
            })
            .copied()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SchurKey, i64)> {
        self.coeffs.iter().map(|(k, &c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The `e = 0` slice as a plain Schur table.
    pub fn degree_zero(&self) -> BTreeMap<Partition, i64> {
        self.coeffs
            .iter()
            .filter(|(k, _)| k.e == 0)
            .map(|(k, &c)| (k.partition.clone(), c))
            .collect()
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|(k, &coeff)| SchurTerm {
            partition: k.partition.clone(),
            e: k.e,
            coeff,
        }))
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<SchurTerm>::deserialize(deserializer)?;
        let mut out = Self::new();
        for t in terms {
            out.add(t.partition, t.e, t.coeff);
        }
        Ok(out)
    }
}
