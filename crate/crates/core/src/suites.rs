//! Property suites shared by the acceptance tests and `cylkit verify`.
//!
//! Each suite returns a [`SuiteReport`] counting checks and keeping the
//! first few counterexamples. Errors raised while checking are recorded as
//! failures so one bad input does not hide the rest.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::affine::{AffinePermutation, GeneratorWord};
use crate::cylindric::{
    cylindric_schur_poly, in_a, in_a0, phi, phi_inv, shapes_up_to, straight_shapes_up_to, CylType, CylindricShape,
};
use crate::enumerate::{elements_of_length, grassmannian_elements};
use crate::error::Result;
use crate::nilcoxeter::{
    verify_cd, verify_commutativity, verify_decomposition, verify_interval_vanishing, verify_kschur_uniqueness,
    verify_quotient_relations, verify_ribbon_theorem, verify_ribbon_vanishing, verify_symmetry,
};
use crate::par::{expand_batch, oracle_batch};
use crate::stanley::{
    dual_pieri_branches, dual_pieri_sides, expand_affine_schur, expand_cylindric_with, gromov_witten, grassmannianize,
    grassmannianize_321, grassmannianize_321_bound, grassmannianize_bound, stanley_monomials, toric_gw_oracle, Expander,
};
use crate::symfunc::{expand_in_schur, lr_coeff, partitions_in_box, skew_schur_poly, schur_poly, Partition, SchurExpansion};

const KEPT_COUNTEREXAMPLES: usize = 5;

/// Pass/fail tally for one suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub counterexamples: Vec<String>,
}

impl SuiteReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            failed: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(detail());
        }
    }

    fn fail(&mut self, detail: String) {
        self.failed += 1;
        if self.counterexamples.len() < KEPT_COUNTEREXAMPLES {
            self.counterexamples.push(detail);
        }
    }

    /// Unwraps a result, counting an error as a failed check.
    pub fn ok<T>(&mut self, result: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match result {
            Ok(x) => Some(x),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("{}: {e}", context()));
                None
            }
        }
    }

    /// Folds another report into this one.
    pub fn absorb(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        for c in other.counterexamples {
            if self.counterexamples.len() < KEPT_COUNTEREXAMPLES {
                self.counterexamples.push(format!("[{}] {c}", other.name));
            }
        }
    }

    fn absorb_result(&mut self, other: Result<SuiteReport>, context: &str) {
        if let Some(r) = self.ok(other, || context.to_string()) {
            self.absorb(r);
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks, {} failed)", self.name, self.checked, self.failed)?;
        for c in &self.counterexamples {
            write!(f, "\n    counterexample: {c}")?;
        }
        Ok(())
    }
}

fn w(n: usize, s: &str) -> AffinePermutation {
    GeneratorWord::parse(n, s).expect("literal word").to_permutation()
}

fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

/// The types used by the cylindric suites.
pub fn default_types() -> Vec<CylType> {
    [(2, 4), (2, 5), (3, 6)]
        .into_iter()
        .map(|(m, n)| CylType::new(m, n).expect("valid type"))
        .collect()
}

/// The worked example: `F_531420` at `n = 6`.
pub fn example2() -> SuiteReport {
    let mut report = SuiteReport::new("worked example golden table");
    if let Some(exp) = report.ok(expand_affine_schur(&w(6, "531420")), || "expansion".into()) {
        let expected: BTreeMap<String, i64> = [("345210", 1), ("405210", 2), ("540510", 1), ("105210", 1)]
            .into_iter()
            .map(|(s, c)| (s.to_string(), c))
            .collect();
        let got = exp.by_word();
        report.check(got == expected, || format!("got {got:?}"));
    }
    report
}

/// Branch sets, skew Schur identities and the Schur resolution of the
/// worked example.
pub fn example2_intermediates() -> SuiteReport {
    let mut report = SuiteReport::new("worked example intermediates");
    let n = 6;
    if let Some((plus, minus)) = report.ok(dual_pieri_branches(&w(n, "531420"), 1, 2), || "branches".into()) {
        let mut expected = vec![w(n, "541052"), w(n, "341052"), w(n, "354052")];
        expected.sort();
        report.check(plus == expected, || format!("B+ = {plus:?}"));
        report.check(minus == vec![w(n, "354105")], || format!("B- = {minus:?}"));
    }
    if let Some((plus, minus)) = report.ok(dual_pieri_branches(&w(n, "341052"), 2, 1), || "second branches".into()) {
        let mut expected = vec![w(n, "345210"), w(n, "405210")];
        expected.sort();
        report.check(plus == expected && minus.is_empty(), || format!("second step {plus:?} {minus:?}"));
    }
    let skews = [
        ("541052", part(&[3, 3, 2]), part(&[2])),
        ("354052", part(&[3, 3, 2]), part(&[1, 1])),
        ("354105", part(&[3, 2, 1]), part(&[])),
    ];
    let mut polys = Vec::new();
    for (word, outer, inner) in &skews {
        let f = report.ok(stanley_monomials(&w(n, word), 6), || format!("F_{word}"));
        let s = report.ok(skew_schur_poly(outer, inner, 6), || format!("s_{outer}/{inner}"));
        if let (Some(f), Some(s)) = (f, s) {
            report.check(f == s, || format!("F_{word} != s_{outer}/{inner}"));
            polys.push(s);
        }
    }
    if polys.len() == 3 {
        let combo = polys[0].add(&polys[1]).and_then(|p| p.sub(&polys[2]));
        if let Some(combo) = report.ok(combo, || "resolution".into()) {
            let got = expand_in_schur(&combo);
            let expected = BTreeMap::from([(part(&[2, 2, 2]), 1), (part(&[3, 3]), 1), (part(&[3, 2, 1]), 1)]);
            report.check(got == expected, || format!("resolution {got:?}"));
        }
    }
    if let Some(s) = report.ok(skew_schur_poly(&part(&[3, 3, 2, 1]), &part(&[3]), 6), || "s_3321/3".into()) {
        report.check(s == schur_poly(&part(&[3, 2, 1]), 6), || "s_3321/3 != s_321".into());
    }
    report
}

/// Which elements the oracle suites cover.
#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub exhaustive_ns: Vec<usize>,
    pub exhaustive_max_len: usize,
    pub random_ns: Vec<usize>,
    pub random_max_len: usize,
    pub random_count: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            exhaustive_ns: vec![3, 4],
            exhaustive_max_len: 6,
            random_ns: vec![5, 6],
            random_max_len: 7,
            random_count: 200,
            seed: 20_240_611,
        }
    }
}

/// A random element of length `len`, grown one length-increasing
/// generator at a time.
pub fn random_element(n: usize, len: usize, rng: &mut impl Rng) -> AffinePermutation {
    let mut x = AffinePermutation::identity(n);
    for _ in 0..len {
        let ascents: Vec<usize> = (0..n).filter(|&i| !x.has_right_descent(i)).collect();
        x = x.mul_s(ascents[rng.gen_range(0..ascents.len())]);
    }
    x
}

/// Exhaustive elements followed by seeded random ones.
pub fn oracle_inputs(cfg: &OracleConfig) -> Vec<AffinePermutation> {
    let mut out = Vec::new();
    for &n in &cfg.exhaustive_ns {
        for len in 0..=cfg.exhaustive_max_len {
            out.extend(elements_of_length(n, len));
        }
    }
    if !cfg.random_ns.is_empty() {
        let mut rng = StdRng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.random_count {
            let n = cfg.random_ns[rng.gen_range(0..cfg.random_ns.len())];
            let len = rng.gen_range(1..=cfg.random_max_len);
            out.push(random_element(n, len, &mut rng));
        }
    }
    out
}

/// The recursion agrees with the linear-solve oracle.
pub fn oracle_agreement(inputs: &[AffinePermutation]) -> SuiteReport {
    let mut report = SuiteReport::new(format!("oracle agreement ({} elements)", inputs.len()));
    let fast = expand_batch(inputs);
    let slow = oracle_batch(inputs);
    for ((x, f), s) in inputs.iter().zip(fast).zip(slow) {
        let f = report.ok(f, || format!("expand {x}"));
        let s = report.ok(s, || format!("oracle {x}"));
        if let (Some(f), Some(s)) = (f, s) {
            report.check(f == s, || format!("{x}: {:?} vs {:?}", f.by_word(), s.by_word()));
        }
    }
    report
}

/// Nonnegative coefficients; for `w` in `A_{(n-m,m)}` the support lies in
/// `A^0_{(n-m,m)}`.
pub fn positivity_support(inputs: &[AffinePermutation]) -> SuiteReport {
    let mut report = SuiteReport::new(format!("positivity and support ({} elements)", inputs.len()));
    for (x, exp) in inputs.iter().zip(expand_batch(inputs)) {
        let Some(exp) = report.ok(exp, || format!("expand {x}")) else {
            continue;
        };
        report.check(exp.is_nonnegative(), || format!("{x} has a negative coefficient"));
        for m in 1..x.n() {
            let ty = CylType::new(m, x.n()).expect("0 < m < n");
            if in_a(x, ty) {
                for (u, _) in exp.terms() {
                    report.check(in_a0(u, ty), || format!("{x} in A({m},{}) but {u} is not in A^0", x.n()));
                }
            }
        }
    }
    report
}

/// Skew words of every shape of the given types up to `max_cells`.
pub fn cylindric_inputs(types: &[CylType], max_cells: usize) -> Vec<AffinePermutation> {
    types
        .iter()
        .flat_map(|&ty| shapes_up_to(ty, max_cells))
        .map(|s| s.skew_word())
        .collect()
}

type ShapeKey = (Partition, usize, Partition);

fn key(s: &CylindricShape) -> ShapeKey {
    (s.lambda().clone(), s.d(), s.mu().clone())
}

/// Shift property, toric agreement and Littlewood-Richardson agreement for
/// every shape up to `max_cells`.
pub fn cylindric_shift(types: &[CylType], max_cells: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("shift, toric and LR (cells<={max_cells})"));
    for &ty in types {
        let mut expander = Expander::new();
        let shapes = shapes_up_to(ty, max_cells);
        let mut table: HashMap<ShapeKey, SchurExpansion> = HashMap::new();
        for s in &shapes {
            if let Some(e) = report.ok(expand_cylindric_with(s, &mut expander), || format!("expand {s}")) {
                table.insert(key(s), e);
            }
        }
        let tag = format!("({},{})", ty.m(), ty.n());
        for s in &shapes {
            let Some(exp) = table.get(&key(s)) else { continue };
            if s.d() >= 1 {
                let lower = table.get(&(s.lambda().clone(), s.d() - 1, s.mu().clone()));
                match lower {
                    Some(lower) => {
                        let upper_shifted: BTreeMap<_, _> = exp
                            .iter()
                            .filter(|(k, _)| k.e >= 1)
                            .map(|(k, c)| ((k.partition.clone(), k.e - 1), c))
                            .collect();
                        let lower_all: BTreeMap<_, _> =
                            lower.iter().map(|(k, c)| ((k.partition.clone(), k.e), c)).collect();
                        report.check(upper_shifted == lower_all, || format!("{tag} {s}: shift fails"));
                    }
                    None => {
                        let positive = exp.iter().any(|(k, _)| k.e >= 1);
                        report.check(!positive, || format!("{tag} {s}: e >= 1 terms without a lower shape"));
                    }
                }
            }
            let slice: BTreeMap<Partition, i64> = exp
                .iter()
                .filter(|(k, _)| k.e == 0)
                .map(|(k, c)| (k.partition.clone(), c))
                .collect();
            if s.is_toric() && s.d() <= 2 {
                if let Some(oracle) = report.ok(toric_gw_oracle(ty, s.lambda(), s.d(), s.mu()), || format!("toric {s}")) {
                    report.check(slice == oracle, || format!("{tag} {s}: {slice:?} vs toric {oracle:?}"));
                }
                for (nu, &c) in &slice {
                    let gw = report.ok(gromov_witten(ty, s.lambda(), s.d(), s.mu(), nu), || format!("gw {s} {nu}"));
                    report.check(gw == Some(c), || format!("{tag} {s}: gw at {nu} is {gw:?}, expected {c}"));
                }
            }
            if s.d() == 0 {
                let size = s.lambda().size() - s.mu().size();
                let lr: BTreeMap<Partition, i64> = partitions_in_box(ty.m(), ty.n())
                    .into_iter()
                    .filter(|nu| nu.size() == size)
                    .map(|nu| {
                        let c = lr_coeff(s.lambda(), s.mu(), &nu);
                        (nu, c)
                    })
                    .filter(|(_, c)| *c != 0)
                    .collect();
                let all_e0 = exp.iter().all(|(k, _)| k.e == 0);
                report.check(all_e0 && slice == lr, || format!("{tag} {s}: {slice:?} vs LR {lr:?}"));
            }
        }
    }
    report
}

/// `h_q^perp F_w` equals the sum of `F_v` over left factors and over right
/// factors `d_J` with `|J| = q`.
pub fn dual_pieri(ns: &[usize], max_len: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("dual Pieri identity (n in {ns:?}, len<={max_len})"));
    for &n in ns {
        for len in 1..=max_len {
            for x in elements_of_length(n, len) {
                for q in 1..n.min(len + 1) {
                    let nvars = len - q;
                    let Some(f) = report.ok(stanley_monomials(&x, nvars + 1), || format!("F_{x}")) else {
                        continue;
                    };
                    let Some(lhs) = report.ok(f.skew_by_h(q), || format!("h_{q} perp F_{x}")) else {
                        continue;
                    };
                    let (left, right) = dual_pieri_sides(&x, q);
                    for (side, vs) in [("left", left), ("right", right)] {
                        let sum = vs.iter().try_fold(crate::symfunc::SymmetricPolynomial::zero(nvars, nvars), |acc, v| {
                            acc.add(&stanley_monomials(v, nvars)?)
                        });
                        if let Some(sum) = report.ok(sum, || format!("{side} sum for {x}")) {
                            report.check(sum == lhs, || format!("{x}, q={q}: {side} side differs"));
                        }
                    }
                }
            }
        }
    }
    report
}

/// Bounds for the nilCoxeter suite.
#[derive(Clone, Debug)]
pub struct NilCoxeterConfig {
    pub commute_ns: Vec<usize>,
    pub uniqueness_ns: Vec<usize>,
    pub uniqueness_max_len: usize,
    pub types: Vec<CylType>,
    pub relation_word_len: Option<usize>,
    pub decomp_max_len: usize,
    pub symmetry_ns: Vec<usize>,
    pub symmetry_max_len: usize,
}

impl Default for NilCoxeterConfig {
    fn default() -> Self {
        let types = [(1, 3), (2, 4), (2, 5), (3, 6)]
            .into_iter()
            .map(|(m, n)| CylType::new(m, n).expect("valid type"))
            .collect();
        Self {
            commute_ns: vec![2, 3, 4, 5],
            uniqueness_ns: vec![2, 3, 4],
            uniqueness_max_len: 6,
            types,
            relation_word_len: None,
            decomp_max_len: 10,
            symmetry_ns: vec![3, 4],
            symmetry_max_len: 6,
        }
    }
}

/// Commutativity, k-Schur uniqueness, quotient relations, the ribbon
/// theorem, product decomposition, coefficient symmetry and `c = d`.
pub fn nilcoxeter_suite(cfg: &NilCoxeterConfig) -> SuiteReport {
    let mut report = SuiteReport::new("nilCoxeter identities");
    for &n in &cfg.commute_ns {
        report.absorb_result(verify_commutativity(n), "commutativity");
    }
    for &n in &cfg.uniqueness_ns {
        let mut ex = Expander::new();
        report.absorb_result(verify_kschur_uniqueness(n, cfg.uniqueness_max_len, &mut ex), "uniqueness");
    }
    for &ty in &cfg.types {
        let mut ex = Expander::new();
        let word_len = cfg.relation_word_len.unwrap_or(ty.n() + 1);
        report.absorb(verify_quotient_relations(ty, word_len));
        report.absorb_result(verify_interval_vanishing(ty), "interval vanishing");
        report.absorb_result(verify_ribbon_vanishing(ty), "ribbon vanishing");
        report.absorb_result(verify_ribbon_theorem(ty, &mut ex), "ribbon theorem");
        report.absorb_result(verify_decomposition(ty, cfg.decomp_max_len, &mut ex), "decomposition");
    }
    for &n in &cfg.symmetry_ns {
        let mut ex = Expander::new();
        report.absorb_result(verify_symmetry(n, cfg.symmetry_max_len, &mut ex), "symmetry");
        report.absorb_result(verify_cd(n, cfg.symmetry_max_len, &mut ex), "c = d");
    }
    report
}

/// Both completions land on a Grassmannian element within their bounds.
pub fn grassmannianize_bounds(inputs: &[AffinePermutation]) -> SuiteReport {
    let mut report = SuiteReport::new(format!("completion bounds ({} elements)", inputs.len()));
    let instance = grassmannianize_321(&w(6, "531420"), CylType::new(3, 6).expect("valid type"));
    report.check(
        instance.as_ref().is_ok_and(|(v, p)| *v == w(6, "510") && *p == 0 && v.length() == 3),
        || format!("531420 completes to {instance:?}"),
    );
    for x in inputs {
        let n = x.n();
        let (v, p) = grassmannianize(x);
        let xv = x.compose(&v);
        report.check(
            xv.is_grassmannian(p) && xv.length() == x.length() + v.length() && v.length() <= grassmannianize_bound(n),
            || format!("sweep on {x} gives v={v}, p={p}"),
        );
        for m in 1..n {
            let ty = CylType::new(m, n).expect("0 < m < n");
            if !in_a(x, ty) {
                continue;
            }
            let Some((v, p)) = report.ok(grassmannianize_321(x, ty), || format!("({m},{n}) completion of {x}")) else {
                continue;
            };
            let xv = x.compose(&v);
            let ok = xv.is_grassmannian(p)
                && xv.length() == x.length() + v.length()
                && v.length() <= grassmannianize_321_bound(ty)
                && in_a0(&v.rotate(-(p as i64)), ty);
            report.check(ok, || format!("({m},{n}) completion of {x} gives v={v}, p={p}"));
        }
    }
    report
}

/// Round trips of `phi`, weak order against containment, `F` against the
/// cylindric Schur polynomial, and the skew version up to `skew_cells`.
pub fn phi_bijection(types: &[CylType], max_cells: usize, skew_cells: usize, skew_vars: usize) -> SuiteReport {
    let mut report = SuiteReport::new(format!("phi bijection (cells<={max_cells}, skew cells<={skew_cells})"));
    for &ty in types {
        let tag = format!("({},{})", ty.m(), ty.n());
        let straight = straight_shapes_up_to(ty, max_cells);
        let mut elements = Vec::new();
        for s in &straight {
            let Some(u) = report.ok(phi_inv(s), || format!("{tag} phi_inv {s}")) else { continue };
            let back = phi(&u, ty);
            report.check(
                in_a0(&u, ty) && u.length() == s.cell_count() && back.as_ref().ok() == Some(s),
                || format!("{tag} {s} -> {u} -> {back:?}"),
            );
            for nvars in 1..=s.cell_count() {
                let f = stanley_monomials(&u, nvars);
                let c = cylindric_schur_poly(s, nvars);
                report.check(matches!((&f, &c), (Ok(a), Ok(b)) if a == b), || format!("{tag} F_{u} vs {s} in {nvars} vars"));
            }
            elements.push((u, s.outer()));
        }
        for len in 0..=max_cells {
            let count = grassmannian_elements(ty.n(), len).into_iter().filter(|u| in_a0(u, ty)).count();
            let shapes = straight.iter().filter(|s| s.cell_count() == len).count();
            report.check(count == shapes, || format!("{tag} length {len}: {count} elements, {shapes} shapes"));
        }
        for (u1, o1) in &elements {
            for (u2, o2) in &elements {
                let below = u2.compose(&u1.inverse()).length() + u1.length() == u2.length();
                report.check(below == o2.contains(o1), || format!("{tag} {u1} <= {u2} is {below}"));
            }
        }
        for s in shapes_up_to(ty, skew_cells) {
            let x = s.skew_word();
            for nvars in 1..=skew_vars {
                let f = stanley_monomials(&x, nvars);
                let c = cylindric_schur_poly(&s, nvars);
                report.check(matches!((&f, &c), (Ok(a), Ok(b)) if a == b), || format!("{tag} skew {s} in {nvars} vars"));
            }
        }
    }
    report
}

/// The named suites of `cylkit verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Example2,
    Intermediates,
    Oracle,
    Positivity,
    Cylindric,
    DualPieri,
    NilCoxeter,
    Bounds,
    Bijection,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Example2,
        Suite::Intermediates,
        Suite::Oracle,
        Suite::Positivity,
        Suite::Cylindric,
        Suite::DualPieri,
        Suite::NilCoxeter,
        Suite::Bounds,
        Suite::Bijection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Example2 => "example2",
            Suite::Intermediates => "intermediates",
            Suite::Oracle => "oracle",
            Suite::Positivity => "positivity",
            Suite::Cylindric => "cylindric",
            Suite::DualPieri => "dual-pieri",
            Suite::NilCoxeter => "nilcoxeter",
            Suite::Bounds => "bounds",
            Suite::Bijection => "bijection",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Overrides for `cylkit verify`. `n` restricts each suite to one period;
/// `max_len` bounds word lengths (or cell counts for shape suites).
#[derive(Clone, Debug, Default)]
pub struct VerifyScale {
    pub n: Option<usize>,
    pub max_len: Option<usize>,
    pub seed: Option<u64>,
}

impl VerifyScale {
    fn types(&self) -> Vec<CylType> {
        match self.n {
            Some(n) => (1..n).filter_map(|m| CylType::new(m, n).ok()).collect(),
            None => default_types(),
        }
    }

    fn oracle(&self) -> OracleConfig {
        let mut cfg = OracleConfig::default();
        if let Some(n) = self.n {
            cfg.exhaustive_ns = vec![n];
            cfg.random_ns.clear();
        }
        if let Some(l) = self.max_len {
            cfg.exhaustive_max_len = l;
            cfg.random_max_len = l.max(1);
        }
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        cfg
    }

    fn cells(&self) -> usize {
        self.max_len.unwrap_or(9)
    }
}

/// Runs one suite at the given scale.
pub fn run(suite: Suite, scale: &VerifyScale) -> SuiteReport {
    match suite {
        Suite::Example2 => example2(),
        Suite::Intermediates => example2_intermediates(),
        Suite::Oracle => oracle_agreement(&oracle_inputs(&scale.oracle())),
        Suite::Positivity => positivity_support(&oracle_inputs(&scale.oracle())),
        Suite::Cylindric => cylindric_shift(&scale.types(), scale.cells()),
        Suite::DualPieri => {
            let ns = scale.n.map_or_else(|| vec![2, 3, 4, 5], |n| vec![n]);
            dual_pieri(&ns, scale.max_len.unwrap_or(6))
        }
        Suite::NilCoxeter => {
            let mut cfg = NilCoxeterConfig::default();
            if let Some(n) = scale.n {
                cfg.commute_ns = vec![n];
                cfg.uniqueness_ns = vec![n];
                cfg.symmetry_ns = vec![n];
                cfg.types = scale.types();
            }
            if let Some(l) = scale.max_len {
                cfg.uniqueness_max_len = l;
                cfg.symmetry_max_len = l;
                cfg.decomp_max_len = l;
            }
            nilcoxeter_suite(&cfg)
        }
        Suite::Bounds => {
            let mut inputs = oracle_inputs(&scale.oracle());
            inputs.extend(cylindric_inputs(&scale.types(), scale.cells()));
            grassmannianize_bounds(&inputs)
        }
        Suite::Bijection => phi_bijection(&scale.types(), scale.cells(), scale.cells().min(7), 4),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_bookkeeping() {
        let mut r = SuiteReport::new("demo");
        assert!(!r.passed());
        r.check(true, || unreachable!());
        assert!(r.passed());
        for i in 0..10 {
            r.check(false, || format!("case {i}"));
        }
        assert_eq!((r.checked, r.failed, r.counterexamples.len()), (11, 10, KEPT_COUNTEREXAMPLES));
        assert!(r.to_string().starts_with("FAIL demo (11 checks, 10 failed)"));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn random_elements_have_requested_length() {
        let mut rng = StdRng::seed_from_u64(7);
        for len in 0..8 {
            assert_eq!(random_element(5, len, &mut rng).length(), len);
        }
    }

    #[test]
    fn small_scale_suites_pass() {
        let scale = VerifyScale {
            n: Some(3),
            max_len: Some(4),
            seed: None,
        };
        for suite in Suite::ALL {
            let r = run(suite, &scale);
            assert!(r.passed(), "{r}");
        }
    }
}
