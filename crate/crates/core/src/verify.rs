//! Seeded randomized property suites. Every case is generated from a
//! ChaCha8 stream, so a `(suite, seed, iters)` triple is reproducible; the
//! first failure is shrunk before it is reported.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blanchfield::{self, BlanchfieldForm, ModuleElement};
use crate::laurent::LaurentPoly;
use crate::matrix::IntMatrix;
use crate::obstruct::quadform::{self, QuadFormVerdict};
use crate::seifert::{BorderVariant, EnlargementKind, SeifertMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Eq5,
    Sequiv,
    Sesquilinear,
    MainTheorem,
    QuadformOracle,
    RingAxioms,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Eq5, Suite::Sequiv, Suite::Sesquilinear, Suite::MainTheorem, Suite::QuadformOracle, Suite::RingAxioms];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eq5 => "eq5",
            Suite::Sequiv => "sequiv",
            Suite::Sesquilinear => "sesquilinear",
            Suite::MainTheorem => "main-theorem",
            Suite::QuadformOracle => "quadform-oracle",
            Suite::RingAxioms => "ring-axioms",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        write!(f, "unknown suite {:?} (expected one of {})", self.0, names.join(", "))
    }
}

impl std::error::Error for UnknownSuite {}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| UnknownSuite(s.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub cases: u64,
    pub passed: u64,
    pub failed: u64,
    /// Shrunk first failure and the reason it fails.
    pub counterexample: Option<(String, String)>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "cases: {}", self.cases)?;
        writeln!(f, "passed: {}", self.passed)?;
        write!(f, "failed: {}", self.failed)?;
        if let Some((case, why)) = &self.counterexample {
            write!(f, "\ncounterexample: {case}\nreason: {why}")?;
        }
        Ok(())
    }
}

/// A generated test case that knows how to check and shrink itself.
pub trait Case: Clone + fmt::Debug {
    fn check(&self) -> Result<(), String>;
    /// Strictly simpler variants, most aggressive first.
    fn shrink(&self) -> Vec<Self>;
}

/// Greedy shrinking: move to the first simpler variant that still fails.
pub fn minimize<C: Case>(mut case: C) -> (C, String) {
    let mut reason = case.check().expect_err("minimize needs a failing case");
    'outer: loop {
        for cand in case.shrink() {
            if let Err(why) = cand.check() {
                case = cand;
                reason = why;
                continue 'outer;
            }
        }
        return (case, reason);
    }
}

fn run_cases<C: Case>(suite: Suite, seed: u64, cases: impl IntoIterator<Item = C>) -> SuiteReport {
    let mut report = SuiteReport { suite, seed, cases: 0, passed: 0, failed: 0, counterexample: None };
    for case in cases {
        report.cases += 1;
        if case.check().is_ok() {
            report.passed += 1;
        } else {
            report.failed += 1;
            if report.counterexample.is_none() {
                let (small, why) = minimize(case);
                report.counterexample = Some((format!("{small:?}"), why));
            }
        }
    }
    report
}

pub fn run_suite(suite: Suite, seed: u64, iters: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Eq5 => run_cases(suite, seed, (0..iters).map(|_| BorderCase::random(&mut rng, Check::Expansion))),
        Suite::MainTheorem => {
            run_cases(suite, seed, (0..iters).map(|_| BorderCase::random(&mut rng, Check::PairingFormula)))
        }
        Suite::Sequiv => run_cases(suite, seed, (0..iters).map(|_| SequivCase::random(&mut rng))),
        Suite::Sesquilinear => run_cases(suite, seed, (0..iters).map(|_| SesquiCase::random(&mut rng))),
        Suite::RingAxioms => run_cases(suite, seed, (0..iters).map(|_| RingCase::random(&mut rng))),
        Suite::QuadformOracle => {
            let grid = QuadCase::grid();
            let extra: Vec<QuadCase> = (0..iters).map(|_| QuadCase::random(&mut rng)).collect();
            run_cases(suite, seed, grid.into_iter().chain(extra))
        }
    }
}

// ---------------------------------------------------------------------------
// Generators

/// Parameters of `V = S + J`: `S` symmetric, `J` block diagonal with blocks
/// `[[0,1],[0,0]]`, so `V − Vᵀ = J − Jᵀ` has determinant 1.
#[derive(Clone, PartialEq, Eq)]
pub struct SeifertParams {
    pub sym: Vec<Vec<i64>>,
}

impl fmt::Debug for SeifertParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix().matrix())
    }
}

impl SeifertParams {
    /// Entries of `V` in `[−r, r]`.
    pub fn random(rng: &mut impl Rng, genus: usize, r: i64) -> Self {
        let n = 2 * genus;
        // upper triangle row by row; the J entry sits at (2k, 2k+1)
        let upper: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (i..n)
                    .map(|j| {
                        let hi = if j == i + 1 && i % 2 == 0 { r - 1 } else { r };
                        rng.gen_range(-r..=hi)
                    })
                    .collect()
            })
            .collect();
        let sym =
            (0..n).map(|i| (0..n).map(|j| if j >= i { upper[i][j - i] } else { upper[j][i - j] }).collect()).collect();
        Self { sym }
    }

    pub fn size(&self) -> usize {
        self.sym.len()
    }

    pub fn matrix(&self) -> SeifertMatrix {
        let n = self.size();
        let rows: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| self.sym[i][j] + i64::from(j == i + 1 && i % 2 == 0)).collect()).collect();
        SeifertMatrix::from_i64_rows(&rows).expect("S + J is a Seifert matrix")
    }

    fn drop_genus(&self) -> Option<Self> {
        let n = self.size();
        (n >= 2).then(|| Self { sym: self.sym[..n - 2].iter().map(|r| r[..n - 2].to_vec()).collect() })
    }

    fn shrink_entries(&self) -> Vec<Self> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                for v in toward_zero(self.sym[i][j]) {
                    let mut c = self.clone();
                    c.sym[i][j] = v;
                    c.sym[j][i] = v;
                    out.push(c);
                }
            }
        }
        out
    }
}

/// Smaller replacements for an integer: 0 first, then half.
fn toward_zero(x: i64) -> Vec<i64> {
    match x {
        0 => vec![],
        1 | -1 => vec![0],
        _ => vec![0, x / 2],
    }
}

fn shrink_vec(v: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for (i, &x) in v.iter().enumerate() {
        for y in toward_zero(x) {
            let mut c = v.to_vec();
            c[i] = y;
            out.push(c);
        }
    }
    out
}

fn bigs(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn random_vec(rng: &mut impl Rng, n: usize, r: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-r..=r)).collect()
}

// ---------------------------------------------------------------------------
// Bordered-matrix suites

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// First-row expansion of `det(W − tWᵀ)`.
    Expansion,
    /// `β(e₁, e₁) ≡ ε·Δ_inner / Δ_W`.
    PairingFormula,
}

#[derive(Debug, Clone)]
pub struct BorderCase {
    pub check: Check,
    pub inner: SeifertParams,
    pub epsilon: i64,
    pub x: i64,
    pub m: Vec<i64>,
    pub n: Vec<i64>,
}

impl BorderCase {
    /// Inner size 0, 2 or 4; entries in `[−3, 3]`.
    pub fn random(rng: &mut impl Rng, check: Check) -> Self {
        let genus = rng.gen_range(0..=2);
        let inner = SeifertParams::random(rng, genus, 3);
        let size = 2 * genus;
        let epsilon = if rng.gen_bool(0.5) { 1 } else { -1 };
        let x = rng.gen_range(-3..=3);
        let m = random_vec(rng, size, 3);
        let n = random_vec(rng, size, 3);
        Self { check, inner, epsilon, x, m, n }
    }
}

impl Case for BorderCase {
    fn check(&self) -> Result<(), String> {
        let inner = self.inner.matrix();
        let (eps, x, m, n) = (BigInt::from(self.epsilon), BigInt::from(self.x), bigs(&self.m), bigs(&self.n));
        match self.check {
            Check::Expansion => {
                let (lhs, rhs) =
                    blanchfield::border_determinant_expansion(&inner, &eps, &x, &m, &n).map_err(|e| e.to_string())?;
                if lhs == rhs {
                    Ok(())
                } else {
                    Err(format!("det(W - tW^T) = {lhs} but the expansion gives {rhs}"))
                }
            }
            Check::PairingFormula => {
                let w = inner.unknotting_border(&eps, &x, &m, &n, BorderVariant::APlus).map_err(|e| e.to_string())?;
                let res = blanchfield::main_theorem_check(&w, &inner).map_err(|e| e.to_string())?;
                if res.holds {
                    Ok(())
                } else {
                    Err(format!("beta(e1,e1) = {} differs from {}", res.entry, res.expected))
                }
            }
        }
    }

    fn shrink(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if let Some(inner) = self.inner.drop_genus() {
            let k = inner.size();
            out.push(Self { inner, m: self.m[..k].to_vec(), n: self.n[..k].to_vec(), ..self.clone() });
        }
        out.extend(self.inner.shrink_entries().into_iter().map(|inner| Self { inner, ..self.clone() }));
        out.extend(toward_zero(self.x).into_iter().map(|x| Self { x, ..self.clone() }));
        out.extend(shrink_vec(&self.m).into_iter().map(|m| Self { m, ..self.clone() }));
        out.extend(shrink_vec(&self.n).into_iter().map(|n| Self { n, ..self.clone() }));
        if self.epsilon == -1 {
            out.push(Self { epsilon: 1, ..self.clone() });
        }
        out
    }
}

// ---------------------------------------------------------------------------
// S-equivalence suite

/// `row_i += k·row_j`
type Elementary = (usize, usize, i64);

#[derive(Debug, Clone)]
pub struct SequivCase {
    pub v: SeifertParams,
    pub ops: Vec<Elementary>,
    pub kind: EnlargementKind,
    pub x: i64,
    pub m: Vec<i64>,
    pub n: Vec<i64>,
    pub epsilon: i64,
}

impl SequivCase {
    pub fn random(rng: &mut impl Rng) -> Self {
        let genus = rng.gen_range(0..=2);
        let v = SeifertParams::random(rng, genus, 3);
        let size = 2 * genus;
        let ops = if size == 0 {
            Vec::new()
        } else {
            (0..rng.gen_range(0..=4))
                .filter_map(|_| {
                    let i = rng.gen_range(0..size);
                    let j = rng.gen_range(0..size);
                    (i != j).then(|| (i, j, rng.gen_range(-2..=2)))
                })
                .collect()
        };
        let kind = if rng.gen_bool(0.5) { EnlargementKind::RowBorder } else { EnlargementKind::ColumnBorder };
        Self {
            v,
            ops,
            kind,
            x: rng.gen_range(-3..=3),
            m: random_vec(rng, size, 3),
            n: random_vec(rng, size, 3),
            epsilon: if rng.gen_bool(0.5) { 1 } else { -1 },
        }
    }

    fn transform(&self) -> IntMatrix {
        let size = self.v.size();
        let mut p = vec![vec![0i64; size]; size];
        for (i, row) in p.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, k) in &self.ops {
            let src = p[j].clone();
            for (a, b) in p[i].iter_mut().zip(src) {
                *a += k * b;
            }
        }
        IntMatrix::from_i64_rows(&p).expect("square")
    }
}

impl Case for SequivCase {
    fn check(&self) -> Result<(), String> {
        let v = self.v.matrix();
        let base = v.invariants();
        let congruent = v.congruent_transform(&self.transform()).map_err(|e| e.to_string())?;
        if congruent.invariants() != base {
            return Err(format!("congruence changed the invariants: {:?}", congruent.invariants()));
        }
        let (x, m, n) = (BigInt::from(self.x), bigs(&self.m), bigs(&self.n));
        let big = v.enlarge(self.kind, &x, &m, &n).map_err(|e| e.to_string())?;
        if big.invariants() != base {
            return Err(format!("enlargement changed the invariants: {:?}", big.invariants()));
        }
        match big.try_reduce() {
            Some(r) if r.inner == v && r.kind == self.kind => {}
            other => return Err(format!("reduction did not undo the enlargement: {other:?}")),
        }
        let eps = BigInt::from(self.epsilon);
        let mut first = None;
        for variant in BorderVariant::ALL {
            let w = v.unknotting_border(&eps, &x, &m, &n, variant).map_err(|e| e.to_string())?;
            let inv = w.invariants();
            match &first {
                None => first = Some(inv),
                Some(f) if *f != inv => return Err(format!("{variant:?} gives {inv:?}, a+ gives {f:?}")),
                Some(_) => {}
            }
        }
        Ok(())
    }

    fn shrink(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if let Some(v) = self.v.drop_genus() {
            let k = v.size();
            let ops = self.ops.iter().copied().filter(|&(i, j, _)| i < k && j < k).collect();
            out.push(Self { v, ops, m: self.m[..k].to_vec(), n: self.n[..k].to_vec(), ..self.clone() });
        }
        for i in 0..self.ops.len() {
            let mut ops = self.ops.clone();
            ops.remove(i);
            out.push(Self { ops, ..self.clone() });
        }
        out.extend(self.v.shrink_entries().into_iter().map(|v| Self { v, ..self.clone() }));
        out.extend(toward_zero(self.x).into_iter().map(|x| Self { x, ..self.clone() }));
        out.extend(shrink_vec(&self.m).into_iter().map(|m| Self { m, ..self.clone() }));
        out.extend(shrink_vec(&self.n).into_iter().map(|n| Self { n, ..self.clone() }));
        out
    }
}

// ---------------------------------------------------------------------------
// Sesquilinearity suite

/// A small Laurent polynomial `c₀t⁻¹ + c₁ + c₂t`.
type Small = [i64; 3];

fn small_poly(c: &Small) -> LaurentPoly {
    LaurentPoly::from_i64_terms([(-1, c[0]), (0, c[1]), (1, c[2])])
}

fn random_small(rng: &mut impl Rng) -> Small {
    [rng.gen_range(-2..=2), rng.gen_range(-2..=2), rng.gen_range(-2..=2)]
}

fn shrink_small(c: &Small) -> Vec<Small> {
    shrink_vec(c).into_iter().map(|v| [v[0], v[1], v[2]]).collect()
}

#[derive(Debug, Clone)]
pub struct SesquiCase {
    pub v: SeifertParams,
    pub x: Vec<Small>,
    pub y: Vec<Small>,
    pub a: Small,
    pub b: Small,
}

impl SesquiCase {
    pub fn random(rng: &mut impl Rng) -> Self {
        let genus = rng.gen_range(1..=2);
        let v = SeifertParams::random(rng, genus, 2);
        let size = 2 * genus;
        let x = (0..size).map(|_| random_small(rng)).collect();
        let y = (0..size).map(|_| random_small(rng)).collect();
        Self { v, x, y, a: random_small(rng), b: random_small(rng) }
    }
}

impl Case for SesquiCase {
    fn check(&self) -> Result<(), String> {
        let form = BlanchfieldForm::new(&self.v.matrix());
        let x = ModuleElement(self.x.iter().map(small_poly).collect());
        let y = ModuleElement(self.y.iter().map(small_poly).collect());
        let (a, b) = (small_poly(&self.a), small_poly(&self.b));
        let base = form.pair(&x, &y).map_err(|e| e.to_string())?;
        let scaled = form.pair(&x.scale(&a), &y.scale(&b)).map_err(|e| e.to_string())?;
        let expected = base.scale(&(&a * &b.bar()));
        if !blanchfield::fractions_equal(&scaled, &expected) {
            return Err(format!("beta(ax, by) = {scaled} but a*bbar*beta(x, y) = {expected}"));
        }
        let swapped = form.pair(&y, &x).map_err(|e| e.to_string())?;
        if !blanchfield::fractions_equal(&swapped, &base.bar()) {
            return Err(format!("beta(y, x) = {swapped} but bar(beta(x, y)) = {}", base.bar()));
        }
        Ok(())
    }

    fn shrink(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if let Some(v) = self.v.drop_genus().filter(|v| v.size() > 0) {
            let k = v.size();
            out.push(Self { v, x: self.x[..k].to_vec(), y: self.y[..k].to_vec(), ..self.clone() });
        }
        out.extend(self.v.shrink_entries().into_iter().map(|v| Self { v, ..self.clone() }));
        out.extend(shrink_small(&self.a).into_iter().map(|a| Self { a, ..self.clone() }));
        out.extend(shrink_small(&self.b).into_iter().map(|b| Self { b, ..self.clone() }));
        for i in 0..self.x.len() {
            for c in shrink_small(&self.x[i]) {
                let mut x = self.x.clone();
                x[i] = c;
                out.push(Self { x, ..self.clone() });
            }
            for c in shrink_small(&self.y[i]) {
                let mut y = self.y.clone();
                y[i] = c;
                out.push(Self { y, ..self.clone() });
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Ring axioms

/// `(lowest exponent, coefficients)`
type Sparse = (i64, Vec<i64>);

fn sparse_poly(s: &Sparse) -> LaurentPoly {
    LaurentPoly::from_i64_terms(s.1.iter().enumerate().map(|(i, &c)| (s.0 + i as i64, c)))
}

fn random_sparse(rng: &mut impl Rng) -> Sparse {
    let len = rng.gen_range(0..=5);
    (rng.gen_range(-3..=3), random_vec(rng, len, 5))
}

fn shrink_sparse(s: &Sparse) -> Vec<Sparse> {
    let mut out: Vec<Sparse> = shrink_vec(&s.1).into_iter().map(|c| (s.0, c)).collect();
    if !s.1.is_empty() {
        out.insert(0, (s.0, s.1[..s.1.len() - 1].to_vec()));
    }
    if s.0 != 0 {
        out.push((0, s.1.clone()));
    }
    out
}

#[derive(Debug, Clone)]
pub struct RingCase {
    pub a: Sparse,
    pub b: Sparse,
    pub c: Sparse,
}

impl RingCase {
    pub fn random(rng: &mut impl Rng) -> Self {
        Self { a: random_sparse(rng), b: random_sparse(rng), c: random_sparse(rng) }
    }
}

impl Case for RingCase {
    fn check(&self) -> Result<(), String> {
        let (a, b, c) = (sparse_poly(&self.a), sparse_poly(&self.b), sparse_poly(&self.c));
        let fail = |what: &str| Err(what.to_string());
        if &a + &b != &b + &a || &a * &b != &b * &a {
            return fail("commutativity");
        }
        if (&a * &b) * &c != &a * (&b * &c) || (&a + &b) + &c != &a + (&b + &c) {
            return fail("associativity");
        }
        if &a * (&b + &c) != &a * &b + &a * &c {
            return fail("distributivity");
        }
        if &a + &(-&a) != LaurentPoly::zero() || &a * &LaurentPoly::one() != a {
            return fail("identities");
        }
        if a.bar().bar() != a || (&a * &b).bar() != a.bar() * b.bar() || (&a + &b).bar() != a.bar() + b.bar() {
            return fail("bar is not a ring involution");
        }
        if !(&a * &a.bar()).is_bar_symmetric() {
            return fail("a*bar(a) is not bar-symmetric");
        }
        if !b.is_zero() {
            let (q, r) = a.divmod_rational(&b).map_err(|e| e.to_string())?;
            if &q * &b.to_rational() + r.clone() != a.to_rational() {
                return fail("a != q*b + r");
            }
            let (lo, hi) = (b.min_exponent().unwrap(), b.max_exponent().unwrap());
            if r.terms().any(|(e, _)| e < lo || e >= hi) {
                return fail("remainder outside the window");
            }
            if !(&a * &b).is_multiple_of(&b) {
                return fail("a*b is not a multiple of b");
            }
        }
        Ok(())
    }

    fn shrink(&self) -> Vec<Self> {
        let mut out = Vec::new();
        out.extend(shrink_sparse(&self.a).into_iter().map(|a| Self { a, ..self.clone() }));
        out.extend(shrink_sparse(&self.b).into_iter().map(|b| Self { b, ..self.clone() }));
        out.extend(shrink_sparse(&self.c).into_iter().map(|c| Self { c, ..self.clone() }));
        out
    }
}

// ---------------------------------------------------------------------------
// Quadratic-form oracle

/// Brute-force box for the oracle.
pub const ORACLE_BOX: i64 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadCase {
    pub h: i64,
    pub d: i64,
}

impl QuadCase {
    /// `h ∈ {1, 2, 3, 5, 7}`, `0 < |d| ≤ 50`.
    pub fn grid() -> Vec<Self> {
        [1, 2, 3, 5, 7].into_iter().flat_map(|h| (-50..=50).filter(|&d| d != 0).map(move |d| Self { h, d })).collect()
    }

    pub fn random(rng: &mut impl Rng) -> Self {
        let mut h = 0;
        while h == 0 {
            h = rng.gen_range(-12..=12);
        }
        let mut d = 0;
        while d == 0 {
            d = rng.gen_range(-60..=60);
        }
        Self { h, d }
    }

    pub fn brute_force(&self) -> bool {
        let target = (self.d as i128).abs();
        (-ORACLE_BOX..=ORACLE_BOX)
            .any(|x| (-ORACLE_BOX..=ORACLE_BOX).any(|y| quadform::form_value(self.h, x, y).abs() == target))
    }
}

impl Case for QuadCase {
    fn check(&self) -> Result<(), String> {
        let v = quadform::quadform_represents(self.h, self.d, ORACLE_BOX as u64).map_err(|e| e.to_string())?;
        if !v.witness_holds(self.h, self.d) {
            return Err(format!("witness fails: {v:?}"));
        }
        let brute = self.brute_force();
        let inconclusive = matches!(v, QuadFormVerdict::Inconclusive { .. });
        if v.is_refuted() && brute {
            return Err(format!("refuted, but brute force finds a solution: {v:?}"));
        }
        // the search bound equals the oracle box, so nothing in it is missed
        if inconclusive && brute {
            return Err("inconclusive though a solution lies in the box".into());
        }
        // definite: exact decision, and every solution lies inside the box
        if self.h > 0 && (inconclusive || brute == v.is_refuted()) {
            return Err(format!("definite verdict {v:?} disagrees with brute force {brute}"));
        }
        Ok(())
    }

    fn shrink(&self) -> Vec<Self> {
        toward_zero(self.d).into_iter().filter(|&d| d != 0).map(|d| Self { d, ..*self }).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_and_are_deterministic() {
        for suite in Suite::ALL {
            let r = run_suite(suite, 3, 20);
            assert!(r.ok(), "{r}");
            assert_eq!(r, run_suite(suite, 3, 20));
        }
        assert_eq!(run_suite(Suite::QuadformOracle, 7, 0).cases, 500);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn generated_matrices_are_valid_and_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..100 {
            let c = BorderCase::random(&mut rng, Check::Expansion);
            let v = c.inner.matrix();
            for i in 0..v.size() {
                for j in 0..v.size() {
                    assert!((-3..=3).contains(&i64::try_from(v.get(i, j)).unwrap()));
                }
            }
            assert!(c.x.abs() <= 3 && c.m.iter().chain(&c.n).all(|x| x.abs() <= 3));
        }
    }

    #[derive(Debug, Clone)]
    struct Planted(Vec<i64>);

    impl Case for Planted {
        fn check(&self) -> Result<(), String> {
            if self.0.iter().sum::<i64>() >= 10 {
                Err("sum too large".into())
            } else {
                Ok(())
            }
        }
        fn shrink(&self) -> Vec<Self> {
            let mut out: Vec<Self> = (0..self.0.len())
                .map(|i| {
                    let mut v = self.0.clone();
                    v.remove(i);
                    Planted(v)
                })
                .collect();
            out.extend(shrink_vec(&self.0).into_iter().map(Planted));
            out
        }
    }

    #[test]
    fn shrinking_reaches_a_local_minimum() {
        let (small, why) = minimize(Planted(vec![7, 3, 9, 40, 2]));
        assert_eq!(why, "sum too large");
        assert_eq!(small.0.len(), 1);
        assert!(small.0[0] >= 10 && small.0[0] < 20);
        let report = run_cases(Suite::RingAxioms, 0, vec![Planted(vec![1]), Planted(vec![50, 50])]);
        assert_eq!((report.passed, report.failed), (1, 1));
        assert!(report.to_string().contains("counterexample:"));
    }
}
