//! Runs every criterion on a pair of knots and folds the verdicts into
//! bounds along `d_G ≥ d_G^a ≥ ρ`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::criteria::{self, CcBarVerdict, MurakamiVerdict, ParityVerdict};
use super::quadform::{self, QuadFormVerdict};
use crate::laurent::LaurentPoly;
use crate::seifert::{self, SeifertError, SeifertMatrix, UaVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error("knot signature must be even (got {0})")]
    OddSignature(i64),
    #[error("signature {given} contradicts the matrix signature {computed}")]
    SignatureMismatch { given: i64, computed: i64 },
    #[error("ua{side} = {value} is impossible: {reason}")]
    InvalidUa { side: u8, value: u32, reason: &'static str },
    #[error("inconsistent bounds: {0}")]
    Inconsistent(String),
    #[error("certificate failed re-verification: {0}")]
    Unverified(String),
    #[error("the zero polynomial is not an Alexander polynomial")]
    ZeroPolynomial,
}

/// One side of the comparison: a Seifert matrix, or a bare polynomial with
/// an optional signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotInput {
    pub alexander: LaurentPoly,
    pub signature: Option<i64>,
    pub matrix: Option<SeifertMatrix>,
    /// Why the polynomial is not an Alexander polynomial, if it is not.
    pub issue: Option<String>,
}

/// Multiplies by a unit `±t^k` so that the exponents are centred at zero
/// (when possible) and the value at `t = 1` is nonnegative.
pub fn normalize_alexander(delta: &LaurentPoly) -> LaurentPoly {
    let (Some(lo), Some(hi)) = (delta.min_exponent(), delta.max_exponent()) else {
        return delta.clone();
    };
    let centred = if (lo + hi) % 2 == 0 { delta.shift(-(lo + hi) / 2) } else { delta.clone() };
    if centred.eval_one().is_negative() {
        -centred
    } else {
        centred
    }
}

impl KnotInput {
    pub fn from_matrix(v: SeifertMatrix) -> Self {
        Self { alexander: v.alexander(), signature: Some(v.signature()), matrix: Some(v), issue: None }
    }

    /// Accepts any nonzero polynomial after normalising by a unit. Inputs
    /// that fail the realisation conditions are kept, with the failure
    /// recorded, since the congruence criteria still make sense for them.
    pub fn from_polynomial(delta: LaurentPoly) -> Result<Self, ReportError> {
        if delta.is_zero() {
            return Err(ReportError::ZeroPolynomial);
        }
        let alexander = normalize_alexander(&delta);
        let issue = seifert::check_alexander(&alexander).err().map(|e| e.to_string());
        Ok(Self { alexander, signature: None, matrix: None, issue })
    }

    pub fn with_signature(mut self, sigma: i64) -> Result<Self, ReportError> {
        if sigma % 2 != 0 {
            return Err(ReportError::OddSignature(sigma));
        }
        if let Some(v) = &self.matrix {
            let computed = v.signature();
            if computed != sigma {
                return Err(ReportError::SignatureMismatch { given: sigma, computed });
            }
        }
        self.signature = Some(sigma);
        Ok(self)
    }

    pub fn determinant(&self) -> BigInt {
        self.alexander.eval_minus_one().abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Box for the indefinite quadratic-form search.
    pub quadform: u64,
    pub cc_max_breadth: u32,
    pub cc_max_coeff: u32,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self { quadform: 10_000, cc_max_breadth: 4, cc_max_coeff: 8 }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub ua1: Option<u32>,
    pub ua2: Option<u32>,
    pub bounds: SearchBounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Obstructs,
    NoObstruction,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructs => "obstructs",
            Verdict::NoObstruction => "no-obstruction",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub name: String,
    pub applicable: bool,
    pub verdict: Verdict,
    pub certificate: String,
}

impl CriterionResult {
    fn not_applicable(name: impl Into<String>, why: impl Into<String>) -> Self {
        Self { name: name.into(), applicable: false, verdict: Verdict::Inconclusive, certificate: why.into() }
    }

    fn new(name: impl Into<String>, verdict: Verdict, certificate: impl Into<String>) -> Self {
        Self { name: name.into(), applicable: true, verdict, certificate: certificate.into() }
    }

    fn obstructs(&self) -> bool {
        self.applicable && self.verdict == Verdict::Obstructs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub notes: Vec<String>,
    pub criteria: Vec<CriterionResult>,
    pub rho_lower: u32,
    pub rho_upper: u32,
    pub dga_lower: u32,
    pub dga_upper: Option<u32>,
    pub dg_lower: u32,
}

impl ObstructionReport {
    pub fn criterion(&self, name: &str) -> Option<&CriterionResult> {
        self.criteria.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        if !self.notes.is_empty() {
            writeln!(f)?;
        }
        for c in &self.criteria {
            writeln!(f, "criterion: {}", c.name)?;
            writeln!(f, "applicable: {}", c.applicable)?;
            writeln!(f, "verdict: {}", c.verdict)?;
            writeln!(f, "certificate: {}", c.certificate)?;
            writeln!(f)?;
        }
        writeln!(f, "rho_lower: {}", self.rho_lower)?;
        writeln!(f, "rho_upper: {}", self.rho_upper)?;
        writeln!(f, "dga_lower: {}", self.dga_lower)?;
        match self.dga_upper {
            Some(u) => writeln!(f, "dga_upper: {u}")?,
            None => writeln!(f, "dga_upper: unknown")?,
        }
        write!(f, "dg_lower: {}", self.dg_lower)
    }
}

/// Largest determinant for which the residue search mod `2D` is run.
pub const MURAKAMI_MAX_DETERMINANT: u64 = 10_000_000;

/// Values of `h` for which every realisation has `u_a = 1`.
const UNIVERSAL_UA_ONE: [i64; 4] = [1, 2, 3, 5];

struct QuadformOutcome {
    result: CriterionResult,
    /// `h` when the verdict is a refutation.
    refuted_h: Option<i64>,
}

fn direction(i: usize) -> (usize, usize, String) {
    let j = 1 - i;
    (i, j, format!("[{}->{}]", i + 1, j + 1))
}

/// Known `u_a` of one side, from the user or from a certificate.
fn known_ua(side: u8, knot: &KnotInput, user: Option<u32>) -> Result<Option<u32>, ReportError> {
    let trivial_class = knot.matrix.as_ref().is_some_and(|v| v.size() == 0);
    if let Some(u) = user {
        if u == 0 && !knot.alexander.is_one() {
            return Err(ReportError::InvalidUa {
                side,
                value: u,
                reason: "a trivial class has alexander polynomial 1",
            });
        }
        if u > 0 && trivial_class {
            return Err(ReportError::InvalidUa { side, value: u, reason: "the empty matrix has u_a = 0" });
        }
        return Ok(Some(u));
    }
    if trivial_class {
        return Ok(Some(0));
    }
    let verdict = match &knot.matrix {
        Some(v) => v.ua_is_one(),
        None => seifert::ua_is_one_for_alexander(&knot.alexander),
    };
    Ok(matches!(verdict, UaVerdict::Yes(_)).then_some(1))
}

fn signature_criterion(k: &[KnotInput; 2]) -> Result<(CriterionResult, u32), ReportError> {
    let (Some(s1), Some(s2)) = (k[0].signature, k[1].signature) else {
        return Ok((CriterionResult::not_applicable("signature", "signature unknown for at least one side"), 0));
    };
    let bound = criteria::signature_bound(s1, s2).map_err(|_| ReportError::OddSignature(s1 | s2))?;
    let verdict = if bound >= 2 { Verdict::Obstructs } else { Verdict::NoObstruction };
    let cert = format!("|{s1} - ({s2})|/2 = {bound}");
    Ok((CriterionResult::new("signature", verdict, cert), bound as u32))
}

fn murakami_criterion(k: &[KnotInput; 2], i: usize) -> CriterionResult {
    let (i, j, tag) = direction(i);
    let name = format!("murakami{tag}");
    let (di, dj) = (k[i].determinant(), k[j].determinant());
    let (Some(a), Some(b)) = (di.to_u64(), dj.to_u64()) else {
        return CriterionResult::not_applicable(name, "determinant too large");
    };
    if a > MURAKAMI_MAX_DETERMINANT {
        return CriterionResult::not_applicable(name, "determinant too large for the residue search");
    }
    match criteria::murakami_obstruction(a, b) {
        Ok(MurakamiVerdict::NoObstruction { d, sign }) => CriterionResult::new(
            name,
            Verdict::NoObstruction,
            format!("D={a} D'={b}: d={d} gives 4d^2 = {sign:+}(D-D') mod {}", 2 * a),
        ),
        Ok(MurakamiVerdict::Obstructs) => CriterionResult::new(
            name,
            Verdict::Obstructs,
            format!(
                "D={a} D'={b}: no d in 0..{} with 4d^2 = +-(D-D') mod {0}; u(K{})=1 excludes distance 1",
                2 * a,
                i + 1
            ),
        ),
        Err(e) => CriterionResult::not_applicable(name, e.to_string()),
    }
}

fn parity_criterion(k: &[KnotInput; 2]) -> CriterionResult {
    let tre = criteria::trefoil_polynomial();
    let other = if k[0].alexander == tre {
        &k[1].alexander
    } else if k[1].alexander == tre {
        &k[0].alexander
    } else {
        return CriterionResult::not_applicable("parity", "neither side has alexander polynomial t-1+t^-1");
    };
    match criteria::parity_criterion(other) {
        ParityVerdict::Obstructs { remainder, m } => {
            CriterionResult::new("parity", Verdict::Obstructs, format!("remainder {remainder} = 2+4*({m})"))
        }
        ParityVerdict::NotApplicable { remainder } => {
            CriterionResult::new("parity", Verdict::Inconclusive, format!("remainder {remainder} is not 2 mod 4"))
        }
    }
}

fn quadform_criterion(k: &[KnotInput; 2], i: usize, bounds: &SearchBounds) -> Result<QuadformOutcome, ReportError> {
    let (i, j, tag) = direction(i);
    let name = format!("quadform{tag}");
    let na = |why: String| {
        Ok(QuadformOutcome { result: CriterionResult::not_applicable(name.clone(), why), refuted_h: None })
    };
    let Some(h) = seifert::degree_two_coefficient(&k[i].alexander) else {
        return na(format!("alexander{} is not h*t + h*t^-1 + 1 - 2h", i + 1));
    };
    let Some(h) = h.to_i64() else {
        return na(format!("h = {h} too large"));
    };
    if h.unsigned_abs() != 1 && !quadform::is_prime(h.unsigned_abs()) {
        return na(format!("|h| = {} is neither 1 nor prime", h.unsigned_abs()));
    }
    let Some(d) = criteria::constant_residue(&k[j].alexander, &k[i].alexander) else {
        return na(format!("alexander{} is not congruent to an integer mod alexander{}", j + 1, i + 1));
    };
    if d.is_zero() {
        return na(format!("alexander{} = 0 mod alexander{}", j + 1, i + 1));
    }
    let Some(d) = d.to_i64() else {
        return na(format!("d = {d} too large"));
    };
    let verdict = quadform::quadform_represents(h, d, bounds.quadform).expect("h and d are nonzero");
    if !verdict.witness_holds(h, d) {
        return Err(ReportError::Unverified(format!("{name}: {}", verdict.certificate())));
    }
    let cert = format!("h={h} d={d}: {}", verdict.certificate());
    let (verdict, refuted_h) = match verdict {
        QuadFormVerdict::Refuted(_) => (Verdict::Obstructs, Some(h)),
        QuadFormVerdict::Witness { .. } => (Verdict::NoObstruction, None),
        QuadFormVerdict::Inconclusive { .. } => (Verdict::Inconclusive, None),
    };
    Ok(QuadformOutcome { result: CriterionResult::new(name, verdict, cert), refuted_h })
}

fn ccbar_criterion(k: &[KnotInput; 2], i: usize, bounds: &SearchBounds) -> Result<CriterionResult, ReportError> {
    let (i, j, tag) = direction(i);
    let name = format!("ccbar{tag}");
    let (delta, delta_prime) = (&k[i].alexander, &k[j].alexander);
    let verdict = criteria::cc_bar_witness_search(delta, delta_prime, bounds.cc_max_breadth, bounds.cc_max_coeff)
        .expect("alexander polynomials are nonzero");
    if !verdict.witness_holds(delta, delta_prime) {
        return Err(ReportError::Unverified(format!("{name}: {verdict:?}")));
    }
    Ok(match verdict {
        CcBarVerdict::Witness { c, sign } => CriterionResult::new(
            name,
            Verdict::NoObstruction,
            format!("c={c} sign={sign:+}: sign*alexander{} - c*cbar = 0 mod alexander{}", j + 1, i + 1),
        ),
        CcBarVerdict::NoneFound { max_breadth, max_coeff } => CriterionResult::new(
            name,
            Verdict::Inconclusive,
            format!("no c with breadth<={max_breadth} and |coefficients|<={max_coeff}"),
        ),
    })
}

pub fn build_report(k1: &KnotInput, k2: &KnotInput, opts: &ReportOptions) -> Result<ObstructionReport, ReportError> {
    let k = [k1.clone(), k2.clone()];
    let notes: Vec<String> = k
        .iter()
        .enumerate()
        .filter_map(|(i, x)| {
            x.issue
                .as_ref()
                .map(|e| format!("input {} is not an Alexander polynomial ({e}); distance bounds presume it is", i + 1))
        })
        .collect();
    let ua = [known_ua(1, k1, opts.ua1)?, known_ua(2, k2, opts.ua2)?];

    let mut results = Vec::new();
    let (sig, sig_bound) = signature_criterion(&k)?;
    results.push(sig);
    results.push(murakami_criterion(&k, 0));
    results.push(murakami_criterion(&k, 1));
    let parity = parity_criterion(&k);
    let parity_fires = parity.obstructs();
    results.push(parity);
    let quad = [quadform_criterion(&k, 0, &opts.bounds)?, quadform_criterion(&k, 1, &opts.bounds)?];
    results.extend(quad.iter().map(|q| q.result.clone()));
    results.push(ccbar_criterion(&k, 0, &opts.bounds)?);
    results.push(ccbar_criterion(&k, 1, &opts.bounds)?);

    let equal = k1.alexander == k2.alexander;
    let mut rho_lower = if equal { 0 } else { 1 };
    let rho_upper = if equal {
        0
    } else if k1.alexander.is_one() || k2.alexander.is_one() {
        1
    } else {
        2
    };
    let universal = quad.iter().any(|q| q.refuted_h.is_some_and(|h| UNIVERSAL_UA_ONE.contains(&h)));
    if parity_fires || universal {
        rho_lower = 2;
    }

    let mut dga_lower = rho_lower;
    // Distance one is excluded on side i when its u_a is one.
    if (0..2).any(|i| quad[i].refuted_h.is_some() && ua[i] == Some(1)) {
        dga_lower = dga_lower.max(2);
    }
    if let (Some(a), Some(b)) = (ua[0], ua[1]) {
        dga_lower = dga_lower.max(a.abs_diff(b));
    }
    let same_matrix = k1.matrix.is_some() && k1.matrix == k2.matrix;
    let dga_upper = if same_matrix { Some(0) } else { ua[0].zip(ua[1]).map(|(a, b)| a + b) };
    if let Some(u) = dga_upper {
        if u < dga_lower {
            return Err(ReportError::Inconsistent(format!(
                "algebraic unknotting numbers give d_G^a <= {u} but the criteria give d_G^a >= {dga_lower}"
            )));
        }
    }
    let dg_lower = dga_lower.max(sig_bound);
    debug_assert!(rho_lower <= rho_upper && dg_lower >= dga_lower && dga_lower >= rho_lower);
    Ok(ObstructionReport { notes, criteria: results, rho_lower, rho_upper, dga_lower, dga_upper, dg_lower })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> KnotInput {
        KnotInput::from_polynomial(s.parse().unwrap()).unwrap()
    }

    const D925: &str = "-3t^2+12t-17+12t^-1-3t^-2";

    #[test]
    fn trefoil_versus_nine_twenty_five() {
        let opts = ReportOptions { ua1: Some(1), ua2: Some(1), ..Default::default() };
        let k1 = poly("t-1+t^-1").with_signature(-2).unwrap();
        let k2 = poly(D925).with_signature(-2).unwrap();
        let r = build_report(&k1, &k2, &opts).unwrap();
        assert_eq!((r.rho_lower, r.rho_upper), (2, 2));
        assert_eq!((r.dga_lower, r.dga_upper), (2, Some(2)));
        assert_eq!(r.dg_lower, 2);
        let parity = r.criterion("parity").unwrap();
        assert_eq!(parity.verdict, Verdict::Obstructs);
        assert_eq!(parity.certificate, "remainder -2 = 2+4*(-1)");
        assert_eq!(r.criterion("signature").unwrap().verdict, Verdict::NoObstruction);
        assert_eq!(r.criterion("murakami[1->2]").unwrap().verdict, Verdict::NoObstruction);
        assert_eq!(r.criterion("quadform[1->2]").unwrap().verdict, Verdict::Obstructs);
        assert!(!r.criterion("quadform[2->1]").unwrap().applicable);
    }

    #[test]
    fn without_user_values() {
        let r = build_report(&poly("t-1+t^-1"), &poly(D925), &ReportOptions::default()).unwrap();
        assert_eq!((r.rho_lower, r.dga_lower, r.dga_upper, r.dg_lower), (2, 2, None, 2));
        assert!(!r.criterion("signature").unwrap().applicable);
    }

    #[test]
    fn identical_inputs() {
        let r = build_report(&poly(D925), &poly(D925), &ReportOptions::default()).unwrap();
        assert_eq!((r.rho_lower, r.rho_upper, r.dga_lower, r.dg_lower), (0, 0, 0, 0));
        let v = SeifertMatrix::from_i64_rows(&[[-1, 1], [0, -1]]).unwrap();
        let k = KnotInput::from_matrix(v);
        let r = build_report(&k, &k, &ReportOptions::default()).unwrap();
        assert_eq!((r.rho_upper, r.dga_upper, r.dg_lower), (0, Some(0), 0));
    }

    #[test]
    fn trefoil_versus_constant_three() {
        // 3 is not an Alexander polynomial, but 2t − 3 + 2t⁻¹ ≡ −1 and the
        // figure-eight −t + 3 − t⁻¹ ≡ 2 are.
        let r = build_report(&poly("t-1+t^-1"), &poly("-t+3-t^-1"), &ReportOptions::default()).unwrap();
        assert_eq!(r.criterion("parity").unwrap().verdict, Verdict::Obstructs);
        assert_eq!(r.rho_lower, 2);
        let r = build_report(&poly("t-1+t^-1"), &poly("2t-3+2t^-1"), &ReportOptions::default()).unwrap();
        let q = r.criterion("quadform[1->2]").unwrap();
        assert_eq!(q.verdict, Verdict::NoObstruction);
        assert_eq!(r.rho_lower, 1);
    }

    #[test]
    fn non_alexander_input_is_noted() {
        let r = build_report(&poly("t-1+t^-1"), &poly("3"), &ReportOptions::default()).unwrap();
        assert_eq!(r.notes.len(), 1);
        assert!(r.to_string().starts_with("note: input 2"));
        let q = r.criterion("quadform[1->2]").unwrap();
        assert_eq!(q.verdict, Verdict::NoObstruction);
        assert_eq!(q.certificate, "h=1 d=3: x=1 y=1 sign=+1");
        let c = r.criterion("ccbar[1->2]").unwrap();
        assert!(c.certificate.starts_with("c=t+1 sign=+1"), "{}", c.certificate);
        assert_eq!(KnotInput::from_polynomial(LaurentPoly::zero()), Err(ReportError::ZeroPolynomial));
    }

    #[test]
    fn normalisation_by_units() {
        assert_eq!(normalize_alexander(&"t^2-t+1".parse().unwrap()), "t-1+t^-1".parse().unwrap());
        assert_eq!(normalize_alexander(&"-t^3+t^2-t".parse().unwrap()), "t-1+t^-1".parse().unwrap());
        assert!(poly("t^4-t^3+t^2").issue.is_none());
        assert!(poly("1+t").issue.is_some());
    }

    #[test]
    fn unknot_side() {
        let r = build_report(&poly("1"), &poly("t-1+t^-1"), &ReportOptions::default()).unwrap();
        assert_eq!((r.rho_lower, r.rho_upper), (1, 1));
        let err = build_report(&poly("t-1+t^-1"), &poly("1"), &ReportOptions { ua1: Some(0), ..Default::default() });
        assert!(matches!(err, Err(ReportError::InvalidUa { side: 1, .. })));
    }

    #[test]
    fn inconsistent_user_values_rejected() {
        let opts = ReportOptions { ua1: Some(1), ua2: Some(0), ..Default::default() };
        let err = build_report(&poly("t-1+t^-1"), &poly(D925), &opts);
        assert!(matches!(err, Err(ReportError::InvalidUa { side: 2, .. })));
    }

    #[test]
    fn signature_flags_checked() {
        assert_eq!(poly("1").with_signature(1), Err(ReportError::OddSignature(1)));
        let v = SeifertMatrix::from_i64_rows(&[[-1, 1], [0, -1]]).unwrap();
        let k = KnotInput::from_matrix(v);
        assert_eq!(k.clone().with_signature(0), Err(ReportError::SignatureMismatch { given: 0, computed: -2 }));
        assert!(k.with_signature(-2).is_ok());
        let r = build_report(
            &poly("t-1+t^-1").with_signature(-2).unwrap(),
            &poly("t-1+t^-1").with_signature(4).unwrap(),
            &ReportOptions::default(),
        )
        .unwrap();
        assert_eq!((r.rho_lower, r.dg_lower), (0, 3));
    }

    #[test]
    fn serialization_has_stable_keys() {
        let r = build_report(&poly("t-1+t^-1"), &poly(D925), &ReportOptions::default()).unwrap();
        let text = r.to_string();
        for key in [
            "criterion:",
            "applicable:",
            "verdict:",
            "certificate:",
            "rho_lower:",
            "rho_upper:",
            "dga_lower:",
            "dga_upper:",
            "dg_lower:",
        ] {
            assert!(text.lines().any(|l| l.starts_with(key)), "{key}");
        }
        assert!(text.ends_with("dg_lower: 2"));
    }
}
