//! Single obstructions: the `2 + 4m` parity test, the `c·c̄` witness search,
//! the double-cover condition and the signature bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::laurent::{LaurentPoly, RationalLaurent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CriterionError {
    #[error("knot determinant must be odd and positive (got {0})")]
    EvenDeterminant(u64),
    #[error("knot signature must be even (got {0})")]
    OddSignature(i64),
    #[error("the c*c-bar search needs a nonzero modulus")]
    ZeroModulus,
}

/// `t − 1 + t⁻¹`
pub fn trefoil_polynomial() -> LaurentPoly {
    LaurentPoly::from_i64_terms([(1, 1), (0, -1), (-1, 1)])
}

/// `d` with `delta_prime ≡ d (mod delta)` over Λ, if such an integer exists.
pub fn constant_residue(delta_prime: &LaurentPoly, delta: &LaurentPoly) -> Option<BigInt> {
    let (_, r) = delta_prime.divmod_rational(delta).ok()?;
    let r = r.to_integer()?;
    let d = if r.is_zero() { BigInt::zero() } else { r.as_constant()? };
    (delta_prime - &LaurentPoly::constant(d.clone())).is_multiple_of(delta).then_some(d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParityVerdict {
    /// `delta_prime ≡ 2 + 4m (mod t − 1 + t⁻¹)`.
    Obstructs {
        remainder: BigInt,
        m: BigInt,
    },
    NotApplicable {
        remainder: RationalLaurent,
    },
}

pub fn parity_criterion(delta_prime: &LaurentPoly) -> ParityVerdict {
    let (_, r) = delta_prime.divmod_rational(&trefoil_polynomial()).expect("nonzero divisor");
    let constant = r.to_integer().and_then(|p| if p.is_zero() { Some(BigInt::zero()) } else { p.as_constant() });
    match constant {
        Some(c) if c.mod_floor(&BigInt::from(4)) == BigInt::from(2) => {
            let m = (&c - 2) / 4;
            ParityVerdict::Obstructs { remainder: c, m }
        }
        _ => ParityVerdict::NotApplicable { remainder: r },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CcBarVerdict {
    /// `sign·delta_prime − c·c̄` is a Λ-multiple of `delta`.
    Witness {
        c: LaurentPoly,
        sign: i8,
    },
    NoneFound {
        max_breadth: u32,
        max_coeff: u32,
    },
}

impl CcBarVerdict {
    pub fn witness_holds(&self, delta: &LaurentPoly, delta_prime: &LaurentPoly) -> bool {
        match self {
            CcBarVerdict::Witness { c, sign } => {
                let lhs = if *sign > 0 { delta_prime.clone() } else { -delta_prime };
                (lhs - c * &c.bar()).is_multiple_of(delta)
            }
            CcBarVerdict::NoneFound { .. } => true,
        }
    }
}

/// Residues of powers of `t` in `F_p[t] / (f)`, where `f = t^{-lo}·delta`.
///
/// If `g ∈ Λ` is a Λ-multiple of `delta` and `t^s·g` is a polynomial, then
/// `t^s·g` is a polynomial multiple of `f` (since `f(0) ≠ 0`), so its residue
/// vanishes. The screen is therefore one-sided: it never rejects a witness.
struct Quotient {
    p: u64,
    /// `f` made monic, low to high, without the leading 1.
    monic: Vec<u64>,
    /// `powers[e] = t^e mod f`
    powers: Vec<Vec<u64>>,
}

const PREFILTER_PRIME: u64 = (1 << 31) - 1;

impl Quotient {
    fn new(delta: &LaurentPoly) -> Option<Self> {
        let p = PREFILTER_PRIME;
        let lo = delta.min_exponent()?;
        let hi = delta.max_exponent()?;
        let coeffs: Vec<u64> = (lo..=hi).map(|e| to_mod(&delta.coeff(e), p)).collect();
        let lead = *coeffs.last()?;
        if lead == 0 {
            return None;
        }
        let inv = pow_mod(lead, p - 2, p);
        let monic: Vec<u64> = coeffs[..coeffs.len() - 1].iter().map(|&c| c * inv % p).collect();
        let mut one = vec![0; monic.len()];
        if let Some(x) = one.first_mut() {
            *x = 1;
        }
        Some(Self { p, monic, powers: vec![one] })
    }

    fn degree(&self) -> usize {
        self.monic.len()
    }

    fn ensure(&mut self, e: usize) {
        let (n, p) = (self.degree(), self.p);
        while self.powers.len() <= e {
            let prev = self.powers.last().expect("t^0 present");
            let mut next = vec![0; n];
            if n > 0 {
                let carry = prev[n - 1];
                for i in 0..n {
                    let up = if i == 0 { 0 } else { prev[i - 1] };
                    next[i] = (up + p - carry * self.monic[i] % p) % p;
                }
            }
            self.powers.push(next);
        }
    }

    /// Residue of `t^pad·g`, which must be a polynomial.
    fn residue(&mut self, g: &LaurentPoly, pad: i64) -> Vec<u64> {
        let mut acc = vec![0; self.degree()];
        for (e, c) in g.terms() {
            let e = usize::try_from(e + pad).expect("shifted to a polynomial");
            self.ensure(e);
            let c = to_mod(c, self.p);
            for (a, &x) in acc.iter_mut().zip(&self.powers[e]) {
                *a = (*a + c * x) % self.p;
            }
        }
        acc
    }
}

fn to_mod(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().expect("reduced below p")
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Coefficients of `c·c̄·t^k` for `c = Σ_{i=0..k} a_i t^i`, low to high.
fn norm_coeffs(a: &[i64], out: &mut [i64]) {
    let k = a.len() - 1;
    for (idx, slot) in out.iter_mut().enumerate().take(2 * k + 1) {
        // exponent idx − k: Σ a_i·a_{i−idx+k}
        let lo = idx.saturating_sub(k);
        let hi = idx.min(k);
        *slot = (lo..=hi).map(|i| a[i] * a[i + k - idx]).sum();
    }
}

/// 0, 1, −1, 2, −2, … ±max
fn small_first(max: i64, include_zero: bool) -> Vec<i64> {
    let mut v: Vec<i64> = if include_zero { vec![0] } else { Vec::new() };
    for k in 1..=max {
        v.push(k);
        v.push(-k);
    }
    v
}

/// Searches `c = Σ_{i=0..k} a_i t^i` with `k ≤ max_breadth`, `0 < a_0`,
/// `a_k ≠ 0` and `|a_i| ≤ max_coeff`, smallest breadth first.
///
/// Reversal `c ↦ ±t^k·c̄` preserves `c·c̄`, so only `|a_k| ≤ a_0` is tried.
/// Each candidate is screened modulo a prime and confirmed over Λ.
pub fn cc_bar_witness_search(
    delta: &LaurentPoly,
    delta_prime: &LaurentPoly,
    max_breadth: u32,
    max_coeff: u32,
) -> Result<CcBarVerdict, CriterionError> {
    if delta.is_zero() {
        return Err(CriterionError::ZeroModulus);
    }
    let mut quotient = Quotient::new(delta);
    let c_max = max_coeff as i64;
    let first: Vec<i64> = (1..=c_max).collect();
    let middle = small_first(c_max, true);
    let last = small_first(c_max, false);
    for k in 0..=max_breadth as usize {
        let shifted = delta_prime.shift(k as i64);
        let pad = -shifted.min_exponent().unwrap_or(0).min(0);
        let mut screen = quotient.as_mut().map(|q| {
            let plus = q.residue(&shifted, pad);
            let minus: Vec<u64> = plus.iter().map(|&x| (q.p - x) % q.p).collect();
            q.ensure(pad as usize + 2 * k);
            let n = q.degree();
            (q, plus, minus, vec![0u64; n])
        });
        let mut norm = vec![0i64; 2 * k + 1];
        let mut a = vec![0i64; k + 1];
        let found = enumerate(&mut a, 0, &first, &middle, &last, &mut |a| {
            if k > 0 && a[k].abs() > a[0] {
                return None;
            }
            let mut signs: &[i8] = &[1, -1];
            if let Some((q, plus, minus, img)) = screen.as_mut() {
                norm_coeffs(a, &mut norm);
                img.iter_mut().for_each(|x| *x = 0);
                for (e, &s) in norm.iter().enumerate() {
                    if s == 0 {
                        continue;
                    }
                    let s = s.rem_euclid(q.p as i64) as u64;
                    for (acc, &x) in img.iter_mut().zip(&q.powers[pad as usize + e]) {
                        *acc = (*acc + s * x) % q.p;
                    }
                }
                signs = match (&*img == plus, &*img == minus) {
                    (true, true) => &[1, -1],
                    (true, false) => &[1],
                    (false, true) => &[-1],
                    (false, false) => return None,
                };
            }
            let c = LaurentPoly::from_i64_terms(a.iter().enumerate().map(|(i, &x)| (i as i64, x)));
            signs
                .iter()
                .map(|&sign| CcBarVerdict::Witness { c: c.clone(), sign })
                .find(|w| w.witness_holds(delta, delta_prime))
        });
        if let Some(w) = found {
            return Ok(w);
        }
    }
    Ok(CcBarVerdict::NoneFound { max_breadth, max_coeff })
}

fn enumerate(
    a: &mut [i64],
    i: usize,
    first: &[i64],
    middle: &[i64],
    last: &[i64],
    visit: &mut impl FnMut(&[i64]) -> Option<CcBarVerdict>,
) -> Option<CcBarVerdict> {
    let k = a.len() - 1;
    if i == a.len() {
        return visit(a);
    }
    let choices = if i == 0 {
        first
    } else if i == k {
        last
    } else {
        middle
    };
    for &x in choices {
        a[i] = x;
        if let Some(w) = enumerate(a, i + 1, first, middle, last, visit) {
            return Some(w);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MurakamiVerdict {
    /// `4d² ≡ sign·(D − D′) (mod 2D)`.
    NoObstruction { d: u64, sign: i8 },
    /// No such `d`: unknotting number one and distance one cannot both hold.
    Obstructs,
}

/// The double-cover linking form condition. Multiplying
/// `2d²/D ≡ ±(D − D′)/(2D) (mod 1)` through by `2D` gives
/// `4d² ≡ ±(D − D′) (mod 2D)`, which depends only on `d mod 2D`.
pub fn murakami_obstruction(det: u64, det_prime: u64) -> Result<MurakamiVerdict, CriterionError> {
    for x in [det, det_prime] {
        if x % 2 == 0 {
            return Err(CriterionError::EvenDeterminant(x));
        }
    }
    let modulus = 2 * det as i128;
    let diff = det as i128 - det_prime as i128;
    for d in 0..2 * det {
        let lhs = (4 * (d as i128) * (d as i128)).rem_euclid(modulus);
        for sign in [1i8, -1] {
            if lhs == (sign as i128 * diff).rem_euclid(modulus) {
                return Ok(MurakamiVerdict::NoObstruction { d, sign });
            }
        }
    }
    Ok(MurakamiVerdict::Obstructs)
}

/// `|σ₁ − σ₂| / 2`, a lower bound for the Gordian distance.
pub fn signature_bound(sigma1: i64, sigma2: i64) -> Result<u64, CriterionError> {
    for s in [sigma1, sigma2] {
        if s % 2 != 0 {
            return Err(CriterionError::OddSignature(s));
        }
    }
    Ok(sigma1.abs_diff(sigma2) / 2)
}
