//! Laurent polynomials in one variable `t` with exact coefficients.
//!
//! [`LaurentPoly`] is the ring Λ = ℤ[t, t⁻¹] that every invariant in this
//! crate lives in. [`RationalLaurent`] is the same structure over ℚ and is
//! only used as the scratch space for division.
//!
//! Values are stored sparsely (exponent → coefficient) and never contain a
//! zero coefficient, so structural equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed};
use thiserror::Error;

/// Coefficient ring requirements.
pub trait Coefficient: Clone + Num + Neg<Output = Self> {}

impl<T: Clone + Num + Neg<Output = T>> Coefficient for T {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot evaluate at t = 0")]
    ZeroPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid polynomial at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<C> {
    terms: BTreeMap<i64, C>,
}

/// An element of Λ = ℤ[t, t⁻¹].
pub type LaurentPoly = Laurent<BigInt>;

/// An element of ℚ[t, t⁻¹].
pub type RationalLaurent = Laurent<BigRational>;

impl<C: Coefficient> Laurent<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·t^exp`.
    pub fn monomial(c: C, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `t`.
    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    /// Coefficient of the lowest power of `t`.
    pub fn trailing_coeff(&self) -> Option<&C> {
        self.terms.values().next()
    }

    /// Degree in the Laurent sense: `max exponent - min exponent`.
    /// `None` for the zero polynomial.
    pub fn breadth(&self) -> Option<i64> {
        Some(self.max_exponent()? - self.min_exponent()?)
    }

    /// Returns the value if the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// The involution `t ↦ t⁻¹`.
    pub fn bar(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c.clone() * k.clone())).filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn eval_one(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Value at `t = -1`.
    pub fn eval_minus_one(&self) -> C {
        self.terms.iter().fold(
            C::zero(),
            |acc, (e, c)| {
                if e.rem_euclid(2) == 0 {
                    acc + c.clone()
                } else {
                    acc - c.clone()
                }
            },
        )
    }

    /// Value at an arbitrary nonzero point of the coefficient ring's
    /// fraction field. Negative powers are taken as reciprocals.
    pub fn eval_at(&self, x: &C) -> Result<C, LaurentError> {
        if x.is_zero() {
            return Err(LaurentError::ZeroPoint);
        }
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Ok(C::zero());
        };
        // Horner on the polynomial t^-lo * p, then divide by x^-lo.
        let mut acc = C::zero();
        for e in (lo..=hi).rev() {
            acc = acc * x.clone() + self.coeff(e);
        }
        Ok(acc * pow_signed(x, lo))
    }

    pub fn map_coeffs<D: Coefficient, F: FnMut(&C) -> D>(&self, mut f: F) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

fn pow_signed<C: Coefficient>(x: &C, e: i64) -> C {
    let mut acc = C::one();
    for _ in 0..e.unsigned_abs() {
        acc = acc * x.clone();
    }
    if e < 0 {
        C::one() / acc
    } else {
        acc
    }
}

impl LaurentPoly {
    pub fn from_i64_terms<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        Self::from_terms(iter.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    }

    pub fn to_rational(&self) -> RationalLaurent {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// Exact value at the integer `x ≠ 0`.
    pub fn eval_int(&self, x: &BigInt) -> Result<BigRational, LaurentError> {
        self.to_rational().eval_at(&BigRational::from_integer(x.clone()))
    }

    /// Division with remainder over ℚ.
    ///
    /// The remainder is the unique element congruent to `self` modulo
    /// `divisor` whose exponents lie in the window
    /// `[min_exp(divisor), max_exp(divisor) - 1]`. Both the quotient and the
    /// remainder are returned over ℚ; `self = q·divisor + r` holds exactly.
    pub fn divmod_rational(&self, divisor: &LaurentPoly) -> Result<(RationalLaurent, RationalLaurent), LaurentError> {
        self.to_rational().div_rem(&divisor.to_rational())
    }

    /// True iff `self = q·divisor` for some `q ∈ Λ`. The zero polynomial
    /// divides only zero.
    pub fn is_multiple_of(&self, divisor: &LaurentPoly) -> bool {
        self.exact_div(divisor).is_some()
    }

    /// The quotient `self / divisor` when it exists in Λ.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return self.is_zero().then(LaurentPoly::zero);
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Cheap necessary condition on a monomial-free pair: breadth must not shrink.
        if self.breadth()? < divisor.breadth()? {
            return None;
        }
        let (q, r) = self.divmod_rational(divisor).ok()?;
        if !r.is_zero() {
            return None;
        }
        q.to_integer()
    }
}

impl RationalLaurent {
    /// `Some` iff every coefficient is an integer.
    pub fn to_integer(&self) -> Option<LaurentPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            if !c.is_integer() {
                return None;
            }
            terms.insert(e, c.to_integer());
        }
        Some(Laurent { terms })
    }

    /// Two-sided division; see [`LaurentPoly::divmod_rational`].
    pub fn div_rem(&self, divisor: &RationalLaurent) -> Result<(Self, Self), LaurentError> {
        let (Some(lo), Some(hi)) = (divisor.min_exponent(), divisor.max_exponent()) else {
            return Err(LaurentError::DivisionByZero);
        };
        let lead = divisor.leading_coeff().expect("nonzero").clone();
        let trail = divisor.trailing_coeff().expect("nonzero").clone();

        let mut quotient = Self::zero();
        let mut rem = self.clone();
        // Clear everything above the window from the top...
        while let Some(e) = rem.max_exponent().filter(|&e| e >= hi) {
            let term = Self::monomial(rem.coeff(e) / lead.clone(), e - hi);
            rem = &rem - &(&term * divisor);
            quotient += term;
        }
        // ...then everything below it from the bottom. This never reintroduces
        // exponents >= hi.
        while let Some(e) = rem.min_exponent().filter(|&e| e < lo) {
            let term = Self::monomial(rem.coeff(e) / trail.clone(), e - lo);
            rem = &rem - &(&term * divisor);
            quotient += term;
        }
        Ok((quotient, rem))
    }
}

impl<C: Coefficient> Add<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;

    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;

    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Mul<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;

    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;

    fn neg(self) -> Laurent<C> {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<C: Coefficient> $tr<Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $method(self, rhs: Laurent<C>) -> Laurent<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Coefficient> $tr<&Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $method(self, rhs: &Laurent<C>) -> Laurent<C> {
                (&self).$method(rhs)
            }
        }
        impl<C: Coefficient> $tr<Laurent<C>> for &Laurent<C> {
            type Output = Laurent<C>;
            fn $method(self, rhs: Laurent<C>) -> Laurent<C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coefficient> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<C: Coefficient> AddAssign for Laurent<C> {
    fn add_assign(&mut self, rhs: Laurent<C>) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<C: Coefficient> std::iter::Sum for Laurent<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<C: Coefficient> From<C> for Laurent<C> {
    fn from(c: C) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }
}

// Printing: decreasing exponents, explicit signs, `t^k`.

trait CoeffFormat {
    fn negative(&self) -> bool;
    fn unit_magnitude(&self) -> bool;
    fn write_magnitude(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl CoeffFormat for BigInt {
    fn negative(&self) -> bool {
        self.is_negative()
    }
    fn unit_magnitude(&self) -> bool {
        self.abs().is_one()
    }
    fn write_magnitude(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.abs())
    }
}

impl CoeffFormat for BigRational {
    fn negative(&self) -> bool {
        self.is_negative()
    }
    fn unit_magnitude(&self) -> bool {
        self.abs().is_one()
    }
    fn write_magnitude(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.abs();
        if a.is_integer() {
            write!(f, "{}", a.numer())
        } else {
            write!(f, "({}/{})", a.numer(), a.denom())
        }
    }
}

fn write_laurent<C: CoeffFormat>(terms: &BTreeMap<i64, C>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (e, c)) in terms.iter().rev().enumerate() {
        if c.negative() {
            f.write_str("-")?;
        } else if i > 0 {
            f.write_str("+")?;
        }
        if *e == 0 || !c.unit_magnitude() {
            c.write_magnitude(f)?;
        }
        match *e {
            0 => {}
            1 => f.write_str("t")?,
            e => write!(f, "t^{e}")?,
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_laurent(&self.terms, f)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for RationalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_laurent(&self.terms, f)
    }
}

impl fmt::Debug for RationalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalLaurent({self})")
    }
}

// Parsing. Accepts e.g. `-3t^2+12t-17+12t^-1-3t^-2`, `2*t^(-1)`, `t - 1 + t^-1`.

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let parens = self.eat(b'(');
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let Some(d) = self.digits() else {
            return self.err("expected exponent");
        };
        let Ok(mut e) = d.parse::<i64>() else {
            return self.err("exponent out of range");
        };
        if negative {
            e = -e;
        }
        if parens && !self.eat(b')') {
            return self.err("expected ')'");
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<(i64, BigInt), ParseError> {
        let coeff = match self.digits() {
            Some(d) => {
                let c: BigInt = d.parse().expect("digits");
                self.eat(b'*');
                Some(c)
            }
            None => None,
        };
        if self.eat(b't') {
            let exp = if self.eat(b'^') { self.exponent()? } else { 1 };
            Ok((exp, coeff.unwrap_or_else(BigInt::one)))
        } else {
            match coeff {
                Some(c) => Ok((0, c)),
                None => self.err("expected coefficient or 't'"),
            }
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut out = LaurentPoly::zero();
        let mut first = true;
        while self.peek().is_some() {
            let negative = if self.eat(b'-') {
                true
            } else if self.eat(b'+') || first {
                false
            } else {
                return self.err("expected '+' or '-'");
            };
            let (e, c) = self.term()?;
            out.add_term(e, if negative { -c } else { c });
            first = false;
        }
        if first {
            return self.err("empty polynomial");
        }
        Ok(out)
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Parser { src: s.as_bytes(), pos: 0 }.poly()
    }
}
