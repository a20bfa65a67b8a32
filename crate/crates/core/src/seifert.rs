//! Seifert matrices, their classical invariants, and the matrix moves that
//! relate them: congruence, enlargement/reduction, and the bordered
//! algebraic unknotting operation.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::matrix::{IntMatrix, MatrixError};
use crate::polymat::{self, LaurentMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("size must be even (got {0}x{0})")]
    OddSize(usize),
    #[error("matrix must be square (got {rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("det(V - V^T) must be 1 (got {0})")]
    NotUnimodularAntisymmetrization(BigInt),
    #[error("transform must have determinant +1 or -1 (got {0})")]
    NotUnimodular(BigInt),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("epsilon must be +1 or -1 (got {0})")]
    BadEpsilon(BigInt),
    #[error("V + V^T is not definite")]
    NotDefinite,
    #[error("invalid Alexander polynomial {0}: {1}")]
    NotAlexanderPolynomial(LaurentPoly, &'static str),
}

impl From<MatrixError> for SeifertError {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::NotSquare { rows, cols } => SeifertError::NotSquare { rows, cols },
            other => SeifertError::SizeMismatch(other.to_string()),
        }
    }
}

/// An even-size integer matrix `V` with `det(V − Vᵀ) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix(IntMatrix);

/// Alexander polynomial, signature and determinant of a knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotInvariants {
    pub alexander: LaurentPoly,
    pub signature: i64,
    pub determinant: BigInt,
}

/// The two enlargement block patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnlargementKind {
    /// `[[0,0,0],[1,x,M],[0,Nᵀ,V]]`
    RowBorder,
    /// `[[0,1,0],[0,x,M],[0,Nᵀ,V]]`
    ColumnBorder,
}

/// The four bordered forms of an ε-unknotting operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BorderVariant {
    /// `[[ε,0,0],[1,x,M],[0,Nᵀ,W]]`, the standard operation.
    APlus,
    /// `[[ε,0,0],[−1,x,M],[0,Nᵀ,W]]`
    AMinus,
    /// `[[ε,1,0],[0,x,M],[0,Nᵀ,W]]`
    BPlus,
    /// `[[ε,−1,0],[0,x,M],[0,Nᵀ,W]]`
    BMinus,
}

impl BorderVariant {
    pub const ALL: [BorderVariant; 4] =
        [BorderVariant::APlus, BorderVariant::AMinus, BorderVariant::BPlus, BorderVariant::BMinus];
}

/// Parameters recovered from a literal bordered matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Border<K> {
    pub kind: K,
    pub x: BigInt,
    pub m: Vec<BigInt>,
    pub n: Vec<BigInt>,
    pub inner: SeifertMatrix,
}

/// Result of [`SeifertMatrix::try_reduce`].
pub type Reduction = Border<EnlargementKind>;

/// A literal ε-unknotting border, as recognised by
/// [`SeifertMatrix::as_unknotting_border`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknottingBorder {
    pub epsilon: i64,
    pub border: Border<BorderVariant>,
}

/// Output of [`SeifertMatrix::definite_2x2_normal_form`]:
/// `transform · (sign·V) · transformᵀ = normal = [[a, b+1], [b, c]]`
/// with `0 < 2b+1 ≤ min(a, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiniteNormalForm {
    pub normal: SeifertMatrix,
    pub transform: IntMatrix,
    pub sign: i64,
}

impl DefiniteNormalForm {
    pub fn a(&self) -> &BigInt {
        self.normal.0.get(0, 0)
    }

    pub fn b(&self) -> &BigInt {
        self.normal.0.get(1, 0)
    }

    pub fn c(&self) -> &BigInt {
        self.normal.0.get(1, 1)
    }
}

/// Why a matrix is known to have algebraic unknotting number one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UaCertificate {
    /// 2×2 with `det V ∈ {1, 2, 3, 5}`; carries the definite normal form.
    DefiniteDeterminant { det: BigInt, normal_form: DefiniteNormalForm },
    /// `Δ = h·t + h·t⁻¹ + 1 − 2h` with `h ∈ {1, 2, 3, 5}`.
    DegreeTwoAlexander { h: i64 },
}

impl fmt::Display for UaCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UaCertificate::DefiniteDeterminant { det, normal_form } => write!(
                f,
                "2x2 matrix with det V = {det} in {{1,2,3,5}}; definite normal form {} (sign {})",
                normal_form.normal, normal_form.sign
            ),
            UaCertificate::DegreeTwoAlexander { h } => {
                write!(f, "alexander = h*t + h*t^-1 + 1 - 2h with h = {h} in {{1,2,3,5}}")
            }
        }
    }
}

/// Semi-decision for `u_a = 1`: the available criteria are sufficient only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UaVerdict {
    Yes(UaCertificate),
    Unknown,
}

/// `(corner, x, M, N, inner)` of a bordered matrix.
type SplitBorder = ([[BigInt; 2]; 2], BigInt, Vec<BigInt>, Vec<BigInt>, SeifertMatrix);

const SMALL_UNKNOTTING_VALUES: [i64; 4] = [1, 2, 3, 5];

impl SeifertMatrix {
    /// Validates `m`: square, even size, `det(m − mᵀ) = 1`.
    pub fn new(m: IntMatrix) -> Result<Self, SeifertError> {
        if !m.is_square() {
            return Err(SeifertError::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if !m.rows().is_multiple_of(2) {
            return Err(SeifertError::OddSize(m.rows()));
        }
        let d = m.sub(&m.transpose()).det()?;
        if !d.is_one() {
            return Err(SeifertError::NotUnimodularAntisymmetrization(d));
        }
        Ok(Self(m))
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, SeifertError> {
        Self::new(IntMatrix::from_i64_rows(rows)?)
    }

    /// The 0×0 matrix.
    pub fn empty() -> Self {
        Self(IntMatrix::empty())
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    /// Half the size.
    pub fn genus(&self) -> usize {
        self.0.rows() / 2
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        self.0.get(i, j)
    }

    /// `tV − Vᵀ`.
    pub fn presentation_matrix(&self) -> LaurentMatrix {
        polymat::linear_pencil(&self.0, &self.0.transpose())
    }

    /// `V − tVᵀ`.
    pub fn reversed_pencil(&self) -> LaurentMatrix {
        polymat::linear_pencil(&self.0.transpose(), &self.0).map(|p| -p)
    }

    /// `Δ_V = t^{−n}·det(tV − Vᵀ)` for `V` of size `2n`.
    pub fn alexander(&self) -> LaurentPoly {
        let det = polymat::det_interpolation(&self.presentation_matrix());
        let delta = det.shift(-(self.genus() as i64));
        assert!(delta.is_bar_symmetric(), "Alexander polynomial {delta} of {self} is not symmetric");
        assert!(delta.eval_one().is_one(), "Alexander polynomial {delta} of {self} has Δ(1) ≠ 1");
        delta
    }

    /// Signature of `V + Vᵀ`.
    pub fn signature(&self) -> i64 {
        let s = self.0.add(&self.0.transpose()).signature().expect("V + V^T is symmetric");
        debug_assert!(s % 2 == 0);
        s
    }

    /// `|Δ_V(−1)|`; always odd.
    pub fn knot_determinant(&self) -> BigInt {
        let d = self.alexander().eval_minus_one().abs();
        assert!(d.is_odd(), "knot determinant {d} of {self} is even");
        d
    }

    pub fn invariants(&self) -> KnotInvariants {
        let alexander = self.alexander();
        let determinant = alexander.eval_minus_one().abs();
        KnotInvariants { alexander, signature: self.signature(), determinant }
    }

    /// `P·V·Pᵀ` for unimodular `P`.
    pub fn congruent_transform(&self, p: &IntMatrix) -> Result<SeifertMatrix, SeifertError> {
        if !p.is_square() || p.rows() != self.size() {
            return Err(SeifertError::SizeMismatch(format!(
                "transform is {}x{}, matrix is {}x{}",
                p.rows(),
                p.cols(),
                self.size(),
                self.size()
            )));
        }
        let d = p.det()?;
        if d.abs() != BigInt::one() {
            return Err(SeifertError::NotUnimodular(d));
        }
        Self::new(p.mul(&self.0)?.mul(&p.transpose())?)
    }

    fn bordered(
        &self,
        corner: [[i64; 2]; 2],
        x: &BigInt,
        m: &[BigInt],
        n: &[BigInt],
    ) -> Result<SeifertMatrix, SeifertError> {
        let s = self.size();
        if m.len() != s || n.len() != s {
            return Err(SeifertError::SizeMismatch(format!(
                "border vectors have lengths {} and {}, matrix has size {s}",
                m.len(),
                n.len()
            )));
        }
        let w = IntMatrix::from_fn(s + 2, s + 2, |i, j| match (i, j) {
            (0 | 1, 0 | 1) if (i, j) == (1, 1) => x.clone(),
            (0 | 1, 0 | 1) => BigInt::from(corner[i][j]),
            (0, _) | (_, 0) => BigInt::zero(),
            (1, j) => m[j - 2].clone(),
            (i, 1) => n[i - 2].clone(),
            (i, j) => self.0.get(i - 2, j - 2).clone(),
        });
        Self::new(w)
    }

    /// Enlargement by one of the two S-equivalence block patterns.
    pub fn enlarge(
        &self,
        kind: EnlargementKind,
        x: &BigInt,
        m: &[BigInt],
        n: &[BigInt],
    ) -> Result<SeifertMatrix, SeifertError> {
        let corner = match kind {
            EnlargementKind::RowBorder => [[0, 0], [1, 0]],
            EnlargementKind::ColumnBorder => [[0, 1], [0, 0]],
        };
        self.bordered(corner, x, m, n)
    }

    /// Border `self` (playing `W`) into an ε-unknotting result.
    pub fn unknotting_border(
        &self,
        epsilon: &BigInt,
        x: &BigInt,
        m: &[BigInt],
        n: &[BigInt],
        variant: BorderVariant,
    ) -> Result<SeifertMatrix, SeifertError> {
        let e = match epsilon.to_i64() {
            Some(e @ (1 | -1)) => e,
            _ => return Err(SeifertError::BadEpsilon(epsilon.clone())),
        };
        let corner = match variant {
            BorderVariant::APlus => [[e, 0], [1, 0]],
            BorderVariant::AMinus => [[e, 0], [-1, 0]],
            BorderVariant::BPlus => [[e, 1], [0, 0]],
            BorderVariant::BMinus => [[e, -1], [0, 0]],
        };
        self.bordered(corner, x, m, n)
    }

    fn split_border(&self) -> Option<SplitBorder> {
        let s = self.size();
        if s < 2 {
            return None;
        }
        let w = &self.0;
        if (2..s).any(|j| !w.get(0, j).is_zero() || !w.get(j, 0).is_zero()) {
            return None;
        }
        let corner = [[w.get(0, 0).clone(), w.get(0, 1).clone()], [w.get(1, 0).clone(), BigInt::zero()]];
        let m = (2..s).map(|j| w.get(1, j).clone()).collect();
        let n = (2..s).map(|i| w.get(i, 1).clone()).collect();
        // det(W − Wᵀ) = det(V − Vᵀ) for every border pattern with off-diagonal
        // corner entries differing by ±1.
        let inner = SeifertMatrix::new(w.trailing_block(2, 2)).ok()?;
        Some((corner, w.get(1, 1).clone(), m, n, inner))
    }

    /// Recognises a literal enlargement pattern and returns the inner matrix.
    /// Reductions hidden behind a congruence are not detected.
    pub fn try_reduce(&self) -> Option<Reduction> {
        let (corner, x, m, n, inner) = self.split_border()?;
        let pattern = |c: [[i64; 2]; 2]| {
            corner[0][0] == BigInt::from(c[0][0])
                && corner[0][1] == BigInt::from(c[0][1])
                && corner[1][0] == BigInt::from(c[1][0])
        };
        let kind = if pattern([[0, 0], [1, 0]]) {
            EnlargementKind::RowBorder
        } else if pattern([[0, 1], [0, 0]]) {
            EnlargementKind::ColumnBorder
        } else {
            return None;
        };
        Some(Border { kind, x, m, n, inner })
    }

    /// Recognises a literal ε-unknotting border of any of the four variants.
    pub fn as_unknotting_border(&self) -> Option<UnknottingBorder> {
        let (corner, x, m, n, inner) = self.split_border()?;
        let epsilon = match corner[0][0].to_i64() {
            Some(e @ (1 | -1)) => e,
            _ => return None,
        };
        let off = (corner[0][1].to_i64()?, corner[1][0].to_i64()?);
        let kind = match off {
            (0, 1) => BorderVariant::APlus,
            (0, -1) => BorderVariant::AMinus,
            (1, 0) => BorderVariant::BPlus,
            (-1, 0) => BorderVariant::BMinus,
            _ => return None,
        };
        Some(UnknottingBorder { epsilon, border: Border { kind, x, m, n, inner } })
    }

    /// Congruence normal form of a 2×2 matrix with definite symmetrisation.
    ///
    /// Gauss-reduces the positive definite form `q(x, y) = (x, y)·(sV)·(x, y)ᵀ`
    /// to `|B| ≤ a ≤ c`, makes the middle coefficient positive, and orders
    /// the off-diagonal entries so the upper one is the larger.
    pub fn definite_2x2_normal_form(&self) -> Result<DefiniteNormalForm, SeifertError> {
        if self.size() != 2 {
            return Err(SeifertError::SizeMismatch(format!(
                "definite normal form needs a 2x2 matrix, got {}x{}",
                self.size(),
                self.size()
            )));
        }
        let sym = self.0.add(&self.0.transpose());
        if !sym.det()?.is_positive() {
            return Err(SeifertError::NotDefinite);
        }
        let sign: i64 = if self.0.get(0, 0).is_positive() { 1 } else { -1 };
        let mut m = if sign == 1 { self.0.clone() } else { self.0.neg() };
        let mut p = IntMatrix::identity(2);

        let apply = |e: [[i64; 2]; 2], m: &mut IntMatrix, p: &mut IntMatrix| {
            let e = IntMatrix::from_i64_rows(&e).expect("2x2");
            *m = e.mul(m).and_then(|em| em.mul(&e.transpose())).expect("2x2");
            *p = e.mul(p).expect("2x2");
        };
        let middle = |m: &IntMatrix| m.get(0, 1) + m.get(1, 0);

        loop {
            let (a, b, c) = (m.get(0, 0).clone(), middle(&m), m.get(1, 1).clone());
            if a > c {
                apply([[0, 1], [1, 0]], &mut m, &mut p);
            } else if b.abs() > a {
                // e₁ ← e₁ − k·e₀ with k = round(B / 2a) leaves |B| ≤ a.
                let k = (&b + &a).div_floor(&(BigInt::from(2) * &a));
                let e = IntMatrix::from_rows(vec![vec![BigInt::one(), BigInt::zero()], vec![-k, BigInt::one()]])
                    .expect("2x2");
                m = e.mul(&m).and_then(|em| em.mul(&e.transpose())).expect("2x2");
                p = e.mul(&p).expect("2x2");
            } else {
                break;
            }
        }
        if middle(&m).is_negative() {
            apply([[1, 0], [0, -1]], &mut m, &mut p);
        }
        if m.get(0, 1) < m.get(1, 0) {
            apply([[0, 1], [1, 0]], &mut m, &mut p);
        }
        let normal = SeifertMatrix::new(m)?;
        let nf = DefiniteNormalForm { normal, transform: p, sign };
        let two_b_plus_one: BigInt = BigInt::from(2) * nf.b() + 1;
        debug_assert!(two_b_plus_one.is_positive());
        debug_assert!(&two_b_plus_one <= nf.a() && &two_b_plus_one <= nf.c());
        debug_assert_eq!(nf.normal.get(0, 1), &(nf.b() + 1));
        Ok(nf)
    }

    /// Sufficient conditions for algebraic unknotting number one.
    pub fn ua_is_one(&self) -> UaVerdict {
        if self.size() == 2 {
            let det = self.0.det().expect("square");
            if det.to_i64().is_some_and(|d| SMALL_UNKNOTTING_VALUES.contains(&d)) {
                let normal_form = self.definite_2x2_normal_form().expect("det V > 0 makes V + V^T definite");
                return UaVerdict::Yes(UaCertificate::DefiniteDeterminant { det, normal_form });
            }
        }
        ua_is_one_for_alexander(&self.alexander())
    }
}

/// If `delta = h·t + h·t⁻¹ + 1 − 2h` for some `h ≠ 0`, returns `h`.
pub fn degree_two_coefficient(delta: &LaurentPoly) -> Option<BigInt> {
    if delta.breadth() != Some(2) || delta.min_exponent() != Some(-1) || !delta.is_bar_symmetric() {
        return None;
    }
    let h = delta.coeff(1);
    (delta.coeff(0) == BigInt::one() - BigInt::from(2) * &h).then_some(h)
}

/// `u_a = 1` for every Seifert matrix with this Alexander polynomial, when
/// `Δ = h·t + h·t⁻¹ + 1 − 2h` with `h ∈ {1, 2, 3, 5}`.
pub fn ua_is_one_for_alexander(delta: &LaurentPoly) -> UaVerdict {
    match degree_two_coefficient(delta).and_then(|h| h.to_i64()) {
        Some(h) if SMALL_UNKNOTTING_VALUES.contains(&h) => UaVerdict::Yes(UaCertificate::DegreeTwoAlexander { h }),
        _ => UaVerdict::Unknown,
    }
}

/// Checks the realisation conditions `Δ(t⁻¹) = Δ(t)` and `Δ(1) = 1`.
pub fn check_alexander(delta: &LaurentPoly) -> Result<(), SeifertError> {
    if !delta.is_bar_symmetric() {
        return Err(SeifertError::NotAlexanderPolynomial(delta.clone(), "not symmetric under t -> t^-1"));
    }
    if !delta.eval_one().is_one() {
        return Err(SeifertError::NotAlexanderPolynomial(delta.clone(), "value at t = 1 is not 1"));
    }
    Ok(())
}

impl KnotInvariants {
    /// Builds and cross-checks a table row: `Δ` must be an Alexander
    /// polynomial, `σ` even, and `D = |Δ(−1)|`.
    pub fn checked(alexander: LaurentPoly, signature: i64, determinant: BigInt) -> Result<Self, SeifertError> {
        check_alexander(&alexander)?;
        if signature % 2 != 0 {
            return Err(SeifertError::NotAlexanderPolynomial(alexander, "signature must be even"));
        }
        if alexander.eval_minus_one().abs() != determinant {
            return Err(SeifertError::NotAlexanderPolynomial(alexander, "determinant is not |alexander(-1)|"));
        }
        Ok(Self { alexander, signature, determinant })
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix({})", self.0)
    }
}

impl TryFrom<IntMatrix> for SeifertMatrix {
    type Error = SeifertError;

    fn try_from(m: IntMatrix) -> Result<Self, SeifertError> {
        Self::new(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sm(rows: &[&[i64]]) -> SeifertMatrix {
        SeifertMatrix::from_i64_rows(rows).unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn trefoil() -> SeifertMatrix {
        sm(&[&[-1, 1], &[0, -1]])
    }

    #[test]
    fn validate_examples() {
        trefoil();
        assert_eq!(SeifertMatrix::new(IntMatrix::empty()).unwrap(), SeifertMatrix::empty());
        assert_eq!(
            SeifertMatrix::from_i64_rows(&[[0, 0], [0, 0]]),
            Err(SeifertError::NotUnimodularAntisymmetrization(BigInt::zero()))
        );
        assert_eq!(SeifertMatrix::from_i64_rows(&[[1]]), Err(SeifertError::OddSize(1)));
        assert!(matches!(
            SeifertMatrix::new(IntMatrix::zeros(2, 3)),
            Err(SeifertError::NotSquare { rows: 2, cols: 3 })
        ));
        assert!(SeifertMatrix::from_i64_rows(&[[0, 0], [1, 0]]).is_ok());
        assert!(SeifertMatrix::from_i64_rows(&[[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]).is_err());
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(trefoil().alexander(), p("t+t^-1-1"));
        assert!(SeifertMatrix::empty().alexander().is_one());
        assert_eq!(sm(&[&[1, 1], &[0, -1]]).alexander(), p("-t+3-t^-1"));
    }

    #[test]
    fn signature_examples() {
        assert_eq!(trefoil().signature(), -2);
        assert_eq!(SeifertMatrix::empty().signature(), 0);
        assert_eq!(sm(&[&[1, 1], &[0, -1]]).signature(), 0);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(trefoil().knot_determinant(), BigInt::from(3));
        assert_eq!(SeifertMatrix::empty().knot_determinant(), BigInt::one());
        assert_eq!(sm(&[&[1, 1], &[0, -1]]).knot_determinant(), BigInt::from(5));
        let inv = KnotInvariants::checked(p("-3t^2+12t-17+12t^-1-3t^-2"), -2, BigInt::from(47)).unwrap();
        assert_eq!(inv.determinant, BigInt::from(47));
    }

    #[test]
    fn congruence_examples() {
        let v = sm(&[&[1, 1], &[0, 1]]);
        assert_eq!(v.congruent_transform(&IntMatrix::identity(2)).unwrap(), v);
        let p_ = IntMatrix::from_i64_rows(&[[1, 0], [1, 1]]).unwrap();
        let w = v.congruent_transform(&p_).unwrap();
        assert_eq!(w, sm(&[&[1, 2], &[1, 3]]));
        assert_eq!(w.invariants(), v.invariants());
        assert_eq!(
            v.congruent_transform(&IntMatrix::from_i64_rows(&[[2, 0], [0, 1]]).unwrap()),
            Err(SeifertError::NotUnimodular(BigInt::from(2)))
        );
        assert!(matches!(v.congruent_transform(&IntMatrix::identity(4)), Err(SeifertError::SizeMismatch(_))));
    }

    #[test]
    fn enlarge_examples() {
        let e = SeifertMatrix::empty();
        let w = e.enlarge(EnlargementKind::RowBorder, &BigInt::from(5), &[], &[]).unwrap();
        assert_eq!(w, sm(&[&[0, 0], &[1, 5]]));
        assert!(w.alexander().is_one());
        let w = e.enlarge(EnlargementKind::ColumnBorder, &BigInt::zero(), &[], &[]).unwrap();
        assert_eq!(w, sm(&[&[0, 1], &[0, 0]]));
        assert!(w.alexander().is_one());
        for kind in [EnlargementKind::RowBorder, EnlargementKind::ColumnBorder] {
            let w = trefoil().enlarge(kind, &BigInt::from(-2), &big(&[1, 3]), &big(&[0, -1])).unwrap();
            assert_eq!(w.size(), 4);
            assert_eq!(w.invariants(), trefoil().invariants());
        }
        assert!(matches!(
            trefoil().enlarge(EnlargementKind::RowBorder, &BigInt::zero(), &big(&[1]), &big(&[1, 2])),
            Err(SeifertError::SizeMismatch(_))
        ));
    }

    #[test]
    fn reduce_examples() {
        let r = sm(&[&[0, 0], &[1, 5]]).try_reduce().unwrap();
        assert_eq!(r.inner, SeifertMatrix::empty());
        assert_eq!((r.kind, r.x), (EnlargementKind::RowBorder, BigInt::from(5)));
        assert!(trefoil().try_reduce().is_none());
        assert!(SeifertMatrix::empty().try_reduce().is_none());
        let w =
            trefoil().enlarge(EnlargementKind::ColumnBorder, &BigInt::from(7), &big(&[2, -3]), &big(&[4, 0])).unwrap();
        let r = w.try_reduce().unwrap();
        assert_eq!(r.kind, EnlargementKind::ColumnBorder);
        assert_eq!((r.m, r.n, r.inner), (big(&[2, -3]), big(&[4, 0]), trefoil()));
    }

    #[test]
    fn unknotting_border_examples() {
        let e = SeifertMatrix::empty();
        let w = e.unknotting_border(&BigInt::from(-1), &BigInt::from(-1), &[], &[], BorderVariant::APlus).unwrap();
        assert_eq!(w, sm(&[&[-1, 0], &[1, -1]]));
        assert_eq!(w.alexander(), p("t+t^-1-1"));
        let w = e.unknotting_border(&BigInt::one(), &BigInt::zero(), &[], &[], BorderVariant::BPlus).unwrap();
        assert_eq!(w, sm(&[&[1, 1], &[0, 0]]));
        assert!(w.alexander().is_one());
        assert_eq!(
            e.unknotting_border(&BigInt::from(2), &BigInt::zero(), &[], &[], BorderVariant::APlus),
            Err(SeifertError::BadEpsilon(BigInt::from(2)))
        );
    }

    #[test]
    fn border_variants_share_invariants() {
        let w = trefoil();
        for eps in [-1, 1] {
            let eps = BigInt::from(eps);
            let inv: Vec<_> = BorderVariant::ALL
                .iter()
                .map(|&v| {
                    let b = w.unknotting_border(&eps, &BigInt::from(2), &big(&[1, -1]), &big(&[0, 2]), v).unwrap();
                    let parsed = b.as_unknotting_border().unwrap();
                    assert_eq!(parsed.border.kind, v);
                    assert_eq!(parsed.border.inner, w);
                    b.invariants()
                })
                .collect();
            assert!(inv.windows(2).all(|p| p[0] == p[1]), "{inv:?}");
        }
    }

    #[test]
    fn normal_form_examples() {
        let nf = trefoil().definite_2x2_normal_form().unwrap();
        assert_eq!(nf.sign, -1);
        assert_eq!(nf.normal, sm(&[&[1, 1], &[0, 1]]));

        let v = sm(&[&[1, 0], &[1, 1]]);
        let nf = v.definite_2x2_normal_form().unwrap();
        assert_eq!(nf.sign, 1);
        assert_eq!((nf.a(), nf.b(), nf.c()), (&BigInt::one(), &BigInt::zero(), &BigInt::one()));
        let lhs = nf.transform.mul(v.matrix()).unwrap().mul(&nf.transform.transpose()).unwrap();
        assert_eq!(&lhs, nf.normal.matrix());

        assert_eq!(sm(&[&[1, 1], &[0, -1]]).definite_2x2_normal_form(), Err(SeifertError::NotDefinite));
    }

    #[test]
    fn normal_form_needs_reduction_steps() {
        // [[1,2],[1,3]] ~ [[1,1],[0,1]]: form x² + 3xy + 3y² reduces to x² + xy + y².
        let v = sm(&[&[1, 2], &[1, 3]]);
        let nf = v.definite_2x2_normal_form().unwrap();
        assert_eq!(nf.normal, sm(&[&[1, 1], &[0, 1]]));
        let v = sm(&[&[7, 10], &[9, 13]]);
        let nf = v.definite_2x2_normal_form().unwrap();
        let lhs = nf.transform.mul(v.matrix()).unwrap().mul(&nf.transform.transpose()).unwrap();
        assert_eq!(&lhs, nf.normal.matrix());
        assert_eq!(nf.transform.det().unwrap().abs(), BigInt::one());
        // ac − b(b+1) = det V is preserved
        assert_eq!(nf.normal.matrix().det().unwrap(), v.matrix().det().unwrap());
    }

    #[test]
    fn ua_examples() {
        assert!(matches!(trefoil().ua_is_one(), UaVerdict::Yes(UaCertificate::DefiniteDeterminant { .. })));
        assert_eq!(
            ua_is_one_for_alexander(&p("2t+2t^-1-3")),
            UaVerdict::Yes(UaCertificate::DegreeTwoAlexander { h: 2 })
        );
        assert_eq!(ua_is_one_for_alexander(&p("-3t^2+12t-17+12t^-1-3t^-2")), UaVerdict::Unknown);
        // h = −1 (figure-eight type): outside the certified set
        assert_eq!(sm(&[&[1, 1], &[0, -1]]).ua_is_one(), UaVerdict::Unknown);
        // 4x4 with trefoil polynomial is certified through its Alexander polynomial
        let w = trefoil().enlarge(EnlargementKind::RowBorder, &BigInt::from(3), &big(&[1, 1]), &big(&[0, 2])).unwrap();
        assert_eq!(w.ua_is_one(), UaVerdict::Yes(UaCertificate::DegreeTwoAlexander { h: 1 }));
        // det V = 6 is not covered
        assert_eq!(sm(&[&[2, 2], &[1, 4]]).ua_is_one(), UaVerdict::Unknown);
    }

    #[test]
    fn degree_two_detection() {
        assert_eq!(degree_two_coefficient(&p("t-1+t^-1")), Some(BigInt::one()));
        assert_eq!(degree_two_coefficient(&p("-t+3-t^-1")), Some(BigInt::from(-1)));
        assert_eq!(degree_two_coefficient(&p("t+t^-1")), None);
        assert_eq!(degree_two_coefficient(&p("1")), None);
    }
}
