//! The Alexander module `Λ^{2n} / (tV − Vᵀ)` and its Blanchfield pairing
//!
//! ```text
//! β(v, w) = vᵀ · (t − 1) · (V − tVᵀ)⁻¹ · w̄   (mod Λ)
//! ```
//!
//! Values are kept as unreduced fractions over `det(V − tVᵀ) = tⁿ·Δ_V`.
//! Since the leading coefficient of `Δ_V` need not be a unit there is no
//! canonical residue; equality in `Q(Λ)/Λ` is decided by divisibility of the
//! cross difference.

use std::fmt;

use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::matrix::Matrix;
use crate::polymat::{self, LaurentMatrix};
use crate::seifert::{BorderVariant, SeifertError, SeifertMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlanchfieldError {
    #[error("the 0x0 matrix presents the trivial module")]
    EmptyMatrix,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("not a literal a+ unknotting border of the given inner matrix: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
}

/// `A_V` presented by `tV − Vᵀ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulePresentation {
    pub matrix: LaurentMatrix,
    pub source: SeifertMatrix,
}

/// Element of `Λ^{2n}`, read in `A_V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleElement(pub Vec<LaurentPoly>);

/// An element `num / den` of `Q(Λ)/Λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionFraction {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl ModulePresentation {
    pub fn new(v: &SeifertMatrix) -> Result<Self, BlanchfieldError> {
        if v.size() == 0 {
            return Err(BlanchfieldError::EmptyMatrix);
        }
        let matrix = v.presentation_matrix();
        let det = polymat::det_interpolation(&matrix);
        let expected = v.alexander().shift(v.genus() as i64);
        assert!(det == expected || det == -&expected, "presentation determinant {det} is not ±t^n·Δ");
        Ok(Self { matrix, source: v.clone() })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    /// True iff `w` lies in the column span `(tV − Vᵀ)·Λ^{2n}`, i.e. is zero
    /// in `A_V`. Decided through the adjugate: `w = P·u` has a solution over
    /// `Λ` iff `adj(P)·w` is divisible by `det P` entrywise.
    pub fn is_relation(&self, w: &ModuleElement) -> bool {
        let adj = polymat::adjugate(&self.matrix);
        let det = polymat::det_interpolation(&self.matrix);
        (0..self.rank()).all(|i| {
            let s: LaurentPoly = (0..self.rank()).map(|j| adj.get(i, j) * &w.0[j]).sum();
            s.is_multiple_of(&det)
        })
    }

    /// Column `j` of the presentation matrix.
    pub fn relation(&self, j: usize) -> ModuleElement {
        ModuleElement((0..self.rank()).map(|i| self.matrix.get(i, j).clone()).collect())
    }
}

impl ModuleElement {
    pub fn zero(n: usize) -> Self {
        Self(vec![LaurentPoly::zero(); n])
    }

    /// Standard generator `e_i` of `Λ^n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = LaurentPoly::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, a: &LaurentPoly) -> Self {
        Self(self.0.iter().map(|c| a * c).collect())
    }

    pub fn add(&self, other: &ModuleElement) -> Self {
        assert_eq!(self.len(), other.len());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn bar(&self) -> Self {
        Self(self.0.iter().map(LaurentPoly::bar).collect())
    }
}

impl TorsionFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "torsion fraction with zero denominator");
        Self { num, den }
    }

    /// True iff the fraction lies in Λ.
    pub fn is_zero_mod_lambda(&self) -> bool {
        self.num.is_multiple_of(&self.den)
    }

    /// Equality in `Q(Λ)/Λ`.
    pub fn equals_mod_lambda(&self, other: &TorsionFraction) -> bool {
        fractions_equal(self, other)
    }

    pub fn bar(&self) -> Self {
        Self { num: self.num.bar(), den: self.den.bar() }
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn scale(&self, a: &LaurentPoly) -> Self {
        Self { num: a * &self.num, den: self.den.clone() }
    }
}

impl fmt::Display for TorsionFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}

/// `f ≡ g` in `Q(Λ)/Λ`: `f.num·g.den − g.num·f.den` is a Λ-multiple of
/// `f.den·g.den`.
pub fn fractions_equal(f: &TorsionFraction, g: &TorsionFraction) -> bool {
    let cross = &f.num * &g.den - &g.num * &f.den;
    cross.is_multiple_of(&(&f.den * &g.den))
}

/// The pairing of a fixed Seifert matrix, with `adj(V − tVᵀ)` and
/// `det(V − tVᵀ)` computed once.
#[derive(Debug, Clone)]
pub struct BlanchfieldForm {
    size: usize,
    /// `(t − 1)·adj(V − tVᵀ)`
    kernel: LaurentMatrix,
    det: LaurentPoly,
}

impl BlanchfieldForm {
    pub fn new(v: &SeifertMatrix) -> Self {
        let pencil = v.reversed_pencil();
        let det = polymat::det_interpolation(&pencil);
        let t_minus_one = LaurentPoly::from_i64_terms([(1, 1), (0, -1)]);
        let kernel = polymat::adjugate(&pencil).map(|p| &t_minus_one * p);
        Self { size: v.size(), kernel, det }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `det(V − tVᵀ)`, the common denominator of every value.
    pub fn denominator(&self) -> &LaurentPoly {
        &self.det
    }

    pub fn pair(&self, v: &ModuleElement, w: &ModuleElement) -> Result<TorsionFraction, BlanchfieldError> {
        if v.len() != self.size || w.len() != self.size {
            return Err(BlanchfieldError::SizeMismatch(format!(
                "elements of length {} and {} for a module of rank {}",
                v.len(),
                w.len(),
                self.size
            )));
        }
        let w_bar = w.bar();
        let mut num = LaurentPoly::zero();
        for i in (0..self.size).filter(|&i| !v.0[i].is_zero()) {
            let row: LaurentPoly = (0..self.size).map(|j| self.kernel.get(i, j) * &w_bar.0[j]).sum();
            num += &v.0[i] * &row;
        }
        Ok(TorsionFraction::new(num, self.det.clone()))
    }

    /// `β(e_i, e_j)` for all standard generators.
    pub fn gram_matrix(&self) -> Matrix<TorsionFraction> {
        Matrix::from_fn(self.size, self.size, |i, j| {
            TorsionFraction::new(self.kernel.get(i, j).clone(), self.det.clone())
        })
    }
}

pub fn pairing(v: &SeifertMatrix, x: &ModuleElement, y: &ModuleElement) -> Result<TorsionFraction, BlanchfieldError> {
    BlanchfieldForm::new(v).pair(x, y)
}

pub fn diagonal_pairing_matrix(v: &SeifertMatrix) -> Matrix<TorsionFraction> {
    BlanchfieldForm::new(v).gram_matrix()
}

/// Outcome of comparing the first self-pairing of an a+ border with the
/// predicted `ε·Δ_inner / Δ_bordered`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainTheoremCheck {
    pub epsilon: i64,
    pub entry: TorsionFraction,
    pub expected: TorsionFraction,
    pub holds: bool,
    /// Whether the entry also equals `−ε·Δ_inner / Δ_bordered`.
    pub opposite_sign_holds: bool,
}

/// For `bordered = [[ε,0,0],[1,x,M],[0,Nᵀ,inner]]`, checks
/// `β(e₁, e₁) ≡ ε·Δ_inner / Δ_bordered (mod Λ)`.
pub fn main_theorem_check(
    bordered: &SeifertMatrix,
    inner: &SeifertMatrix,
) -> Result<MainTheoremCheck, BlanchfieldError> {
    let parsed = bordered
        .as_unknotting_border()
        .ok_or_else(|| BlanchfieldError::ShapeMismatch("no unknotting border pattern".into()))?;
    if parsed.border.kind != BorderVariant::APlus {
        return Err(BlanchfieldError::ShapeMismatch(format!("border variant is {:?}", parsed.border.kind)));
    }
    if &parsed.border.inner != inner {
        return Err(BlanchfieldError::ShapeMismatch("inner block differs from the given matrix".into()));
    }
    let form = BlanchfieldForm::new(bordered);
    let e1 = ModuleElement::basis(bordered.size(), 0);
    let entry = form.pair(&e1, &e1)?;
    let delta_inner = inner.alexander();
    let delta = bordered.alexander();
    let expected = TorsionFraction::new(delta_inner.scale(&parsed.epsilon.into()), delta);
    let holds = fractions_equal(&entry, &expected);
    let opposite_sign_holds = fractions_equal(&entry, &expected.neg());
    Ok(MainTheoremCheck { epsilon: parsed.epsilon, entry, expected, holds, opposite_sign_holds })
}

/// Both sides of the first-row expansion of `det(W − tWᵀ)` for the a+
/// border `W` of `inner`:
///
/// ```text
/// det(W − tWᵀ) = ε(1 − t)·det[[x(1−t), M − tN], [Nᵀ − tMᵀ, W′ − tW′ᵀ]] + t·det(W′ − tW′ᵀ)
/// ```
///
/// The right side is assembled from the parameters, not read off `W`.
pub fn border_determinant_expansion(
    inner: &SeifertMatrix,
    epsilon: &num_bigint::BigInt,
    x: &num_bigint::BigInt,
    m: &[num_bigint::BigInt],
    n: &[num_bigint::BigInt],
) -> Result<(LaurentPoly, LaurentPoly), BlanchfieldError> {
    let w = inner.unknotting_border(epsilon, x, m, n, BorderVariant::APlus)?;
    let lhs = polymat::det_interpolation(&w.reversed_pencil());

    let s = inner.size();
    let one_minus_t = LaurentPoly::from_i64_terms([(0, 1), (1, -1)]);
    let t = LaurentPoly::t();
    let inner_pencil = inner.reversed_pencil();
    let block = Matrix::from_fn(s + 1, s + 1, |i, j| match (i, j) {
        (0, 0) => one_minus_t.scale(x),
        (0, j) => LaurentPoly::constant(m[j - 1].clone()) - t.scale(&n[j - 1]),
        (i, 0) => LaurentPoly::constant(n[i - 1].clone()) - t.scale(&m[i - 1]),
        (i, j) => inner_pencil.get(i - 1, j - 1).clone(),
    });
    let rhs = one_minus_t.scale(epsilon) * polymat::det_bareiss(&block) + t * polymat::det_bareiss(&inner_pencil);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn frac(n: &str, d: &str) -> TorsionFraction {
        TorsionFraction::new(p(n), p(d))
    }

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::from_i64_rows(&[[-1, 1], [0, -1]]).unwrap()
    }

    #[test]
    fn presentation_examples() {
        let pres = ModulePresentation::new(&trefoil()).unwrap();
        assert_eq!(pres.matrix.get(0, 0), &p("-t+1"));
        assert_eq!(pres.matrix.get(0, 1), &p("t"));
        assert_eq!(pres.matrix.get(1, 0), &p("-1"));
        assert_eq!(pres.matrix.get(1, 1), &p("-t+1"));
        assert_eq!(polymat::det_interpolation(&pres.matrix), p("t^2-t+1"));
        assert_eq!(ModulePresentation::new(&SeifertMatrix::empty()), Err(BlanchfieldError::EmptyMatrix));
    }

    #[test]
    fn relations_are_zero_in_module() {
        let pres = ModulePresentation::new(&trefoil()).unwrap();
        assert!(pres.is_relation(&pres.relation(0)));
        assert!(pres.is_relation(&pres.relation(1).scale(&p("t^-2+5"))));
        assert!(!pres.is_relation(&ModuleElement::basis(2, 0)));
        // pairing against a relation vanishes mod Λ
        let form = BlanchfieldForm::new(&trefoil());
        let r = pres.relation(1);
        assert!(form.pair(&r, &ModuleElement::basis(2, 0)).unwrap().is_zero_mod_lambda());
        assert!(form.pair(&ModuleElement::basis(2, 1), &r).unwrap().is_zero_mod_lambda());
    }

    #[test]
    fn trefoil_pairing() {
        let e1 = ModuleElement::basis(2, 0);
        let b = pairing(&trefoil(), &e1, &e1).unwrap();
        assert_eq!(b, frac("t^2-2t+1", "t^2-t+1"));
        assert!(fractions_equal(&b, &frac("-1", "t+t^-1-1")));
        assert!(!fractions_equal(&b, &frac("1", "t+t^-1-1")));

        let zero = ModuleElement::zero(2);
        let e2 = ModuleElement::basis(2, 1);
        assert!(pairing(&trefoil(), &zero, &e2).unwrap().is_zero_mod_lambda());

        let t = p("t");
        let shifted = pairing(&trefoil(), &e1.scale(&t), &e2.scale(&t)).unwrap();
        assert!(fractions_equal(&shifted, &pairing(&trefoil(), &e1, &e2).unwrap()));

        assert!(matches!(pairing(&trefoil(), &ModuleElement::zero(3), &e1), Err(BlanchfieldError::SizeMismatch(_))));
    }

    #[test]
    fn fraction_equality_examples() {
        assert!(fractions_equal(&frac("t^2-2t+1", "t^2-t+1"), &frac("-1", "t+t^-1-1")));
        assert!(fractions_equal(&frac("0", "t+3"), &frac("t-1+t^-1", "t-1+t^-1")));
        assert!(!fractions_equal(&frac("1", "t+t^-1-1"), &frac("2", "t+t^-1-1")));
        assert!(frac("4t", "2").is_zero_mod_lambda());
        assert!(!frac("1", "2").is_zero_mod_lambda());
    }

    #[test]
    fn gram_matrix_of_trefoil() {
        let g = diagonal_pairing_matrix(&trefoil());
        assert!(fractions_equal(g.get(0, 0), &frac("-1", "t+t^-1-1")));
        for i in 0..2 {
            for j in 0..2 {
                assert!(fractions_equal(g.get(j, i), &g.get(i, j).bar()));
            }
        }
    }

    #[test]
    fn enlarged_trefoil_keeps_torsion() {
        use crate::seifert::EnlargementKind;
        let zero = vec![BigInt::from(0); 2];
        let w = trefoil().enlarge(EnlargementKind::RowBorder, &BigInt::from(0), &zero, &zero).unwrap();
        let g = diagonal_pairing_matrix(&w);
        let inner = diagonal_pairing_matrix(&trefoil());
        for i in 0..2 {
            for j in 0..2 {
                assert!(fractions_equal(g.get(i + 2, j + 2), inner.get(i, j)), "({i},{j})");
            }
        }
        // the border generators are torsion-free directions killed by the relations
        assert!(g.get(0, 0).is_zero_mod_lambda());
    }

    #[test]
    fn main_theorem_on_trefoil_border() {
        let inner = SeifertMatrix::empty();
        let w = inner.unknotting_border(&BigInt::from(-1), &BigInt::from(-1), &[], &[], BorderVariant::APlus).unwrap();
        let check = main_theorem_check(&w, &inner).unwrap();
        assert!(check.holds);
        assert!(!check.opposite_sign_holds);
        assert!(fractions_equal(&check.entry, &frac("-1", "t+t^-1-1")));

        assert!(matches!(main_theorem_check(&trefoil(), &inner), Err(BlanchfieldError::ShapeMismatch(_))));
        let b = inner.unknotting_border(&BigInt::from(1), &BigInt::from(0), &[], &[], BorderVariant::BPlus).unwrap();
        assert!(matches!(main_theorem_check(&b, &inner), Err(BlanchfieldError::ShapeMismatch(_))));
    }

    #[test]
    fn expansion_identity_small() {
        let m = [BigInt::from(1), BigInt::from(-2)];
        let n = [BigInt::from(0), BigInt::from(3)];
        let (lhs, rhs) = border_determinant_expansion(&trefoil(), &BigInt::from(1), &BigInt::from(2), &m, &n).unwrap();
        assert_eq!(lhs, rhs);
        let (lhs, rhs) =
            border_determinant_expansion(&SeifertMatrix::empty(), &BigInt::from(-1), &BigInt::from(-1), &[], &[])
                .unwrap();
        // t·Δ for the trefoil
        assert_eq!(lhs, p("t^2-t+1"));
        assert_eq!(lhs, rhs);
    }
}
