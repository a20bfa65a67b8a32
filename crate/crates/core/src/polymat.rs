//! Determinants and adjugates of square matrices over Λ = ℤ[t, t⁻¹].
//!
//! Three independent determinant routes are provided:
//!
//! * [`det_interpolation`] evaluates at integer points and interpolates
//!   exactly over ℚ. This is the production path.
//! * [`det_bareiss`] runs fraction-free elimination directly over Λ.
//! * [`det_laplace`] is cofactor expansion, used for small adjugates.
//!
//! Each row is first multiplied by a power of `t` so that all entries are
//! ordinary polynomials; the total shift is undone at the end.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::laurent::{LaurentPoly, RationalLaurent};
use crate::matrix::{IntMatrix, Matrix};

pub type LaurentMatrix = Matrix<LaurentPoly>;

/// Largest size for which [`adjugate`] uses cofactor expansion.
pub const COFACTOR_ADJUGATE_MAX: usize = 6;

/// `t·a − b` entrywise, for integer matrices `a`, `b` of equal shape.
pub fn linear_pencil(a: &IntMatrix, b: &IntMatrix) -> LaurentMatrix {
    assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
    Matrix::from_fn(a.rows(), a.cols(), |i, j| LaurentPoly::from_terms([(1, a.get(i, j).clone()), (0, -b.get(i, j))]))
}

pub fn lift(a: &IntMatrix) -> LaurentMatrix {
    a.map(|x| LaurentPoly::constant(x.clone()))
}

pub fn mat_mul(a: &LaurentMatrix, b: &LaurentMatrix) -> LaurentMatrix {
    assert_eq!(a.cols(), b.rows());
    Matrix::from_fn(a.rows(), b.cols(), |i, j| (0..a.cols()).map(|k| a.get(i, k) * b.get(k, j)).sum())
}

/// Per-row exponent shifts that make every entry a polynomial, plus the
/// resulting degree bound for the determinant. `None` if a row is zero.
fn row_normalisation(m: &LaurentMatrix) -> Option<(Vec<i64>, usize)> {
    let mut shifts = Vec::with_capacity(m.rows());
    let mut degree = 0usize;
    for i in 0..m.rows() {
        let row = m.row(i);
        let lo = row.iter().filter_map(LaurentPoly::min_exponent).min()?;
        let hi = row.iter().filter_map(LaurentPoly::max_exponent).max()?;
        shifts.push(-lo);
        degree += (hi - lo) as usize;
    }
    Some((shifts, degree))
}

fn eval_poly(p: &LaurentPoly, x: &BigInt) -> BigInt {
    debug_assert!(p.min_exponent().is_none_or(|e| e >= 0));
    let Some(hi) = p.max_exponent() else {
        return BigInt::zero();
    };
    let mut acc = BigInt::zero();
    for e in (0..=hi).rev() {
        acc = acc * x + p.coeff(e);
    }
    acc
}

/// Interpolation nodes 0, 1, −1, 2, −2, …
fn node(k: usize) -> BigInt {
    let h = k.div_ceil(2) as i64;
    BigInt::from(if k % 2 == 1 { h } else { -h })
}

/// Newton interpolation through `(xs[i], ys[i])`, returned in monomial form.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> RationalLaurent {
    let n = xs.len();
    let xq: Vec<BigRational> = xs.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    let mut coef: Vec<BigRational> = ys.iter().map(|y| BigRational::from_integer(y.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xq[i] - &xq[i - level]);
        }
    }
    let mut p = RationalLaurent::zero();
    for k in (0..n).rev() {
        let linear = RationalLaurent::from_terms([(1, BigRational::one()), (0, -xq[k].clone())]);
        p = &p * &linear + RationalLaurent::constant(coef[k].clone());
    }
    p
}

/// Determinant by evaluation at `deg + 1` integer points and exact
/// interpolation.
pub fn det_interpolation(m: &LaurentMatrix) -> LaurentPoly {
    assert!(m.is_square());
    if m.rows() == 0 {
        return LaurentPoly::one();
    }
    let Some((shifts, degree)) = row_normalisation(m) else {
        return LaurentPoly::zero();
    };
    let shifted = Matrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).shift(shifts[i]));
    let xs: Vec<BigInt> = (0..=degree).map(node).collect();
    let ys: Vec<BigInt> = xs.iter().map(|x| shifted.map(|p| eval_poly(p, x)).det().expect("square")).collect();
    let det = interpolate(&xs, &ys).to_integer().expect("determinant of an integral matrix has integral coefficients");
    det.shift(-shifts.iter().sum::<i64>())
}

/// Fraction-free elimination over Λ; every division is exact.
pub fn det_bareiss(m: &LaurentMatrix) -> LaurentPoly {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return LaurentPoly::zero();
            };
            a.swap_rows(k, p);
            negate = !negate;
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.get(i, j) * &pivot - a.get(i, k) * a.get(k, j);
                let v = num.exact_div(&prev).expect("Bareiss step divides exactly");
                a.set(i, j, v);
            }
        }
        prev = pivot;
    }
    let d = a.get(n - 1, n - 1).clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Cofactor expansion along the first row, skipping zero entries.
pub fn det_laplace(m: &LaurentMatrix) -> LaurentPoly {
    assert!(m.is_square());
    let rows: Vec<usize> = (0..m.rows()).collect();
    let cols: Vec<usize> = (0..m.cols()).collect();
    laplace(m, &rows, &cols)
}

fn laplace(m: &LaurentMatrix, rows: &[usize], cols: &[usize]) -> LaurentPoly {
    match rows.len() {
        0 => LaurentPoly::one(),
        1 => m.get(rows[0], cols[0]).clone(),
        2 => m.get(rows[0], cols[0]) * m.get(rows[1], cols[1]) - m.get(rows[0], cols[1]) * m.get(rows[1], cols[0]),
        _ => {
            let r = rows[0];
            let mut acc = LaurentPoly::zero();
            for (k, &c) in cols.iter().enumerate() {
                let entry = m.get(r, c);
                if entry.is_zero() {
                    continue;
                }
                let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry * laplace(m, &rows[1..], &sub_cols);
                acc = if k % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

fn adjugate_with(m: &LaurentMatrix, det: impl Fn(&LaurentMatrix) -> LaurentPoly) -> LaurentMatrix {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return LaurentMatrix::empty();
    }
    // adj(M)[i][j] = (−1)^(i+j) det(M with row j and column i removed)
    Matrix::from_fn(n, n, |i, j| {
        let minor = det(&m.minor(j, i));
        if (i + j) % 2 == 0 {
            minor
        } else {
            -minor
        }
    })
}

/// Adjugate with every cofactor by cofactor expansion.
pub fn adjugate_cofactor(m: &LaurentMatrix) -> LaurentMatrix {
    adjugate_with(m, det_laplace)
}

/// Adjugate with every cofactor by evaluation and interpolation.
pub fn adjugate_interpolation(m: &LaurentMatrix) -> LaurentMatrix {
    adjugate_with(m, det_interpolation)
}

/// Transpose of the cofactor matrix, so that `adj(M)·M = det(M)·I`.
pub fn adjugate(m: &LaurentMatrix) -> LaurentMatrix {
    if m.rows() <= COFACTOR_ADJUGATE_MAX {
        adjugate_cofactor(m)
    } else {
        adjugate_interpolation(m)
    }
}
