//! Strategies and independent oracles shared by the property tests.
#![allow(dead_code)]

use knotdist::laurent::LaurentPoly;
use knotdist::matrix::{IntMatrix, Matrix};
use knotdist::seifert::SeifertMatrix;
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn laurent(max_len: usize, max_coeff: i64) -> impl Strategy<Value = LaurentPoly> {
    (-4i64..=4, prop::collection::vec(-max_coeff..=max_coeff, 0..=max_len))
        .prop_map(|(lo, cs)| LaurentPoly::from_i64_terms(cs.into_iter().enumerate().map(|(i, c)| (lo + i as i64, c))))
}

pub fn nonzero_laurent(max_len: usize, max_coeff: i64) -> impl Strategy<Value = LaurentPoly> {
    laurent(max_len, max_coeff).prop_filter("nonzero", |p| !p.is_zero())
}

/// `S + J` with `S` symmetric and `J` the standard symplectic-type block,
/// entries of `S` in `[−r, r]`.
pub fn seifert_params(genus: std::ops::RangeInclusive<usize>, r: i64) -> impl Strategy<Value = SeifertMatrix> {
    genus.prop_flat_map(move |g| {
        let n = 2 * g;
        prop::collection::vec(-r..=r, n * (n + 1) / 2).prop_map(move |upper| {
            let mut s = vec![vec![0i64; n]; n];
            let pairs = (0..n).flat_map(|i| (i..n).map(move |j| (i, j)));
            for ((i, j), &x) in pairs.zip(&upper) {
                s[i][j] = x;
                s[j][i] = x;
            }
            for k in 0..g {
                s[2 * k][2 * k + 1] += 1;
            }
            SeifertMatrix::from_i64_rows(&s).expect("S + J is a Seifert matrix")
        })
    })
}

/// Product of elementary matrices `row_i += k·row_j`, possibly with a
/// row negation; determinant ±1.
pub fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    (prop::collection::vec((0..n.max(1), 0..n.max(1), -2i64..=2), 0..=5), any::<bool>()).prop_map(move |(ops, neg)| {
        let mut p = vec![vec![0i64; n]; n];
        for (i, row) in p.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (i, j, k) in ops {
            if i != j && n > 0 {
                let src = p[j].clone();
                for (a, b) in p[i].iter_mut().zip(src) {
                    *a += k * b;
                }
            }
        }
        if neg && n > 0 {
            p[0].iter_mut().for_each(|x| *x = -*x);
        }
        IntMatrix::from_i64_rows(&p).unwrap()
    })
}

pub fn bigs(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Leibniz formula over Λ: sum over all permutations.
pub fn det_leibniz(m: &Matrix<LaurentPoly>) -> LaurentPoly {
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = LaurentPoly::zero();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut term = LaurentPoly::one();
        for (i, &j) in p.iter().enumerate() {
            term = term * m.get(i, j);
        }
        total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// `t^{-n}·det(tV − Vᵀ)` by the Leibniz oracle.
pub fn alexander_oracle(v: &SeifertMatrix) -> LaurentPoly {
    let n = v.size();
    let m = Matrix::from_fn(n, n, |i, j| LaurentPoly::from_terms([(1, v.get(i, j).clone()), (0, -v.get(j, i))]));
    det_leibniz(&m).shift(-(n as i64 / 2))
}

/// Signature by counting sign changes of leading principal minors is not
/// robust to zero minors, so use eigenvalue-free Sylvester inertia: the
/// number of positive minus negative roots of the characteristic
/// polynomial, counted by Descartes' rule (exact for real-rooted
/// polynomials, which symmetric matrices have).
pub fn signature_oracle(v: &SeifertMatrix) -> i64 {
    let n = v.size();
    let s = Matrix::from_fn(n, n, |i, j| {
        let c = v.get(i, j) + v.get(j, i);
        // λ·δ_ij − s_ij, as a polynomial in λ (here written with t)
        if i == j {
            LaurentPoly::from_terms([(1, BigInt::from(1)), (0, -c)])
        } else {
            LaurentPoly::constant(-c)
        }
    });
    let chi = det_leibniz(&s);
    let coeffs: Vec<BigInt> = (0..=n as i64).map(|e| chi.coeff(e)).collect();
    let changes = |cs: &[BigInt]| {
        let signs: Vec<bool> = cs.iter().filter(|c| *c != &BigInt::from(0)).map(|c| *c > BigInt::from(0)).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count() as i64
    };
    let pos = changes(&coeffs);
    let neg_coeffs: Vec<BigInt> =
        coeffs.iter().enumerate().map(|(e, c)| if e % 2 == 1 { -c } else { c.clone() }).collect();
    let neg = changes(&neg_coeffs);
    pos - neg
}
