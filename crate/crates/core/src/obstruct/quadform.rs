//! Representation of `±d` by `q(x, y) = h²x² + (2h−1)xy + y²`.
//!
//! The discriminant is `1 − 4h`. For `h ≥ 1` the form is positive definite
//! and completing the square both ways gives
//!
//! ```text
//! 4q       = (2y + (2h−1)x)²   + (4h−1)x²
//! 4h²q     = (2h²x + (2h−1)y)² + (4h−1)y²
//! ```
//!
//! so every solution of `q = |d|` has `(4h−1)x² ≤ 4|d|` and
//! `(4h−1)y² ≤ 4h²|d|`; negative targets are impossible. Enumerating `x` in
//! that box and solving the quadratic for `y` is exhaustive.
//!
//! For `h ≤ −1` the form is indefinite. If `1 − 4h` is a square it splits
//! into two integral linear factors and the problem reduces to divisor
//! pairs of `d`. Otherwise a local check modulo small `m` may refute; failing
//! that, a bounded search is all that is available.

use num_integer::{Integer, Roots};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum QuadFormError {
    #[error("h must be nonzero")]
    ZeroH,
    #[error("d must be nonzero")]
    ZeroD,
    #[error("bound must be positive")]
    ZeroBound,
}

/// Why no solution exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refutation {
    /// Definite form, every `|x| ≤ x_max` tried (which forces `|y| ≤ y_max`).
    ExhaustedBox { x_max: i64, y_max: i64 },
    /// `q = (y − r1·x)(y − r2·x)` and no divisor pair of `d` yields an
    /// integral point.
    Factored { r1: i64, r2: i64 },
    /// `q ≢ ±d (mod modulus)` for every residue pair.
    Modular { modulus: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadFormVerdict {
    Witness { x: i64, y: i64, sign: i8 },
    Refuted(Refutation),
    Inconclusive { bound: u64 },
}

/// Largest modulus tried by the local check.
pub const MODULAR_CHECK_MAX: i64 = 64;

pub fn form_value(h: i64, x: i64, y: i64) -> i128 {
    let (h, x, y) = (h as i128, x as i128, y as i128);
    h * h * x * x + (2 * h - 1) * x * y + y * y
}

impl QuadFormVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, QuadFormVerdict::Refuted(_))
    }

    /// Re-substitutes a witness; other verdicts pass trivially.
    pub fn witness_holds(&self, h: i64, d: i64) -> bool {
        match *self {
            QuadFormVerdict::Witness { x, y, sign } => form_value(h, x, y) == sign as i128 * d as i128,
            _ => true,
        }
    }

    pub fn certificate(&self) -> String {
        match *self {
            QuadFormVerdict::Witness { x, y, sign } => format!("x={x} y={y} sign={sign:+}"),
            QuadFormVerdict::Refuted(Refutation::ExhaustedBox { x_max, y_max }) => {
                format!("exhausted |x|<={x_max} |y|<={y_max}")
            }
            QuadFormVerdict::Refuted(Refutation::Factored { r1, r2 }) => {
                format!("q=(y-({r1})x)(y-({r2})x), no divisor pair of d gives an integral point")
            }
            QuadFormVerdict::Refuted(Refutation::Modular { modulus }) => {
                format!("no solution modulo {modulus}")
            }
            QuadFormVerdict::Inconclusive { bound } => format!("searched |x|,|y|<={bound}"),
        }
    }
}

pub fn quadform_represents(h: i64, d: i64, bound: u64) -> Result<QuadFormVerdict, QuadFormError> {
    if h == 0 {
        return Err(QuadFormError::ZeroH);
    }
    if d == 0 {
        return Err(QuadFormError::ZeroD);
    }
    if bound == 0 {
        return Err(QuadFormError::ZeroBound);
    }
    let verdict = if h >= 1 { definite(h, d) } else { indefinite(h, d, bound) };
    debug_assert!(verdict.witness_holds(h, d));
    Ok(verdict)
}

/// 0, 1, −1, 2, −2, … up to `±max`.
fn symmetric_range(max: i64) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=max).flat_map(|k| [k, -k]))
}

/// Integer roots `y` of `q(x, y) = target`, larger first.
fn solve_for_y(h: i64, x: i64, target: i128) -> Vec<i64> {
    let (h, x) = (h as i128, x as i128);
    let b = (2 * h - 1) * x;
    let disc = b * b - 4 * (h * h * x * x - target);
    if disc < 0 {
        return Vec::new();
    }
    let r = disc.sqrt();
    if r * r != disc || (r - b).is_odd() {
        return Vec::new();
    }
    let mut roots = vec![(-b + r) / 2];
    if r != 0 {
        roots.push((-b - r) / 2);
    }
    roots.into_iter().filter_map(|y| i64::try_from(y).ok()).collect()
}

fn definite(h: i64, d: i64) -> QuadFormVerdict {
    let k = 4 * h as i128 - 1;
    let ad = (d as i128).abs();
    let x_max = (4 * ad / k).sqrt();
    let y_max = (4 * (h as i128) * (h as i128) * ad / k).sqrt();
    // q > 0 away from the origin, so only `sign·d = |d|` can be hit.
    let sign = d.signum() as i8;
    for x in symmetric_range(x_max as i64) {
        if let Some(&y) = solve_for_y(h, x, ad).first() {
            return QuadFormVerdict::Witness { x, y, sign };
        }
    }
    QuadFormVerdict::Refuted(Refutation::ExhaustedBox { x_max: x_max as i64, y_max: y_max as i64 })
}

fn indefinite(h: i64, d: i64, bound: u64) -> QuadFormVerdict {
    let disc = 1 - 4 * h as i128;
    let s = disc.sqrt();
    if s * s == disc {
        return factored(h, d, s);
    }
    if let Some(modulus) = local_obstruction(h, d) {
        return QuadFormVerdict::Refuted(Refutation::Modular { modulus });
    }
    let b = bound.min(i64::MAX as u64) as i64;
    for x in symmetric_range(b) {
        for sign in [1i8, -1] {
            if let Some(&y) = solve_for_y(h, x, sign as i128 * d as i128).iter().find(|y| y.unsigned_abs() <= bound) {
                return QuadFormVerdict::Witness { x, y, sign };
            }
        }
    }
    QuadFormVerdict::Inconclusive { bound }
}

/// `y² + (2h−1)xy + h²x² = (y − r1·x)(y − r2·x)` with `r1,2 = (1 − 2h ± s)/2`.
fn factored(h: i64, d: i64, s: i128) -> QuadFormVerdict {
    let r1 = (1 - 2 * h as i128 + s) / 2;
    let r2 = (1 - 2 * h as i128 - s) / 2;
    let ad = (d as i128).abs();
    let divisors: Vec<i128> = (1..).take_while(|u: &i128| u * u <= ad).filter(|u| ad % u == 0).collect();
    let mut best: Option<(i64, i64, i8)> = None;
    for sign in [1i8, -1] {
        let target = sign as i128 * d as i128;
        let mut candidates = Vec::new();
        for &u in &divisors {
            for (p, q) in [(u, ad / u), (ad / u, u)] {
                for (u1, v1) in [(p, q), (-p, -q)] {
                    let v1 = if target < 0 { -v1 } else { v1 };
                    // y − r1·x = u1, y − r2·x = v1  ⇒  (r2 − r1)·x = u1 − v1
                    if (u1 - v1) % (r2 - r1) != 0 {
                        continue;
                    }
                    let x = (u1 - v1) / (r2 - r1);
                    let y = u1 + r1 * x;
                    if let (Ok(x), Ok(y)) = (i64::try_from(x), i64::try_from(y)) {
                        candidates.push((x.unsigned_abs().max(y.unsigned_abs()), x, y));
                    }
                }
            }
        }
        if let Some(&(_, x, y)) = candidates.iter().min() {
            best = Some((x, y, sign));
            break;
        }
    }
    match best {
        Some((x, y, sign)) => QuadFormVerdict::Witness { x, y, sign },
        None => QuadFormVerdict::Refuted(Refutation::Factored { r1: r1 as i64, r2: r2 as i64 }),
    }
}

/// Smallest `m ≤ MODULAR_CHECK_MAX` for which neither `d` nor `−d` is a value
/// of `q` modulo `m`.
fn local_obstruction(h: i64, d: i64) -> Option<i64> {
    (2..=MODULAR_CHECK_MAX).find(|&m| {
        let mi = m as i128;
        let plus = (d as i128).rem_euclid(mi);
        let minus = (-(d as i128)).rem_euclid(mi);
        !(0..m).any(|x| {
            (0..m).any(|y| {
                let v = form_value(h, x, y).rem_euclid(mi);
                v == plus || v == minus
            })
        })
    })
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}
