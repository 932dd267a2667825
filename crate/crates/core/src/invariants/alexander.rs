//! Alexander polynomial of a knot closure from the reduced Burau
//! representation.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::jones::require_knot;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

type Matrix = Vec<Vec<LaurentPoly>>;

fn t_pow(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(e, 1)
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// The 3×3 block of the reduced Burau image of `σ_i^{±1}`, acting on rows and
/// columns `i-1, i, i+1` (1-based) and clipped at the matrix edges.
fn block(positive: bool) -> [[LaurentPoly; 3]; 3] {
    let z = LaurentPoly::zero;
    let one = LaurentPoly::one;
    if positive {
        [
            [one(), t_pow(1), z()],
            [z(), LaurentPoly::monomial(1, -1), z()],
            [z(), one(), one()],
        ]
    } else {
        [
            [one(), one(), z()],
            [z(), LaurentPoly::monomial(-1, -1), z()],
            [z(), t_pow(-1), one()],
        ]
    }
}

/// `M ← M · ρ(σ_i^{±1})`. Only columns `i-2..=i` (0-based) change.
fn right_multiply(m: &mut Matrix, letter: i32) {
    let n = m.len() as i64;
    let i = letter.abs() as i64;
    let b = block(letter > 0);
    // block row/col r corresponds to matrix index i - 2 + r
    let idx = |r: usize| i - 2 + r as i64;
    for row in m.iter_mut() {
        let old: Vec<Option<LaurentPoly>> = (0..3)
            .map(|r| {
                (0..n)
                    .contains(&idx(r))
                    .then(|| row[idx(r) as usize].clone())
            })
            .collect();
        for (c, col) in (0..3).map(|c| (c, idx(c))) {
            if !(0..n).contains(&col) {
                continue;
            }
            let mut acc = LaurentPoly::zero();
            for (r, entry) in old.iter().enumerate() {
                if let Some(x) = entry {
                    if !b[r][c].is_zero() && !x.is_zero() {
                        acc = &acc + &(x * &b[r][c]);
                    }
                }
            }
            row[col as usize] = acc;
        }
    }
}

pub fn reduced_burau(b: &BraidWord) -> Vec<Vec<LaurentPoly>> {
    let mut m = identity(b.strands().saturating_sub(1));
    for &l in b.letters() {
        right_multiply(&mut m, l);
    }
    m
}

/// Fraction-free Gaussian elimination over `Z[t, t⁻¹]`.
fn determinant(mut m: Matrix) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// The Alexander polynomial, symmetric under `t ↔ t⁻¹` and with `Δ(1) = 1`.
pub fn alexander(b: &BraidWord) -> Result<LaurentPoly> {
    require_knot(b)?;
    let k = b.strands();
    let m = reduced_burau(b);
    let n = m.len();
    let mut i_minus_m = m;
    for (r, row) in i_minus_m.iter_mut().enumerate() {
        for (c, x) in row.iter_mut().enumerate() {
            *x = if r == c {
                &LaurentPoly::one() - x
            } else {
                -&*x
            };
        }
    }
    debug_assert_eq!(i_minus_m.len(), n);
    let det = determinant(i_minus_m);
    // (1 - t) / (1 - t^k) = 1 / (1 + t + ... + t^{k-1})
    let cyclotomic = LaurentPoly::from_terms((0..k as i64).map(|e| (e, 1)));
    let raw = det
        .div_exact(&cyclotomic)
        .ok_or_else(|| Error::Invalid("Burau determinant not divisible by [k]_t".into()))?;
    normalize(&raw)
}

fn normalize(p: &LaurentPoly) -> Result<LaurentPoly> {
    let (lo, hi) = match (p.min_exp(), p.max_exp()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::Invalid("vanishing Alexander polynomial".into())),
    };
    if (lo + hi) % 2 != 0 {
        return Err(Error::Invalid("Alexander polynomial of odd span".into()));
    }
    let sym = p.shift(-(lo + hi) / 2);
    let at_one = sym.eval_one();
    if at_one.abs() != BigInt::from(1) {
        return Err(Error::Invalid(format!(
            "Alexander polynomial has Δ(1) = {at_one}"
        )));
    }
    Ok(if at_one.is_negative() { -&sym } else { sym })
}

/// Second Conway coefficient, `Δ''(1) / 2` for the symmetric normalization.
pub fn conway_a2_of(alex: &LaurentPoly) -> BigInt {
    let sum: BigInt = alex.terms().map(|(e, c)| c * BigInt::from(e * e)).sum();
    debug_assert!((&sum % BigInt::from(2)).is_zero());
    sum / 2
}

pub fn conway_a2(b: &BraidWord) -> Result<BigInt> {
    Ok(conway_a2_of(&alexander(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn unknot_and_trefoil() {
        assert_eq!(alexander(&w("B1")).unwrap(), LaurentPoly::one());
        assert_eq!(alexander(&w("B3 1 2")).unwrap(), LaurentPoly::one());
        let trefoil = alexander(&w("B2 1 1 1")).unwrap();
        assert_eq!(trefoil, LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(conway_a2(&w("B2 1 1 1")).unwrap(), BigInt::from(1));
        assert_eq!(conway_a2(&w("B1")).unwrap(), BigInt::from(0));
    }

    #[test]
    fn figure_eight_and_cinquefoil() {
        let fig8 = alexander(&w("B3 1 -2 1 -2")).unwrap();
        assert_eq!(fig8, LaurentPoly::from_terms([(1, -1), (0, 3), (-1, -1)]));
        assert_eq!(conway_a2_of(&fig8), BigInt::from(-1));
        let five = alexander(&w("B2 1 1 1 1 1")).unwrap();
        assert_eq!(
            five,
            LaurentPoly::from_terms([(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)])
        );
    }

    #[test]
    fn mirror_has_same_polynomial() {
        assert_eq!(
            alexander(&w("B2 -1 -1 -1")).unwrap(),
            alexander(&w("B2 1 1 1")).unwrap()
        );
    }

    #[test]
    fn rejects_links() {
        assert_eq!(
            alexander(&w("B2 1 1")),
            Err(Error::NotAKnot { components: 2 })
        );
    }
}
