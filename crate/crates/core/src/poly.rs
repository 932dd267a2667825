//! Exact Laurent polynomials with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + by, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, by: &BigInt) -> Self {
        if by.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c * by)).collect(),
        }
    }

    /// Substitutes `x ↦ x^factor` (factor may be negative).
    pub fn scale_exponents(&self, factor: i64) -> Self {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, c)| (e * factor, c.clone())))
    }

    /// Divides every exponent by `d`; `None` if some exponent is not a
    /// multiple of `d`.
    pub fn divide_exponents(&self, d: i64) -> Option<Self> {
        if self.terms.keys().any(|e| e % d != 0) {
            return None;
        }
        Some(LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e / d, c.clone()))
                .collect(),
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let d_hi = divisor.max_exp()?;
        let d_lo = divisor.min_exp()?;
        let d_lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let floor = match self.min_exp() {
            Some(lo) => lo - d_lo,
            None => return Some(LaurentPoly::zero()),
        };
        while let Some(r_hi) = rem.max_exp() {
            let shift = r_hi - d_hi;
            if shift < floor {
                return None;
            }
            let (q, r) = rem.coeff(r_hi).div_rem(&d_lead);
            if !r.is_zero() {
                return None;
            }
            rem = &rem - &divisor.shift(shift).scale(&q);
            quot.add_term(shift, q);
        }
        Some(quot)
    }

    /// Writes the polynomial in the variable `var`, highest power first.
    pub fn format(&self, var: &str) -> String {
        format_terms(
            self.terms.iter().rev().map(|(&e, c)| (e.to_string(), c)),
            var,
        )
    }
}

pub(crate) fn format_terms<'a>(
    terms: impl Iterator<Item = (String, &'a BigInt)>,
    var: &str,
) -> String {
    let mut out = String::new();
    for (exp, c) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if exp == "0" {
            out.push_str(&mag.to_string());
        } else {
            let power = if exp == "1" {
                var.to_string()
            } else {
                format!("{var}^{exp}")
            };
            if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}*{power}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format("x"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

/// Serialized form: `{"var": "t", "halfPowers": false, "terms": [[exp, "coeff"], ...]}`.
/// With `halfPowers` set, exponents count powers of `var^{1/2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    #[serde(rename = "halfPowers")]
    pub half_powers: bool,
    pub terms: Vec<(i64, String)>,
}

impl PolyJson {
    pub fn new(var: &str, half_powers: bool, poly: &LaurentPoly) -> Self {
        PolyJson {
            var: var.to_string(),
            half_powers,
            terms: poly.terms().map(|(e, c)| (e, c.to_string())).collect(),
        }
    }

    pub fn to_poly(&self) -> Result<LaurentPoly, String> {
        let mut p = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let c: BigInt = c.parse().map_err(|_| format!("bad coefficient {c:?}"))?;
            p.add_term(*e, c);
        }
        Ok(p)
    }
}
