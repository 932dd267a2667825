use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::bracket::kauffman_bracket;
use super::closure::closure_components;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::poly::{format_terms, LaurentPoly, PolyJson};

pub const DEFAULT_SERIES_BOUND: usize = 16;

/// Jones polynomial, stored with exponents counting powers of `t^{1/2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JonesPoly {
    half: LaurentPoly,
}

impl JonesPoly {
    pub fn from_half_powers(half: LaurentPoly) -> Self {
        JonesPoly { half }
    }

    pub fn half_powers(&self) -> &LaurentPoly {
        &self.half
    }

    /// The polynomial in integer powers of `t`, when there is one (always the
    /// case for knots).
    pub fn integer_powers(&self) -> Option<LaurentPoly> {
        self.half.divide_exponents(2)
    }

    /// `(-A)^{-3w} ⟨β̂⟩` with `t = A⁻⁴`.
    pub fn from_bracket(bracket: &LaurentPoly, writhe: i64) -> Self {
        let mut p = bracket.shift(-3 * writhe);
        if writhe.rem_euclid(2) == 1 {
            p = -&p;
        }
        // A^a = t^{-a/4} = (t^{1/2})^{-a/2}
        let half = p
            .divide_exponents(2)
            .expect("normalized bracket has even exponents");
        JonesPoly {
            half: half.scale_exponents(-1),
        }
    }

    pub fn mul(&self, other: &JonesPoly) -> JonesPoly {
        JonesPoly {
            half: &self.half * &other.half,
        }
    }

    pub fn to_json(&self) -> PolyJson {
        match self.integer_powers() {
            Some(p) => PolyJson::new("t", false, &p),
            None => PolyJson::new("t", true, &self.half),
        }
    }

    pub fn from_json(j: &PolyJson) -> std::result::Result<Self, String> {
        let p = j.to_poly()?;
        Ok(JonesPoly {
            half: if j.half_powers {
                p
            } else {
                p.scale_exponents(2)
            },
        })
    }

    /// Coefficients `u_0..=u_{d_max}` of `V(e^x) = Σ u_d x^d`.
    pub fn series(&self, d_max: usize) -> SeriesExpansion {
        let two = BigRational::from_integer(BigInt::from(2));
        let mut coeffs = vec![BigRational::zero(); d_max + 1];
        for (h, c) in self.half.terms() {
            let e = BigRational::from_integer(BigInt::from(h)) / &two;
            let mut power = BigRational::one();
            let mut factorial = BigRational::one();
            for (d, slot) in coeffs.iter_mut().enumerate() {
                if d > 0 {
                    power *= &e;
                    factorial *= BigRational::from_integer(BigInt::from(d));
                }
                *slot += BigRational::from_integer(c.clone()) * &power / &factorial;
            }
        }
        SeriesExpansion {
            order: d_max,
            coeffs,
        }
    }
}

impl fmt::Display for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.integer_powers() {
            Some(p) => p.format("t"),
            None => format_terms(
                self.half.terms().rev().map(|(h, c)| {
                    let exp = if h % 2 == 0 {
                        (h / 2).to_string()
                    } else {
                        format!("{h}/2")
                    };
                    (exp, c)
                }),
                "t",
            ),
        };
        f.write_str(&s)
    }
}

/// Truncated power series `u_0 + u_1 x + ... + u_order x^order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesExpansion {
    pub order: usize,
    #[serde(with = "rational_strings")]
    pub coeffs: Vec<BigRational>,
}

impl SeriesExpansion {
    pub fn coeff(&self, d: usize) -> &BigRational {
        &self.coeffs[d]
    }
}

impl fmt::Display for SeriesExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

pub(crate) mod rational_strings {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|c| c.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| {
                s.parse()
                    .map_err(|_| serde::de::Error::custom(format!("bad rational {s:?}")))
            })
            .collect()
    }
}

pub fn jones(b: &BraidWord) -> Result<JonesPoly> {
    let bracket = kauffman_bracket(b)?;
    Ok(JonesPoly::from_bracket(&bracket, b.writhe()))
}

pub(crate) fn require_knot(b: &BraidWord) -> Result<()> {
    let components = closure_components(b).count;
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    Ok(())
}

/// Coefficients of the Jones polynomial of a knot under `t = e^x`, up to
/// `x^{d_max}`; `u_d` is a finite-type invariant of order at most `d`.
pub fn jones_series(b: &BraidWord, d_max: usize) -> Result<SeriesExpansion> {
    if d_max > DEFAULT_SERIES_BOUND {
        return Err(Error::OrderTooLarge {
            order: d_max,
            bound: DEFAULT_SERIES_BOUND,
        });
    }
    require_knot(b)?;
    Ok(jones(b)?.series(d_max))
}
