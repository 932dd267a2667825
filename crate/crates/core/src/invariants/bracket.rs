//! Kauffman bracket of a braid closure through the Temperley–Lieb algebra.
//!
//! `σ_i ↦ A·1 + A⁻¹·e_i` and `σ_i⁻¹ ↦ A⁻¹·1 + A·e_i`. The word is multiplied
//! out in `TL_k`, one letter at a time, over the basis of planar matchings;
//! each basis diagram `D` then contributes `δ^{loops(D̂) - 1}` where `D̂` is
//! its closure and `δ = -A² - A⁻²`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

pub const DEFAULT_STRAND_BOUND: usize = 10;

/// The loop value `δ = -A² - A⁻²`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

pub fn kauffman_bracket(b: &BraidWord) -> Result<LaurentPoly> {
    kauffman_bracket_bounded(b, DEFAULT_STRAND_BOUND)
}

pub fn kauffman_bracket_bounded(b: &BraidWord, bound: usize) -> Result<LaurentPoly> {
    if b.strands() > bound {
        return Err(Error::TooManyStrands {
            strands: b.strands(),
            bound,
        });
    }
    if let Some(p) = run::<i128>(b) {
        return Ok(p);
    }
    Ok(run::<BigInt>(b).expect("big integers do not overflow"))
}

trait Coef: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    /// `self += x` (or `-= x`); false on overflow.
    fn accumulate(&mut self, x: &Self, negate: bool) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Coef for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn accumulate(&mut self, x: &Self, negate: bool) -> bool {
        let r = if negate {
            self.checked_sub(*x)
        } else {
            self.checked_add(*x)
        };
        match r {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coef for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn accumulate(&mut self, x: &Self, negate: bool) -> bool {
        if negate {
            *self -= x;
        } else {
            *self += x;
        }
        true
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Dense polynomial in `A` whose exponents all share one parity:
/// `coeffs[n]` is the coefficient of `A^{lo + 2n}`.
#[derive(Clone)]
struct Dense<C> {
    lo: i64,
    coeffs: Vec<C>,
}

impl<C: Coef> Dense<C> {
    fn hi(&self) -> i64 {
        self.lo + 2 * (self.coeffs.len() as i64 - 1)
    }

    fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| (self.lo + 2 * n as i64, c.to_big())),
        )
    }
}

/// `dst += ±A^shift · src`; false on overflow.
fn add_into<C: Coef>(dst: &mut Option<Dense<C>>, src: &Dense<C>, shift: i64, negate: bool) -> bool {
    let lo = src.lo + shift;
    let d = dst.get_or_insert_with(|| Dense {
        lo,
        coeffs: vec![C::zero(); src.coeffs.len()],
    });
    debug_assert_eq!((d.lo - lo).rem_euclid(2), 0);
    let hi = lo + 2 * (src.coeffs.len() as i64 - 1);
    if lo < d.lo || hi > d.hi() {
        let new_lo = lo.min(d.lo);
        let new_hi = hi.max(d.hi());
        let mut coeffs = vec![C::zero(); ((new_hi - new_lo) / 2 + 1) as usize];
        let off = ((d.lo - new_lo) / 2) as usize;
        for (n, c) in d.coeffs.drain(..).enumerate() {
            coeffs[off + n] = c;
        }
        d.lo = new_lo;
        d.coeffs = coeffs;
    }
    let off = ((lo - d.lo) / 2) as usize;
    for (n, c) in src.coeffs.iter().enumerate() {
        if !d.coeffs[off + n].accumulate(c, negate) {
            return false;
        }
    }
    true
}

/// Planar matchings on `2k` points: `0..k` along the top, `k..2k` along the
/// bottom.
struct TlBasis {
    k: usize,
    diagrams: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    /// `(D · e_i, closed a loop)` per diagram and generator, filled lazily.
    times_e: Vec<Vec<Option<(usize, bool)>>>,
}

impl TlBasis {
    fn new(k: usize) -> Self {
        let mut basis = TlBasis {
            k,
            diagrams: Vec::new(),
            index: HashMap::new(),
            times_e: Vec::new(),
        };
        let id: Vec<u8> = (0..2 * k).map(|x| ((x + k) % (2 * k)) as u8).collect();
        basis.intern(id);
        basis
    }

    fn intern(&mut self, d: Vec<u8>) -> usize {
        if let Some(&n) = self.index.get(&d) {
            return n;
        }
        let n = self.diagrams.len();
        self.index.insert(d.clone(), n);
        self.diagrams.push(d);
        self.times_e.push(vec![None; self.k.saturating_sub(1)]);
        n
    }

    /// `D · e_i` for 1-based `i`.
    fn times_e(&mut self, d: usize, i: usize) -> (usize, bool) {
        if let Some(r) = self.times_e[d][i - 1] {
            return r;
        }
        let k = self.k;
        let mut p = self.diagrams[d].clone();
        let (a, b) = (k + i - 1, k + i);
        let closed = p[a] as usize == b;
        if !closed {
            let (pa, pb) = (p[a] as usize, p[b] as usize);
            p[pa] = pb as u8;
            p[pb] = pa as u8;
            p[a] = b as u8;
            p[b] = a as u8;
        }
        let r = (self.intern(p), closed);
        self.times_e[d][i - 1] = Some(r);
        r
    }

    /// Number of loops in the closure of diagram `d`.
    fn closure_loops(&self, d: usize) -> u32 {
        let k = self.k;
        let p = &self.diagrams[d];
        let mut seen = vec![false; 2 * k];
        let mut loops = 0;
        for start in 0..2 * k {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut x = start;
            loop {
                seen[x] = true;
                let y = p[x] as usize;
                seen[y] = true;
                // closure strand joins top x with bottom k + x
                let z = if y < k { y + k } else { y - k };
                if seen[z] {
                    break;
                }
                x = z;
            }
        }
        loops
    }
}

fn run<C: Coef>(b: &BraidWord) -> Option<LaurentPoly> {
    let k = b.strands();
    let mut basis = TlBasis::new(k);
    let mut state: Vec<Option<Dense<C>>> = vec![Some(Dense {
        lo: 0,
        coeffs: vec![C::one()],
    })];
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let e = l.signum() as i64;
        let mut next: Vec<Option<Dense<C>>> = vec![None; basis.diagrams.len()];
        for d in 0..state.len() {
            let Some(poly) = state[d].take() else {
                continue;
            };
            if !add_into(&mut next[d], &poly, e, false) {
                return None;
            }
            let (target, closed) = basis.times_e(d, i);
            if next.len() < basis.diagrams.len() {
                next.resize(basis.diagrams.len(), None);
            }
            if closed {
                // A^{-e} δ = -A^{2-e} - A^{-2-e}
                if !add_into(&mut next[target], &poly, 2 - e, true)
                    || !add_into(&mut next[target], &poly, -2 - e, true)
                {
                    return None;
                }
            } else if !add_into(&mut next[target], &poly, -e, false) {
                return None;
            }
        }
        state = next;
    }
    let delta = loop_value();
    let mut powers = vec![LaurentPoly::one()];
    for _ in 0..k {
        let last = powers.last().unwrap();
        powers.push(last * &delta);
    }
    let mut total = LaurentPoly::zero();
    for (d, poly) in state.iter().enumerate() {
        if let Some(poly) = poly {
            let loops = basis.closure_loops(d) as usize;
            total = &total + &(&poly.to_laurent() * &powers[loops - 1]);
        }
    }
    Some(total)
}
