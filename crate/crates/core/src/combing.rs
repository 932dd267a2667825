//! Artin combing of pure braids.
//!
//! `P_k = U_k ⋊ P_{k-1}` where `U_k` is free on `A_{1,k}, ..., A_{k-1,k}`
//! (the standard generators `p_{i,k}`). Combing writes a pure braid as
//! `w_k · w_{k-1} ⋯ w_2` with each `w_j` a free word in the `A_{i,j}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::braid::{pure_gen, BraidWord, PureGenSpec};
use crate::error::{Error, Result};
use crate::free::FreeWord;

/// Abelianization of a pure braid: `e_{i,j}` is the exponent of `p_{i,j}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentVector {
    strands: usize,
    entries: BTreeMap<(usize, usize), i64>,
}

impl ExponentVector {
    pub fn zero(strands: usize) -> Self {
        let mut entries = BTreeMap::new();
        for i in 1..=strands {
            for j in (i + 1)..=strands {
                entries.insert((i, j), 0);
            }
        }
        ExponentVector { strands, entries }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Entry for the unordered pair `{i, j}`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        let key = if i < j { (i, j) } else { (j, i) };
        self.entries.get(&key).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|&v| v == 0)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        let mut out = self.clone();
        for (k, v) in &other.entries {
            *out.entries.entry(*k).or_insert(0) += v;
        }
        out
    }
}

/// Signed crossing counts between every pair of strands (strands are named
/// by their starting position).
pub(crate) fn crossing_counts(word: &BraidWord) -> BTreeMap<(usize, usize), i64> {
    let mut at: Vec<usize> = (1..=word.strands()).collect();
    let mut counts = BTreeMap::new();
    for &l in word.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (a, b) = (at[i], at[i + 1]);
        *counts.entry((a.min(b), a.max(b))).or_insert(0) += l.signum() as i64;
        at.swap(i, i + 1);
    }
    counts
}

pub fn exponent_vector(p: &BraidWord) -> Result<ExponentVector> {
    p.require_pure()?;
    let mut e = ExponentVector::zero(p.strands());
    for ((a, b), c) in crossing_counts(p) {
        if c % 2 != 0 {
            return Err(Error::Invalid(format!(
                "odd signed crossing count {c} between strands {a} and {b} of a pure braid"
            )));
        }
        e.entries.insert((a, b), c / 2);
    }
    Ok(e)
}

pub fn is_in_p_prime(p: &BraidWord) -> Result<bool> {
    Ok(exponent_vector(p)?.is_zero())
}

/// Layers `w_k, w_{k-1}, ..., w_2`; `layers[n]` is a word in the generators
/// `A_{i,j}` with `j = k - n`, stored as a free word in `x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombedForm {
    strands: usize,
    layers: Vec<FreeWord>,
}

impl CombedForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Pairs `(j, layer)` from `j = k` down to `j = 2`.
    pub fn layers(&self) -> impl Iterator<Item = (usize, &FreeWord)> {
        let k = self.strands;
        self.layers.iter().enumerate().map(move |(n, w)| (k - n, w))
    }

    pub fn layer(&self, j: usize) -> &FreeWord {
        &self.layers[self.strands - j]
    }

    pub fn is_trivial(&self) -> bool {
        self.layers.iter().all(FreeWord::is_empty)
    }

    /// Re-expands every `A_{i,j}` through [`pure_gen`] and concatenates the
    /// layers `k, ..., 2`.
    pub fn expand(&self) -> BraidWord {
        let mut out = BraidWord::identity(self.strands);
        for (j, layer) in self.layers() {
            out.extend_raw(&expand_layer(layer, j, self.strands));
        }
        out.free_reduce()
    }
}

/// A free word in `A_{1,j}, ..., A_{j-1,j}` as a braid in `B_k`.
pub fn expand_layer(layer: &FreeWord, j: usize, strands: usize) -> BraidWord {
    let mut out = BraidWord::identity(strands);
    for &l in layer.letters() {
        let g = pure_gen(PureGenSpec::new(l.unsigned_abs() as usize, j), strands)
            .expect("layer generators are valid by construction");
        if l > 0 {
            out.extend_raw(&g);
        } else {
            out.extend_raw(&g.invert());
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct CombedLetterJson {
    i: usize,
    j: usize,
    sign: i32,
}

#[derive(Serialize, Deserialize)]
struct CombedFormJson {
    k: usize,
    layers: Vec<Vec<CombedLetterJson>>,
}

impl Serialize for CombedForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let layers = self
            .layers()
            .map(|(j, w)| {
                w.letters()
                    .iter()
                    .map(|&l| CombedLetterJson {
                        i: l.unsigned_abs() as usize,
                        j,
                        sign: l.signum(),
                    })
                    .collect()
            })
            .collect();
        CombedFormJson {
            k: self.strands,
            layers,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CombedForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CombedFormJson::deserialize(d)?;
        let k = raw.k;
        if raw.layers.len() != k.saturating_sub(1) {
            return Err(D::Error::custom(format!(
                "expected {} layers",
                k.saturating_sub(1)
            )));
        }
        let mut layers = Vec::new();
        for (n, layer) in raw.layers.into_iter().enumerate() {
            let j = k - n;
            let mut letters = Vec::new();
            for l in layer {
                if l.j != j || l.i == 0 || l.i >= j || l.sign.abs() != 1 {
                    return Err(D::Error::custom("bad combed letter"));
                }
                letters.push(l.sign * l.i as i32);
            }
            layers.push(FreeWord::from_letters(letters));
        }
        Ok(CombedForm {
            strands: k.max(1),
            layers,
        })
    }
}

pub fn comb(p: &BraidWord) -> Result<CombedForm> {
    p.require_pure()?;
    let k = p.strands();
    let mut layers = Vec::with_capacity(k.saturating_sub(1));
    let mut word = p.free_reduce().letters().to_vec();
    for j in (2..=k).rev() {
        let (layer, rest) = peel_last_strand(&word, j);
        layers.push(layer);
        word = rest;
    }
    debug_assert!(word.is_empty());
    Ok(CombedForm { strands: k, layers })
}

/// Splits a pure braid word on `j` strands into the free word `w_j` (in the
/// `A_{i,j}`) and the word on `j - 1` strands left after deleting strand `j`.
///
/// Strand `j` is tracked through the word. Each crossing that carries it
/// across position `i` contributes a conjugate of `A_{i,j}^{±1}` by the part
/// of the braid already seen on the other strands; that conjugate is read
/// off from the action of those strands on `U_j`, which sends
/// `σ_m: x_m ↦ x_{m+1}, x_{m+1} ↦ x_{m+1}⁻¹ x_m x_{m+1}`.
fn peel_last_strand(word: &[i32], j: usize) -> (FreeWord, Vec<i32>) {
    let mut pos = j;
    let mut conj: Vec<FreeWord> = (1..j).map(FreeWord::generator).collect();
    let mut layer = FreeWord::identity();
    let mut rest = Vec::new();
    for &l in word {
        let i = l.unsigned_abs() as usize;
        let e = l.signum();
        if pos == i + 1 {
            if e < 0 {
                layer.append_inverse(&conj[i - 1]);
            }
            pos = i;
        } else if pos == i {
            if e > 0 {
                layer.append(&conj[i - 1]);
            }
            pos = i + 1;
        } else {
            let m = if i > pos { i - 1 } else { i };
            rest.push(e * m as i32);
            let a = conj[m - 1].clone();
            let b = conj[m].clone();
            if e > 0 {
                let mut w = b.inverse();
                w.append(&a);
                w.append(&b);
                conj[m - 1] = b;
                conj[m] = w;
            } else {
                let mut w = a.clone();
                w.append(&b);
                w.append_inverse(&a);
                conj[m - 1] = w;
                conj[m] = a;
            }
        }
    }
    debug_assert_eq!(pos, j, "input was not pure");
    (layer, rest)
}

/// One factor `c [x_a, x_b]^sign c⁻¹` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorFactor {
    pub conjugator: Vec<i32>,
    pub a: usize,
    pub b: usize,
    pub sign: i32,
}

impl CommutatorFactor {
    pub fn conjugator_word(&self) -> FreeWord {
        FreeWord::from_letters(self.conjugator.clone())
    }

    pub fn to_free_word(&self) -> FreeWord {
        let mut comm =
            FreeWord::commutator(&FreeWord::generator(self.a), &FreeWord::generator(self.b));
        if self.sign < 0 {
            comm = comm.inverse();
        }
        self.conjugator_word().conjugate(&comm)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CommutatorDecomposition {
    pub factors: Vec<CommutatorFactor>,
}

impl CommutatorDecomposition {
    pub fn reassemble(&self) -> FreeWord {
        let mut w = FreeWord::identity();
        for f in &self.factors {
            w.append(&f.to_free_word());
        }
        w
    }
}

/// Writes a free word with all exponent sums zero as a product of conjugated
/// commutators of generators.
///
/// The lowest-index generator `a` present is collected first: its leftmost
/// pair of consecutive occurrences with opposite signs, `a^s m a^{-s}`, is
/// cancelled by moving `a^s` rightwards through `m` one letter at a time,
/// each transposition emitting one factor. The remainder is then freely
/// reduced and the process repeats.
pub fn decompose_layer(layer: &FreeWord) -> Result<CommutatorDecomposition> {
    for g in 1..=layer.max_generator() {
        if layer.exponent_sum(g) != 0 {
            return Err(Error::NonzeroExponentSum { generator: g });
        }
    }
    let mut factors = Vec::new();
    let mut w: Vec<i32> = layer.letters().to_vec();
    while let Some(a) = w.iter().map(|l| l.abs()).min() {
        let occurrences: Vec<usize> = (0..w.len()).filter(|&n| w[n].abs() == a).collect();
        let (p, q) = occurrences
            .windows(2)
            .map(|pair| (pair[0], pair[1]))
            .find(|&(p, q)| w[p] == -w[q])
            .expect("zero exponent sum forces a sign change");
        let s = w[p].signum();
        let mut prefix = FreeWord::reduced(w[..p].iter().copied());
        for &letter in &w[p + 1..q] {
            let b = letter.abs();
            let d = letter.signum();
            // [a^s, b^d] as a conjugate of [a, b]^{±1}
            let (local, sign): (Vec<i32>, i32) = match (s > 0, d > 0) {
                (true, true) => (vec![], 1),
                (false, true) => (vec![-a], -1),
                (true, false) => (vec![-b], -1),
                (false, false) => (vec![-b, -a], 1),
            };
            let mut c = prefix.clone();
            for x in local {
                c.push(x);
            }
            factors.push(CommutatorFactor {
                conjugator: c.into_letters(),
                a: a as usize,
                b: b as usize,
                sign,
            });
            prefix.push(letter);
        }
        let mut next: Vec<i32> = w[..p].to_vec();
        next.extend_from_slice(&w[p + 1..q]);
        next.extend_from_slice(&w[q + 1..]);
        w = FreeWord::reduced(next).into_letters();
    }
    Ok(CommutatorDecomposition { factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::commutator;
    use crate::word_problem::braid_eq;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn pg(i: usize, j: usize, k: usize) -> BraidWord {
        pure_gen(PureGenSpec::new(i, j), k).unwrap()
    }

    #[test]
    fn exponent_vector_of_generators() {
        let e = exponent_vector(&pg(1, 2, 3)).unwrap();
        assert_eq!(e.get(1, 2), 1);
        assert_eq!(e.get(1, 3), 0);
        assert_eq!(e.get(2, 3), 0);
        let c = commutator(&pg(1, 2, 3), &pg(2, 3, 3)).unwrap();
        assert!(exponent_vector(&c).unwrap().is_zero());
        assert_eq!(exponent_vector(&w("B3 1")), Err(Error::NotPure));
    }

    #[test]
    fn p_prime_membership() {
        assert!(is_in_p_prime(&w("B3")).unwrap());
        assert!(!is_in_p_prime(&pg(1, 3, 3)).unwrap());
        let c = commutator(&pg(1, 3, 4), &pg(2, 4, 4)).unwrap();
        assert!(is_in_p_prime(&c).unwrap());
    }

    #[test]
    fn comb_of_a_generator() {
        let c = comb(&w("B3 2 1 1 -2")).unwrap();
        assert_eq!(c.layer(3).letters(), &[1]);
        assert!(c.layer(2).is_empty());
        assert!(comb(&w("B4")).unwrap().is_trivial());
        assert!(comb(&w("B1")).unwrap().is_trivial());
    }

    #[test]
    fn comb_round_trip_small() {
        let p = pg(1, 2, 4)
            .compose(&pg(2, 4, 4))
            .unwrap()
            .compose(&pg(1, 3, 4).invert())
            .unwrap()
            .compose(&pg(3, 4, 4))
            .unwrap();
        let c = comb(&p).unwrap();
        assert!(braid_eq(&c.expand(), &p).unwrap());
    }

    #[test]
    fn combed_form_json_round_trip() {
        let c = comb(&w("B3 2 1 1 -2 1 1")).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(
            s,
            r#"{"k":3,"layers":[[{"i":1,"j":3,"sign":1}],[{"i":1,"j":2,"sign":1}]]}"#
        );
        assert_eq!(serde_json::from_str::<CombedForm>(&s).unwrap(), c);
    }

    #[test]
    fn decompose_trivial_cases() {
        assert!(decompose_layer(&FreeWord::identity())
            .unwrap()
            .factors
            .is_empty());
        let d = decompose_layer(&FreeWord::reduced([1, 2, -1, -2])).unwrap();
        assert_eq!(
            d.factors,
            vec![CommutatorFactor {
                conjugator: vec![],
                a: 1,
                b: 2,
                sign: 1
            }]
        );
        assert_eq!(
            decompose_layer(&FreeWord::reduced([1, 2, -1])),
            Err(Error::NonzeroExponentSum { generator: 2 })
        );
    }

    #[test]
    fn decompose_unreduced_product_of_inverse_commutators() {
        let input = FreeWord::from_letters(vec![1, 2, -1, -2, 2, 1, -2, -1]);
        let d = decompose_layer(&input).unwrap();
        assert_eq!(d.factors.len(), 2);
        assert_eq!(d.reassemble(), input.free_reduce());
    }
}
