//! Delta moves as positioned commutator insertions, Δ-trivialization of
//! commutator-subgroup braids, marked braids with site sets, and alternating
//! sums over subsets of site sets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::braid::{commutator, pure_gen, shift_braid, BraidWord, PureGenSpec};
use crate::combing::{comb, decompose_layer, expand_layer, is_in_p_prime};
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::invariants::{conway_a2, jones_series};
use crate::lab::certificate::{CertNode, GammaCertificate};
use crate::word_problem::braid_eq;

/// Insertion of `[p_{h,i}, p_{i,j}]^sign` in front of letter `pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DeltaInsertion {
    pub pos: usize,
    pub h: usize,
    pub i: usize,
    pub j: usize,
    pub sign: i32,
}

impl DeltaInsertion {
    pub fn new(pos: usize, h: usize, i: usize, j: usize, sign: i32) -> Self {
        DeltaInsertion { pos, h, i, j, sign }
    }

    pub fn validate(&self, strands: usize) -> Result<()> {
        if self.h == 0 || self.h >= self.i || self.i >= self.j || self.j > strands {
            return Err(Error::InvalidTriple {
                h: self.h,
                i: self.i,
                j: self.j,
                strands,
            });
        }
        if self.sign != 1 && self.sign != -1 {
            return Err(Error::Invalid(format!(
                "insertion sign must be ±1, got {}",
                self.sign
            )));
        }
        Ok(())
    }

    /// The inserted block.
    pub fn relator(&self, strands: usize) -> Result<BraidWord> {
        self.validate(strands)?;
        delta_relator(self.h, self.i, self.j, self.sign, strands)
    }

    pub fn inverse_at(&self, pos: usize) -> DeltaInsertion {
        DeltaInsertion {
            pos,
            sign: -self.sign,
            ..*self
        }
    }
}

/// `[p_{h,i}, p_{i,j}]^sign` in `B_strands`.
pub fn delta_relator(h: usize, i: usize, j: usize, sign: i32, strands: usize) -> Result<BraidWord> {
    let a = pure_gen(PureGenSpec::new(h, i), strands)?;
    let b = pure_gen(PureGenSpec::new(i, j), strands)?;
    let c = commutator(&a, &b)?;
    Ok(if sign < 0 { c.invert() } else { c })
}

/// Splices every insertion into `base`. Positions always refer to the
/// original word, so the result does not depend on the order of `moves`.
pub fn apply_insertions(base: &BraidWord, moves: &[DeltaInsertion]) -> Result<BraidWord> {
    let mut sorted: Vec<&DeltaInsertion> = moves.iter().collect();
    sorted.sort_by_key(|m| m.pos);
    for pair in sorted.windows(2) {
        if pair[0].pos == pair[1].pos {
            return Err(Error::InsertionConflict {
                position: pair[0].pos,
            });
        }
    }
    let src = base.letters();
    let mut letters = Vec::with_capacity(src.len() + 16 * moves.len());
    let mut copied = 0;
    for m in sorted {
        if m.pos > src.len() {
            return Err(Error::PositionOutOfRange {
                position: m.pos,
                len: src.len(),
            });
        }
        let block = m.relator(base.strands())?;
        letters.extend_from_slice(&src[copied..m.pos]);
        letters.extend_from_slice(block.letters());
        copied = m.pos;
    }
    letters.extend_from_slice(&src[copied..]);
    Ok(BraidWord::from_raw(base.strands(), letters))
}

/// A braid-trivial base word together with delta insertions whose result is
/// braid-equal to `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaScript {
    pub base: BraidWord,
    pub moves: Vec<DeltaInsertion>,
    pub target: BraidWord,
}

impl DeltaScript {
    pub fn apply(&self) -> Result<BraidWord> {
        apply_insertions(&self.base, &self.moves)
    }

    /// Checks that the base is trivial and the moves rebuild the target.
    pub fn verify(&self) -> Result<bool> {
        let trivial = BraidWord::identity(self.base.strands());
        Ok(braid_eq(&self.base, &trivial)? && braid_eq(&self.apply()?, &self.target)?)
    }
}

/// Writes `w ∈ P_k′` as a product of conjugated delta relators.
///
/// Each layer `j` of the combed form is a product of factors
/// `c [A_{a,j}, A_{b,j}]^s c⁻¹`, and in `P_k`
/// `[A_{a,j}, A_{b,j}]^s = p_{a,b}⁻¹ [p_{a,b}, p_{b,j}]^{-s} p_{a,b}`.
/// So with `X = C p_{a,b}⁻¹` (`C` the expanded conjugator) the factor is
/// `X [p_{a,b}, p_{b,j}]^{-s} X⁻¹`, one delta move away from trivial.
///
/// The base is `X_1 · (X_1⁻¹ X_2) · ... · (X_{m-1}⁻¹ X_m) · X_m⁻¹` with the
/// conjugator parts of each segment freely reduced (consecutive conjugators
/// share long prefixes), and move `f` sits at the end of segment `f - 1`.
pub fn delta_trivialize(w: &BraidWord) -> Result<DeltaScript> {
    if !is_in_p_prime(w)? {
        return Err(Error::NotInCommutator);
    }
    let k = w.strands();
    let combed = comb(w)?;
    let mut base = BraidWord::identity(k);
    let mut moves = Vec::new();
    // conjugator (with its layer) and p_{a,b} of the previous factor
    let mut prev: Option<(usize, FreeWord, BraidWord)> = None;
    for (j, layer) in combed.layers() {
        for f in decompose_layer(layer)?.factors {
            let c = f.conjugator_word();
            let p_ab = pure_gen(PureGenSpec::new(f.a, f.b), k)?;
            let between = match &prev {
                None => expand_layer(&c, j, k),
                Some((pj, pc, pp)) => {
                    base.extend_raw(pp);
                    if *pj == j {
                        expand_layer(&pc.inverse().mul(&c), j, k)
                    } else {
                        expand_layer(pc, *pj, k)
                            .invert()
                            .compose(&expand_layer(&c, j, k))?
                    }
                }
            };
            base.extend_raw(&between);
            base.extend_raw(&p_ab.invert());
            moves.push(DeltaInsertion::new(base.len(), f.a, f.b, j, -f.sign));
            prev = Some((j, c, p_ab));
        }
    }
    if let Some((pj, pc, pp)) = prev {
        base.extend_raw(&pp);
        base.extend_raw(&expand_layer(&pc, pj, k).invert());
    }
    Ok(DeltaScript {
        base,
        moves,
        target: w.clone(),
    })
}

/// A base word with `n` disjoint sets of delta insertions. `L_T` is the
/// closure of the base with the sets in `T` applied, followed by `tail`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedBraid {
    pub base: BraidWord,
    #[serde(default = "none_tail", skip_serializing_if = "Option::is_none")]
    pub tail: Option<BraidWord>,
    pub site_sets: Vec<Vec<DeltaInsertion>>,
}

fn none_tail() -> Option<BraidWord> {
    None
}

impl MarkedBraid {
    pub fn new(base: BraidWord, site_sets: Vec<Vec<DeltaInsertion>>) -> Result<Self> {
        let m = MarkedBraid {
            base,
            tail: None,
            site_sets,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn with_tail(mut self, tail: BraidWord) -> Result<Self> {
        self.base.check_same(&tail)?;
        self.tail = Some(tail);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.site_sets.len()
    }

    pub fn strands(&self) -> usize {
        self.base.strands()
    }

    /// Positions are in range and no two insertions, in any sets, share one.
    pub fn validate(&self) -> Result<()> {
        if let Some(t) = &self.tail {
            self.base.check_same(t)?;
        }
        let mut seen = BTreeSet::new();
        for m in self.site_sets.iter().flatten() {
            m.validate(self.strands())?;
            if m.pos > self.base.len() {
                return Err(Error::PositionOutOfRange {
                    position: m.pos,
                    len: self.base.len(),
                });
            }
            if !seen.insert(m.pos) {
                return Err(Error::InsertionConflict { position: m.pos });
            }
        }
        Ok(())
    }

    /// The word with the sets whose bits are set in `mask` applied (bit `i`
    /// stands for `S_{i+1}`).
    pub fn word_for(&self, mask: u64) -> Result<BraidWord> {
        let moves: Vec<DeltaInsertion> = self
            .site_sets
            .iter()
            .enumerate()
            .filter(|(n, _)| mask >> n & 1 == 1)
            .flat_map(|(_, s)| s.iter().copied())
            .collect();
        apply_insertions(&self.base, &moves)
    }

    /// The braid whose closure is `L_T`.
    pub fn closure_word(&self, mask: u64) -> Result<BraidWord> {
        let w = self.word_for(mask)?;
        match &self.tail {
            Some(t) => w.concat_raw(t),
            None => Ok(w),
        }
    }

    /// True when every nonempty subset of site sets turns the base into a
    /// trivial braid.
    pub fn trivializes(&self) -> Result<bool> {
        let id = BraidWord::identity(self.strands());
        for mask in 1..1u64 << self.order() {
            if !braid_eq(&self.word_for(mask)?, &id)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn shifted(&self, offset: usize) -> Vec<Vec<DeltaInsertion>> {
        self.site_sets
            .iter()
            .map(|s| {
                s.iter()
                    .map(|m| DeltaInsertion {
                        pos: m.pos + offset,
                        ..*m
                    })
                    .collect()
            })
            .collect()
    }

    /// The inverse word, with every insertion mirrored so that applying a
    /// set to the inverse gives the inverse of applying it to the original.
    fn inverted(&self) -> MarkedBraid {
        let len = self.base.len();
        MarkedBraid {
            base: self.base.invert(),
            tail: None,
            site_sets: self
                .site_sets
                .iter()
                .map(|s| s.iter().map(|m| m.inverse_at(len - m.pos)).collect())
                .collect(),
        }
    }

    /// Merges sets `n..` into set `n - 1`, keeping `n` sets.
    fn merge_down(mut self, n: usize) -> MarkedBraid {
        assert!(n >= 1);
        if self.site_sets.len() > n {
            let extra: Vec<DeltaInsertion> = self.site_sets.drain(n..).flatten().collect();
            self.site_sets[n - 1].extend(extra);
        }
        self
    }
}

/// A marked braid over a word braid-equal to the certified `w ∈ γ_n(P′)`,
/// with `n` site sets each nonempty union of which trivializes the word.
/// The tail is `t_k`, so `L_∅` is the knot `⟨w t_k⟩`.
pub fn delta_n_witness(cert: &GammaCertificate) -> Result<MarkedBraid> {
    cert.validate()?;
    let k = cert.strands;
    let marked = witness_node(&cert.root, k)?.merge_down(cert.level);
    marked.validate()?;
    marked.with_tail(shift_braid(k))
}

fn witness_node(node: &CertNode, k: usize) -> Result<MarkedBraid> {
    match node {
        CertNode::Leaf { .. } => {
            let w = node.evaluate(k)?;
            let script = delta_trivialize(&w)?;
            // the word X R X⁻¹ ...; inserting R⁻¹ right after each R undoes it
            let word = script.apply()?;
            let mut set = Vec::with_capacity(script.moves.len());
            let mut grown = 0;
            let mut moves = script.moves.clone();
            moves.sort_by_key(|m| m.pos);
            for m in &moves {
                let block = m.relator(k)?.len();
                grown += block;
                set.push(m.inverse_at(m.pos + grown));
            }
            Ok(MarkedBraid {
                base: word,
                tail: None,
                site_sets: vec![set],
            })
        }
        CertNode::Commutator { left, right } => {
            let p = witness_node(left, k)?;
            let q = witness_node(right, k)?.merge_down(1);
            let p_inv = p.inverted();
            let q_inv = q.inverted();
            let mut base = p.base.clone();
            let mut sets = p.site_sets.clone();
            let mut single: Vec<DeltaInsertion> = Vec::new();
            let mut offset = base.len();
            single.extend(q.shifted(offset).concat());
            base.extend_raw(&q.base);
            offset = base.len();
            for (s, extra) in sets.iter_mut().zip(p_inv.shifted(offset)) {
                s.extend(extra);
            }
            base.extend_raw(&p_inv.base);
            offset = base.len();
            single.extend(q_inv.shifted(offset).concat());
            base.extend_raw(&q_inv.base);
            sets.push(single);
            Ok(MarkedBraid {
                base,
                tail: None,
                site_sets: sets,
            })
        }
        CertNode::Product { parts } => {
            let built: Vec<MarkedBraid> = parts
                .iter()
                .map(|p| witness_node(p, k))
                .collect::<Result<_>>()?;
            let level = built.iter().map(MarkedBraid::order).min().unwrap_or(0);
            let mut base = BraidWord::identity(k);
            let mut sets: Vec<Vec<DeltaInsertion>> = vec![Vec::new(); level];
            for part in built {
                let part = if level > 0 {
                    part.merge_down(level)
                } else {
                    part
                };
                for (s, extra) in sets.iter_mut().zip(part.shifted(base.len())) {
                    s.extend(extra);
                }
                base.extend_raw(&part.base);
            }
            Ok(MarkedBraid {
                base,
                tail: None,
                site_sets: sets,
            })
        }
        CertNode::Conjugate { by, inner } => {
            let inner = witness_node(inner, k)?;
            let mut base = by.clone();
            let sets = inner.shifted(base.len());
            base.extend_raw(&inner.base);
            base.extend_raw(&by.invert());
            Ok(MarkedBraid {
                base,
                tail: None,
                site_sets: sets,
            })
        }
    }
}

/// An invariant usable in alternating sums. Values are vectors of exact
/// rationals so that several coefficients can be summed at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AltInvariant {
    /// Jones series coefficients `u_0..=u_d`.
    Series(usize),
    /// Second Conway coefficient.
    A2,
}

impl AltInvariant {
    pub fn evaluate(&self, b: &BraidWord) -> Result<Vec<BigRational>> {
        match *self {
            AltInvariant::Series(d) => Ok(jones_series(b, d)?.coeffs),
            AltInvariant::A2 => Ok(vec![BigRational::from_integer(conway_a2(b)?)]),
        }
    }
}

impl fmt::Display for AltInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AltInvariant::Series(d) => write!(f, "series:{d}"),
            AltInvariant::A2 => f.write_str("a2"),
        }
    }
}

impl FromStr for AltInvariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "a2" {
            return Ok(AltInvariant::A2);
        }
        s.strip_prefix("series:")
            .and_then(|d| d.parse().ok())
            .map(AltInvariant::Series)
            .ok_or_else(|| Error::Invalid(format!("unknown invariant {s:?} (use series:D or a2)")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetValue {
    /// 1-based indices of the applied site sets.
    pub subset: Vec<usize>,
    pub sign: i32,
    #[serde(with = "crate::invariants::jones::rational_strings")]
    pub value: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltSumReport {
    pub n: usize,
    pub invariant: String,
    pub terms: Vec<SubsetValue>,
    #[serde(with = "crate::invariants::jones::rational_strings")]
    pub total: Vec<BigRational>,
}

impl AltSumReport {
    pub fn is_zero(&self) -> bool {
        self.total.iter().all(Zero::is_zero)
    }

    /// Recomputes the total from the stored per-subset values.
    pub fn recompute_total(&self) -> Vec<BigRational> {
        let width = self.terms.iter().map(|t| t.value.len()).max().unwrap_or(0);
        let mut total = vec![BigRational::zero(); width];
        for t in &self.terms {
            let s = BigRational::from_integer(BigInt::from(t.sign));
            for (acc, v) in total.iter_mut().zip(&t.value) {
                *acc += &s * v;
            }
        }
        total
    }
}

/// `Σ_T (-1)^{|T|} v(L_T)`, with subsets visited in increasing bitmask order.
pub fn alt_sum(marked: &MarkedBraid, v: AltInvariant) -> Result<AltSumReport> {
    alt_sum_with(marked, &v.to_string(), |b| v.evaluate(b))
}

pub fn alt_sum_with(
    marked: &MarkedBraid,
    name: &str,
    v: impl Fn(&BraidWord) -> Result<Vec<BigRational>>,
) -> Result<AltSumReport> {
    let n = marked.order();
    if n >= 64 {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: 63,
        });
    }
    let mut terms = Vec::with_capacity(1 << n);
    for mask in 0..1u64 << n {
        let subset: Vec<usize> = (0..n)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| b + 1)
            .collect();
        let value = marked
            .closure_word(mask)
            .and_then(|w| v(&w))
            .map_err(|e| Error::Subset {
                subset: subset.clone(),
                source: Box::new(e),
            })?;
        let sign = if subset.len().is_multiple_of(2) {
            1
        } else {
            -1
        };
        terms.push(SubsetValue {
            subset,
            sign,
            value,
        });
    }
    let mut report = AltSumReport {
        n,
        invariant: name.to_string(),
        terms,
        total: Vec::new(),
    };
    report.total = report.recompute_total();
    Ok(report)
}
