//! Braid words and the standard elements built from them.
//!
//! Generators are 1-based: letter `i` is `σ_i` (strand at position `i`
//! crosses over the strand at position `i + 1`, a positive crossing) and `-i`
//! is its inverse. Words are read left to right: `ab` means `a` then `b`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::free::FreeWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Validates letters without reducing them.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            let index = l.unsigned_abs() as usize;
            if l == 0 || index >= strands {
                return Err(Error::IndexOutOfRange { index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1);
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        BraidWord::new(strands, vec![letter])
    }

    pub(crate) fn from_raw(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn free_reduce(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: FreeWord::reduced(self.letters.iter().copied()).into_letters(),
        }
    }

    pub(crate) fn check_same(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// `self` followed by `other`, freely reduced.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same(other)?;
        Ok(BraidWord {
            strands: self.strands,
            letters: FreeWord::reduced(self.letters.iter().chain(&other.letters).copied())
                .into_letters(),
        })
    }

    /// Concatenation with no cancellation at all. Marked braids rely on this
    /// to keep insertion positions meaningful.
    pub fn concat_raw(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn pow(&self, exponent: i64) -> BraidWord {
        let base = if exponent < 0 {
            self.invert()
        } else {
            self.clone()
        };
        let mut letters = Vec::with_capacity(base.len() * exponent.unsigned_abs() as usize);
        for _ in 0..exponent.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters: FreeWord::reduced(letters).into_letters(),
        }
    }

    /// Exponent sum, which is also the writhe of the closure diagram.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    pub fn permutation(&self) -> Permutation {
        // position -> strand currently there
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut images = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation { images }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    pub(crate) fn require_pure(&self) -> Result<()> {
        if self.is_pure() {
            Ok(())
        } else {
            Err(Error::NotPure)
        }
    }

    /// The same word read in `strands` strands with every index moved up by
    /// `offset`.
    pub fn embed(&self, strands: usize, offset: usize) -> Result<BraidWord> {
        if self.strands + offset > strands {
            return Err(Error::Invalid(format!(
                "cannot place B{} at offset {offset} inside B{strands}",
                self.strands
            )));
        }
        let shift = offset as i32;
        Ok(BraidWord {
            strands,
            letters: self
                .letters
                .iter()
                .map(|&l| if l > 0 { l + shift } else { l - shift })
                .collect(),
        })
    }

    /// Splits off the letters in `range` as a word of the same strand count.
    pub fn slice(&self, range: std::ops::Range<usize>) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters[range].to_vec(),
        }
    }

    pub(crate) fn extend_raw(&mut self, other: &BraidWord) {
        debug_assert_eq!(self.strands, other.strands);
        self.letters.extend_from_slice(&other.letters);
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut tokens = s.split_whitespace();
        let head = tokens.next().ok_or_else(|| err("empty input"))?;
        let strands: usize = head
            .strip_prefix('B')
            .ok_or_else(|| err("first token must be Bk"))?
            .parse()
            .map_err(|_| err("bad strand count"))?;
        if strands == 0 {
            return Err(err("strand count must be positive"));
        }
        let mut letters = Vec::new();
        for t in tokens {
            let l: i32 = t
                .parse()
                .map_err(|_| err("letters must be nonzero integers"))?;
            if l == 0 {
                return Err(err("letters must be nonzero integers"));
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(err("generator index out of range"));
            }
            letters.push(l);
        }
        Ok(BraidWord { strands, letters })
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Where each strand ends up: `images[a] = b` means the strand starting at
/// position `a + 1` ends at position `b + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Invalid("not a permutation".into()));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 1-based image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(a, &b)| a == b)
    }

    /// Cycles as 1-based points, each starting at its smallest element,
    /// ordered by that element. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycles().len() == 1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Standard pure braid generator `p_{i,j}` linking strands `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PureGenSpec {
    pub i: usize,
    pub j: usize,
}

impl PureGenSpec {
    pub fn new(i: usize, j: usize) -> Self {
        PureGenSpec { i, j }
    }

    pub fn validate(&self, strands: usize) -> Result<()> {
        if self.i == 0 || self.i >= self.j || self.j > strands {
            return Err(Error::InvalidPureGen {
                i: self.i,
                j: self.j,
                strands,
            });
        }
        Ok(())
    }
}

/// `(σ_{j-1} ... σ_{i+1}) σ_i² (σ_{i+1}⁻¹ ... σ_{j-1}⁻¹)`.
pub fn pure_gen(spec: PureGenSpec, strands: usize) -> Result<BraidWord> {
    spec.validate(strands)?;
    let (i, j) = (spec.i as i32, spec.j as i32);
    let mut letters: Vec<i32> = ((i + 1)..j).rev().collect();
    letters.extend([i, i]);
    letters.extend(((i + 1)..j).map(|x| -x));
    Ok(BraidWord::from_raw(strands, letters))
}

/// `t_k = σ_{k-1}⁻¹ σ_{k-2}⁻¹ ... σ_1⁻¹`.
pub fn shift_braid(strands: usize) -> BraidWord {
    assert!(strands >= 1);
    BraidWord::from_raw(strands, (1..strands as i32).rev().map(|x| -x).collect())
}

/// `t_k^{-m} p t_k^{m}`; for pure `p` this moves every strand `m` places to
/// the right (cyclically).
pub fn conjugate_shift(p: &BraidWord, m: i64) -> Result<BraidWord> {
    p.require_pure()?;
    let t = shift_braid(p.strands());
    t.pow(-m).compose(p)?.compose(&t.pow(m))
}

pub fn commutator(a: &BraidWord, b: &BraidWord) -> Result<BraidWord> {
    a.compose(b)?.compose(&a.invert())?.compose(&b.invert())
}

/// Pure braid in `B_{2k}` whose product with `t_{2k}` closes to the connected
/// sum of the closures of `p t_k` and `q t_k`.
pub fn braid_connected_sum(p: &BraidWord, q: &BraidWord) -> Result<BraidWord> {
    p.check_same(q)?;
    p.require_pure()?;
    q.require_pure()?;
    let k = p.strands();
    let big = 2 * k;
    let left = p.embed(big, 0)?;
    // equal as a braid to t_{2k}^{-k} q t_{2k}^{k}: q moved onto strands k+1..2k
    let right = q.embed(big, k)?;
    left.compose(&right)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn compose_cancels_and_concatenates() {
        assert!(w("B2 1").compose(&w("B2 -1")).unwrap().is_empty());
        assert_eq!(w("B3 1").compose(&w("B3 2")).unwrap(), w("B3 1 2"));
        assert!(w("B3 1 2").compose(&w("B3 -2 -1")).unwrap().is_empty());
        assert!(matches!(
            w("B3 1").compose(&w("B4 1")),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn invert_reverses_and_flips() {
        assert!(w("B3").invert().is_empty());
        assert_eq!(w("B3 1 2").invert(), w("B3 -2 -1"));
    }

    #[test]
    fn parse_rejects_bad_words() {
        assert!("B3 3".parse::<BraidWord>().is_err());
        assert!("B3 0".parse::<BraidWord>().is_err());
        assert!("3 1".parse::<BraidWord>().is_err());
        assert!("B0".parse::<BraidWord>().is_err());
        assert!("".parse::<BraidWord>().is_err());
        assert_eq!(w("B3 1 1 2 -1").to_string(), "B3 1 1 2 -1");
    }

    #[test]
    fn permutations_of_standard_elements() {
        assert_eq!(w("B2 1").permutation().images(), vec![2, 1]);
        let t3 = shift_braid(3).permutation();
        assert!(t3.is_full_cycle());
        assert_eq!(t3.to_string(), "(1 2 3)");
        for k in 2..7 {
            for i in 1..k {
                for j in (i + 1)..=k {
                    assert!(pure_gen(PureGenSpec::new(i, j), k).unwrap().is_pure());
                }
            }
        }
    }

    #[test]
    fn pure_gen_words() {
        assert_eq!(pure_gen(PureGenSpec::new(1, 2), 2).unwrap(), w("B2 1 1"));
        assert_eq!(
            pure_gen(PureGenSpec::new(1, 3), 3).unwrap(),
            w("B3 2 1 1 -2")
        );
        assert!(pure_gen(PureGenSpec::new(2, 2), 3).is_err());
        assert!(pure_gen(PureGenSpec::new(1, 4), 3).is_err());
    }

    #[test]
    fn shift_braid_words() {
        assert!(shift_braid(1).is_empty());
        assert_eq!(shift_braid(3), w("B3 -2 -1"));
        for k in 1..=6 {
            assert!(shift_braid(k).permutation().is_full_cycle());
        }
    }

    #[test]
    fn conjugate_shift_rejects_non_pure() {
        assert_eq!(conjugate_shift(&w("B3 1"), 1), Err(Error::NotPure));
        let p = w("B3 1 1");
        assert_eq!(conjugate_shift(&p, 0).unwrap(), p);
    }

    #[test]
    fn commutator_of_word_with_itself() {
        let a = w("B4 1 -3 2 2");
        assert!(commutator(&a, &a).unwrap().is_empty());
    }

    #[test]
    fn permutation_is_a_homomorphism() {
        let a = w("B4 1 2 -3 1");
        let b = w("B4 3 -2 1");
        assert_eq!(
            a.compose(&b).unwrap().permutation(),
            a.permutation().then(&b.permutation())
        );
    }

    #[test]
    fn serde_uses_text_format() {
        let a = w("B3 1 -2");
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, "\"B3 1 -2\"");
        assert_eq!(serde_json::from_str::<BraidWord>(&s).unwrap(), a);
    }
}
