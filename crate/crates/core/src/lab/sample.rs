//! Seeded samplers for certified elements of `P′`, `γ_n(P′)` and `P^(n)`.
//!
//! All randomness comes from a ChaCha8 stream seeded with a 64-bit value, so
//! samples are reproducible across platforms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::certificate::{CertNode, DerivedCertificate, GammaCertificate, LeafFactor};
use crate::braid::{pure_gen, BraidWord, PureGenSpec};
use crate::error::{Error, Result};
use crate::word_problem::is_trivial;

/// Sampled words longer than this (before free reduction) are redrawn.
pub const DEFAULT_MAX_LETTERS: usize = 120;

const ATTEMPTS: usize = 2000;

pub struct Sampler {
    strands: usize,
    rng: ChaCha8Rng,
    pub max_letters: usize,
}

impl Sampler {
    pub fn new(strands: usize, seed: u64) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Invalid("sampling needs at least 2 strands".into()));
        }
        Ok(Sampler {
            strands,
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_letters: DEFAULT_MAX_LETTERS,
        })
    }

    pub fn with_max_letters(mut self, max_letters: usize) -> Self {
        self.max_letters = max_letters;
        self
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn all_pairs(&self) -> Vec<PureGenSpec> {
        let k = self.strands;
        (1..k)
            .flat_map(|i| (i + 1..=k).map(move |j| PureGenSpec::new(i, j)))
            .collect()
    }

    pub fn pure_generator(&mut self) -> PureGenSpec {
        *self
            .all_pairs()
            .choose(&mut self.rng)
            .expect("at least one pair")
    }

    /// Product of `len` random standard generators and their inverses.
    pub fn pure_word(&mut self, len: usize) -> BraidWord {
        let mut w = BraidWord::identity(self.strands);
        for _ in 0..len {
            let g = pure_gen(self.pure_generator(), self.strands).expect("valid pair");
            let g = if self.rng.gen_bool(0.5) {
                g
            } else {
                g.invert()
            };
            w = w.compose(&g).expect("same strands");
        }
        w
    }

    /// Random word of `len` letters.
    pub fn word(&mut self, len: usize) -> BraidWord {
        let k = self.strands as i32;
        let letters = (0..len)
            .map(|_| {
                let i = self.rng.gen_range(1..k);
                if self.rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord::new(self.strands, letters).expect("indices in range")
    }

    /// Random word whose closure is a knot. A `k`-cycle needs at least
    /// `k - 1` transpositions and has the parity of `k - 1`, so `len` is
    /// raised to `k - 1` and then bumped by one when its parity rules a
    /// `k`-cycle out.
    pub fn knot_word(&mut self, len: usize) -> BraidWord {
        let len = len.max(self.strands - 1);
        let len = if (len + self.strands).is_multiple_of(2) {
            len + 1
        } else {
            len
        };
        loop {
            let w = self.word(len);
            if w.permutation().is_full_cycle() {
                return w;
            }
        }
    }

    /// A conjugated commutator of two distinct standard generators that
    /// share a strand, so that it is never trivial.
    pub fn leaf_factor(&mut self) -> Option<LeafFactor> {
        let pairs = self.all_pairs();
        let linked: Vec<(PureGenSpec, PureGenSpec)> = pairs
            .iter()
            .flat_map(|&a| pairs.iter().map(move |&b| (a, b)))
            .filter(|(a, b)| a != b && (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j))
            .collect();
        let &(a, b) = linked.choose(&mut self.rng)?;
        let conj_len = self.rng.gen_range(0..=1);
        let conjugator = self.pure_word(conj_len);
        let sign = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        Some(LeafFactor {
            conjugator,
            a,
            b,
            sign,
        })
    }

    pub fn leaf(&mut self, size: usize) -> CertNode {
        let factors = (0..size).filter_map(|_| self.leaf_factor()).collect();
        CertNode::Leaf { factors }
    }

    /// An element of `P′` as a product of `size` conjugated commutators.
    pub fn p_prime(&mut self, size: usize) -> Result<(BraidWord, CertNode)> {
        let k = self.strands;
        for _ in 0..ATTEMPTS {
            let node = self.leaf(size);
            let w = node.evaluate(k)?;
            if raw_len(&node, k)? <= self.max_letters {
                return Ok((w, node));
            }
        }
        Err(Error::Invalid(format!(
            "no P′ sample within {} letters",
            self.max_letters
        )))
    }

    fn gamma_node(&mut self, n: usize, size: usize) -> CertNode {
        if n <= 1 {
            return self.leaf(size);
        }
        let left = self.gamma_node(n - 1, size);
        let right = self.leaf(1);
        let node = CertNode::Commutator {
            left: Box::new(left),
            right: Box::new(right),
        };
        if self.rng.gen_bool(0.25) {
            CertNode::Conjugate {
                by: self.pure_word(1),
                inner: Box::new(node),
            }
        } else {
            node
        }
    }

    /// A certified element of `γ_n(P′)`, redrawn until it is nontrivial and
    /// within the letter budget. For two strands `P′` is trivial and the
    /// identity is returned.
    pub fn gamma(&mut self, n: usize, size: usize) -> Result<GammaCertificate> {
        if n == 0 {
            return Err(Error::Invalid("level must be at least 1".into()));
        }
        let k = self.strands;
        if k == 2 {
            return Ok(GammaCertificate {
                strands: k,
                level: n,
                root: CertNode::Leaf { factors: vec![] },
            });
        }
        for _ in 0..ATTEMPTS {
            let root = self.gamma_node(n, size.max(1));
            if raw_len(&root, k)? > self.max_letters {
                continue;
            }
            if is_trivial(&root.evaluate(k)?) {
                continue;
            }
            return Ok(GammaCertificate {
                strands: k,
                level: n,
                root,
            });
        }
        Err(Error::Invalid(format!(
            "no nontrivial γ_{n} sample on {k} strands within {} letters",
            self.max_letters
        )))
    }

    fn derived_node(&mut self, n: usize, size: usize) -> CertNode {
        if n <= 1 {
            return self.leaf(size);
        }
        let left = self.derived_node(n - 1, size);
        let right = self.derived_node(n - 1, size);
        CertNode::Commutator {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    /// A certified element of the derived series term `P^(n)`, `P^(1) = P′`.
    pub fn derived(&mut self, n: usize, size: usize) -> Result<DerivedCertificate> {
        if n == 0 {
            return Err(Error::Invalid("level must be at least 1".into()));
        }
        let k = self.strands;
        if k == 2 {
            return Ok(DerivedCertificate {
                strands: k,
                level: n,
                root: CertNode::Leaf { factors: vec![] },
            });
        }
        for _ in 0..ATTEMPTS {
            let root = self.derived_node(n, size.max(1));
            if raw_len(&root, k)? > self.max_letters {
                continue;
            }
            if is_trivial(&root.evaluate(k)?) {
                continue;
            }
            return Ok(DerivedCertificate {
                strands: k,
                level: n,
                root,
            });
        }
        Err(Error::Invalid(format!(
            "no nontrivial derived sample of level {n} on {k} strands within {} letters",
            self.max_letters
        )))
    }
}

/// Length of the evaluated tree with no cancellation anywhere.
fn raw_len(node: &CertNode, k: usize) -> Result<usize> {
    Ok(match node {
        CertNode::Leaf { factors } => {
            let mut n = 0;
            for f in factors {
                let a = pure_gen(f.a, k)?.len();
                let b = pure_gen(f.b, k)?.len();
                n += 2 * (a + b) + 2 * f.conjugator.len();
            }
            n
        }
        CertNode::Commutator { left, right } => 2 * (raw_len(left, k)? + raw_len(right, k)?),
        CertNode::Product { parts } => {
            let mut n = 0;
            for p in parts {
                n += raw_len(p, k)?;
            }
            n
        }
        CertNode::Conjugate { by, inner } => 2 * by.len() + raw_len(inner, k)?,
    })
}

pub fn sample_p_prime(strands: usize, seed: u64, size: usize) -> Result<(BraidWord, CertNode)> {
    Sampler::new(strands, seed)?.p_prime(size)
}

/// The letter budget grows linearly with `size`, the number of factors per
/// leaf.
pub fn sample_gamma(n: usize, strands: usize, seed: u64, size: usize) -> Result<GammaCertificate> {
    let budget = DEFAULT_MAX_LETTERS * size.max(1);
    Sampler::new(strands, seed)?
        .with_max_letters(budget)
        .gamma(n, size)
}

/// Derived-series samples double in length per level, so the budget scales
/// with `2^(n-1)` as well as with `size`.
pub fn sample_derived(
    n: usize,
    strands: usize,
    seed: u64,
    size: usize,
) -> Result<DerivedCertificate> {
    let budget = (DEFAULT_MAX_LETTERS * size.max(1)) << n.saturating_sub(1).min(8);
    Sampler::new(strands, seed)?
        .with_max_letters(budget)
        .derived(n, size)
}
