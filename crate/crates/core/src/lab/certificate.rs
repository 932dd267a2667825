//! Construction trees certifying membership in `γ_n(P′)` and in the derived
//! series `P^(n)`.

use serde::{Deserialize, Serialize};

use crate::braid::{commutator, pure_gen, BraidWord, PureGenSpec};
use crate::combing::is_in_p_prime;
use crate::error::{Error, Result};

/// `c [p_a, p_b]^sign c⁻¹` with `c` pure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafFactor {
    pub conjugator: BraidWord,
    pub a: PureGenSpec,
    pub b: PureGenSpec,
    pub sign: i32,
}

impl LeafFactor {
    pub fn evaluate(&self, strands: usize) -> Result<BraidWord> {
        let c = commutator(&pure_gen(self.a, strands)?, &pure_gen(self.b, strands)?)?;
        let c = if self.sign < 0 { c.invert() } else { c };
        self.conjugator
            .compose(&c)?
            .compose(&self.conjugator.invert())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum CertNode {
    /// An explicit element of `P′`.
    Leaf {
        factors: Vec<LeafFactor>,
    },
    Commutator {
        left: Box<CertNode>,
        right: Box<CertNode>,
    },
    Product {
        parts: Vec<CertNode>,
    },
    Conjugate {
        by: BraidWord,
        inner: Box<CertNode>,
    },
}

impl CertNode {
    pub fn evaluate(&self, strands: usize) -> Result<BraidWord> {
        match self {
            CertNode::Leaf { factors } => {
                let mut w = BraidWord::identity(strands);
                for f in factors {
                    w = w.compose(&f.evaluate(strands)?)?;
                }
                Ok(w)
            }
            CertNode::Commutator { left, right } => {
                commutator(&left.evaluate(strands)?, &right.evaluate(strands)?)
            }
            CertNode::Product { parts } => {
                let mut w = BraidWord::identity(strands);
                for p in parts {
                    w = w.compose(&p.evaluate(strands)?)?;
                }
                Ok(w)
            }
            CertNode::Conjugate { by, inner } => {
                by.compose(&inner.evaluate(strands)?)?.compose(&by.invert())
            }
        }
    }

    /// Lower central series level: a commutator raises its left child's level
    /// by one, its right child only needs to lie in `P′`.
    pub fn gamma_level(&self) -> usize {
        match self {
            CertNode::Leaf { .. } => 1,
            CertNode::Commutator { left, .. } => left.gamma_level() + 1,
            CertNode::Product { parts } => {
                parts.iter().map(CertNode::gamma_level).min().unwrap_or(1)
            }
            CertNode::Conjugate { inner, .. } => inner.gamma_level(),
        }
    }

    /// Derived series level, with `P^(1) = P′`: a commutator sits one level
    /// above the lower of its children.
    pub fn derived_level(&self) -> usize {
        match self {
            CertNode::Leaf { .. } => 1,
            CertNode::Commutator { left, right } => {
                left.derived_level().min(right.derived_level()) + 1
            }
            CertNode::Product { parts } => {
                parts.iter().map(CertNode::derived_level).min().unwrap_or(1)
            }
            CertNode::Conjugate { inner, .. } => inner.derived_level(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            CertNode::Leaf { .. } => 0,
            CertNode::Commutator { left, right } => 1 + left.depth().max(right.depth()),
            CertNode::Product { parts } => parts.iter().map(CertNode::depth).max().unwrap_or(0),
            CertNode::Conjugate { inner, .. } => inner.depth(),
        }
    }

    /// Checks every node: generators and conjugators are valid in
    /// `B_strands`, conjugators are pure, and each evaluated node lies in
    /// `P′`.
    pub fn validate(&self, strands: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::Certificate(msg));
        match self {
            CertNode::Leaf { factors } => {
                for f in factors {
                    f.a.validate(strands)?;
                    f.b.validate(strands)?;
                    if f.a == f.b {
                        return bad(format!(
                            "leaf commutator of p({},{}) with itself",
                            f.a.i, f.a.j
                        ));
                    }
                    if f.sign.abs() != 1 {
                        return bad(format!("leaf sign {} is not ±1", f.sign));
                    }
                    check_conjugator(&f.conjugator, strands)?;
                }
            }
            CertNode::Commutator { left, right } => {
                left.validate(strands)?;
                right.validate(strands)?;
            }
            CertNode::Product { parts } => {
                if parts.is_empty() {
                    return bad("empty product".into());
                }
                for p in parts {
                    p.validate(strands)?;
                }
            }
            CertNode::Conjugate { by, inner } => {
                check_conjugator(by, strands)?;
                inner.validate(strands)?;
            }
        }
        if !is_in_p_prime(&self.evaluate(strands)?)? {
            return bad("node does not evaluate into P′".into());
        }
        Ok(())
    }
}

fn check_conjugator(c: &BraidWord, strands: usize) -> Result<()> {
    if c.strands() != strands {
        return Err(Error::StrandMismatch {
            left: c.strands(),
            right: strands,
        });
    }
    if !c.is_pure() {
        return Err(Error::Certificate(format!("conjugator {c} is not pure")));
    }
    Ok(())
}

/// Certifies that the evaluated root lies in `γ_level(P′)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaCertificate {
    pub strands: usize,
    pub level: usize,
    pub root: CertNode,
}

impl GammaCertificate {
    pub fn evaluate(&self) -> Result<BraidWord> {
        self.root.evaluate(self.strands)
    }

    pub fn validate(&self) -> Result<()> {
        if self.level == 0 {
            return Err(Error::Certificate("level must be at least 1".into()));
        }
        let built = self.root.gamma_level();
        if built < self.level {
            return Err(Error::Certificate(format!(
                "tree only certifies level {built}, claimed {}",
                self.level
            )));
        }
        self.root.validate(self.strands)
    }
}

/// Certifies that the evaluated root lies in `P^(level)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedCertificate {
    pub strands: usize,
    pub level: usize,
    pub root: CertNode,
}

impl DerivedCertificate {
    pub fn evaluate(&self) -> Result<BraidWord> {
        self.root.evaluate(self.strands)
    }

    pub fn validate(&self) -> Result<()> {
        if self.level == 0 {
            return Err(Error::Certificate("level must be at least 1".into()));
        }
        let built = self.root.derived_level();
        if built < self.level {
            return Err(Error::Certificate(format!(
                "tree only certifies derived level {built}, claimed {}",
                self.level
            )));
        }
        self.root.validate(self.strands)
    }

    /// The same tree read as a lower central series certificate. Since
    /// `derived_level <= gamma_level` node by node, the level carries over,
    /// which in particular puts `P^(n+1)` inside `γ_n(P′)`.
    pub fn to_gamma(&self) -> GammaCertificate {
        GammaCertificate {
            strands: self.strands,
            level: self.level,
            root: self.root.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(a: (usize, usize), b: (usize, usize), k: usize) -> CertNode {
        CertNode::Leaf {
            factors: vec![LeafFactor {
                conjugator: BraidWord::identity(k),
                a: PureGenSpec::new(a.0, a.1),
                b: PureGenSpec::new(b.0, b.1),
                sign: 1,
            }],
        }
    }

    #[test]
    fn levels() {
        let l = leaf((1, 2), (2, 3), 3);
        let c = CertNode::Commutator {
            left: Box::new(l.clone()),
            right: Box::new(l.clone()),
        };
        assert_eq!(c.gamma_level(), 2);
        assert_eq!(c.derived_level(), 2);
        let lopsided = CertNode::Commutator {
            left: Box::new(c.clone()),
            right: Box::new(l),
        };
        assert_eq!(lopsided.gamma_level(), 3);
        assert_eq!(lopsided.derived_level(), 2);
    }

    #[test]
    fn validation_rejects_overclaims_and_bad_leaves() {
        let l = leaf((1, 2), (2, 3), 3);
        let good = GammaCertificate {
            strands: 3,
            level: 1,
            root: l.clone(),
        };
        assert!(good.validate().is_ok());
        let over = GammaCertificate {
            strands: 3,
            level: 2,
            root: l,
        };
        assert!(matches!(over.validate(), Err(Error::Certificate(_))));
        let same = GammaCertificate {
            strands: 3,
            level: 1,
            root: leaf((1, 2), (1, 2), 3),
        };
        assert!(matches!(same.validate(), Err(Error::Certificate(_))));
        let wide = GammaCertificate {
            strands: 3,
            level: 1,
            root: leaf((1, 2), (2, 4), 3),
        };
        assert!(matches!(wide.validate(), Err(Error::InvalidPureGen { .. })));
    }

    #[test]
    fn json_round_trip() {
        let l = leaf((1, 2), (2, 3), 3);
        let cert = GammaCertificate {
            strands: 3,
            level: 2,
            root: CertNode::Commutator {
                left: Box::new(l.clone()),
                right: Box::new(l),
            },
        };
        let s = serde_json::to_string(&cert).unwrap();
        assert!(s.contains(r#""node":"commutator""#));
        assert_eq!(serde_json::from_str::<GammaCertificate>(&s).unwrap(), cert);
    }
}
