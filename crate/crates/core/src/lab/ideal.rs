//! Expansion of `(x_1 - 1)...(x_n - 1) y t_k` and the connected-sum slide
//! that replaces `y` by an element of `P′`.

use serde::{Deserialize, Serialize};

use crate::braid::{conjugate_shift, shift_braid, BraidWord};
use crate::combing::is_in_p_prime;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedTerm {
    pub sign: i32,
    /// 1-based indices of the `x_i` used.
    pub subset: Vec<usize>,
    pub word: BraidWord,
}

fn subsets(n: usize) -> impl Iterator<Item = (i32, Vec<usize>)> {
    (0..1u64 << n).map(move |mask| {
        let s: Vec<usize> = (0..n)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| b + 1)
            .collect();
        let sign = if (n - s.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        (sign, s)
    })
}

/// `(x_1 - 1)...(x_n - 1) · y · t_k` with every `x_i ∈ P′` and `y` pure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealProduct {
    pub strands: usize,
    pub xs: Vec<BraidWord>,
    pub y: BraidWord,
}

impl IdealProduct {
    pub fn new(xs: Vec<BraidWord>, y: BraidWord) -> Result<Self> {
        let ip = IdealProduct {
            strands: y.strands(),
            xs,
            y,
        };
        ip.validate()?;
        Ok(ip)
    }

    pub fn validate(&self) -> Result<()> {
        if self.y.strands() != self.strands {
            return Err(Error::StrandMismatch {
                left: self.y.strands(),
                right: self.strands,
            });
        }
        self.y.require_pure()?;
        for x in &self.xs {
            if x.strands() != self.strands {
                return Err(Error::StrandMismatch {
                    left: x.strands(),
                    right: self.strands,
                });
            }
            if !is_in_p_prime(x)? {
                return Err(Error::NotInCommutator);
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.xs.len()
    }

    /// The `2^n` terms `(-1)^{n-|T|} (∏_{i∈T} x_i) y t_k`, in bitmask order.
    pub fn expand(&self) -> Result<Vec<SignedTerm>> {
        self.validate()?;
        let tail = self.y.concat_raw(&shift_braid(self.strands))?;
        subsets(self.order())
            .map(|(sign, subset)| {
                let mut w = BraidWord::identity(self.strands);
                for &i in &subset {
                    w.extend_raw(&self.xs[i - 1]);
                }
                w.extend_raw(&tail);
                Ok(SignedTerm {
                    sign,
                    subset,
                    word: w,
                })
            })
            .collect()
    }
}

pub fn expand_ideal_product(ip: &IdealProduct) -> Result<Vec<SignedTerm>> {
    ip.expand()
}

/// The relation `(x_1 - 1)...(x_n - 1) · z · y · (t^{-m} y⁻¹ t^m) · t` in
/// `B_{2k}`, with `t = t_{2k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlideState {
    /// Strand count of the original braids; the state lives in `B_{2k}`.
    pub k: usize,
    pub xs: Vec<BraidWord>,
    pub z: BraidWord,
    pub y: BraidWord,
    pub m: usize,
}

impl SlideState {
    pub fn strands(&self) -> usize {
        2 * self.k
    }

    /// `t_{2k}^{-m} y t_{2k}^{m}`.
    pub fn shifted_y(&self, m: usize) -> Result<BraidWord> {
        conjugate_shift(&self.y, m as i64)
    }

    /// `z · y · (t^{-m} y⁻¹ t^m) · t`, the common tail of every term.
    pub fn tail(&self) -> Result<BraidWord> {
        let t = shift_braid(self.strands());
        let mut w = self.z.concat_raw(&self.y)?;
        w.extend_raw(&self.shifted_y(self.m)?.invert());
        w.extend_raw(&t);
        Ok(w)
    }

    pub fn terms(&self) -> Result<Vec<SignedTerm>> {
        let tail = self.tail()?;
        subsets(self.xs.len())
            .map(|(sign, subset)| {
                let mut w = BraidWord::identity(self.strands());
                for &i in &subset {
                    w.extend_raw(&self.xs[i - 1]);
                }
                w.extend_raw(&tail);
                Ok(SignedTerm {
                    sign,
                    subset,
                    word: w,
                })
            })
            .collect()
    }

    /// The element `t^{-m} y t^m` that conjugates this state's terms into
    /// those of [`slide_step`]'s output.
    pub fn slide_conjugator(&self) -> Result<BraidWord> {
        self.shifted_y(self.m)
    }

    /// At `m = 0` the `y` factors cancel and the relation is
    /// `(x_1 - 1)...(x_n - 1) · z · t_{2k}` with `z ∈ P′`.
    pub fn to_ideal_product(&self) -> Result<IdealProduct> {
        if self.m != 0 {
            return Err(Error::Invalid(format!(
                "slide counter is {}, not 0",
                self.m
            )));
        }
        IdealProduct::new(self.xs.clone(), self.z.clone())
    }
}

/// Moves to `B_{2k}`: the `x_i` and `y` stay on strands `1..k`, `z` starts
/// trivial and `m = k`, so each term closes to the original term's closure
/// summed with the fixed knot `⟨y⁻¹ t_k⟩`.
pub fn connected_sum_normalize(ip: &IdealProduct) -> Result<SlideState> {
    ip.validate()?;
    let k = ip.strands;
    let xs = ip
        .xs
        .iter()
        .map(|x| x.embed(2 * k, 0))
        .collect::<Result<Vec<_>>>()?;
    Ok(SlideState {
        k,
        xs,
        z: BraidWord::identity(2 * k),
        y: ip.y.embed(2 * k, 0)?,
        m: k,
    })
}

/// With `g = t^{-m} y t^m`: `x_i' = g x_i g⁻¹`, `z' = (g z g⁻¹)(g y g⁻¹ y⁻¹)`,
/// and `m` drops by one.
pub fn slide_step(s: &SlideState) -> Result<SlideState> {
    if s.m == 0 {
        return Err(Error::SlideExhausted);
    }
    let g = s.slide_conjugator()?;
    let g_inv = g.invert();
    let conj = |w: &BraidWord| -> Result<BraidWord> { g.compose(w)?.compose(&g_inv) };
    let xs = s.xs.iter().map(conj).collect::<Result<Vec<_>>>()?;
    let z = conj(&s.z)?.compose(&conj(&s.y)?)?.compose(&s.y.invert())?;
    Ok(SlideState {
        k: s.k,
        xs,
        z,
        y: s.y.clone(),
        m: s.m - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{commutator, pure_gen, PureGenSpec};
    use crate::word_problem::braid_eq;

    fn pg(i: usize, j: usize, k: usize) -> BraidWord {
        pure_gen(PureGenSpec::new(i, j), k).unwrap()
    }

    #[test]
    fn small_expansions() {
        let y = pg(1, 3, 3);
        let t = shift_braid(3);
        let ip = IdealProduct::new(vec![], y.clone()).unwrap();
        let terms = ip.expand().unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].sign, 1);
        assert_eq!(terms[0].word, y.concat_raw(&t).unwrap());

        let x = commutator(&pg(1, 2, 3), &pg(2, 3, 3)).unwrap();
        let ip = IdealProduct::new(vec![x.clone()], y.clone()).unwrap();
        let terms = ip.expand().unwrap();
        assert_eq!(
            terms.iter().map(|t| t.sign).collect::<Vec<_>>(),
            vec![-1, 1]
        );
        assert_eq!(
            terms[1].word,
            x.concat_raw(&y).unwrap().concat_raw(&t).unwrap()
        );
    }

    #[test]
    fn rejects_non_commutators() {
        assert_eq!(
            IdealProduct::new(vec![pg(1, 2, 3)], BraidWord::identity(3)),
            Err(Error::NotInCommutator)
        );
    }

    #[test]
    fn slide_with_trivial_y_only_counts_down() {
        let x = commutator(&pg(1, 2, 3), &pg(2, 3, 3)).unwrap();
        let ip = IdealProduct::new(vec![x], BraidWord::identity(3)).unwrap();
        let s = connected_sum_normalize(&ip).unwrap();
        let next = slide_step(&s).unwrap();
        assert_eq!(next.xs, s.xs);
        assert_eq!(next.z, s.z);
        assert_eq!(next.m, 2);
    }

    #[test]
    fn slide_is_a_conjugation() {
        let x = commutator(&pg(1, 2, 3), &pg(1, 3, 3)).unwrap();
        let y = pg(2, 3, 3).compose(&pg(1, 2, 3)).unwrap();
        let ip = IdealProduct::new(vec![x], y).unwrap();
        let mut s = connected_sum_normalize(&ip).unwrap();
        while s.m > 0 {
            let g = s.slide_conjugator().unwrap();
            let next = slide_step(&s).unwrap();
            for (before, after) in s.terms().unwrap().iter().zip(next.terms().unwrap()) {
                let expected = g
                    .compose(&before.word)
                    .unwrap()
                    .compose(&g.invert())
                    .unwrap();
                assert!(braid_eq(&expected, &after.word).unwrap());
            }
            s = next;
        }
        assert!(is_in_p_prime(&s.z).unwrap());
        assert!(slide_step(&s).is_err());
        s.to_ideal_product().unwrap();
    }
}
