//! Artin's faithful action of `B_k` on the free group `F_k`.
//!
//! `σ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i` and fixes the other
//! generators. Images are kept freely reduced.

use crate::braid::BraidWord;
use crate::free::FreeWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinAutomorphism {
    images: Vec<FreeWord>,
}

impl ArtinAutomorphism {
    pub fn identity(rank: usize) -> Self {
        ArtinAutomorphism {
            images: (1..=rank).map(FreeWord::generator).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, generator: usize) -> &FreeWord {
        &self.images[generator - 1]
    }

    pub fn apply(&self, word: &FreeWord) -> FreeWord {
        word.substitute(&self.images)
    }

    /// `self ∘ other`: apply `other` first, then substitute with `self`.
    pub fn compose(&self, other: &ArtinAutomorphism) -> ArtinAutomorphism {
        ArtinAutomorphism {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(n, w)| w.letters() == [n as i32 + 1])
    }

    /// Post-composes with the automorphism of a single letter, so that the
    /// action of `w · σ` is `action(w) ∘ action(σ)`.
    fn push_letter(&mut self, letter: i32) {
        let i = letter.unsigned_abs() as usize - 1;
        let a = self.images[i].clone();
        let b = self.images[i + 1].clone();
        if letter > 0 {
            let mut w = a.clone();
            w.append(&b);
            w.append_inverse(&a);
            self.images[i] = w;
            self.images[i + 1] = a;
        } else {
            let mut w = b.inverse();
            w.append(&a);
            w.append(&b);
            self.images[i] = b;
            self.images[i + 1] = w;
        }
    }
}

pub fn artin_action(word: &BraidWord) -> ArtinAutomorphism {
    let mut phi = ArtinAutomorphism::identity(word.strands());
    for &l in word.letters() {
        phi.push_letter(l);
    }
    phi
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn identity_word_acts_trivially() {
        assert!(artin_action(&w("B4")).is_identity());
        assert!(artin_action(&w("B4 1 2 -2 -1")).is_identity());
    }

    #[test]
    fn braid_relations_hold() {
        assert_eq!(artin_action(&w("B3 1 2 1")), artin_action(&w("B3 2 1 2")));
        assert_eq!(artin_action(&w("B4 1 3")), artin_action(&w("B4 3 1")));
        assert_ne!(artin_action(&w("B3 1")), artin_action(&w("B3 -1")));
    }

    #[test]
    fn single_generator_images() {
        let phi = artin_action(&w("B3 1"));
        assert_eq!(phi.image(1).letters(), &[1, 2, -1]);
        assert_eq!(phi.image(2).letters(), &[1]);
        assert_eq!(phi.image(3).letters(), &[3]);
    }

    #[test]
    fn action_is_a_homomorphism() {
        let a = w("B4 1 -2 3 3 -1");
        let b = w("B4 2 2 -3 1");
        assert_eq!(
            artin_action(&a.compose(&b).unwrap()),
            artin_action(&a).compose(&artin_action(&b))
        );
    }
}
