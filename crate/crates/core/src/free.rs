//! Words in a free group on generators `x1, x2, ...`.
//!
//! A letter is a nonzero signed integer: `3` is `x3`, `-3` is `x3^-1`.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(index: usize) -> Self {
        FreeWord(vec![index as i32])
    }

    /// Builds a word from raw letters without reducing it.
    pub fn from_letters(letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l != 0));
        FreeWord(letters)
    }

    /// Builds a word and freely reduces it.
    pub fn reduced(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut w = FreeWord(Vec::new());
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends a letter, cancelling it against the last letter if possible.
    pub fn push(&mut self, letter: i32) {
        if self.0.last() == Some(&-letter) {
            self.0.pop();
        } else {
            self.0.push(letter);
        }
    }

    pub fn append(&mut self, other: &FreeWord) {
        for &l in &other.0 {
            self.push(l);
        }
    }

    pub fn append_inverse(&mut self, other: &FreeWord) {
        for &l in other.0.iter().rev() {
            self.push(-l);
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.free_reduce();
        w.append(other);
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn free_reduce(&self) -> FreeWord {
        FreeWord::reduced(self.0.iter().copied())
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[0] != -p[1])
    }

    /// `self · other · self⁻¹`, freely reduced.
    pub fn conjugate(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.free_reduce();
        w.append(other);
        w.append_inverse(self);
        w
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`, freely reduced.
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
        let mut w = a.free_reduce();
        w.append(b);
        w.append_inverse(a);
        w.append_inverse(b);
        w
    }

    /// Signed number of occurrences of `x_generator`.
    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.unsigned_abs() as usize == generator)
            .map(|&l| l.signum() as i64)
            .sum()
    }

    pub fn max_generator(&self) -> usize {
        self.0
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Replaces every `x_i` by `images[i - 1]` and reduces.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut w = FreeWord::identity();
        for &l in &self.0 {
            let image = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                w.append(image);
            } else {
                w.append_inverse(image);
            }
        }
        w
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, l) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            if *l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}
