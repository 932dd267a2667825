//! Deciding braid equality.
//!
//! [`braid_eq`] reduces `a · b⁻¹` by Dehornoy handle reduction: a word is
//! trivial exactly when it reduces to the empty word. The Artin action gives
//! the same answer but its image words grow exponentially with the length of
//! generic braids, so it is kept as [`braid_eq_artin`] for cross-checking on
//! short words.

use crate::artin::artin_action;
use crate::braid::BraidWord;
use crate::error::Result;

/// Repeatedly reduces the handle with the leftmost right end until none is
/// left. The result is braid-equal to the input and is empty iff the input
/// is trivial.
pub fn handle_reduce(word: &BraidWord) -> BraidWord {
    let mut w: Vec<i32> = word.free_reduce().letters().to_vec();
    let mut start = 0;
    'outer: loop {
        let mut q = start;
        while q < w.len() {
            let i = w[q].unsigned_abs();
            // nearest letter to the left with index <= i
            let mut p = q;
            while p > 0 {
                p -= 1;
                let j = w[p].unsigned_abs();
                if j <= i {
                    if j == i && w[p] == -w[q] {
                        let mid = reduce_handle(&w[p..=q]);
                        w.splice(p..=q, mid);
                        start = p;
                        continue 'outer;
                    }
                    break;
                }
            }
            q += 1;
        }
        break;
    }
    BraidWord::from_raw(word.strands(), w)
}

/// `σ_i^e v σ_i^{-e}` with `v` in letters above `i` becomes `v` with every
/// `σ_{i+1}^d` replaced by `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`.
fn reduce_handle(handle: &[i32]) -> Vec<i32> {
    let first = handle[0];
    let i = first.abs();
    let e = first.signum();
    let mut out = Vec::with_capacity(handle.len());
    for &l in &handle[1..handle.len() - 1] {
        if l.abs() == i + 1 {
            out.extend([-e * (i + 1), l.signum() * i, e * (i + 1)]);
        } else {
            out.push(l);
        }
    }
    out
}

pub fn is_trivial(word: &BraidWord) -> bool {
    handle_reduce(word).is_empty()
}

pub fn braid_eq(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    let q = a.concat_raw(&b.invert())?;
    Ok(is_trivial(&q))
}

/// Equality through the Artin action. Exact, but only practical for short
/// words.
pub fn braid_eq_artin(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    let q = a.concat_raw(&b.invert())?;
    Ok(artin_action(&q).is_identity())
}
