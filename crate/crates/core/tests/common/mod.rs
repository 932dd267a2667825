//! Independent oracles and generators shared by the integration tests.

#![allow(dead_code)]

use deltaft_core::braid::{pure_gen, BraidWord, PureGenSpec};
use deltaft_core::poly::LaurentPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn w(s: &str) -> BraidWord {
    s.parse().unwrap()
}

pub fn random_word(rng: &mut ChaCha8Rng, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

pub fn random_pure_gen(rng: &mut ChaCha8Rng, strands: usize) -> BraidWord {
    let i = rng.gen_range(1..strands);
    let j = rng.gen_range(i + 1..=strands);
    let g = pure_gen(PureGenSpec::new(i, j), strands).unwrap();
    if rng.gen_bool(0.5) {
        g
    } else {
        g.invert()
    }
}

/// A pure braid of at most `max_len` letters: a product of standard
/// generators, conjugated by a random braid.
pub fn random_pure(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
    let conj_len = rng.gen_range(0..=max_len / 8);
    let u = random_word(rng, strands, conj_len);
    let budget = max_len - 2 * conj_len;
    let mut core = BraidWord::identity(strands);
    loop {
        let g = random_pure_gen(rng, strands);
        if core.len() + g.len() > budget {
            break;
        }
        core = core.concat_raw(&g).unwrap();
        if rng.gen_bool(0.15) {
            break;
        }
    }
    u.concat_raw(&core)
        .unwrap()
        .concat_raw(&u.invert())
        .unwrap()
}

/// Kauffman bracket by summing over all `2^n` smoothings of the closed braid
/// diagram, counting loops with a union-find over segment endpoints.
///
/// Node `(level, position)` is the point of strand position `position`
/// between letters `level - 1` and `level`. At a letter `σ_i^e` the smoothing
/// that keeps strands vertical has weight `A^e` and the cup-cap smoothing has
/// weight `A^{-e}`.
pub fn brute_force_bracket(b: &BraidWord) -> LaurentPoly {
    let k = b.strands();
    let letters = b.letters();
    let n = letters.len();
    let node = |level: usize, pos: usize| level * k + pos;
    let total_nodes = (n + 1) * k;
    let mut sum = LaurentPoly::zero();
    let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    for mask in 0u64..1 << n {
        let mut parent: Vec<usize> = (0..total_nodes).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra] = rb;
            }
        };
        let mut exponent = 0i64;
        for (level, &l) in letters.iter().enumerate() {
            let i = l.unsigned_abs() as usize - 1;
            let e = l.signum() as i64;
            let vertical = mask >> level & 1 == 0;
            for pos in 0..k {
                if pos != i && pos != i + 1 {
                    union(&mut parent, node(level, pos), node(level + 1, pos));
                }
            }
            if vertical {
                exponent += e;
                union(&mut parent, node(level, i), node(level + 1, i));
                union(&mut parent, node(level, i + 1), node(level + 1, i + 1));
            } else {
                exponent -= e;
                union(&mut parent, node(level, i), node(level, i + 1));
                union(&mut parent, node(level + 1, i), node(level + 1, i + 1));
            }
        }
        for pos in 0..k {
            union(&mut parent, node(n, pos), node(0, pos));
        }
        let mut roots: Vec<usize> = (0..total_nodes).map(|x| find(&mut parent, x)).collect();
        roots.sort_unstable();
        roots.dedup();
        let loops = roots.len() as u32;
        sum = &sum + &(&LaurentPoly::monomial(exponent, 1) * &delta.pow(loops - 1));
    }
    sum
}
