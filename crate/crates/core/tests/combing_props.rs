mod common;

use common::{random_pure, random_word, rng};
use deltaft_core::braid::{commutator, BraidWord};
use deltaft_core::combing::{comb, decompose_layer, exponent_vector, is_in_p_prime};
use deltaft_core::free::FreeWord;
use deltaft_core::lab::sample_p_prime;
use deltaft_core::word_problem::braid_eq;
use deltaft_core::Error;
use rand::Rng;

/// Exponent of `p_{i,j}` read off the combed layers: layer `j` is a word in
/// `A_{1,j}, ..., A_{j-1,j}`, so the exponent is a letter count.
fn exponents_from_layers(p: &BraidWord) -> Vec<((usize, usize), i64)> {
    let c = comb(p).unwrap();
    let mut out = Vec::new();
    for (j, layer) in c.layers() {
        for i in 1..j {
            out.push(((i, j), layer.exponent_sum(i)));
        }
    }
    out.sort();
    out
}

#[test]
fn layer_exponents_match_crossing_counts() {
    let mut r = rng(21);
    for _ in 0..300 {
        let k = r.gen_range(2..=6);
        let p = random_pure(&mut r, k, 40);
        let ev = exponent_vector(&p).unwrap();
        for ((i, j), e) in exponents_from_layers(&p) {
            assert_eq!(ev.get(i, j), e, "{p}");
        }
    }
}

#[test]
fn p_prime_samples_have_zero_layer_exponents() {
    for seed in 0..200u64 {
        let k = 3 + (seed % 3) as usize;
        let (p, _) = sample_p_prime(k, seed, 1 + (seed % 3) as usize).unwrap();
        assert!(is_in_p_prime(&p).unwrap());
        assert!(
            exponents_from_layers(&p).iter().all(|&(_, e)| e == 0),
            "{p}"
        );
    }
}

#[test]
fn combing_is_a_normal_form() {
    let mut r = rng(22);
    for _ in 0..200 {
        let k = r.gen_range(2..=5);
        let p = random_pure(&mut r, k, 24);
        let c = comb(&p).unwrap();
        assert!(c.layers().all(|(_, l)| l.is_reduced()));
        assert!(braid_eq(&c.expand(), &p).unwrap());
        // a braid-equal rewrite combs to the same form
        let x = random_word(&mut r, k, 6);
        let y = random_word(&mut r, k, 4);
        let q = y
            .concat_raw(&y.invert())
            .unwrap()
            .concat_raw(&p)
            .unwrap()
            .concat_raw(&x)
            .unwrap()
            .concat_raw(&x.invert())
            .unwrap();
        assert_eq!(comb(&q).unwrap(), c);
        // and comb-equality decides the word problem on pure braids
        let other = random_pure(&mut r, k, 24);
        assert_eq!(comb(&other).unwrap() == c, braid_eq(&other, &p).unwrap());
    }
}

#[test]
fn comb_rejects_non_pure_braids() {
    let b: BraidWord = "B3 1 2".parse().unwrap();
    assert_eq!(comb(&b), Err(Error::NotPure));
}

#[test]
fn exponent_vectors_are_additive_and_conjugation_invariant() {
    let mut r = rng(23);
    for _ in 0..200 {
        let k = r.gen_range(2..=6);
        let a = random_pure(&mut r, k, 30);
        let b = random_pure(&mut r, k, 30);
        let ea = exponent_vector(&a).unwrap();
        let eb = exponent_vector(&b).unwrap();
        assert_eq!(
            exponent_vector(&a.compose(&b).unwrap()).unwrap(),
            ea.add(&eb)
        );
        let c = random_pure(&mut r, k, 20);
        let conj = c.compose(&a).unwrap().compose(&c.invert()).unwrap();
        assert_eq!(exponent_vector(&conj).unwrap(), ea);
        assert!(is_in_p_prime(&commutator(&a, &b).unwrap()).unwrap());
    }
}

#[test]
fn decompositions_reassemble_to_the_layer() {
    let mut r = rng(24);
    for _ in 0..500 {
        // a random free word with zero exponent sums in every generator
        let rank = r.gen_range(2..=5);
        let len = r.gen_range(0..=12);
        let mut letters: Vec<i32> = (0..len).map(|_| r.gen_range(1..=rank) as i32).collect();
        let negs: Vec<i32> = letters.iter().map(|&l| -l).collect();
        letters.extend(negs);
        for i in (1..letters.len()).rev() {
            letters.swap(i, r.gen_range(0..=i));
        }
        let layer = FreeWord::from_letters(letters);
        let d = decompose_layer(&layer).unwrap();
        assert_eq!(d.reassemble().free_reduce(), layer.free_reduce());
        for f in &d.factors {
            assert!(f.a < f.b && f.b <= rank);
            assert!(f.sign == 1 || f.sign == -1);
        }
    }
}

#[test]
fn decomposition_needs_zero_exponent_sums() {
    let layer = FreeWord::from_letters(vec![1, 2, -1]);
    assert!(decompose_layer(&layer).is_err());
}
