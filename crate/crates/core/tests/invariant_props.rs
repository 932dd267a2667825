mod common;

use common::{brute_force_bracket, random_word, rng, w};
use deltaft_core::braid::{pure_gen, BraidWord, PureGenSpec};
use deltaft_core::delta::{apply_insertions, DeltaInsertion};
use deltaft_core::invariants::{
    alexander, closure_components, conway_a2, is_knot, jones, jones_series, kauffman_bracket,
    linking_matrix,
};
use deltaft_core::lab::Sampler;
use deltaft_core::poly::LaurentPoly;
use deltaft_core::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(σ_1 ... σ_{p-1})^q`, closing to the `(p, q)` torus knot.
fn torus(p: usize, q: usize) -> BraidWord {
    let cycle: Vec<i32> = (1..p as i32).collect();
    BraidWord::new(p, cycle.repeat(q)).unwrap()
}

fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

/// `t^{(p-1)(q-1)/2} (1 - t^{p+1} - t^{q+1} + t^{p+q}) / (1 - t^2)`.
fn torus_jones(p: usize, q: usize) -> LaurentPoly {
    let (p, q) = (p as i64, q as i64);
    let num = poly(&[(0, 1), (p + 1, -1), (q + 1, -1), (p + q, 1)]);
    let den = poly(&[(0, 1), (2, -1)]);
    num.div_exact(&den).unwrap().shift((p - 1) * (q - 1) / 2)
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, centred.
fn torus_alexander(p: usize, q: usize) -> LaurentPoly {
    let (p, q) = (p as i64, q as i64);
    let num = &poly(&[(p * q, 1), (0, -1)]) * &poly(&[(1, 1), (0, -1)]);
    let den = &poly(&[(p, 1), (0, -1)]) * &poly(&[(q, 1), (0, -1)]);
    let d = num.div_exact(&den).unwrap();
    let top = d.max_exp().unwrap();
    d.shift(-top / 2)
}

#[test]
fn torus_knots_match_closed_formulas() {
    for p in 2..=4usize {
        for q in 2..=7usize {
            if gcd(p, q) != 1 || p * q > 21 {
                continue;
            }
            let b = torus(p, q);
            assert!(is_knot(&b));
            let v = jones(&b).unwrap().integer_powers().unwrap();
            assert_eq!(v, torus_jones(p, q), "T({p},{q})");
            assert_eq!(alexander(&b).unwrap(), torus_alexander(p, q), "T({p},{q})");
            // the mirror image has t inverted
            let m = b.invert();
            let vm = jones(&m).unwrap().integer_powers().unwrap();
            assert_eq!(vm, torus_jones(p, q).scale_exponents(-1));
            assert_eq!(conway_a2(&m).unwrap(), conway_a2(&b).unwrap());
        }
    }
    assert_eq!(jones(&torus(2, 3)).unwrap().to_string(), "-t^4 + t^3 + t");
}

#[test]
fn series_starts_with_one_zero_and_minus_three_a2() {
    let mut r = rng(41);
    for _ in 0..100 {
        let k = r.gen_range(2..=4);
        let mut s = Sampler::new(k, r.gen()).unwrap();
        let b = s.knot_word(r.gen_range(0..=10));
        let u = jones_series(&b, 3).unwrap().coeffs;
        assert_eq!(u[0], BigRational::from_integer(1.into()), "{b}");
        assert!(u[1].is_zero(), "{b}");
        let a2 = BigRational::from_integer(conway_a2(&b).unwrap());
        assert_eq!(u[2], -BigRational::from_integer(3.into()) * a2, "{b}");
    }
}

#[test]
fn series_examples() {
    let one = |n: i64| BigRational::from_integer(BigInt::from(n));
    assert_eq!(
        jones_series(&w("B1"), 3).unwrap().coeffs,
        vec![one(1), one(0), one(0), one(0)]
    );
    let fig8 = jones_series(&w("B3 1 -2 1 -2"), 2).unwrap();
    assert_eq!(fig8.coeffs, vec![one(1), one(0), one(3)]);
    assert_eq!(fig8.to_string(), "[1, 0, 3]");
    assert!(matches!(
        jones_series(&w("B2"), 2),
        Err(Error::NotAKnot { components: 2 })
    ));
    assert!(matches!(
        jones_series(&w("B1"), 17),
        Err(Error::OrderTooLarge { .. })
    ));
}

#[test]
fn invariants_survive_markov_moves_and_conjugation() {
    let mut r = rng(42);
    for _ in 0..60 {
        let k = r.gen_range(2..=4);
        let len = r.gen_range(1..=9);
        let b = random_word(&mut r, k, len);
        let stab_letter = if r.gen_bool(0.5) {
            k as i32
        } else {
            -(k as i32)
        };
        let mut letters = b.letters().to_vec();
        letters.push(stab_letter);
        let stabilized = BraidWord::new(k + 1, letters).unwrap();
        let c = random_word(&mut r, k, 4);
        let conj = c.concat_raw(&b).unwrap().concat_raw(&c.invert()).unwrap();
        let v = jones(&b).unwrap();
        assert_eq!(jones(&stabilized).unwrap(), v, "{b}");
        assert_eq!(jones(&conj).unwrap(), v, "{b}");
        if is_knot(&b) {
            assert_eq!(alexander(&stabilized).unwrap(), alexander(&b).unwrap());
            assert_eq!(alexander(&conj).unwrap(), alexander(&b).unwrap());
        }
    }
}

#[test]
fn alexander_is_symmetric_and_normalized() {
    let mut r = rng(43);
    for _ in 0..100 {
        let k = r.gen_range(2..=5);
        let b = Sampler::new(k, r.gen())
            .unwrap()
            .knot_word(r.gen_range(0..=14));
        let d = alexander(&b).unwrap();
        assert_eq!(d.scale_exponents(-1), d, "{b}");
        assert_eq!(d.eval_one(), BigInt::from(1), "{b}");
    }
    assert!(matches!(
        alexander(&w("B2 1 1")),
        Err(Error::NotAKnot { .. })
    ));
}

#[test]
fn delta_insertions_keep_components_and_linking() {
    let mut r = rng(44);
    for _ in 0..200 {
        let k = r.gen_range(3..=5);
        let len = r.gen_range(0..=10);
        let b = random_word(&mut r, k, len);
        let h = r.gen_range(1..=k - 2);
        let i = r.gen_range(h + 1..k);
        let j = r.gen_range(i + 1..=k);
        let pos = r.gen_range(0..=b.len());
        let m = DeltaInsertion::new(pos, h, i, j, if r.gen_bool(0.5) { 1 } else { -1 });
        let after = apply_insertions(&b, &[m]).unwrap();
        assert_eq!(closure_components(&after), closure_components(&b));
        assert_eq!(linking_matrix(&after), linking_matrix(&b));
    }
}

#[test]
fn linking_numbers_of_small_links() {
    assert_eq!(linking_matrix(&w("B2 1 1")).0, vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(
        linking_matrix(&w("B2 -1 -1 -1 -1")).0,
        vec![vec![0, -2], vec![-2, 0]]
    );
    let p13 = pure_gen(PureGenSpec::new(1, 3), 3).unwrap();
    let l = linking_matrix(&p13);
    assert_eq!((l.get(0, 2), l.get(0, 1), l.get(1, 2)), (1, 0, 0));
    assert_eq!(closure_components(&w("B4 1 3")).count, 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn bracket_matches_state_sum(k in 1usize..=4, seed in any::<u64>(), len in 0usize..=10) {
        let b = random_word(&mut rng(seed), k.max(2), len);
        let b = if k == 1 { BraidWord::identity(1) } else { b };
        prop_assert_eq!(kauffman_bracket(&b).unwrap(), brute_force_bracket(&b));
    }
}
