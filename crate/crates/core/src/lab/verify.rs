//! Desk-scale check that Jones series coefficients below order `2n` cannot
//! tell `⟨b⟩` apart from `⟨p b⟩` when `p ∈ γ_n(P′)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::certificate::GammaCertificate;
use super::sample::Sampler;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::invariants::{conway_a2, jones_series};

pub const DEFAULT_LEVEL_BOUND: usize = 3;
pub const MAX_STRANDS: usize = 6;
/// Letters in the random knot braid `b`.
const BASE_LETTERS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub p_cert: GammaCertificate,
    pub b: BraidWord,
    #[serde(with = "crate::invariants::jones::rational_strings")]
    pub coeffs_base: Vec<BigRational>,
    #[serde(with = "crate::invariants::jones::rational_strings")]
    pub coeffs_mod: Vec<BigRational>,
    pub a2_base: String,
    pub a2_mod: String,
    /// Whether `a_2` takes part in the verdict (it does when `2 < 2n`).
    pub a2_checked: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub n: usize,
    pub k: usize,
    pub seed: String,
    pub trials: Vec<TrialReport>,
    pub pass: bool,
}

impl TheoremReport {
    pub fn a2_differences(&self) -> usize {
        self.trials.iter().filter(|t| t.a2_base != t.a2_mod).count()
    }

    pub fn first_violation(&self) -> Option<&TrialReport> {
        self.trials.iter().find(|t| !t.agree)
    }
}

/// Per-trial seed derived from the master seed.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed ^ (trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

pub fn run_trial(n: usize, k: usize, seed: u64) -> Result<TrialReport> {
    let mut sampler = Sampler::new(k, seed)?;
    let cert = sampler.gamma(n, 1)?;
    let len = BASE_LETTERS + sampler.rng().gen_range(0..=4);
    let b = sampler.knot_word(len);
    let p = cert.evaluate()?;
    let pb = p.compose(&b)?;
    let d = 2 * n - 1;
    let coeffs_base = jones_series(&b, d)?.coeffs;
    let coeffs_mod = jones_series(&pb, d)?.coeffs;
    let a2_base: BigInt = conway_a2(&b)?;
    let a2_mod: BigInt = conway_a2(&pb)?;
    let a2_checked = 2 <= d;
    let agree = coeffs_base == coeffs_mod && (!a2_checked || a2_base == a2_mod);
    Ok(TrialReport {
        p_cert: cert,
        b,
        coeffs_base,
        coeffs_mod,
        a2_base: a2_base.to_string(),
        a2_mod: a2_mod.to_string(),
        a2_checked,
        agree,
    })
}

/// Samples `p ∈ γ_n(P_k′)` and a knot braid `b` per trial and compares
/// `u_0..u_{2n-1}` (and `a_2` when `n >= 2`) of `⟨b⟩` and `⟨p b⟩`.
#[allow(non_snake_case)]
pub fn verify_theorem_2_1_AC(
    n: usize,
    k: usize,
    seed: u64,
    trials: usize,
) -> Result<TheoremReport> {
    if n == 0 || n > DEFAULT_LEVEL_BOUND {
        return Err(Error::Invalid(format!(
            "level {n} is outside the supported range 1..={DEFAULT_LEVEL_BOUND}"
        )));
    }
    if k > MAX_STRANDS {
        return Err(Error::TooManyStrands {
            strands: k,
            bound: MAX_STRANDS,
        });
    }
    if k < 2 {
        return Err(Error::Invalid("at least 2 strands are needed".into()));
    }
    let reports = (0..trials)
        .map(|t| run_trial(n, k, trial_seed(seed, t)))
        .collect::<Result<Vec<_>>>()?;
    let pass = reports.iter().all(|t| t.agree);
    Ok(TheoremReport {
        theorem: "2.1AC".into(),
        n,
        k,
        seed: seed.to_string(),
        trials: reports,
        pass,
    })
}
