//! Certified samplers, the ideal-product expansion, connected-sum slides and
//! the desk check of the constructive direction of the main theorem.

pub mod certificate;
pub mod ideal;
pub mod sample;
pub mod verify;

pub use certificate::{CertNode, DerivedCertificate, GammaCertificate, LeafFactor};
pub use ideal::{
    connected_sum_normalize, expand_ideal_product, slide_step, IdealProduct, SignedTerm, SlideState,
};
pub use sample::{sample_derived, sample_gamma, sample_p_prime, Sampler};
pub use verify::{verify_theorem_2_1_AC, TheoremReport, TrialReport};
