pub mod artin;
pub mod braid;
pub mod combing;
pub mod delta;
pub mod error;
pub mod free;
pub mod invariants;
pub mod lab;
pub mod poly;
pub mod word_problem;

pub use error::{Error, Result};
