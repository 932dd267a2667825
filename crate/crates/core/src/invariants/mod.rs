//! Invariants of braid closures: component data, the Kauffman bracket and
//! Jones polynomial, Jones series coefficients and the Alexander polynomial.

pub mod alexander;
pub mod bracket;
pub mod closure;
pub mod jones;

pub use alexander::{alexander, conway_a2, conway_a2_of, reduced_burau};
pub use bracket::{kauffman_bracket, kauffman_bracket_bounded, loop_value};
pub use closure::{closure_components, is_knot, linking_matrix, ClosureComponents, LinkingMatrix};
pub use jones::{jones, jones_series, JonesPoly, SeriesExpansion};
