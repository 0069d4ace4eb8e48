//! Conway-normalized Alexander polynomials of braid closures.
//!
//! The main route is a state-sum over admissible resolutions of a braid
//! diagram with sign-labelled strands ([`state_sum`]). Two independent
//! routes check it: traces of the semi-normal hook-shape representations
//! of the Hecke algebra ([`hecke`]), and the reduced Burau determinant
//! ([`oracle`]), which determines the polynomial up to a unit.
//!
//! ```
//! use alexsum_core::{braid::parse_braid_word, laurent::to_conway, state_sum::evaluate_dp};
//!
//! let figure_eight = parse_braid_word("-2 1 -2 1", None).unwrap();
//! let v_poly = evaluate_dp(&figure_eight).unwrap();
//! assert_eq!(to_conway(&v_poly).unwrap().to_string(), "1 - z^2");
//! ```

pub mod braid;
mod error;
pub mod hecke;
pub mod hook;
pub mod laurent;
pub mod oracle;
pub mod state_sum;
pub mod verify;

pub use error::{Error, Result};
