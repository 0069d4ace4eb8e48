//! Exact arithmetic in `Z[v, v^-1]` and its fraction field, plus the
//! changes of variable to `z = v - v^-1` and `t = v^2`.

mod conway;
mod gcd;
mod json;
mod poly;
mod rational;

pub use conway::{equal_up_to_unit, to_alexander_t, to_conway, AlexanderPoly, ConwayPoly};
pub use json::{Coefficient, Exponent, PolyJson, Variable};
pub use poly::{quantum_integer, LaurentPoly};
pub use rational::RationalFn;
