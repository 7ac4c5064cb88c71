//! Exact arithmetic substrate: ℚ, ℚ(ζ₈), sparse polynomials, matrices and
//! matrix-group closure.

pub mod cyc8;
pub mod group;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use cyc8::Cyc8;
pub use group::{group_closure, group_closure_with_cap, MatrixGroup, DEFAULT_ELEMENT_CAP};
pub use matrix::{solve_in_span, ExactMatrix};
pub use poly::{coefficient_vectors, proportional, Monomial, MultiPoly, Substitution, Var};
pub use rational::{parse_rational, rat, Rational};
