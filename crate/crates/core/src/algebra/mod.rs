//! Exact arithmetic: rationals, cyclotomic scalars, polynomials and rational
//! functions in (q, t), and linear algebra over them.

pub mod cyclo;
pub mod json;
pub mod matrix;
mod modgcd;
pub mod parse;
pub mod qtpoly;
pub mod qtrational;
pub mod rational;
pub mod upoly;

pub use cyclo::CycloScalar;
pub use matrix::{char_poly, det, lambda_gcd_trivial, resultant, solve_linear, solve_sylvester, LambdaPoly, RatMatrix};
pub use parse::parse_qt;
pub use qtpoly::{Mono, QTPoly, Subst};
pub use qtrational::QTRational;
pub use rational::Rational;
