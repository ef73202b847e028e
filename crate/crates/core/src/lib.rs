//! Exact computer algebra for multiplicative sequences of Pontryagin
//! classes and for the generating functions of reduced eta-invariants of
//! Dirac and signature operators on Berger spheres.
//!
//! Everything is computed in exact arithmetic: arbitrary-precision
//! rationals, Gaussian rationals, rational polynomials, truncated formal
//! power series, weighted polynomials in Pontryagin/Chern variables and a
//! free graded-commutative algebra with a time parameter. There is no
//! floating-point mode.

pub mod error;
pub mod ring;

pub mod gaussian;
pub mod poly;
pub mod rational;
pub mod special;

pub mod series;

pub mod genus;
pub mod roots;
pub mod weighted;

pub mod eta;

pub mod graded;
pub mod transgression;

pub mod checks;

pub use error::{Error, Result};
pub use gaussian::Gaussian;
pub use poly::{Polynomial, RatPoly};
pub use rational::Rat;
pub use ring::CoeffRing;
pub use series::PowerSeries;
