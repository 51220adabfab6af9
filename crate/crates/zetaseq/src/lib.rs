//! Exact-arithmetic toolkit for the sequence transforms of dynamical zeta
//! functions.
//!
//! A sequence of fixed-point counts `a_n` has two companion
//! representations, all interconvertible here without ever leaving exact
//! arithmetic:
//!
//! - orbit counts `b_n` with `n b_n = sum_{d|n} mu(n/d) a_d`, the exponents
//!   of the Euler product `prod (1-x^n)^{-b_n}`;
//! - zeta coefficients `A_n`, the coefficients of `exp(sum a_n x^n / n)`.
//!
//! On top of the transforms sit the checkers: Kummer congruences,
//! pre-realizability (integrality of `b`, of `A`, or the equivalent
//! prime-power congruences), Puri-Ward realizability (`b_n` nonnegative
//! integers), and the integrality and 2-adic valuation law of the
//! Riemann-Siegel coefficient sequences lambda, rho and mu.
//!
//! Everything is deterministic and pure; all types are immutable once
//! built, so values can be shared freely across threads.

pub mod cache;
pub mod congruences;
pub mod error;
pub mod gabcke;
pub mod sequences;
pub mod series;
pub mod transforms;

pub use error::{Error, Result};
pub use sequences::{IntegerSequence, RationalSequence};
pub use series::RationalSeries;
pub use transforms::DivisorTransformResult;
