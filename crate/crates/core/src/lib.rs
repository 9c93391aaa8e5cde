//! Exact λ-ring calculus for stringy invariants of symmetric products.
//!
//! The engine computes, with exact rational arithmetic throughout, the
//! generating series of stringy classes of symmetric products `X^(n)` of a
//! smooth variety `X` of dimension `d`:
//!
//! ```text
//! Σ_n [X^(n)]_st t^n  =  Exp( [X] · t / (1 - L^(d/2) t) )
//! ```
//!
//! where `Exp` is the plethystic exponential of the λ-ring of coefficients
//! and `L` is the (realized) Lefschetz class. The same coefficients are
//! independently computable as a finite sum over partitions, which the
//! engine exposes both as an API and as a randomized cross-check.
//!
//! Layers, from the bottom up:
//!
//! * [`rational`] — exact rational scalars (coefficients and exponents);
//! * [`poly`] — canonical multivariate Laurent polynomials;
//! * [`series`] — truncated power series in `t` over the polynomial ring,
//!   with exact `exp`/`log`/inversion;
//! * [`lambda`] — Adams and σ-operations, plethystic `Exp`/`Log`;
//! * [`realize`] — Euler/Poincaré/Hodge realizations and the specialization
//!   maps between them;
//! * [`stringy`] — partitions, orbifold weights, the stringy series and its
//!   partition-sum cross-check, Euler products;
//! * [`parse`] — the canonical text grammar for polynomials;
//! * [`sample`] — seeded random inputs for self-checks;
//! * [`cli`] — the `stringy` command-line front end.

pub mod cli;
pub mod error;
pub mod lambda;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod realize;
pub mod sample;
pub mod series;
pub mod stringy;

pub use error::Error;
pub use poly::{ExponentVector, LaurentPoly, VarId};
pub use rational::{rat, ratio, Rational};
pub use realize::{Realization, VAR_U, VAR_V};
pub use series::TruncatedSeries;
pub use stringy::{Partition, VarietyInput};
