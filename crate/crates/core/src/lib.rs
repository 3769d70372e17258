//! Exact-arithmetic toolkit for alternate-base (Cantor real) expansions.
//!
//! The crate is organized in layers:
//!
//! * [`rational`] — arbitrary-precision rationals and certified rational
//!   intervals (the only approximation primitive in the crate).
//! * [`poly`] — integer/rational polynomials: arithmetic, resultants,
//!   factorization over Z, certified real-root isolation (Sturm) and a
//!   simultaneous complex root finder with a posteriori error radii.
//! * [`realalg`] — real algebraic numbers as (squarefree defining
//!   polynomial, isolating interval) pairs.
//! * [`field`] — number-field contexts: a common field Q(theta) containing
//!   all inputs of a problem instance, with exact field arithmetic, sign
//!   decisions, floors and minimal polynomials.
//! * [`base`] — alternate bases, digit alphabets, partial products, shifts.
//! * [`expansion`] — greedy and quasi-greedy expansions with exact
//!   periodicity detection and value reconstruction.
//! * [`spectra`] — the algebraic layer: periodic-expansion polynomials,
//!   conjugate bounds, circle geometry, sharpness instances.
//! * [`classify`] — Type 1-5 classification, admissibility and
//!   (semi-)Parry pair detection.

pub mod base;
pub mod classify;
pub mod error;
pub mod expansion;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod realalg;
pub mod spectra;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
