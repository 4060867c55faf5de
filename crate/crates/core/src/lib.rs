//! Class numbers of imaginary quadratic fields, and an exact-arithmetic
//! laboratory for the zeta function that counts those fields by class number.
//!
//! * [`numtheory`]: Möbius function, fundamental discriminants, Kronecker symbol.
//! * [`census`]: class numbers by reduced forms, by the analytic formula,
//!   and by a parallel sweep over all reduced forms up to a bound.
//! * [`series`]: exact truncated power series and the Artin–Mazur, Lambert
//!   and Euler-product packagings of a dynamical zeta function.
//! * [`paperlab`]: the rational closed form, its derived counts, and the
//!   comparison against empirical data.
//! * [`watkins`], [`report`], [`cli`]: embedded reference data, CSV/JSON
//!   emission and the command-line tool.

pub mod census;
pub mod cli;
pub mod error;
pub mod numtheory;
pub mod paperlab;
pub mod report;
pub mod series;
pub mod watkins;

pub use error::{Error, Result};
