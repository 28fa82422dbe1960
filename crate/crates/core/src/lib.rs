//! Numerical semigroups and their ideals, counted by codimension.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure
//! computation over immutable values:
//!
//! - [`semigroup`]: minimal generators, Apéry set, Frobenius number, gaps.
//! - [`qpoly`]: exact integer polynomials, truncated series, Gaussian
//!   binomials and rational generating functions with `(1 - q^e)` factors.
//! - [`census`]: exhaustive enumeration of ideals by codimension; the oracle
//!   every closed form in this crate is checked against.
//! - [`paths2`]: two-generator lattice paths and the inversion statistic.
//! - [`tritab`]: the tabular grid for `<a, b, c>` with `a | b + c`.
//!
//! Parallel enumeration, file formats and the command line live in the
//! `numsgp` companion crate.

#![no_std]

extern crate alloc;

pub mod census;
mod error;
pub mod paths2;
pub mod qpoly;
pub mod semigroup;
pub mod tritab;

pub use census::{
    census, enumerate_ideals, ideal_gf, is_ideal, shift_ideal, CensusTable, IdealGapSet, Shifted,
};
pub use error::{Error, Result, WordDefect};
pub use paths2::{closed_form_two_gen, inversions, PathWord, Step};
pub use qpoly::{gaussian_binomial, GfRational, IntPolynomial, Numerator, SeriesTruncation};
pub use semigroup::{sylvester_frobenius, NumericalSemigroup};
pub use tritab::{family_gf_3, thm_tri_gf, TabularGrid};
