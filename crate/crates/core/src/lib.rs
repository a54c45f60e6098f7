//! Digital binomial coefficients.
//!
//! For a base `b >= 2` the b-ary binomial coefficient of `n` and `k` is the
//! product, over digit positions, of the classical binomials of the digits:
//! `C_b(n, k) = prod_l C(n_l, k_l)`. This crate provides
//!
//! - [`digits`]: base-b expansions, digit sums, digit counts and carries,
//! - [`coefficients`]: exact b-ary binomial and multinomial coefficients,
//! - [`polynomial`]: exact sparse multivariate polynomials over big integers,
//! - [`identities`]: exhaustive checkers for the identities these coefficients satisfy,
//! - [`triangle`]: b-ary Pascal triangles, their tensor structure and renderers,
//! - [`cli`]: the `bary` command-line front end.

pub mod cli;
pub mod coefficients;
pub mod digits;
pub mod error;
pub mod identities;
pub mod polynomial;
mod sweep;
pub mod triangle;

pub use coefficients::{bary_binom, bary_multinomial, classical_binom, valuation, BaryBinomial};
pub use digits::{
    carry_count, carry_free_partners, digit_count, digit_sum, expand, is_carry_free,
    DigitExpansion,
};
pub use error::{Error, Result};
pub use identities::VerificationReport;
pub use polynomial::SparsePoly;
pub use triangle::Triangle;
