//! Crystal paths for affine sl_n and the generating functions built from them.
//!
//! The crate is `no_std` (it needs `alloc`). Module layout:
//!
//! - [`qalgebra`]: Laurent polynomials in `q` with rational exponents,
//!   q-binomials, q-Pochhammer symbols and truncated series.
//! - [`combinatorics`]: partitions, tableaux, charge, Kostka numbers and
//!   Kostka-Foulkes polynomials.
//! - [`crystal`]: the crystals `B_(l)` and `B_(1^l)`, Kashiwara operators and
//!   the tensor product rule.
//! - [`energy`]: the local energy `H`, the combinatorial isomorphism, total
//!   path energy and ground states.
//! - [`paths`]: path classes, one-dimensional sums and highest weight sets.
//! - [`fermionic`]: fermionic polynomials and their limiting q-series.
//! - [`limits`]: finite-size stabilization of normalized one-dimensional sums.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod combinatorics;
pub mod crystal;
pub mod energy;
pub mod fermionic;
pub mod limits;
pub mod paths;
pub mod qalgebra;
mod quadform;

use alloc::string::String;
use core::fmt;

/// Errors raised by the library. Messages carry the offending values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the inputs does not hold.
    InvalidInput(String),
    /// A quantity that must be an integer turned out fractional.
    NonIntegral(String),
    /// An intermediate count exceeded the fixed-width accumulator.
    Overflow(String),
    /// A limit did not stabilize within the configured size ceiling.
    NotStabilized(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Error::NonIntegral(m) => write!(f, "non-integral value: {m}"),
            Error::Overflow(m) => write!(f, "overflow: {m}"),
            Error::NotStabilized(m) => write!(f, "not stabilized: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::Error::InvalidInput(alloc::format!($($arg)*))
    };
}
pub(crate) use invalid;
