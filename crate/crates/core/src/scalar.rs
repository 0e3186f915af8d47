//! Coefficient types for invariant values.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact integer-like ring element usable as a Laurent coefficient.
///
/// Implemented for the machine integers and for `num_bigint::BigInt`. The
/// crate-level aliases default to `BigInt`; fixed-width types are convenient
/// for hot loops where the caller knows the values stay small, and overflow
/// in them panics like ordinary integer arithmetic in debug builds.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Signed
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Send
    + Sync
    + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).unwrap_or_else(|| panic!("{v} does not fit the coefficient type"))
    }
}

impl<T> Coefficient for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Hash
        + Signed
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}
