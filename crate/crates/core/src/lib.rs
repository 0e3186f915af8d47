//! Polynomial invariants of long virtual knots computed from Gauss diagrams.
//!
//! Everything is generic over an exact integer [`scalar::Coefficient`]; the
//! aliases below fix it to `BigInt`, with `i64` variants for callers that
//! know their values stay small.

pub mod construct;
pub mod gauss;
pub mod invariants;
pub mod laurent;
pub mod moves;
pub mod scalar;
pub mod verify;

pub use gauss::{DetRng, GaussDiagram, ParseError, Sign};
pub use num_bigint::BigInt;

pub type LaurentPolynomial = laurent::Laurent<BigInt>;
pub type LaurentPolynomialI64 = laurent::Laurent<i64>;
pub type InvariantReport = invariants::Invariants<BigInt>;
pub type InvariantReportI64 = invariants::Invariants<i64>;
pub type DeltaBound = construct::DeltaBoundReport<BigInt>;
