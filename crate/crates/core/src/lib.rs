//! Exact-integer machinery for Euler-type recurrences.
//!
//! Every function here works over arbitrary-precision integers. Sequences are
//! produced two ways: by elementary oracles (trial division, enumeration,
//! dynamic programming) and by sparse convolution recurrences against the
//! pentagonal signs `ω`. The [`identities`] catalog evaluates each recurrence
//! and product identity as an integer residual that must vanish.

pub mod arith;
pub mod combinatorics;
mod error;
pub mod identities;
pub mod numbers;
pub mod series;

pub use arith::FunctionTable;
pub use error::{Error, Result};
pub use series::{ProductFactor, ProductSpec, Series, Sign};
