//! Asymptotic convergence factor `κ(E, ξ)` and logarithmic capacity of a
//! union of two real intervals `E = [a1, a2] ∪ [a3, a4]`.
//!
//! Exact values come from Jacobi elliptic and theta functions; elementary
//! two-sided bounds are provided alongside. The [`oracle`] module recomputes
//! both quantities by unrelated means for validation.

// Argument checks are written `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod capacity;
pub mod error;
pub mod factor;
pub mod geometry;
pub mod oracle;
pub mod special;

pub use capacity::{cap_exact, cap_general, cap_lower, cap_normalized, cap_upper, CapacityEstimate};
pub use error::{Error, Result};
pub use factor::{b_from_jacobi, kappa_bounds, kappa_exact, kappa_general, xi_optimal, FactorEstimate};
pub use geometry::{normalize, IntervalPair, NormalizedProblem, Region, Uniformization};
pub use special::Modulus;
