//! Independent ground truth: Green's-function quadrature and discrete
//! minimal residual polynomials.

mod green;
mod quadrature;
mod residual;

pub use green::{cap_oracle, green_gap_zero, green_value, kappa_oracle, GreenFunction};
pub use quadrature::{integrate, Estimate, QuadratureConfig};
pub use residual::{
    kappa_from_norms, kappa_polynomial, min_residual_norm, residual_norms, ResidualConfig, SlopeFit, MAX_FIT_RESIDUAL,
};
