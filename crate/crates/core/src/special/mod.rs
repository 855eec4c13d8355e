//! Real-argument elliptic integrals, Jacobi elliptic functions and Jacobi
//! theta functions in double precision.
//!
//! Everything hangs off [`Modulus`]: build it once per modulus and evaluate
//! `sn`, `cn`, `dn`, `zn`, `Theta`, `H`, `H1`, `Theta1` from it.

mod jacobi;
mod modulus;
mod theta;

pub use jacobi::JacobiTriple;
pub use modulus::{incomplete_f, Modulus, MAX_NOME};
pub use theta::ThetaFamily;
