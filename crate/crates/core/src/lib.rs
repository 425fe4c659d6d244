//! Analysis and construction of port-Hamiltonian realizations for LTI systems.

pub mod scalar;

pub use scalar::Scalar;
