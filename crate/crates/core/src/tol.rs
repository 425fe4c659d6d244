//! Tolerance configuration shared by all numerical routines.

use crate::scalar::{sc, Scalar};

/// Tolerances used by rank decisions, definiteness tests and residual checks.
///
/// All values are relative: each test scales its tolerance by a norm of the
/// data involved. The defaults are tuned for `f64`.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances<T> {
    /// Symmetry / skew-symmetry acceptance, relative to the matrix norm.
    pub sym: T,
    /// Positive-semidefiniteness acceptance: `lambda_min >= -psd * ||M||`.
    pub psd: T,
    /// Orthogonality residual acceptance for computed orthogonal factors.
    pub orth: T,
    /// Rank threshold relative to the largest singular value.
    pub rank: T,
    /// Imaginary-axis band: eigenvalues with `|Re| <= axis * ||A||` count as
    /// lying on the axis.
    pub axis: T,
    /// Residual acceptance for factorizations and matrix-equation solves.
    pub fact: T,
    /// Minimal relative spectral separation required by Sylvester solves.
    pub sep: T,
    /// Relative size of the Riccati perturbation term.
    pub xi_scale: T,
}

impl<T: Scalar> Default for Tolerances<T> {
    fn default() -> Self {
        Tolerances {
            sym: sc(1e-12),
            psd: sc(1e-8),
            orth: sc(1e-12),
            rank: sc(1e-9),
            axis: sc(1e-8),
            fact: sc(1e-10),
            sep: sc(1e-11),
            xi_scale: sc(1e-8),
        }
    }
}

impl<T: Scalar> Tolerances<T> {
    /// Snapshot of the tolerances as `f64`, for reports.
    pub fn as_f64(&self) -> ToleranceSnapshot {
        ToleranceSnapshot {
            sym: self.sym.as_f64(),
            psd: self.psd.as_f64(),
            orth: self.orth.as_f64(),
            rank: self.rank.as_f64(),
            axis: self.axis.as_f64(),
            fact: self.fact.as_f64(),
            sep: self.sep.as_f64(),
            xi_scale: self.xi_scale.as_f64(),
        }
    }
}

/// Plain-`f64` view of a tolerance set, embedded in analysis reports.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct ToleranceSnapshot {
    pub sym: f64,
    pub psd: f64,
    pub orth: f64,
    pub rank: f64,
    pub axis: f64,
    pub fact: f64,
    pub sep: f64,
    pub xi_scale: f64,
}
