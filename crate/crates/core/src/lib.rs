//! Momentum-space spin-1/2 spinor algebra.
//!
//! Bispinors are stored in the chiral ordering `(φ_R, φ_L)` with the
//! right-handed block on top. The crate builds the helicity-based spinor
//! families (single-helicity, dual-helicity, charge-conjugation eigenspinors,
//! Weyl-type), computes their bilinear covariants, assigns Lounesto classes
//! with a helicity annotation, and provides the parity, charge-conjugation,
//! Dirac-operator and Wigner-Θ diagnostics used to check them.
//!
//! Conventions in force everywhere:
//!
//! * metric `η = diag(+1, −1, −1, −1)`;
//! * `γ⁰ = [[0, 1], [1, 0]]`, `γⁱ = [[0, −σⁱ], [σⁱ, 0]]`, `γ⁵ = iγ⁰γ¹γ²γ³ = diag(1, −1)`;
//! * `σ = ψ̄ψ`, `ω = iψ̄γ⁵ψ`, `J^μ = ψ̄γ^μψ`, `K^μ = ψ̄γ^μγ⁵ψ`, `S^{μν} = iψ̄γ^μγ^νψ`.
//!
//! Everything is `no_std`; `alloc` is only used for classification findings.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]
#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bilinears;
pub mod classify;
mod error;
pub mod factory;
pub mod momentum;
pub mod spinor;
pub mod symmetries;
mod tolerance;

pub use algebra::{Block, Matrix2, Matrix4, C64};
pub use bilinears::{BilinearSet, FpkResiduals};
pub use classify::{HelicityProfile, LounestoClass};
pub use error::{Error, Result};
pub use momentum::{Direction, FourMomentum};
pub use spinor::BiSpinor;
pub use symmetries::SymmetryReport;
pub use tolerance::Tolerance;
