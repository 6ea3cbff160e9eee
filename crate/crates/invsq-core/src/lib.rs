//! Numerics for the Schrödinger operator `L_a = -Δ + a/|x|²`.
//!
//! The crate is `no_std` (with `alloc`). It evaluates the special functions the
//! explicit kernel formulas consume, discretises the Bessel and Hankel
//! transforms on logarithmic radial grids, and evaluates the wave-operator and
//! Riesz-type kernels together with independent quadrature oracles.
//!
//! | module | contents |
//! |---|---|
//! | [`specfun`] | Γ, ψ⁽ᵐ⁾, J_ν, Y_ν, ₂F₁, quadrature, integral identities |
//! | [`params`] | σ, ν₀, per-mode indices, admissible `1/p` intervals |
//! | [`transforms`] | radial grids, `B_μ`, `H_ν`, `W_k`, spectral calculus |
//! | [`waveop`] | `K̃_k` series, near-diagonal split, damped-quadrature oracle |
//! | [`riesz`] | Fox-H symbol, residue series, inverse-Mellin oracle |
//! | [`multiplier`] | finite differences and Bonami–Clerc quantities |
//! | [`harmonics`] | spherical harmonics (d = 2, 3), full operators, dispersion |
#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

mod error;
pub mod harmonics;
pub mod multiplier;
pub mod params;
pub mod riesz;
pub mod specfun;
pub mod transforms;
pub mod waveop;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use params::{IndexInterval, ModeIndices, OperatorTag, SpectralParams};
