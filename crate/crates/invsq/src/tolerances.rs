//! Thresholds of the verification checks and the test hooks.

use serde::Serialize;

/// One threshold per check family. Defaults are the acceptance tolerances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub wronskian: f64,
    pub integral: f64,
    pub hyp_near_one: f64,
    pub plancherel: f64,
    pub involution: f64,
    pub free_identity: f64,
    pub free_kernel: f64,
    pub kernel: f64,
    pub diagonal: f64,
    /// allowed growth factor of a tail or dyadic quantity
    pub growth: f64,
    pub riesz: f64,
    pub even_continuity: f64,
    /// absolute cap on the appendix lattice sup
    pub appendix_cap: f64,
    pub parseval: f64,
    pub unitarity: f64,
    pub intertwining: f64,
    pub dispersive_free: f64,
    pub dispersive_band: f64,
    pub sobolev_band: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            wronskian: 1e-10,
            integral: 1e-8,
            hyp_near_one: 1e-6,
            plancherel: 1e-6,
            involution: 1e-5,
            free_identity: 1e-5,
            free_kernel: 1e-12,
            kernel: 1e-5,
            diagonal: 1e-4,
            growth: 4.0,
            riesz: 1e-5,
            even_continuity: 1e-3,
            appendix_cap: 10.0,
            parseval: 1e-10,
            unitarity: 1e-5,
            intertwining: 1e-5,
            dispersive_free: 0.05,
            dispersive_band: 2.0,
            sobolev_band: 10.0,
        }
    }
}

/// Deliberate perturbations used to show that a suite can fail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Hooks {
    /// multiplies every A⁺ coefficient in the series kernels
    pub a_plus_scale: f64,
}

impl Default for Hooks {
    fn default() -> Self {
        Hooks { a_plus_scale: 1.0 }
    }
}
