//! Special functions consumed by the kernel formulas.

mod bessel;
mod gamma;
mod hyp;
pub mod identities;
pub mod quad;

pub use bessel::{
    bessel_j, bessel_j_large, bessel_j_series, bessel_jy, bessel_y, hankel1, hankel_switch, SERIES_SWITCH,
};
pub use gamma::{
    cos_pi, gamma, gamma_pole_distance, gamma_ratio, gamma_ratio_coeffs, gamma_ratio_switch, ln_gamma,
    ln_gamma_complex, ln_gamma_ratio_asymptotic, ln_gamma_ratio_signed, LnGammaRatio, ln_gamma_signed, pochhammer, polygamma,
    rgamma, sin_pi, sin_pi_complex, EULER_GAMMA,
};
pub(crate) use gamma::bernoulli_poly;
pub use hyp::{hyp2f1, hyp2f1_near_one_limit, hyp2f1_near_one_residual, hyp2f1_with, SeriesBudget};
pub use identities::{verify_bessel_identities, wronskian_residual, IdentityReport};
