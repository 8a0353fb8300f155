//! Special functions backing the rest of the crate: log-Gamma, the
//! Whittaker function W, the Gauss hypergeometric series, the exponential
//! integral E₁, the dilogarithm, and the closed-form ∫ ln(c + d e^{λx}) dx.
//!
//! Everything here is a pure function of its arguments.

mod dilog;
mod expint;
mod gamma_fn;
mod hyp;
mod whittaker;

pub use dilog::{dilog, log_exp_integral};
pub use expint::exp_integral_e1;
pub use gamma_fn::log_gamma;
pub use hyp::hyp2f1;
pub(crate) use hyp::ln_hyp2f1;
pub use whittaker::{ln_whittaker_w, whittaker_w};

pub use crate::quad::QuadratureConfig;
