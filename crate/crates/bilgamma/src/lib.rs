//! Bilateral Gamma distributions and their Lévy processes.
//!
//! A bilateral Gamma law Γ(α⁺, λ⁺; α⁻, λ⁻) is the distribution of the
//! difference of two independent Gamma variables. This crate implements the
//! distribution machinery (characteristic function, cumulants, Whittaker
//! density, CDF, Lévy measure), parameter estimation from return series
//! (method of moments seeding a Hooke–Jeeves likelihood search, plus
//! goodness-of-fit tests), path simulation through the two Gamma
//! subordinators, equivalent measure changes with their likelihood process
//! and relative entropy, closed-form European call pricing under the
//! one-parameter family of martingale measures (with minimal-entropy
//! selection and calibration), and an HJM term-structure model with Vasiček
//! volatility whose bond prices come out in closed form via the dilogarithm.
//!
//! Modules:
//! - [`specfun`]: log-Gamma, Whittaker W, Gauss hypergeometric, E₁, dilog.
//! - [`dist`]: the distribution itself.
//! - [`estimate`]: moments, method of moments, MLE, goodness of fit.
//! - [`process`]: path and jump simulation, the Sₙ path statistic.
//! - [`measure`]: equivalent measure transforms.
//! - [`pricing`]: exp-Lévy stock model and call prices.
//! - [`termstructure`]: HJM forward rates and bond prices.
//!
//! The environment variable `BILGAMMA_TOL` overrides the default quadrature
//! tolerances process-wide (see [`QuadratureConfig`]).

pub mod dist;
mod error;
pub mod estimate;
mod interp;
pub mod measure;
pub mod pricing;
pub mod process;
mod quad;
pub mod specfun;
pub mod termstructure;

pub use error::{Error, ErrorKind, Result};
pub use quad::{integrate, QuadratureConfig};

pub use dist::BilateralGammaParams;
