//! Equivalent measure changes between bilateral Gamma processes.
//!
//! Two bilateral Gamma laws generate locally equivalent path measures
//! exactly when their shape parameters agree; the rates are free. The
//! likelihood process is e^{U_t} with U_t affine in the subordinator pair
//! (X_t⁺, X_t⁻) — that pair is a sufficient statistic, so the interface
//! takes it directly.

use serde::Serialize;

use crate::dist::{rel_eq, BilateralGammaParams};
use crate::error::{domain, Result};

/// A pair of bilateral Gamma laws for X under ℙ (base) and ℚ (target),
/// with matching shape parameters.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MeasurePair {
    p_base: BilateralGammaParams,
    p_target: BilateralGammaParams,
}

/// True iff the two laws admit a locally equivalent measure change,
/// i.e. α⁺ and α⁻ agree (within relative tolerance 1e-9).
pub fn check_equivalence(p1: &BilateralGammaParams, p2: &BilateralGammaParams) -> bool {
    rel_eq(p1.alpha_plus(), p2.alpha_plus()) && rel_eq(p1.alpha_minus(), p2.alpha_minus())
}

impl MeasurePair {
    pub fn new(p_base: BilateralGammaParams, p_target: BilateralGammaParams) -> Result<Self> {
        if !check_equivalence(&p_base, &p_target) {
            return Err(domain(format!(
                "no equivalent measure change: shape parameters differ (({}, {}) vs ({}, {}))",
                p_base.alpha_plus(),
                p_base.alpha_minus(),
                p_target.alpha_plus(),
                p_target.alpha_minus()
            )));
        }
        Ok(Self { p_base, p_target })
    }

    pub fn base(&self) -> &BilateralGammaParams {
        &self.p_base
    }

    pub fn target(&self) -> &BilateralGammaParams {
        &self.p_target
    }

    /// U_t = ln Λ_t(ℚ,ℙ) given the subordinator values X_t⁺, X_t⁻:
    ///
    /// U_t = (λ₁⁺-λ₂⁺)X_t⁺ + (λ₁⁻-λ₂⁻)X_t⁻
    ///     + t [α⁺ ln(λ₂⁺/λ₁⁺) + α⁻ ln(λ₂⁻/λ₁⁻)].
    pub fn log_likelihood_process(&self, x_plus: f64, x_minus: f64, t: f64) -> f64 {
        let b = &self.p_base;
        let q = &self.p_target;
        (b.lambda_plus() - q.lambda_plus()) * x_plus
            + (b.lambda_minus() - q.lambda_minus()) * x_minus
            + t * (b.alpha_plus() * (q.lambda_plus() / b.lambda_plus()).ln()
                + b.alpha_minus() * (q.lambda_minus() / b.lambda_minus()).ln())
    }

    /// Relative entropy E_ℚ[ln Λ_t] = t [α⁺ f(λ₁⁺/λ₂⁺) + α⁻ f(λ₁⁻/λ₂⁻)]
    /// with f(x) = x - 1 - ln x. Nonnegative, zero iff the rates coincide.
    pub fn relative_entropy(&self, t: f64) -> f64 {
        let f = |x: f64| x - 1.0 - x.ln();
        let b = &self.p_base;
        let q = &self.p_target;
        t * (b.alpha_plus() * f(b.lambda_plus() / q.lambda_plus())
            + b.alpha_minus() * f(b.lambda_minus() / q.lambda_minus()))
    }
}
