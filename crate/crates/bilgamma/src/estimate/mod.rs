//! Parameter estimation from i.i.d. return samples.
//!
//! The pipeline: raw sample moments → cumulant-based coefficients → the
//! method-of-moments system (a closed 2×2 elimination plus a damped Newton
//! solve in the rates) for a seed, then Hooke–Jeeves pattern search on the
//! exact log-likelihood, and finally goodness-of-fit statistics against the
//! fitted distribution.

mod gof;
mod hooke_jeeves;
mod likelihood;
mod mom;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dist::BilateralGammaParams;
use crate::error::{validation, Result};

pub use gof::{critical_ratio, goodness_of_fit, gof_against, CdfCurve, GofReport, KOLMOGOROV_TABLE};
pub use hooke_jeeves::{mle_fit, mle_fit_with, FitOptions, MleFit};
pub use likelihood::log_likelihood;
pub use mom::{method_of_moments, mom_system_jacobian};

/// Observations closer to zero than this are nudged off the origin before
/// likelihood work (the density lives on ℝ\{0} and flat days do occur).
pub const ZERO_RETURN_GUARD: f64 = 1e-12;

/// Raw sample moments m₁..m₄ with the sample size.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleMoments {
    m: [f64; 4],
    n: usize,
}

impl SampleMoments {
    /// mₖ for k in 1..=4.
    pub fn m(&self, k: usize) -> f64 {
        assert!((1..=4).contains(&k), "moment index {k} out of range");
        self.m[k - 1]
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// m̂ₖ = (1/n) Σ xᵢᵏ for k = 1..4. Needs at least 5 finite observations
/// and a nonzero second moment.
pub fn sample_moments(data: &[f64]) -> Result<SampleMoments> {
    if data.len() < 5 {
        return Err(validation(format!("need at least 5 observations, got {}", data.len())));
    }
    if let Some(bad) = data.iter().position(|v| !v.is_finite()) {
        return Err(validation(format!("non-finite observation at index {bad}")));
    }
    let n = data.len() as f64;
    let mut m = [0.0; 4];
    for &x in data {
        let mut p = 1.0;
        for mk in m.iter_mut() {
            p *= x;
            *mk += p;
        }
    }
    for mk in m.iter_mut() {
        *mk /= n;
    }
    if !(m[1] > 0.0) {
        return Err(validation("degenerate sample: second moment is zero"));
    }
    Ok(SampleMoments { m, n: data.len() })
}

/// The coefficients c₁..c₄ of the method-of-moments system:
/// c₁ = κ₁, c₂ = κ₂, c₃ = κ₃/2, c₄ = κ₄/6 with the κ's obtained from the
/// moment–cumulant relations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomCoefficients {
    c: [f64; 4],
}

impl MomCoefficients {
    /// cₖ for k in 1..=4.
    pub fn c(&self, k: usize) -> f64 {
        assert!((1..=4).contains(&k), "coefficient index {k} out of range");
        self.c[k - 1]
    }

    /// Directly from cumulants (cₙ = κₙ/(n-1)!), for exact round trips.
    pub fn from_cumulants(kappa: [f64; 4]) -> Result<Self> {
        let c = [kappa[0], kappa[1], kappa[2] / 2.0, kappa[3] / 6.0];
        if !(c[1] > 0.0) {
            return Err(validation("c2 (the variance) must be positive"));
        }
        Ok(Self { c })
    }
}

/// Moments → cumulants → system coefficients.
pub fn cumulants_from_moments(m: &SampleMoments) -> Result<MomCoefficients> {
    let m1 = m.m(1);
    let m2 = m.m(2);
    let m3 = m.m(3);
    let m4 = m.m(4);
    let k1 = m1;
    let k2 = m2 - m1 * m1;
    let k3 = m3 - 3.0 * m1 * m2 + 2.0 * m1.powi(3);
    let k4 = m4 - 4.0 * m3 * m1 - 3.0 * m2 * m2 + 12.0 * m2 * m1 * m1 - 6.0 * m1.powi(4);
    MomCoefficients::from_cumulants([k1, k2, k3, k4])
}

/// Nudge flat observations off the origin: the sign follows the average of
/// the neighboring observations, ties go positive.
pub fn sanitize_returns(data: &[f64]) -> Vec<f64> {
    let mut out = data.to_vec();
    for i in 0..out.len() {
        if out[i].abs() < ZERO_RETURN_GUARD {
            let mut acc = 0.0;
            let mut cnt = 0;
            if i > 0 {
                acc += data[i - 1];
                cnt += 1;
            }
            if i + 1 < data.len() {
                acc += data[i + 1];
                cnt += 1;
            }
            let avg = if cnt > 0 { acc / cnt as f64 } else { 0.0 };
            out[i] = if avg < 0.0 { -ZERO_RETURN_GUARD } else { ZERO_RETURN_GUARD };
        }
    }
    out
}

/// Full estimation output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FitReport {
    pub mom_seed: BilateralGammaParams,
    pub mle: BilateralGammaParams,
    pub log_likelihood: f64,
    pub n_pos: usize,
    pub n_neg: usize,
    pub kolmogorov: f64,
    pub l1: f64,
    pub l2: f64,
    /// significance level (e.g. "0.05") → "accept" | "reject"
    pub test_verdicts: BTreeMap<String, String>,
}

/// Where the likelihood search was seeded from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeedSource {
    MethodOfMoments,
    Heuristic,
}

/// A [`FitReport`] plus run metadata that is not part of the report schema.
#[derive(Debug, Clone, Serialize)]
pub struct FullFit {
    pub report: FitReport,
    pub converged: bool,
    pub evaluations: usize,
    pub seed_source: SeedSource,
}

/// The whole pipeline: moments → method-of-moments seed (with a symmetric
/// variance-matched fallback when no positive root exists) → Hooke–Jeeves
/// MLE → goodness of fit.
pub fn full_fit(data: &[f64], options: &FitOptions) -> Result<FullFit> {
    let data = sanitize_returns(data);
    let moments = sample_moments(&data)?;
    let coeffs = cumulants_from_moments(&moments)?;
    let (seed, seed_source) = match method_of_moments(&coeffs) {
        Ok(p) => (p, SeedSource::MethodOfMoments),
        Err(crate::Error::Estimation(_)) | Err(crate::Error::Domain(_)) => {
            let lam = (2.0 / coeffs.c(2)).sqrt();
            (BilateralGammaParams::new(1.0, lam, 1.0, lam)?, SeedSource::Heuristic)
        }
        Err(e) => return Err(e),
    };
    let fit = mle_fit_with(&data, &seed, options)?;
    let gof = goodness_of_fit(&data, &fit.params)?;
    let n_pos = data.iter().filter(|&&x| x > 0.0).count();
    let n_neg = data.iter().filter(|&&x| x < 0.0).count();
    Ok(FullFit {
        report: FitReport {
            mom_seed: seed,
            mle: fit.params,
            log_likelihood: fit.log_likelihood,
            n_pos,
            n_neg,
            kolmogorov: gof.kolmogorov,
            l1: gof.l1,
            l2: gof.l2,
            test_verdicts: gof.verdicts,
        },
        converged: fit.converged,
        evaluations: fit.evaluations,
        seed_source,
    })
}
