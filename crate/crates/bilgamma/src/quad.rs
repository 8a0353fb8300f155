//! Global-adaptive Gauss–Kronrod quadrature (G7, K15).
//!
//! The worst panel (largest error estimate) is bisected until the summed
//! error estimate meets `max(abs_tol, rel_tol * |integral|)` or the panel
//! budget is exhausted. Integrands are evaluated only at interior nodes,
//! so integrable endpoint singularities never produce NaN directly.

use std::sync::OnceLock;

use crate::error::{domain, numerical, Result};

/// Tolerances and budget for adaptive quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Absolute tolerance on the integral.
    pub abs_tol: f64,
    /// Relative tolerance on the integral.
    pub rel_tol: f64,
    /// Maximum number of panel bisections.
    pub max_subdivisions: usize,
}

impl QuadratureConfig {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !(abs_tol > 0.0) || !(rel_tol > 0.0) {
            return Err(domain("quadrature tolerances must be positive"));
        }
        if max_subdivisions == 0 {
            return Err(domain("max_subdivisions must be at least 1"));
        }
        Ok(Self { abs_tol, rel_tol, max_subdivisions })
    }
}

/// `BILGAMMA_TOL=<v>` overrides the default tolerances (rel_tol = v, abs_tol = v/100).
fn env_override() -> Option<f64> {
    static TOL: OnceLock<Option<f64>> = OnceLock::new();
    *TOL.get_or_init(|| {
        std::env::var("BILGAMMA_TOL")
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .filter(|v| *v > 0.0 && v.is_finite())
    })
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        match env_override() {
            Some(v) => Self { abs_tol: 1e-2 * v, rel_tol: v, max_subdivisions: 200 },
            None => Self { abs_tol: 1e-12, rel_tol: 1e-10, max_subdivisions: 200 },
        }
    }
}

// K15 abscissae on [0,1] (symmetric) and weights; G7 weights sit on the odd nodes.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// One panel: K15 value and |K15 - G7| error estimate.
fn kronrod_panel<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let x = h * XGK[i];
        let f1 = f(c - x);
        let f2 = f(c + x);
        k += WGK[i] * (f1 + f2);
        if i % 2 == 1 {
            g += WG[i / 2] * (f1 + f2);
        }
    }
    (k * h, (k - g).abs() * h)
}

/// Adaptively integrate `f` over `[a, b]`.
///
/// Returns the integral; fails with a numerical error carrying the achieved
/// tolerance when the panel budget is exhausted first.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(domain("quadrature limits must be finite"));
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };

    // (neg error, a, b, value, err) — BinaryHeap would need ordered floats,
    // a small vec with linear scan is fine at this panel budget.
    let (v0, e0) = kronrod_panel(&mut f, lo, hi);
    let mut panels: Vec<(f64, f64, f64, f64)> = vec![(lo, hi, v0, e0)];
    let mut splits = 0usize;

    loop {
        let mut total = 0.0;
        let mut err = 0.0;
        for p in &panels {
            total += p.2;
            err += p.3;
        }
        if !total.is_finite() {
            return Err(numerical("quadrature produced a non-finite value".to_string()));
        }
        let tol = cfg.abs_tol.max(cfg.rel_tol * total.abs());
        if err <= tol {
            return Ok(sign * total);
        }
        if splits >= cfg.max_subdivisions {
            return Err(numerical(format!(
                "quadrature did not converge: achieved error {err:.3e}, required {tol:.3e}"
            )));
        }
        // bisect the worst panel
        let mut worst = 0;
        for (i, p) in panels.iter().enumerate() {
            if p.3 > panels[worst].3 {
                worst = i;
            }
        }
        let (pa, pb, _, _) = panels.swap_remove(worst);
        let mid = 0.5 * (pa + pb);
        let (vl, el) = kronrod_panel(&mut f, pa, mid);
        let (vr, er) = kronrod_panel(&mut f, mid, pb);
        panels.push((pa, mid, vl, el));
        panels.push((mid, pb, vr, er));
        splits += 1;
    }
}

/// Integrate `exp(h(x) - shift)` over `[a, b]`, returning
/// `ln ∫ exp(h)` as `shift + ln(result)`. The caller picks `shift`
/// near `max h` so the scaled integrand stays in range.
pub(crate) fn integrate_ln_exp<F: FnMut(f64) -> f64>(
    mut h: F,
    a: f64,
    b: f64,
    shift: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let v = integrate(|x| (h(x) - shift).exp(), a, b, cfg)?;
    if v <= 0.0 {
        return Err(numerical("log-scaled quadrature produced a non-positive value"));
    }
    Ok(shift + v.ln())
}

/// ln(e^a + e^b) without overflow.
pub(crate) fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let m = a.max(b);
    m + ((a - m).exp() + (b - m).exp()).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn polynomial_is_exact() {
        let cfg = QuadratureConfig::default();
        let v = integrate(|x| 3.0 * x * x, 0.0, 2.0, &cfg).unwrap();
        assert_relative_eq!(v, 8.0, max_relative = 1e-14);
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let cfg = QuadratureConfig::default();
        let v = integrate(|x| x.exp(), 1.0, 0.0, &cfg).unwrap();
        assert_relative_eq!(v, -(std::f64::consts::E - 1.0), max_relative = 1e-12);
    }

    #[test]
    fn oscillatory_integrand_converges() {
        let cfg = QuadratureConfig::default();
        let v = integrate(|x| (20.0 * x).sin(), 0.0, 1.0, &cfg).unwrap();
        let exact = (1.0 - (20.0f64).cos()) / 20.0;
        assert_relative_eq!(v, exact, max_relative = 1e-10);
    }

    #[test]
    fn integrable_endpoint_singularity() {
        // ∫_0^1 x^{-1/2} dx = 2; endpoint never evaluated, convergence is slow but within budget
        let cfg = QuadratureConfig { abs_tol: 1e-9, rel_tol: 1e-9, max_subdivisions: 2000 };
        let v = integrate(|x| x.powf(-0.5), 0.0, 1.0, &cfg).unwrap();
        assert_relative_eq!(v, 2.0, max_relative = 1e-7);
    }

    #[test]
    fn budget_exhaustion_reports_achieved_error() {
        let cfg = QuadratureConfig { abs_tol: 1e-15, rel_tol: 1e-15, max_subdivisions: 2 };
        let err = integrate(|x| x.powf(-0.9), 0.0, 1.0, &cfg).unwrap_err();
        assert!(err.to_string().contains("achieved error"));
    }

    #[test]
    fn invalid_config_rejected() {
        assert!(QuadratureConfig::new(0.0, 1e-10, 10).is_err());
        assert!(QuadratureConfig::new(1e-12, -1.0, 10).is_err());
        assert!(QuadratureConfig::new(1e-12, 1e-10, 0).is_err());
        assert!(QuadratureConfig::new(1e-12, 1e-10, 10).is_ok());
    }

    #[test]
    fn log_add_exp_matches_direct() {
        assert_relative_eq!(log_add_exp(1.0, 2.0), (1f64.exp() + 2f64.exp()).ln(), max_relative = 1e-15);
        assert_eq!(log_add_exp(f64::NEG_INFINITY, 3.0), 3.0);
    }
}
