use crate::error::{domain, Result};

const PI2_6: f64 = 1.6449340668482264365; // π²/6

/// Spence's function Li₂(w) for w ≤ 1, by series after region reduction.
fn li2(w: f64) -> f64 {
    debug_assert!(w <= 1.0);
    if w == 1.0 {
        return PI2_6;
    }
    if w < -1.0 {
        // inversion: Li₂(w) = -Li₂(1/w) - π²/6 - ln²(-w)/2
        return -li2(1.0 / w) - PI2_6 - 0.5 * (-w).ln().powi(2);
    }
    if w < 0.0 {
        // Landen: Li₂(w) = -Li₂(w/(w-1)) - ln²(1-w)/2, maps [-1,0) into (0,1/2]
        let l = (1.0 - w).ln();
        return -li2(w / (w - 1.0)) - 0.5 * l * l;
    }
    if w > 0.5 {
        // reflection: Li₂(w) = π²/6 - ln w ln(1-w) - Li₂(1-w)
        return PI2_6 - w.ln() * (1.0 - w).ln() - li2(1.0 - w);
    }
    // direct series on [0, 1/2]
    let mut sum = 0.0;
    let mut pw = 1.0;
    for k in 1..80 {
        pw *= w;
        let t = pw / ((k * k) as f64);
        sum += t;
        if t.abs() < 1e-18 * (sum.abs() + 1e-300) {
            break;
        }
    }
    sum
}

/// dilog(x) = -∫₁ˣ ln t/(t-1) dt for x ≥ 0.
///
/// Equals the series Σ (-1)^k (x-1)^k / k² on [0,2]; beyond 2 the
/// reflection identity dilog(x) + dilog(1/x) = -ln²(x)/2 is applied.
pub fn dilog(x: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(format!("dilog requires x >= 0, got {x}")));
    }
    if x > 2.0 {
        return Ok(-0.5 * x.ln().powi(2) - dilog(1.0 / x)?);
    }
    Ok(li2(1.0 - x))
}

/// Li₂(-e^s), stable when e^s would overflow.
fn li2_neg_exp(s: f64) -> f64 {
    if s <= 690.0 {
        li2(-s.exp())
    } else {
        // inversion with w = -e^s: Li₂(w) = -Li₂(1/w) - π²/6 - ln²(-w)/2
        -li2(-(-s).exp()) - PI2_6 - 0.5 * s * s
    }
}

/// Closed form of ∫ₐᵇ ln(c + d e^{λx}) dx via the dilogarithm:
/// (b-a) ln c - (1/λ) dilog(1 + (d/c) e^{λb}) + (1/λ) dilog(1 + (d/c) e^{λa}).
pub fn log_exp_integral(a: f64, b: f64, c: f64, d: f64, lam: f64) -> Result<f64> {
    if !(a <= b) {
        return Err(domain(format!("log_exp_integral requires a <= b, got a={a}, b={b}")));
    }
    if !(c > 0.0) {
        return Err(domain(format!("log_exp_integral requires c > 0, got {c}")));
    }
    if lam == 0.0 || !lam.is_finite() {
        return Err(domain("log_exp_integral requires a nonzero finite lambda"));
    }
    // d e^{λx} is monotone in x, so positivity at both endpoints covers [a,b]
    for &x in &[a, b] {
        if c + d * (lam * x).exp() <= 0.0 {
            return Err(domain(format!(
                "log_exp_integral requires c + d e^(lambda x) > 0 on [a,b]; violated at x={x}"
            )));
        }
    }
    if a == b {
        return Ok(0.0);
    }
    if d == 0.0 {
        return Ok((b - a) * c.ln());
    }

    // dilog(1 + u) = Li₂(-u) with u = (d/c) e^{λx}, handled in log scale
    let term = |x: f64| -> f64 {
        let s = (d.abs() / c).ln() + lam * x;
        if d > 0.0 {
            li2_neg_exp(s)
        } else {
            // u < 0 and 1 + u ∈ (0,1) by the positivity precondition, so s < 0
            li2(s.exp())
        }
    };
    Ok((b - a) * c.ln() - (term(b) - term(a)) / lam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate, QuadratureConfig};
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn trivial_points() {
        assert_eq!(dilog(1.0).unwrap(), 0.0);
        // dilog(0) = π²/6
        assert_relative_eq!(dilog(0.0).unwrap(), PI2_6, max_relative = 1e-15);
    }

    #[test]
    fn at_two_matches_alternating_series() {
        // oracle: Σ (-1)^k / k² = -π²/12, summed directly with Euler pair acceleration
        let mut s = 0.0;
        for k in (1..4_000_000u64).rev() {
            s += if k % 2 == 0 { 1.0 / ((k * k) as f64) } else { -1.0 / ((k * k) as f64) };
        }
        assert_abs_diff_eq!(dilog(2.0).unwrap(), s, epsilon = 1e-12);
        assert_relative_eq!(dilog(2.0).unwrap(), -0.8224670334241132, max_relative = 1e-14);
    }

    #[test]
    fn reflection_identity() {
        for &x in &[0.1, 0.5, 5.0, 50.0] {
            let lhs = dilog(x).unwrap() + dilog(1.0 / x).unwrap();
            let rhs = -0.5 * x.ln().powi(2);
            assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-12);
        }
    }

    #[test]
    fn matches_defining_integral() {
        let cfg = QuadratureConfig::default();
        for &x in &[0.25, 0.8, 1.7, 3.0, 12.0] {
            let oracle = -integrate(
                |t| if (t - 1.0).abs() < 1e-14 { -1.0 } else { t.ln() / (t - 1.0) },
                1.0,
                x,
                &cfg,
            )
            .unwrap();
            assert_abs_diff_eq!(dilog(x).unwrap(), oracle, epsilon = 1e-10);
        }
    }

    #[test]
    fn rejects_negative() {
        assert!(dilog(-0.1).is_err());
    }

    #[test]
    fn log_exp_integral_degenerate_cases() {
        // d = 0 → (b-a) ln c
        assert_relative_eq!(
            log_exp_integral(0.0, 2.0, 3.0, 0.0, 1.0).unwrap(),
            2.0 * 3.0f64.ln(),
            max_relative = 1e-14
        );
        // a = b → 0
        assert_eq!(log_exp_integral(1.0, 1.0, 2.0, 5.0, -0.7).unwrap(), 0.0);
    }

    #[test]
    fn log_exp_integral_matches_quadrature() {
        let cfg = QuadratureConfig::default();
        // frozen oracle value for (0,1,1,1,1): adaptive quadrature of ∫₀¹ ln(1+eˣ)dx
        let direct = integrate(|x| (1.0 + x.exp()).ln(), 0.0, 1.0, &cfg).unwrap();
        assert_abs_diff_eq!(direct, 0.9838190370206610, epsilon = 1e-12);
        assert_abs_diff_eq!(log_exp_integral(0.0, 1.0, 1.0, 1.0, 1.0).unwrap(), direct, epsilon = 1e-10);

        // negative d and negative lambda, still positive inside the log
        let v = log_exp_integral(0.2, 1.5, 2.0, -0.8, -1.3).unwrap();
        let o = integrate(|x| (2.0 - 0.8 * (-1.3 * x).exp()).ln(), 0.2, 1.5, &cfg).unwrap();
        assert_abs_diff_eq!(v, o, epsilon = 1e-10);
    }

    #[test]
    fn log_exp_integral_rejects_bad_inputs() {
        assert!(log_exp_integral(1.0, 0.0, 1.0, 1.0, 1.0).is_err()); // a > b
        assert!(log_exp_integral(0.0, 1.0, -1.0, 1.0, 1.0).is_err()); // c <= 0
        assert!(log_exp_integral(0.0, 1.0, 1.0, 1.0, 0.0).is_err()); // lambda = 0
        assert!(log_exp_integral(0.0, 1.0, 1.0, -2.0, 1.0).is_err()); // log of negative
    }
}
