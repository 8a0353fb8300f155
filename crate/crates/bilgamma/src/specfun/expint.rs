use crate::error::{domain, numerical, Result};

const EULER_GAMMA: f64 = 0.5772156649015328606;

/// Exponential integral E₁(x) = ∫₁^∞ e^{-xt}/t dt for x > 0.
///
/// Series with Euler's constant below x = 1, continued fraction above
/// (the series loses digits to cancellation for large x).
pub fn exp_integral_e1(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("exp_integral_e1 requires x > 0, got {x}")));
    }
    if x <= 1.0 {
        // E₁(x) = -γ - ln x + Σ_{n≥1} (-1)^{n+1} x^n / (n · n!)
        let mut sum = 0.0;
        let mut term = 1.0; // x^n / n! carrier
        for n in 1..200 {
            let nf = n as f64;
            term *= x / nf;
            sum += if n % 2 == 1 { term / nf } else { -term / nf };
            if term / nf < 1e-18 * (sum.abs() + 1.0) {
                return Ok(-EULER_GAMMA - x.ln() + sum);
            }
        }
        Err(numerical("E1 series did not converge"))
    } else {
        // modified Lentz on E₁(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
        let tiny = 1e-300;
        let mut b = x + 1.0;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..200u32 {
            let a = -((i * i) as f64);
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            let del = c * d;
            h *= del;
            if (del - 1.0).abs() < 1e-16 {
                return Ok(h * (-x).exp());
            }
        }
        Err(numerical("E1 continued fraction did not converge"))
    }
}
