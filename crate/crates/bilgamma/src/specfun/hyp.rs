use crate::error::{domain, numerical, Result};

const MAX_TERMS: usize = 20_000_000;
const SCALE_DOWN: f64 = 2.2250738585072014e-308; // threshold for rescaling
const SCALE_UP_LIMIT: f64 = 1e280;
const LN_2_POW_512: f64 = 512.0 * std::f64::consts::LN_2;

fn is_non_positive_integer(c: f64) -> bool {
    c <= 0.0 && c == c.round()
}

/// Σ (p)_n (q)_n / ((c)_n n!) w^n with power-of-two rescaling of the partial
/// sum, returning ln of the (positive) total. Requires w ∈ [0, 1).
fn ln_series_scaled(p: f64, q: f64, c: f64, w: f64) -> Result<f64> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut offset = 0.0f64;
    let mut n = 0.0f64;
    for _ in 0..MAX_TERMS {
        term *= (p + n) * (q + n) / ((c + n) * (1.0 + n)) * w;
        sum += term;
        n += 1.0;
        if term.abs() < 1e-16 * sum.abs() && n > 4.0 {
            if sum <= 0.0 {
                return Err(numerical("hypergeometric series summed to a non-positive value"));
            }
            return Ok(offset + sum.ln());
        }
        if sum.abs() > SCALE_UP_LIMIT {
            sum *= SCALE_DOWN.sqrt(); // 2^-512
            term *= SCALE_DOWN.sqrt();
            offset += LN_2_POW_512;
        }
    }
    Err(numerical(format!("hypergeometric series did not converge within {MAX_TERMS} terms (w={w})")))
}

/// ln F(a,b;c;z) for z ≤ 0 when the Pfaff-transformed series has positive
/// terms (the pricing formulas always land here: c - b = 1).
pub(crate) fn ln_hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if is_non_positive_integer(c) {
        return Err(domain(format!("hyp2f1: c must not be a non-positive integer, got {c}")));
    }
    if z > 0.0 {
        return Err(domain(format!("hyp2f1 supports z <= 0 only, got {z}")));
    }
    if z == 0.0 {
        return Ok(0.0);
    }
    // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; w), w = z/(z-1) ∈ (0,1).
    // Transforming on the parameter that keeps both upper parameters
    // non-negative avoids cancellation in the series.
    let w = z / (z - 1.0);
    let (p, q, prefactor_exp) = if c - b >= 0.0 && a >= 0.0 {
        (a, c - b, a)
    } else if c - a >= 0.0 && b >= 0.0 {
        (b, c - a, b)
    } else {
        (a, c - b, a)
    };
    Ok(ln_series_scaled(p, q, c, w)? - prefactor_exp * (1.0 - z).ln())
}

/// Gauss hypergeometric function F(a,b;c;z) for z ≤ 0.
///
/// Negative arguments are mapped into [0,1) by the Pfaff transformation
/// before summing the series; the sum stops once a term falls below the
/// relative tolerance times the partial sum.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if is_non_positive_integer(c) {
        return Err(domain(format!("hyp2f1: c must not be a non-positive integer, got {c}")));
    }
    if z > 0.0 {
        return Err(domain(format!("hyp2f1 supports z <= 0 only, got {z}")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    let w = z / (z - 1.0);
    let (p, q, pref) = if c - b >= 0.0 && a >= 0.0 {
        (a, c - b, a)
    } else if c - a >= 0.0 && b >= 0.0 {
        (b, c - a, b)
    } else {
        (a, c - b, a)
    };
    // signed series with rescaling (transformed parameters may be negative)
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut offset = 0.0f64;
    let mut n = 0.0f64;
    for _ in 0..MAX_TERMS {
        term *= (p + n) * (q + n) / ((c + n) * (1.0 + n)) * w;
        sum += term;
        n += 1.0;
        if term.abs() < 1e-16 * sum.abs().max(1e-300) && n > 4.0 {
            return Ok(sum * (offset - pref * (1.0 - z).ln()).exp());
        }
        if sum.abs() > SCALE_UP_LIMIT {
            sum *= SCALE_DOWN.sqrt();
            term *= SCALE_DOWN.sqrt();
            offset += LN_2_POW_512;
        }
    }
    Err(numerical(format!("hyp2f1 series did not converge (z={z})")))
}
