//! Cubic Hermite interpolation on a strictly increasing knot grid, with
//! exact piecewise integration. Two slope rules: centered finite differences
//! (smooth function tables) and Fritsch–Carlson (monotone data).

use crate::error::{domain, validation, Result};

#[derive(Debug, Clone)]
pub(crate) struct CubicHermite {
    xs: Vec<f64>,
    ys: Vec<f64>,
    ms: Vec<f64>, // dy/dx at knots
}

impl CubicHermite {
    fn validate_grid(xs: &[f64], ys: &[f64]) -> Result<()> {
        if xs.len() < 2 || xs.len() != ys.len() {
            return Err(validation("interpolation needs at least two aligned knots"));
        }
        if xs.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(validation("interpolation knots must be strictly increasing"));
        }
        if xs.iter().chain(ys.iter()).any(|v| !v.is_finite()) {
            return Err(validation("interpolation knots must be finite"));
        }
        Ok(())
    }

    /// Centered-difference slopes (one-sided at the ends).
    pub fn from_samples(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        Self::validate_grid(&xs, &ys)?;
        let n = xs.len();
        let mut ms = vec![0.0; n];
        for i in 0..n {
            ms[i] = if i == 0 {
                (ys[1] - ys[0]) / (xs[1] - xs[0])
            } else if i == n - 1 {
                (ys[n - 1] - ys[n - 2]) / (xs[n - 1] - xs[n - 2])
            } else {
                // slope of the parabola through the three neighbors
                let h0 = xs[i] - xs[i - 1];
                let h1 = xs[i + 1] - xs[i];
                let d0 = (ys[i] - ys[i - 1]) / h0;
                let d1 = (ys[i + 1] - ys[i]) / h1;
                (h1 * d0 + h0 * d1) / (h0 + h1)
            };
        }
        Ok(Self { xs, ys, ms })
    }

    /// Fritsch–Carlson slopes: the interpolant preserves monotonicity of the
    /// data on every segment and never overshoots.
    pub fn monotone(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        Self::validate_grid(&xs, &ys)?;
        let n = xs.len();
        let mut d = vec![0.0; n - 1];
        for i in 0..n - 1 {
            d[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        }
        let mut ms = vec![0.0; n];
        ms[0] = d[0];
        ms[n - 1] = d[n - 2];
        for i in 1..n - 1 {
            ms[i] = if d[i - 1] * d[i] <= 0.0 { 0.0 } else { 0.5 * (d[i - 1] + d[i]) };
        }
        for i in 0..n - 1 {
            if d[i] == 0.0 {
                ms[i] = 0.0;
                ms[i + 1] = 0.0;
            } else {
                let a = ms[i] / d[i];
                let b = ms[i + 1] / d[i];
                let s = a * a + b * b;
                if s > 9.0 {
                    let t = 3.0 / s.sqrt();
                    ms[i] = t * a * d[i];
                    ms[i + 1] = t * b * d[i];
                }
            }
        }
        Ok(Self { xs, ys, ms })
    }

    pub fn x_min(&self) -> f64 {
        self.xs[0]
    }

    pub fn x_max(&self) -> f64 {
        *self.xs.last().unwrap()
    }

    fn segment(&self, x: f64) -> usize {
        match self.xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => i.min(self.xs.len() - 2),
            Err(i) => i.saturating_sub(1).min(self.xs.len() - 2),
        }
    }

    /// Evaluate at x ∈ [x_min, x_max].
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(x >= self.x_min() && x <= self.x_max()) {
            return Err(domain(format!(
                "interpolation argument {x} outside [{}, {}]",
                self.x_min(),
                self.x_max()
            )));
        }
        let i = self.segment(x);
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        Ok(h00 * self.ys[i] + h10 * h * self.ms[i] + h01 * self.ys[i + 1] + h11 * h * self.ms[i + 1])
    }

    /// ∫ₐᵇ of the interpolant (a, b within range; a ≤ b not required).
    pub fn integral(&self, a: f64, b: f64) -> Result<f64> {
        if a > b {
            return Ok(-self.integral(b, a)?);
        }
        if !(a >= self.x_min() && b <= self.x_max()) {
            return Err(domain(format!(
                "integration range [{a}, {b}] outside [{}, {}]",
                self.x_min(),
                self.x_max()
            )));
        }
        let mut acc = 0.0;
        let mut lo = a;
        while lo < b {
            let i = self.segment(lo);
            let hi = self.xs[i + 1].min(b);
            acc += self.segment_integral(i, lo, hi);
            lo = hi;
        }
        Ok(acc)
    }

    /// Exact integral of the cubic on segment i restricted to [lo, hi].
    fn segment_integral(&self, i: usize, lo: f64, hi: f64) -> f64 {
        let h = self.xs[i + 1] - self.xs[i];
        let prim = |x: f64| -> f64 {
            let t = (x - self.xs[i]) / h;
            let t2 = t * t;
            let t3 = t2 * t;
            let t4 = t3 * t;
            // antiderivatives of the Hermite basis, times h
            let ih00 = 0.5 * t4 - t3 + t;
            let ih10 = 0.25 * t4 - 2.0 * t3 / 3.0 + 0.5 * t2;
            let ih01 = -0.5 * t4 + t3;
            let ih11 = 0.25 * t4 - t3 / 3.0;
            h * (ih00 * self.ys[i]
                + ih10 * h * self.ms[i]
                + ih01 * self.ys[i + 1]
                + ih11 * h * self.ms[i + 1])
        };
        prim(hi) - prim(lo)
    }
}
