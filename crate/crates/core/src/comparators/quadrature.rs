//! Composite trapezoid rules with a one-step Richardson check.
//!
//! Halving the grid (taking every other sample) gives a second trapezoid
//! estimate `T(2h)`. The extrapolated value `(4T(h) − T(2h))/3` is returned,
//! with `|T(h) − T(2h)|/3` as the reported error. Everything is plain
//! summation so results are bit-reproducible.

use num_complex::Complex64;

/// A quadrature value with its estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub error: f64,
}

impl Estimate {
    pub fn exact(value: Complex64) -> Self {
        Estimate { value, error: 0.0 }
    }

    /// The value if the error estimate is within `tolerance`.
    pub fn require(self, tolerance: f64) -> crate::Result<Complex64> {
        if self.error <= tolerance {
            Ok(self.value)
        } else {
            Err(crate::Error::Quadrature {
                achieved: self.error,
                requested: tolerance,
            })
        }
    }
}

/// Trapezoid rule over uniform spacing `h`.
pub fn trapezoid(values: &[Complex64], h: f64) -> Complex64 {
    match values.len() {
        0 | 1 => Complex64::new(0.0, 0.0),
        n => {
            let inner: Complex64 = values[1..n - 1].iter().sum();
            (inner + (values[0] + values[n - 1]) * 0.5) * h
        }
    }
}

/// Trapezoid rule on an arbitrary increasing grid.
pub fn trapezoid_nonuniform(x: &[f64], values: &[Complex64]) -> Complex64 {
    assert_eq!(x.len(), values.len());
    x.windows(2)
        .zip(values.windows(2))
        .map(|(xs, fs)| (fs[0] + fs[1]) * (0.5 * (xs[1] - xs[0])))
        .sum()
}

/// Uniform trapezoid with Richardson extrapolation when the sample count is
/// odd (≥ 3); otherwise the plain trapezoid with an unknown (infinite) error.
pub fn richardson(values: &[Complex64], h: f64) -> Estimate {
    let n = values.len();
    if n < 2 {
        return Estimate::exact(Complex64::new(0.0, 0.0));
    }
    let fine = trapezoid(values, h);
    if n < 3 || n % 2 == 0 {
        return Estimate {
            value: fine,
            error: f64::INFINITY,
        };
    }
    let coarse_vals: Vec<Complex64> = values.iter().step_by(2).copied().collect();
    let coarse = trapezoid(&coarse_vals, 2.0 * h);
    Estimate {
        value: (fine * 4.0 - coarse) / 3.0,
        error: (fine - coarse).norm() / 3.0,
    }
}

/// Nonuniform analogue of [`richardson`]: the coarse estimate drops every
/// other node. The extrapolation is only exact for uniform grids, so on
/// nonuniform grids the fine trapezoid is returned with the same error
/// estimate.
pub fn richardson_nonuniform(x: &[f64], values: &[Complex64]) -> Estimate {
    let n = values.len();
    if n < 2 {
        return Estimate::exact(Complex64::new(0.0, 0.0));
    }
    let fine = trapezoid_nonuniform(x, values);
    if n < 3 || n % 2 == 0 {
        return Estimate {
            value: fine,
            error: f64::INFINITY,
        };
    }
    let xc: Vec<f64> = x.iter().step_by(2).copied().collect();
    let vc: Vec<Complex64> = values.iter().step_by(2).copied().collect();
    let coarse = trapezoid_nonuniform(&xc, &vc);
    let h0 = x[1] - x[0];
    let uniform = x
        .windows(2)
        .all(|w| ((w[1] - w[0]) - h0).abs() <= 1e-12 * h0.abs().max(1.0));
    let value = if uniform { (fine * 4.0 - coarse) / 3.0 } else { fine };
    Estimate {
        value,
        error: (fine - coarse).norm() / 3.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_cases() {
        let h = 0.01;
        let v: Vec<Complex64> = (0..=100)
            .map(|i| Complex64::new((i as f64 * h).powi(2), 1.0))
            .collect();
        // trapezoid is exact for the constant, Richardson exact for the cubic-or-lower
        let e = richardson(&v, h);
        assert!((e.value - Complex64::new(1.0 / 3.0, 1.0)).norm() < 1e-14);
        assert!(e.error > 0.0 && e.error < 1e-4);
        let x: Vec<f64> = (0..=100).map(|i| i as f64 * h).collect();
        let en = richardson_nonuniform(&x, &v);
        assert!((en.value - e.value).norm() < 1e-14);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(trapezoid(&[], 1.0), Complex64::new(0.0, 0.0));
        assert_eq!(richardson(&[Complex64::new(3.0, 0.0)], 1.0).value, Complex64::new(0.0, 0.0));
        let e = richardson(&[Complex64::new(1.0, 0.0); 4], 1.0);
        assert_eq!(e.value, Complex64::new(3.0, 0.0));
        assert!(e.error.is_infinite());
        assert!(e.require(1.0).is_err());
    }
}
